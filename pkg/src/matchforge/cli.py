"""Command-line front end.

Exit codes: 0 success, 1 library error (size limits, bad input files),
2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import formulas as fx
from .antiforcing import DEFAULT_ANTIFORCING_ORACLE_LIMIT, antiforcing_number, antiforcing_polynomial_enum
from .cache import ResultCache, record_key
from .errors import MatchforgeError
from .forcing import (
    DEFAULT_FORCING_ORACLE_LIMIT,
    clar_number,
    forcing_number,
    forcing_polynomial_enum,
    polynomial_from_values,
    spectrum,
)
from .matching import all_matching_masks, count_by_enumeration
from .polynomial import IntPolynomial
from .polyomino import PolyominoGraph, build_family, from_cells, parse_ascii_cells, validate
from .validation import check_matching
from .verify import verify_all

METHODS = ("enum", "structural", "recurrence", "explicit", "oracle")
COMMANDS = (
    "family", "poly", "count", "forcing-poly", "antiforcing-poly",
    "af", "idf", "afsum", "spectrum", "limits", "verify",
)

# which --method values each command understands
VALID_METHODS = {
    "family": (),
    "poly": ("enum", "oracle"),
    "count": ("enum", "recurrence", "explicit"),
    "forcing-poly": ("enum", "structural", "recurrence", "explicit", "oracle"),
    "antiforcing-poly": ("enum", "structural", "recurrence", "explicit", "oracle"),
    "af": ("enum", "structural", "oracle"),
    "idf": ("enum", "recurrence", "explicit"),
    "afsum": ("enum", "recurrence", "explicit"),
    "spectrum": ("enum", "recurrence"),
    "limits": (),
    "verify": (),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str | None
    n: int | None
    cells: str | None
    matching: str | None
    method: str | None
    oracle_max: int | None
    out: str
    cache: str | None
    threads: int
    oracle_n: int
    self_test: bool

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise UsageError("--n must be nonnegative")
        if self.threads < 1:
            raise UsageError("--threads must be positive")
        if self.oracle_max is not None and self.oracle_max < 1:
            raise UsageError("--oracle-max must be positive")
        if self.method is not None and self.method not in VALID_METHODS[self.command]:
            allowed = ", ".join(VALID_METHODS[self.command]) or "none"
            raise UsageError(f"--method {self.method} is not valid for {self.command} (allowed: {allowed})")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchforge", description="Forcing and anti-forcing polynomials of polyomino graphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--family", choices=("g", "h"), type=str.lower)
    p.add_argument("--n", type=int)
    p.add_argument("--cells", help="JSON list of [row, column] pairs, or an ASCII picture of '#' and '.'")
    p.add_argument("--matching", help="JSON list of vertex-id pairs (af command)")
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--cache", help="cache file (defaults to $MATCHFORGE_CACHE; no cache if unset)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--oracle-max", type=int, help="size bound for the brute-force oracles")
    p.add_argument("--oracle-n", type=int, default=2, help="largest n for oracle checks in verify")
    p.add_argument("--self-test", action="store_true", help="recompute cache hits and require byte equality")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


# ----------------------------------------------------------------------------
# graph loading


def load_cells(path: str) -> PolyominoGraph:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return from_cells(parse_ascii_cells(text))
    if not isinstance(data, list) or not all(isinstance(c, list) and len(c) == 2 for c in data):
        raise ValueError("cell file must be a JSON array of [row, column] pairs")
    return from_cells(data)


def _graph(cfg: RunConfig, required: bool = True) -> PolyominoGraph | None:
    if cfg.cells:
        if cfg.family:
            raise UsageError("give either --cells or --family, not both")
        return load_cells(cfg.cells)
    if cfg.family:
        if cfg.n is None:
            raise UsageError("--family needs --n")
        return build_family(cfg.family.upper(), cfg.n)
    if required:
        raise UsageError(f"{cfg.command} needs --family/--n or --cells")
    return None


def _n_only(cfg: RunConfig, minimum: int = 0) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.command} needs --n")
    if cfg.n < minimum:
        raise UsageError(f"{cfg.command} needs --n >= {minimum}")
    if cfg.family not in (None, "g"):
        raise UsageError(f"{cfg.command} is defined for the G family only")
    return cfg.n


def _require_g(g: PolyominoGraph, what: str) -> None:
    if g.kind != "G":
        raise UsageError(f"{what} is available for the G family only")


def _require_family(g: PolyominoGraph, what: str) -> None:
    if not g.is_family:
        raise UsageError(f"{what} needs --family; use --method enum for cell files")


# ----------------------------------------------------------------------------
# polynomial routes


def forcing_poly(g: PolyominoGraph, cfg: RunConfig) -> IntPolynomial:
    method = cfg.method or ("recurrence" if g.is_family else "enum")
    if method == "enum":
        return forcing_polynomial_enum(g, "auto", cfg.threads)
    if method == "structural":
        _require_family(g, "--method structural")
        return forcing_polynomial_enum(g, "resonant", cfg.threads)
    if method == "oracle":
        masks = all_matching_masks(g)
        bound = cfg.oracle_max or DEFAULT_FORCING_ORACLE_LIMIT
        return polynomial_from_values(forcing_number(g, m, "oracle", matchings=masks, max_size=bound) for m in masks)
    _require_family(g, f"--method {method}")
    if method == "recurrence":
        return fx.forcing_poly_g_rec(g.n) if g.kind == "G" else fx.forcing_poly_h_rec(g.n)
    _require_g(g, "--method explicit")
    return fx.forcing_poly_g_explicit(g.n)


def antiforcing_poly(g: PolyominoGraph, cfg: RunConfig) -> IntPolynomial:
    method = cfg.method or ("recurrence" if g.is_family else "enum")
    if method == "enum":
        # structural on family graphs, compatible-set search elsewhere
        return antiforcing_polynomial_enum(g, "auto", cfg.threads)
    if method == "structural":
        _require_family(g, "--method structural")
        return antiforcing_polynomial_enum(g, "structural", cfg.threads)
    if method == "oracle":
        bound = cfg.oracle_max or DEFAULT_ANTIFORCING_ORACLE_LIMIT
        return polynomial_from_values(
            antiforcing_number(g, m, "oracle", max_size=bound) for m in all_matching_masks(g)
        )
    _require_family(g, f"--method {method}")
    if method == "recurrence":
        return fx.af_poly_g_rec(g.n) if g.kind == "G" else fx.af_poly_h_rec(g.n)
    _require_g(g, "--method explicit")
    return fx.af_poly_g_explicit(g.n)


# ----------------------------------------------------------------------------
# commands; each returns a JSON-ready payload


def _graph_summary(g: PolyominoGraph) -> dict:
    return {
        "kind": g.kind,
        "n": g.n,
        "vertices": g.num_vertices,
        "edges": g.num_edges,
        "faces": g.num_faces,
        "face_names": [f.name for f in g.faces],
        "violations": [[v.code, v.detail] for v in validate(g)],
    }


def cmd_family(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    out = _graph_summary(g)
    out["vertex_labels"] = [v.label for v in g.vertices]
    out["edge_list"] = [list(e) for e in g.edges]
    return out


def cmd_poly(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    sub = RunConfig(**{**cfg.__dict__, "command": "forcing-poly", "method": cfg.method or "enum"})
    f = forcing_poly(g, sub)
    af = antiforcing_poly(g, sub)
    out = _graph_summary(g)
    out.update({
        "phi": str(f(1)),
        "forcing": f.to_json(),
        "antiforcing": af.to_json(),
        "clar": clar_number(g) if f(1) else None,
    })
    return out


def cmd_count(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    method = cfg.method or ("recurrence" if g.is_family else "enum")
    if method == "enum":
        phi = count_by_enumeration(g)
    else:
        _require_family(g, f"--method {method}")
        if method == "explicit":
            _require_g(g, "--method explicit")
            phi = fx.phi_closed(g.n)
        else:
            phi = fx.phi_g(g.n) if g.kind == "G" else fx.phi_h(g.n)
    return {"phi": str(phi)}


def cmd_forcing_poly(cfg: RunConfig) -> dict:
    return forcing_poly(_graph(cfg), cfg).to_json()


def cmd_antiforcing_poly(cfg: RunConfig) -> dict:
    return antiforcing_poly(_graph(cfg), cfg).to_json()


def cmd_af(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    if not cfg.matching:
        raise UsageError("af needs --matching")
    M = check_matching(g, json.loads(Path(cfg.matching).read_text()))
    method = cfg.method or "enum"
    if method == "oracle":
        af = antiforcing_number(g, M, "oracle", max_size=cfg.oracle_max or DEFAULT_ANTIFORCING_ORACLE_LIMIT)
        f = forcing_number(g, M, "oracle", max_size=cfg.oracle_max or DEFAULT_FORCING_ORACLE_LIMIT)
    elif method == "structural":
        _require_family(g, "--method structural")
        af = antiforcing_number(g, M, "structural")
        f = forcing_number(g, M, "resonant")
    else:
        af = antiforcing_number(g, M)
        f = forcing_number(g, M)
    return {"af": af, "f": f, "matching": M.to_json()}


def _sum_command(cfg: RunConfig, name: str, rec, closed, poly_route) -> dict:
    n = _n_only(cfg)
    method = cfg.method or "explicit"
    if method == "recurrence":
        value = rec(n)
    elif method == "explicit":
        value = closed(n)
    else:
        value = poly_route(build_family("G", n), cfg).derivative()(1)
    return {"n": n, name: str(value)}


def cmd_idf(cfg: RunConfig) -> dict:
    enum_cfg = RunConfig(**{**cfg.__dict__, "method": "enum"})
    return _sum_command(cfg, "idf", fx.idf_rec, fx.idf_closed, lambda g, _c: forcing_poly(g, enum_cfg))


def cmd_afsum(cfg: RunConfig) -> dict:
    enum_cfg = RunConfig(**{**cfg.__dict__, "method": "enum"})
    return _sum_command(cfg, "afsum", fx.afsum_rec, fx.afsum_closed, lambda g, _c: antiforcing_poly(g, enum_cfg))


def cmd_spectrum(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    return {
        "forcing": spectrum(forcing_poly(g, cfg)).to_json(),
        "antiforcing": spectrum(antiforcing_poly(g, cfg)).to_json(),
    }


def cmd_limits(cfg: RunConfig) -> dict:
    n = _n_only(cfg, minimum=1)
    ri, ra = fx.ratio_idf(n), fx.ratio_afsum(n)
    li, la = fx.limit_idf(), fx.limit_afsum()
    return {
        "n": n,
        "ratio_idf": str(ri),
        "limit_idf": str(li),
        "distance_idf": str(abs(ri - li)),
        "ratio_afsum": str(ra),
        "limit_afsum": str(la),
        "distance_afsum": str(abs(ra - la)),
    }


HANDLERS = {
    "family": cmd_family,
    "poly": cmd_poly,
    "count": cmd_count,
    "forcing-poly": cmd_forcing_poly,
    "antiforcing-poly": cmd_antiforcing_poly,
    "af": cmd_af,
    "idf": cmd_idf,
    "afsum": cmd_afsum,
    "spectrum": cmd_spectrum,
    "limits": cmd_limits,
}

CACHEABLE = {"poly", "count", "forcing-poly", "antiforcing-poly", "spectrum"}


# ----------------------------------------------------------------------------
# output


def to_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "terms" in payload:
        w.writerow(["exponent", "coefficient"])
        w.writerows(payload["terms"])
    elif "rows" in payload:
        w.writerow(["name", "instance", "n", "route_a", "route_b", "passed", "kind"])
        for r in payload["rows"]:
            w.writerow([r["name"], r["instance"], r["n"], r["route_a"], r["route_b"], r["passed"], r["kind"]])
    else:
        w.writerow(["key", "value"])
        for k, v in payload.items():
            w.writerow([k, v if isinstance(v, (str, int)) or v is None else json.dumps(v)])
    return buf.getvalue()


def emit(payload: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "csv":
        stream.write(to_csv(payload))
    else:
        stream.write(json.dumps(payload) + "\n")


def run_command(cfg: RunConfig) -> int:
    if cfg.command == "verify":
        n_max = 8 if cfg.n is None else cfg.n
        report = verify_all(n_max, cfg.oracle_n)
        emit(report.to_json(), cfg.out)
        for row in report.failures:
            print(f"FAIL {row.name} [{row.instance}]: {row.route_a} != {row.route_b}", file=sys.stderr)
        return 0 if report.passed else 3
    handler = HANDLERS[cfg.command]
    cache = ResultCache.from_env(cfg.cache) if cfg.command in CACHEABLE else None
    if cache is None:
        payload = handler(cfg)
    else:
        g = _graph(cfg)
        key = record_key(g, cfg.command, cfg.method or "default")
        payload = cache.fetch(key, lambda: handler(cfg), self_test=cfg.self_test)
    emit(payload, cfg.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(
            command=args.command, family=args.family, n=args.n, cells=args.cells,
            matching=args.matching, method=args.method, oracle_max=args.oracle_max,
            out=args.out, cache=args.cache, threads=args.threads, oracle_n=args.oracle_n,
            self_test=args.self_test,
        )
        return run_command(cfg)
    except UsageError as exc:
        print(f"matchforge {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (MatchforgeError, ValueError, OSError) as exc:
        print(f"matchforge {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
