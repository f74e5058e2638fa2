"""Cross-route verification harness.

Every row compares two independently computed values. ``anchor`` rows pit a
computed value against a published constant (a failure there points to a
transcription problem); ``route`` rows pit two algorithms against each other
(a failure there points to logic).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

from . import formulas as fx
from .antiforcing import antiforcing_number, antiforcing_polynomial_enum
from .forcing import clar_number, forcing_number, forcing_polynomial_enum, spectrum
from .matching import all_matching_masks, count_by_enumeration
from .polynomial import poly
from .polyomino import build_g, build_h

PHI_ANCHORS = {0: 1, 1: 6, 2: 32, 3: 168}
F_ANCHORS = {1: poly(0, 2, 4), 2: poly(0, 0, 4, 12, 16)}
AF_ANCHORS = {1: poly(0, 1, 3, 2), 2: poly(0, 0, 1, 3, 15, 9, 4)}

ENUM_FORCING_MAX = 6
ENUM_ANTIFORCING_MAX = 5
EXPLICIT_MAX = 6
CLAR_MAX = 4
CLOSED_FORM_MAX = 50


@dataclass(frozen=True)
class CheckRow:
    name: str
    instance: str
    n: int
    route_a: str
    route_b: str
    passed: bool
    kind: str = "route"


@dataclass
class VerificationReport:
    rows: list[CheckRow] = field(default_factory=list)

    def add(self, name: str, n: int, a, b, kind: str = "route", instance: str | None = None) -> None:
        self.rows.append(CheckRow(name, instance or f"G_{n}", n, str(a), str(b), a == b, kind))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.passed]

    def sorted(self) -> VerificationReport:
        return VerificationReport(sorted(self.rows, key=lambda r: (r.name, r.n, r.instance)))

    def to_json(self) -> dict:
        rows = self.sorted().rows
        return {
            "status": "pass" if self.passed else "fail",
            "checks": len(rows),
            "failed": sum(not r.passed for r in rows),
            "rows": [asdict(r) for r in rows],
        }

    def lines(self) -> list[str]:
        return [
            f"{'PASS' if r.passed else 'FAIL'}  {r.name} [{r.instance}]: {r.route_a} | {r.route_b}"
            for r in self.sorted().rows
        ]


def verify_all(
    n_max: int = 8,
    oracle_n_max: int = 2,
    overrides: dict[str, Callable] | None = None,
) -> VerificationReport:
    """Run every identity up to ``n_max`` and the brute-force oracles up to
    ``oracle_n_max``.

    ``overrides`` replaces formula functions by name (``phi_g``,
    ``forcing_poly_g_rec``, ...) so a deliberately broken route can be
    injected to prove the harness notices.
    """
    fn = {
        name: getattr(fx, name)
        for name in (
            "phi_g", "phi_closed", "forcing_poly_g_rec", "forcing_poly_g_explicit",
            "af_poly_g_rec", "af_poly_g_explicit", "idf_rec", "idf_closed", "idf_from_poly",
            "afsum_rec", "afsum_closed", "afsum_from_poly", "af_poly_g_from_decomposition",
        )
    }
    fn.update(overrides or {})
    rep = VerificationReport()

    # matching counts
    for n in range(0, n_max + 1):
        g = build_g(n)
        enum = count_by_enumeration(g)
        rep.add("phi enumeration vs recurrence", n, enum, fn["phi_g"](n))
        if n in PHI_ANCHORS:
            rep.add("phi anchor", n, enum, PHI_ANCHORS[n], kind="anchor")
    for n in range(0, max(n_max, CLOSED_FORM_MAX if n_max else 0) + 1):
        rep.add("phi recurrence vs closed form", n, fn["phi_g"](n), fn["phi_closed"](n))

    # forcing polynomials
    for n in range(0, min(n_max, ENUM_FORCING_MAX) + 1):
        g = build_g(n)
        enum = forcing_polynomial_enum(g)
        rep.add("forcing poly enumeration vs recurrence", n, enum, fn["forcing_poly_g_rec"](n))
        if n in F_ANCHORS:
            rep.add("forcing poly anchor", n, enum, F_ANCHORS[n], kind="anchor")
        if n >= 1:
            sp = spectrum(enum)
            rep.add("forcing spectrum", n, (sp.min, sp.max, sp.contiguous), (n, 2 * n, True))
        else:
            rep.add("forcing poly null graph", n, enum, poly(1), kind="anchor")
    for n in range(1, min(n_max, EXPLICIT_MAX) + 1):
        rep.add("forcing poly explicit vs recurrence", n, fn["forcing_poly_g_explicit"](n), fn["forcing_poly_g_rec"](n))

    # anti-forcing polynomials
    for n in range(0, min(n_max, ENUM_ANTIFORCING_MAX) + 1):
        g = build_g(n)
        enum = antiforcing_polynomial_enum(g)
        rep.add("antiforcing poly enumeration vs recurrence", n, enum, fn["af_poly_g_rec"](n))
        if n in AF_ANCHORS:
            rep.add("antiforcing poly anchor", n, enum, AF_ANCHORS[n], kind="anchor")
        if n >= 1:
            sp = spectrum(enum)
            rep.add("antiforcing spectrum", n, (sp.min, sp.max, sp.contiguous), (n, 3 * n, True))
            rep.add("antiforcing decomposition vs recurrence", n,
                    fn["af_poly_g_from_decomposition"](n), fn["af_poly_g_rec"](n))
        else:
            rep.add("antiforcing poly null graph", n, enum, poly(1), kind="anchor")
    for n in range(1, min(n_max, EXPLICIT_MAX) + 1):
        rep.add("antiforcing poly explicit vs recurrence", n, fn["af_poly_g_explicit"](n), fn["af_poly_g_rec"](n))

    # derivative sums
    for n in range(0, max(n_max, CLOSED_FORM_MAX if n_max else 0) + 1):
        rep.add("idf recurrence vs closed form", n, fn["idf_rec"](n), fn["idf_closed"](n))
        rep.add("idf polynomial vs closed form", n, fn["idf_from_poly"](n), fn["idf_closed"](n))
        rep.add("afsum recurrence vs closed form", n, fn["afsum_rec"](n), fn["afsum_closed"](n))
        rep.add("afsum polynomial vs closed form", n, fn["afsum_from_poly"](n), fn["afsum_closed"](n))
    for n, value in fx.IDF_ANCHORS.items():
        if n <= max(n_max, 0) or n_max >= 4:
            rep.add("idf anchor", n, fn["idf_from_poly"](n), value, kind="anchor")
    for n, value in fx.AFSUM_ANCHORS.items():
        if n <= max(n_max, 0) or n_max >= 4:
            rep.add("afsum anchor", n, fn["afsum_from_poly"](n), value, kind="anchor")

    # Clar number = maximum forcing number = 2n
    for n in range(1, min(n_max, CLAR_MAX) + 1):
        g = build_g(n)
        rep.add("clar number vs 2n", n, clar_number(g), 2 * n, kind="anchor")
        rep.add("clar number vs max forcing", n, clar_number(g), fn["forcing_poly_g_rec"](n).degree)

    # brute-force oracles on both families
    for n in range(1, oracle_n_max + 1):
        for g in (build_g(n), build_h(n)):
            _oracle_rows(rep, g)

    # null graph: one (empty) matching, polynomials equal to 1
    g0 = build_g(0)
    rep.add("null graph matchings", 0, count_by_enumeration(g0), 1, kind="anchor", instance="G_0")
    return rep.sorted()


def _oracle_rows(rep: VerificationReport, g) -> None:
    masks = all_matching_masks(g)
    tag = f"{g.kind}_{g.n}"
    f_or = [forcing_number(g, m, "oracle", matchings=masks) for m in masks]
    f_res = [forcing_number(g, m, "resonant") for m in masks]
    f_cyc = [forcing_number(g, m, "cycles") for m in masks]
    a_or = [antiforcing_number(g, m, "oracle") for m in masks]
    a_cmp = [antiforcing_number(g, m, "compat") for m in masks]
    a_str = [antiforcing_number(g, m, "structural") for m in masks]
    rep.add("forcing oracle vs resonant", g.n, f_or, f_res, instance=tag)
    rep.add("forcing oracle vs cycles", g.n, f_or, f_cyc, instance=tag)
    rep.add("antiforcing oracle vs compat", g.n, a_or, a_cmp, instance=tag)
    rep.add("antiforcing oracle vs structural", g.n, a_or, a_str, instance=tag)
