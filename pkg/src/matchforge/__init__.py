"""Forcing and anti-forcing polynomials of polyomino graphs."""

from __future__ import annotations

from .antiforcing import (
    antiforcing_number,
    antiforcing_polynomial_enum,
    antiforcing_spectrum,
    max_compatible_set,
    minimum_antiforcing_set,
)
from .errors import (
    DisconnectedCells,
    MatchforgeError,
    NoPerfectMatching,
    NotPolyomino,
    SizeLimitExceeded,
    WrongFamily,
)
from .estimators import AntiForcingPolynomial, ForcingPolynomial
from .forcing import (
    clar_number,
    forcing_number,
    forcing_polynomial_enum,
    forcing_spectrum,
    max_resonant_set,
    minimum_forcing_set,
    spectrum,
)
from .matching import (
    AlternatingCycle,
    Matching,
    alternating_cycles,
    count_perfect_matchings,
    enumerate_perfect_matchings,
)
from .polynomial import IntPolynomial
from .polyomino import PolyominoGraph, build_family, build_g, build_h, from_cells, parse_ascii_cells, validate
from .surd import SurdNumber
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"
