"""Pell equations whose X-coordinates are base-b repdigits."""

from .pell_core import (
    PellOrbit,
    PellPair,
    chebyshev_P,
    chebyshev_P_prime,
    fundamental_solution,
    is_square,
    nth_solution,
    nu_p,
)
from .repdigit import RepdigitForm, as_repdigit, digits, gcd_power_minus_one, repdigit_value
from .search import SearchConfig, SearchHit, classify_report, scan_d, search

__version__ = "0.1.0"
