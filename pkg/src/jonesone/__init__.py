"""Exact Jones polynomials and the solutions of J(t) = 1."""

from .bracket import bracket, bracket_naive, jones_from_pd, special_values
from .conway import pd_from_conway, pd_ring
from .dtwist import det_at_minus_one, jones_closed, pn, witness_n
from .laurent import LaurentPoly, Var, cyclotomic, div_exact, divides, parse
from .pd import PDCode, load_table
from .roots import classify, find_roots, solutions_of_jones_equals_one

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "Var",
    "PDCode",
    "bracket",
    "bracket_naive",
    "classify",
    "cyclotomic",
    "det_at_minus_one",
    "div_exact",
    "divides",
    "find_roots",
    "jones_closed",
    "jones_from_pd",
    "load_table",
    "parse",
    "pd_from_conway",
    "pd_ring",
    "pn",
    "solutions_of_jones_equals_one",
    "special_values",
    "witness_n",
]
