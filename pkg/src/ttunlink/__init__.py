"""Twisted torus links T(p, q, r, s): braids, invariants and unlink classification."""

from .braid import BraidWord, parse_braid, format_braid
from .classifier import Verdict, lee_unknot_family, unlink_verdict
from .invariants import jones_polynomial, kauffman_bracket, linking_matrix, unlink_consistent
from .laurent import LaurentPoly
from .ttlink import TwistedTorusParams, twisted_torus_braid
from .word_problem import braids_equal, handle_reduce

__all__ = [
    "BraidWord",
    "LaurentPoly",
    "TwistedTorusParams",
    "Verdict",
    "braids_equal",
    "format_braid",
    "handle_reduce",
    "jones_polynomial",
    "kauffman_bracket",
    "lee_unknot_family",
    "linking_matrix",
    "parse_braid",
    "twisted_torus_braid",
    "unlink_consistent",
    "unlink_verdict",
]
