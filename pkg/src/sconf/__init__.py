"""Exact-arithmetic toolkit for superconformal algebras and their twists."""

from sconf.exactlinalg import GaussianRational, Matrix, Subspace, qi, I, ONE, ZERO
from sconf.superlie import (
    AlgebraElement,
    SuperMatrix,
    bracket,
    build_conf,
    build_f4_5d,
    build_osp,
    build_psl44,
    build_sl_super,
    verify_algebra,
)

__all__ = [
    "AlgebraElement",
    "GaussianRational",
    "I",
    "Matrix",
    "ONE",
    "Subspace",
    "SuperMatrix",
    "ZERO",
    "bracket",
    "build_conf",
    "build_f4_5d",
    "build_osp",
    "build_psl44",
    "build_sl_super",
    "qi",
    "verify_algebra",
]
