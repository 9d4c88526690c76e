"""Exact Peter-Weyl components, transfer maps, and central elements.

A small exact-arithmetic toolkit for finite-dimensional Hopf algebras (group
algebras of small finite groups) and a PBW-truncated quantized enveloping
algebra of sl2.  It computes Peter-Weyl components of the dual, searches for
and verifies elements P that transfer invariant functionals to central
elements, solves for tensor-factorization witnesses, and produces the
corresponding central elements on the quantum side.
"""

__version__ = "0.1.0"

from .exact import (
    Cyclotomic,
    Infeasible,
    LinearSolution,
    Matrix,
    Poly,
    PolySystem,
    RatFun,
    Subspace,
    buchberger,
    rref,
    scalar_from_str,
    scalar_to_str,
    solve_linear,
)

__all__ = [
    "Cyclotomic",
    "Infeasible",
    "LinearSolution",
    "Matrix",
    "Poly",
    "PolySystem",
    "RatFun",
    "Subspace",
    "buchberger",
    "rref",
    "scalar_from_str",
    "scalar_to_str",
    "solve_linear",
    "__version__",
]
