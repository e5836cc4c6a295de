"""Exact computations with finite-dimensional associative algebras:
Lie cores, commuting-pair spans, cube-vanishing bilinear forms, derivations
into bimodules, trivial-coefficient H^2 and Jordan homomorphisms."""

from .algebra import Algebra, Verdict, builtin, parse_builtin
from .exactfield import GF, QQ, FieldSpec, Scalar, parse_scalar

__all__ = ["Algebra", "Verdict", "builtin", "parse_builtin", "FieldSpec", "GF", "QQ",
           "Scalar", "parse_scalar"]
