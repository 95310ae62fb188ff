"""MDS Euclidean self-dual codes over GF(r^2) from (extended) GRS codes.

Layers, bottom up: :mod:`mdssd.gf` (field arithmetic), :mod:`mdssd.evalsets`
(evaluation sets and their hypotheses), :mod:`mdssd.grscodes` (multipliers
and generator matrices), :mod:`mdssd.verify` (independent checks) and
:mod:`mdssd.cli`.
"""

from .gf import FieldCtx, FieldError, ctx_for_q, ctx_new
from .grscodes import Code, ConstructionError, build_code

__version__ = "0.1.0"
__all__ = ["FieldCtx", "FieldError", "ctx_for_q", "ctx_new", "Code", "ConstructionError",
           "build_code"]
