"""Independent checks: self-duality, rank, MDS minors and brute-force oracles."""

from .linalg import gram, rank, rref
from .mds import DEFAULT_CAP, DEFAULT_SAMPLES, DEFAULT_SEED, MdsReport, RankError, is_mds
from .selfdual import SelfDualResult, is_self_dual

__all__ = ["gram", "rank", "rref", "DEFAULT_CAP", "DEFAULT_SAMPLES", "DEFAULT_SEED",
           "MdsReport", "RankError", "is_mds", "SelfDualResult", "is_self_dual"]


def __getattr__(name):
    # oracles depend on grscodes, which depends on this package
    if name in ("oracle_suite", "OracleScope", "OracleReport", "lemma5_check", "lemma5_on_set"):
        from . import oracles
        return getattr(oracles, name)
    raise AttributeError(name)
