"""Exact enumeration and moments of (n, dn±1)-core partitions with distinct parts."""

try:
    from ._corepart import (  # noqa: F401
        enumerate_core,
        expectation_plus,
        m_seq,
        moment,
        n_seq,
        power_sum,
        total_minus,
    )
except ImportError:  # running against a bare build tree
    from _corepart import (  # noqa: F401
        enumerate_core,
        expectation_plus,
        m_seq,
        moment,
        n_seq,
        power_sum,
        total_minus,
    )

__all__ = [
    "enumerate_core",
    "expectation_plus",
    "m_seq",
    "moment",
    "n_seq",
    "power_sum",
    "total_minus",
]
