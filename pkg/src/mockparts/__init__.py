"""Exact q-series and partition identities for third-order mock theta functions."""

from .partitions import OddFerrersDiagram, Partition, enumerate_odd_ferrers, enumerate_partitions, stats
from .qseries import BivariateSeries, QSeries
from .verify import IdentityReport, run_check, run_checks

__all__ = [
    "BivariateSeries",
    "IdentityReport",
    "OddFerrersDiagram",
    "Partition",
    "QSeries",
    "enumerate_odd_ferrers",
    "enumerate_partitions",
    "run_check",
    "run_checks",
    "stats",
]

__version__ = "0.1.0"
