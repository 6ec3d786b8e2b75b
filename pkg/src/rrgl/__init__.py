"""Exact checks of Gordon's identities, the GL(n, q) cycle-index limits and the
Hall-Littlewood specialization identity, each against a brute-force oracle."""

from .partitions import Partition, conjugate, enumerate_partitions, kung_d, statistics
from .qseries import TruncatedSeries, gordon_product_side, gordon_sum_side, partition_sum_side

__all__ = [
    "Partition",
    "TruncatedSeries",
    "conjugate",
    "enumerate_partitions",
    "gordon_product_side",
    "gordon_sum_side",
    "kung_d",
    "partition_sum_side",
    "statistics",
]
