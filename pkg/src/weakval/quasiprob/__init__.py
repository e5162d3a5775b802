"""Quasiprobability distributions on the (q, p) grid."""

from weakval.core import QuasiprobKind
from weakval.quasiprob.base import Distribution
from weakval.quasiprob.field import QuasiprobField
from weakval.quasiprob.moments import (
    conditional_moment,
    conditional_moments,
    negativity_volume,
    vacuum_standard_closed_form,
)
from weakval.quasiprob.ordered import (
    KirkwoodDistribution,
    MargenauHillDistribution,
    StandardOrderedDistribution,
    kirkwood,
    margenau_hill,
    standard_ordered,
)
from weakval.quasiprob.wigner import WignerDistribution, wigner

DISTRIBUTIONS: dict[QuasiprobKind, Distribution] = {
    QuasiprobKind.STANDARD_ORDERED: StandardOrderedDistribution(),
    QuasiprobKind.KIRKWOOD: KirkwoodDistribution(),
    QuasiprobKind.MARGENAU_HILL: MargenauHillDistribution(),
    QuasiprobKind.WIGNER: WignerDistribution(),
}

__all__ = [
    "DISTRIBUTIONS",
    "Distribution",
    "KirkwoodDistribution",
    "MargenauHillDistribution",
    "QuasiprobField",
    "StandardOrderedDistribution",
    "WignerDistribution",
    "conditional_moment",
    "conditional_moments",
    "kirkwood",
    "margenau_hill",
    "negativity_volume",
    "standard_ordered",
    "vacuum_standard_closed_form",
    "wigner",
]
