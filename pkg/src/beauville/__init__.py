"""Construction and machine certification of pairs of (2,3,7) generating
triples in alternating groups, with the supporting machinery: exact
permutation algebra, an atlas of basic maps with their conformance suite,
the handle-composition calculus, Frobenius structure-constant counting,
the minimum-degree bound search, double-cover lifting conditions, and the
special-linear matrix lift.
"""

__version__ = "0.1.0"

from . import atlas, certify, compose, construct, frobenius, linlift, maps, perm

__all__ = [
    "atlas",
    "certify",
    "compose",
    "construct",
    "frobenius",
    "linlift",
    "maps",
    "perm",
    "__version__",
]
