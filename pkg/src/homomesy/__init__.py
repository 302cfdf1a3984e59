"""Exact-arithmetic toolkit for detecting and verifying homomesy.

A statistic f on a finite invertible dynamical system (S, tau) is c-mesic
when its average over every tau-orbit equals the same constant c. This
package provides the poset and word combinatorics where the phenomenon
shows up (rowmotion and promotion on products of two chains, rotation on
words, Suter's action, sandpiles, tableau promotion, the Lyness map) and a
generic engine that partitions orbits, averages statistics in exact
rational arithmetic, and extracts homomesic subspaces.
"""

from .guards import DEFAULT_ENUMERATION_GUARD, DEFAULT_ORBIT_GUARD, GuardExceeded
from .posets import Antichain, FinitePoset, GridPoset, OrderIdeal
from .dynamics import (
    HeightFunction,
    antichain_from_st_word,
    block_gap_reversal,
    cyclic_shift,
    height_function,
    ideal_from_sign_word,
    promotion_antichain,
    promotion_ideal,
    rowmotion_antichain,
    rowmotion_ideal,
    rowmotion_ideal_by_ranks,
    rowmotion_ideal_by_toggles,
    sign_word,
    stanley_thomas_word,
    toggle,
)
from .engine import (
    HomomesyReport,
    Orbit,
    OrbitSummary,
    Statistic,
    check_homomesy,
    homomesic_subspace,
    invariant_homomesic_decomposition,
    iterate_orbit,
    orbit_average,
    orbit_partition,
    rational_nullspace,
    rational_solve,
)

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "DEFAULT_ENUMERATION_GUARD",
    "DEFAULT_ORBIT_GUARD",
    "FinitePoset",
    "GridPoset",
    "GuardExceeded",
    "HeightFunction",
    "HomomesyReport",
    "Orbit",
    "OrbitSummary",
    "OrderIdeal",
    "Statistic",
    "antichain_from_st_word",
    "block_gap_reversal",
    "check_homomesy",
    "cyclic_shift",
    "height_function",
    "homomesic_subspace",
    "ideal_from_sign_word",
    "invariant_homomesic_decomposition",
    "iterate_orbit",
    "orbit_average",
    "orbit_partition",
    "promotion_antichain",
    "promotion_ideal",
    "rational_nullspace",
    "rational_solve",
    "rowmotion_antichain",
    "rowmotion_ideal",
    "rowmotion_ideal_by_ranks",
    "rowmotion_ideal_by_toggles",
    "sign_word",
    "stanley_thomas_word",
    "toggle",
]
