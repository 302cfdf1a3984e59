"""Finite posets with bitmask order-ideal and antichain state spaces.

A poset fixes its element order at construction time; ideals and
antichains are immutable bitmask wrappers relative to that order, so
states are hashable, totally ordered (by mask value), and cheap to
enumerate. Everything here is pure: no method mutates a state.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .guards import DEFAULT_ENUMERATION_GUARD, GuardExceeded


def iter_bits(mask: int):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, order=True)
class OrderIdeal:
    """A down-closed subset, stored as a bitmask over the poset's element order."""

    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True, order=True)
class Antichain:
    """A pairwise-incomparable subset, stored as a bitmask."""

    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()


class FinitePoset:
    """A finite poset built from an explicit cover list.

    elements: iterable of hashable labels; their listed order is frozen and
        every bitmask refers to it.
    covers: iterable of pairs (x, y) meaning x is covered by y.

    The order relation is the reflexive-transitive closure of the covers;
    a cycle in the cover list is rejected.
    """

    def __init__(self, elements, covers):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements in poset")
        n = len(self.elements)
        self.up_covers = [0] * n
        self.down_covers = [0] * n
        for x, y in covers:
            if x not in self.index or y not in self.index:
                raise ValueError(f"cover ({x!r}, {y!r}) mentions an unknown element")
            if x == y:
                raise ValueError(f"element {x!r} cannot cover itself")
            i, j = self.index[x], self.index[y]
            self.up_covers[i] |= 1 << j
            self.down_covers[j] |= 1 << i
        self._extension = self._smallest_linear_extension()
        # below[i] / above[i]: principal ideal / filter of element i, incl. i
        self.below = [0] * n
        self.above = [0] * n
        for i in self._extension:
            m = 1 << i
            for j in iter_bits(self.down_covers[i]):
                m |= self.below[j]
            self.below[i] = m
        for i in reversed(self._extension):
            m = 1 << i
            for j in iter_bits(self.up_covers[i]):
                m |= self.above[j]
            self.above[i] = m

    def _smallest_linear_extension(self) -> tuple[int, ...]:
        # Greedy Kahn with a heap: the index-lex smallest linear extension.
        n = len(self.elements)
        indeg = [self.down_covers[i].bit_count() for i in range(n)]
        ready = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(ready)
        out = []
        while ready:
            i = heapq.heappop(ready)
            out.append(i)
            for j in iter_bits(self.up_covers[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(ready, j)
        if len(out) != n:
            raise ValueError("cover relations contain a cycle")
        return tuple(out)

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    @property
    def linear_extension(self) -> tuple:
        """The canonical (index-lex smallest) linear extension, as elements."""
        return tuple(self.elements[i] for i in self._extension)

    def element_mask(self, items) -> int:
        mask = 0
        for x in items:
            try:
                mask |= 1 << self.index[x]
            except KeyError:
                raise ValueError(f"{x!r} is not an element of this poset") from None
        return mask

    def members(self, state) -> tuple:
        """Decode an ideal/antichain/raw mask into elements, in element order."""
        mask = state.mask if isinstance(state, (OrderIdeal, Antichain)) else state
        return tuple(self.elements[i] for i in iter_bits(mask))

    def leq(self, x, y) -> bool:
        """True when x <= y in the poset order."""
        for z in (x, y):
            if z not in self.index:
                raise ValueError(f"{z!r} is not an element of this poset")
        return bool(self.below[self.index[y]] >> self.index[x] & 1)

    # -- ideal / antichain machinery --------------------------------------

    def is_ideal_mask(self, mask: int) -> bool:
        for i in iter_bits(mask):
            if self.down_covers[i] & ~mask:
                return False
        return True

    def is_antichain_mask(self, mask: int) -> bool:
        for i in iter_bits(mask):
            if (self.below[i] | self.above[i]) & mask & ~(1 << i):
                return False
        return True

    def ideal(self, items) -> OrderIdeal:
        """Build an OrderIdeal from an element set, validating down-closure."""
        mask = self.element_mask(items)
        if not self.is_ideal_mask(mask):
            raise ValueError("element set is not down-closed")
        return OrderIdeal(mask)

    def antichain(self, items) -> Antichain:
        """Build an Antichain from an element set, validating incomparability."""
        mask = self.element_mask(items)
        if not self.is_antichain_mask(mask):
            raise ValueError("element set contains a comparable pair")
        return Antichain(mask)

    def down_closure(self, generators) -> OrderIdeal:
        """Smallest order ideal containing the given elements.

        Accepts an Antichain, an OrderIdeal, or any iterable of elements.
        """
        if isinstance(generators, (Antichain, OrderIdeal)):
            gen_mask = generators.mask
        else:
            gen_mask = self.element_mask(generators)
        mask = 0
        for i in iter_bits(gen_mask):
            mask |= self.below[i]
        return OrderIdeal(mask)

    def maximal_elements(self, ideal: OrderIdeal) -> Antichain:
        """Maximal elements of an order ideal (the inverse of down_closure)."""
        mask = 0
        for i in iter_bits(ideal.mask):
            if not (self.up_covers[i] & ideal.mask):
                mask |= 1 << i
        return Antichain(mask)

    def minimal_elements_of_complement(self, ideal: OrderIdeal) -> Antichain:
        """Minimal elements of the complement of an order ideal."""
        mask = 0
        comp = self.full_mask & ~ideal.mask
        for i in iter_bits(comp):
            if self.down_covers[i] & ~ideal.mask:
                continue
            mask |= 1 << i
        return Antichain(mask)

    def enumerate_order_ideals(self, guard: int | None = None) -> list[OrderIdeal]:
        """All order ideals, sorted by ascending mask value.

        Breadth-first walk of the ideal lattice from the empty ideal; raises
        GuardExceeded once more than `guard` states have been found.
        """
        guard = DEFAULT_ENUMERATION_GUARD if guard is None else guard
        n = len(self.elements)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for mask in frontier:
                for i in range(n):
                    if mask >> i & 1:
                        continue
                    if self.down_covers[i] & ~mask:
                        continue
                    new = mask | (1 << i)
                    if new not in seen:
                        if len(seen) >= guard:
                            raise GuardExceeded(
                                f"more than {guard} order ideals; raise the guard to proceed"
                            )
                        seen.add(new)
                        nxt.append(new)
            frontier = nxt
        return [OrderIdeal(m) for m in sorted(seen)]

    def enumerate_antichains(self, guard: int | None = None) -> list[Antichain]:
        """All antichains, sorted by ascending mask value.

        Images of the order ideals under maximal_elements; this is the
        standard bijection, so the counts agree.
        """
        chains = [self.maximal_elements(i) for i in self.enumerate_order_ideals(guard)]
        chains.sort()
        return chains


class GridPoset(FinitePoset):
    """The product of two chains [a] x [b].

    Elements are the pairs (k, l) with 1 <= k <= a and 1 <= l <= b, listed
    in lexicographic order (which is itself a linear extension). The cover
    moves raise one coordinate by 1. Rank of (k, l) is k + l - 2; the file
    is l - k and ranges over [1 - a, b - 1].
    """

    def __init__(self, a: int, b: int):
        if a < 1 or b < 1:
            raise ValueError("both chain lengths must be at least 1")
        elements = [(k, l) for k in range(1, a + 1) for l in range(1, b + 1)]
        covers = []
        for k, l in elements:
            if k < a:
                covers.append(((k, l), (k + 1, l)))
            if l < b:
                covers.append(((k, l), (k, l + 1)))
        super().__init__(elements, covers)
        self.a = a
        self.b = b
        self._file_indices: dict[int, tuple[int, ...]] = {}
        for f in range(1 - a, b):
            pairs = [(k, l) for (k, l) in elements if l - k == f]
            pairs.sort(key=self.rank)  # bottom to top within the file
            self._file_indices[f] = tuple(self.index[p] for p in pairs)
        ranks: dict[int, list[int]] = {}
        for x in elements:
            ranks.setdefault(self.rank(x), []).append(self.index[x])
        self._rank_indices = {r: tuple(v) for r, v in ranks.items()}

    @staticmethod
    def rank(x) -> int:
        k, l = x
        return k + l - 2

    @staticmethod
    def file_of(x) -> int:
        k, l = x
        return l - k

    @property
    def files(self) -> range:
        """File indices, leftmost (1 - a) to rightmost (b - 1)."""
        return range(1 - self.a, self.b)

    def file_members(self, f: int) -> tuple:
        """Elements of file f, bottom to top."""
        return tuple(self.elements[i] for i in self._file_indices[f])

    def file_mask(self, f: int) -> int:
        mask = 0
        for i in self._file_indices[f]:
            mask |= 1 << i
        return mask

    def positive_fiber(self, k: int) -> tuple:
        """The chain {(k, l) : 1 <= l <= b}."""
        if not 1 <= k <= self.a:
            raise ValueError(f"positive fiber index {k} out of range")
        return tuple((k, l) for l in range(1, self.b + 1))

    def negative_fiber(self, l: int) -> tuple:
        """The chain {(k, l) : 1 <= k <= a}."""
        if not 1 <= l <= self.b:
            raise ValueError(f"negative fiber index {l} out of range")
        return tuple((k, l) for k in range(1, self.a + 1))

    def opposite(self, x):
        """180-degree rotation: (k, l) -> (a + 1 - k, b + 1 - l)."""
        k, l = x
        return (self.a + 1 - k, self.b + 1 - l)

    def ideal_count(self) -> int:
        return math.comb(self.a + self.b, self.a)

    def enumerate_order_ideals(self, guard: int | None = None) -> list[OrderIdeal]:
        cap = DEFAULT_ENUMERATION_GUARD if guard is None else guard
        if self.ideal_count() > cap:
            raise GuardExceeded(
                f"[{self.a}]x[{self.b}] has {self.ideal_count()} ideals, over the guard of {cap}"
            )
        return super().enumerate_order_ideals(guard)

    # -- serialization helpers -------------------------------------------

    def state_pairs(self, state) -> list[list[int]]:
        """Ideal/antichain as a sorted list of [k, l] pairs (JSON shape)."""
        return [[k, l] for (k, l) in self.members(state)]

    def parse_pairs(self, pairs):
        return [tuple(p) for p in pairs]
