"""Dynamics on products of two chains: toggles, rowmotion, promotion, words.

Conventions fixed here once and used everywhere:

* rowmotion on ideals sends I to the down closure of the minimal elements
  of its complement; the equivalent toggle formulations apply the toggle at
  the TOP of a linear extension first and work downward,
* promotion toggles files left to right (file 1-a through file b-1),
  bottom to top inside each file,
* the sign word of an ideal reads the height function's increments left to
  right, so promotion acts as a leftward cyclic shift and rowmotion as the
  block/gap reversal implemented below,
* the Stanley-Thomas word of an antichain carries rowmotion to a rightward
  cyclic shift.
"""
from __future__ import annotations

from dataclasses import dataclass

from .posets import Antichain, FinitePoset, GridPoset, OrderIdeal, iter_bits

PLUS, MINUS = 1, -1


# -- toggles ---------------------------------------------------------------

def toggle(poset: FinitePoset, ideal: OrderIdeal, x) -> OrderIdeal:
    """Add or remove x when the result is still an ideal; otherwise return I."""
    if x not in poset.index:
        raise ValueError(f"{x!r} is not an element of this poset")
    return _toggle_index(poset, ideal, poset.index[x])


def _toggle_index(poset: FinitePoset, ideal: OrderIdeal, i: int) -> OrderIdeal:
    bit = 1 << i
    if ideal.mask & bit:
        if poset.up_covers[i] & ideal.mask:
            return ideal
        return OrderIdeal(ideal.mask ^ bit)
    if poset.down_covers[i] & ~ideal.mask:
        return ideal
    return OrderIdeal(ideal.mask | bit)


# -- rowmotion ---------------------------------------------------------------

def rowmotion_ideal(poset: FinitePoset, ideal: OrderIdeal) -> OrderIdeal:
    """Rowmotion on order ideals: down closure of the complement's minimals."""
    return poset.down_closure(poset.minimal_elements_of_complement(ideal))


def rowmotion_ideal_by_toggles(poset: FinitePoset, ideal: OrderIdeal,
                               extension=None) -> OrderIdeal:
    """Rowmotion as a product of element toggles along a linear extension.

    The toggle at the top of the extension is applied first. The result is
    independent of the extension chosen; the default is the poset's
    canonical one.
    """
    if extension is None:
        order = poset._extension
    else:
        order = tuple(poset.index[x] for x in extension)
        seen = 0
        for i in order:
            if poset.down_covers[i] & ~seen:
                raise ValueError("sequence is not a linear extension")
            seen |= 1 << i
        if len(order) != len(poset):
            raise ValueError("linear extension must list every element once")
    for i in reversed(order):
        ideal = _toggle_index(poset, ideal, i)
    return ideal


def rowmotion_ideal_by_ranks(poset: GridPoset, ideal: OrderIdeal) -> OrderIdeal:
    """Rowmotion as rank toggles, top rank first (grid posets only)."""
    if not isinstance(poset, GridPoset):
        raise ValueError("rank-toggle rowmotion is defined on grid posets")
    for r in range(poset.a + poset.b - 2, -1, -1):
        for i in poset._rank_indices[r]:  # toggles inside a rank commute
            ideal = _toggle_index(poset, ideal, i)
    return ideal


def rowmotion_antichain(poset: FinitePoset, antichain: Antichain) -> Antichain:
    """Rowmotion on antichains: minimal elements of the complement of the
    ideal the antichain generates."""
    return poset.minimal_elements_of_complement(poset.down_closure(antichain))


# -- promotion ---------------------------------------------------------------

def promotion_ideal(poset: GridPoset, ideal: OrderIdeal) -> OrderIdeal:
    """Promotion on order ideals of [a] x [b]: file toggles, left to right."""
    if not isinstance(poset, GridPoset):
        raise ValueError("promotion is defined on grid posets")
    for f in poset.files:
        for i in poset._file_indices[f]:  # bottom to top
            ideal = _toggle_index(poset, ideal, i)
    return ideal


def promotion_antichain(poset: GridPoset, antichain: Antichain) -> Antichain:
    """Promotion transported to antichains through the ideal bijection."""
    return poset.maximal_elements(promotion_ideal(poset, poset.down_closure(antichain)))


# -- height functions and sign words ----------------------------------------

@dataclass(frozen=True)
class HeightFunction:
    """Heights h(-a), ..., h(b) of an order ideal of [a] x [b].

    h(k) = |k| + 2 * #(I intersected with file k), with the endpoint
    conventions h(-a) = a and h(b) = b.
    """

    a: int
    b: int
    values: tuple[int, ...]

    def at(self, k: int) -> int:
        if not -self.a <= k <= self.b:
            raise ValueError(f"height argument {k} outside [{-self.a}, {self.b}]")
        return self.values[k + self.a]

    @property
    def total(self) -> int:
        return sum(self.values)


def height_function(poset: GridPoset, ideal: OrderIdeal) -> HeightFunction:
    counts = {f: 0 for f in poset.files}
    for k, l in poset.members(ideal):
        counts[l - k] += 1
    values = []
    for k in range(-poset.a, poset.b + 1):
        values.append(abs(k) + 2 * counts.get(k, 0))
    return HeightFunction(poset.a, poset.b, tuple(values))


def sign_word(poset: GridPoset, ideal: OrderIdeal) -> tuple[int, ...]:
    """Increments of the height function: a+b letters from {+1, -1}."""
    h = height_function(poset, ideal).values
    return tuple(h[i] - h[i - 1] for i in range(1, len(h)))


def ideal_from_sign_word(poset: GridPoset, word) -> OrderIdeal:
    """Inverse of sign_word; validates the letter multiset."""
    word = tuple(word)
    _require_pm_word(word, poset.a, poset.b)
    mask = 0
    height = poset.a
    for pos, letter in enumerate(word, start=1):
        height += letter
        k = pos - poset.a  # file index of the step just closed
        if 1 - poset.a <= k <= poset.b - 1:
            count = (height - abs(k)) // 2
            for i in poset._file_indices[k][:count]:
                mask |= 1 << i
    return OrderIdeal(mask)


def _require_pm_word(word, minuses: int, pluses: int) -> None:
    if any(c not in (PLUS, MINUS) for c in word):
        raise ValueError("word letters must be +1 or -1")
    if len(word) != minuses + pluses or word.count(MINUS) != minuses:
        raise ValueError(
            f"word must have {minuses} minus letters and {pluses} plus letters"
        )


# -- block/gap reversal ------------------------------------------------------

def block_gap_reversal(word) -> tuple[int, ...]:
    """Rowmotion on sign words.

    A block is an adjacent (-1, +1) pair; scanning left to right, each block
    is replaced by (+1, -1) and each maximal block-free stretch between
    blocks (a gap) is reversed in place.
    """
    word = tuple(word)
    if any(c not in (PLUS, MINUS) for c in word):
        raise ValueError("word letters must be +1 or -1")
    out: list[int] = []
    i, n = 0, len(word)
    while i < n:
        if i + 1 < n and word[i] == MINUS and word[i + 1] == PLUS:
            out.append(PLUS)
            out.append(MINUS)
            i += 2
            continue
        j = i + 1  # the gap runs to just before the next block
        while j < n and not (word[j] == MINUS and j + 1 < n and word[j + 1] == PLUS):
            j += 1
        out.extend(reversed(word[i:j]))
        i = j
    return tuple(out)


# -- Stanley-Thomas words ------------------------------------------------------

def stanley_thomas_word(poset: GridPoset, antichain: Antichain) -> tuple[int, ...]:
    """Word of length a+b: position i <= a is +1 when the antichain meets
    positive fiber i; position a+l is +1 when it misses negative fiber l."""
    members = poset.members(antichain)
    pos = {k for (k, _) in members}
    neg = {l for (_, l) in members}
    head = tuple(PLUS if k in pos else MINUS for k in range(1, poset.a + 1))
    tail = tuple(MINUS if l in neg else PLUS for l in range(1, poset.b + 1))
    return head + tail


def antichain_from_st_word(poset: GridPoset, word) -> Antichain:
    """Inverse of stanley_thomas_word; validates the letter multiset."""
    word = tuple(word)
    _require_pm_word(word, poset.a, poset.b)
    rows = [k for k in range(1, poset.a + 1) if word[k - 1] == PLUS]
    cols = [l for l in range(1, poset.b + 1) if word[poset.a + l - 1] == MINUS]
    # ascending rows pair with descending columns
    mask = 0
    for k, l in zip(rows, reversed(cols)):
        mask |= 1 << poset.index[(k, l)]
    return Antichain(mask)


# -- word utilities -----------------------------------------------------------

def cyclic_shift(word, direction: str) -> tuple:
    """Rotate a word one place left or right."""
    word = tuple(word)
    if not word:
        raise ValueError("cannot shift an empty word")
    if direction == "left":
        return word[1:] + word[:1]
    if direction == "right":
        return word[-1:] + word[:-1]
    raise ValueError(f"direction must be 'left' or 'right', not {direction!r}")


def format_pm_word(word) -> str:
    return "".join("+" if c == PLUS else "-" for c in word)


def parse_pm_word(text: str) -> tuple[int, ...]:
    """Parse a +/- word; accepts '+', '-', the Unicode minus, and 0/1 digits
    (0 meaning -1)."""
    out = []
    for ch in text.strip():
        if ch in "+1":
            out.append(PLUS)
        elif ch in "-0−":
            out.append(MINUS)
        elif ch.isspace():
            continue
        else:
            raise ValueError(f"unexpected letter {ch!r} in word {text!r}")
    return tuple(out)
