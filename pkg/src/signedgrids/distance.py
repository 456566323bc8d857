"""
Generator sets for the sorting-distance classes and their polynomials.

The set of signed permutations sortable in at most k moves is a grid
class.  Its generator set Pi_k is built recursively: each member of
Pi_{k-1} is inflated to split one block (two blocks for a block reversal)
and the corresponding move is applied, simulating one more move in every
possible position.

Prefix reversals (burnt pancake flips) give members of length k+1;
block reversals give members of length 2k+1.  Member counts are measured,
never assumed: `pancake_pi(k)` deduplicates at every level and callers can
take `len()` of the result.
"""
from __future__ import annotations

import enum
from typing import Iterable, Sequence

from . import gridclass, poly
from .perm import (
    NEGATE_TABLE,
    SHIFT_UP_TABLE,
    SignedPerm,
    block_reversal,
    identity,
    inflate,
    pack_perm,
    prefix_reversal,
    unpack_perm,
)


class Family(enum.Enum):
    """Which generator family drives sorting distance."""

    PANCAKE = "pancake"  # prefix reversals f_i
    REVERSAL = "reversal"  # block reversals b_{i,j}

    def __str__(self) -> str:  # argparse-friendly
        return self.value


DEFAULT_K_CEILING = {Family.PANCAKE: 10, Family.REVERSAL: 5}


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds the configured resource ceiling."""


def _grow_pancake(level: set[bytes]) -> set[bytes]:
    """One recursion step: split each block once and flip up to the split."""
    out: set[bytes] = set()
    add = out.add
    for b in level:
        for i in range(1, len(b) + 1):
            c = b[i - 1]
            if c > 128:
                a = c - 128
                pair = bytes((c, c + 1))
            else:
                a = 128 - c
                pair = bytes((c - 1, c))
            widened = b.translate(SHIFT_UP_TABLE[a])
            inflated = widened[: i - 1] + pair + widened[i:]
            add(inflated[:i].translate(NEGATE_TABLE)[::-1] + inflated[i:])
    return out


def _pancake_pi_packed(k: int) -> set[bytes]:
    level = {pack_perm((1,))}
    for _ in range(k):
        level = _grow_pancake(level)
    return level


def pancake_pi(k: int) -> gridclass.PermSet:
    """
    Generator set for prefix-reversal distance <= k: Pi_0 = {1} and
    Pi_{k+1} = { f_i(pi inflated by e_i + 1) : pi in Pi_k, 1 <= i <= len(pi) }.
    Every member has length k+1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return frozenset(unpack_perm(b) for b in _pancake_pi_packed(k))


def _grow_reversal(level: Iterable[SignedPerm]) -> frozenset[SignedPerm]:
    """One recursion step: split two blocks (possibly the same one) and
    reverse everything between the two split points."""
    nxt: set[SignedPerm] = set()
    for pi in level:
        m = len(pi)
        for i in range(1, m + 1):
            for j in range(i, m + 1):
                sizes = [1] * m
                sizes[i - 1] += 1
                sizes[j - 1] += 1
                nxt.add(block_reversal(inflate(pi, sizes), i + 1, j + 1))
    return frozenset(nxt)


def reversal_pi(k: int) -> gridclass.PermSet:
    """
    Generator set for block-reversal distance <= k: Pi_0 = {1} and
    Pi_{k+1} = { b_{i+1,j+1}(pi inflated by e_i + e_j + 1) :
                 pi in Pi_k, 1 <= i <= j <= len(pi) }.
    Every member has length 2k+1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    level: frozenset[SignedPerm] = frozenset({(1,)})
    for _ in range(k):
        level = _grow_reversal(level)
    return level


_POLY_MEMO: dict[tuple[Family, int], poly.Polynomial] = {}
_HIST_MEMO: dict[tuple[Family, int], gridclass.LengthHistogram] = {}


def distance_histogram(family: Family, k: int, workers: int = 1) -> gridclass.LengthHistogram:
    """Length histogram of the compact representatives of the distance-<=k class."""
    key = (family, k)
    if key not in _HIST_MEMO:
        if family is Family.PANCAKE:
            hist = gridclass.closure_histogram_packed(_pancake_pi_packed(k), workers)
        else:
            hist = gridclass.closure_histogram(reversal_pi(k), workers)
        _HIST_MEMO[key] = hist
    return _HIST_MEMO[key]


def distance_polynomial(
    family: Family,
    k: int,
    k_ceiling: int | None = None,
    workers: int = 1,
) -> poly.Polynomial:
    """
    The polynomial counting signed permutations of length n whose sorting
    distance under the family is at most k, valid for all n >= 1.

    Raises ResourceLimitError above the ceiling (defaults: pancake 10,
    reversal 5); pass `k_ceiling` to raise or lower the guard.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    ceiling = DEFAULT_K_CEILING[family] if k_ceiling is None else k_ceiling
    if k > ceiling:
        raise ResourceLimitError(
            f"k={k} exceeds the {family.value} ceiling of {ceiling}; "
            f"raise it explicitly if you intend to wait for this computation"
        )
    key = (family, k)
    if key not in _POLY_MEMO:
        _POLY_MEMO[key] = poly.from_histogram(distance_histogram(family, k, workers).counts)
    return _POLY_MEMO[key]


# ---------------------------------------------------------------------------
# Sorting-sequence translation.
#
# A sorting sequence for a generator-set member lifts to one of equal length
# for any inflation of it: each move's positions are translated through the
# running block-size vector, and the move is then applied to the vector
# itself.  Moves are 1-based flip positions for the pancake family and
# 1-based (i, j) pairs for the reversal family; a move whose translated span
# is empty (all relevant block sizes zero) is a no-op, encoded as position 0
# or as a pair (x, x-1).

Move = int | tuple[int, int]


def apply_move(pi: SignedPerm, family: Family, move: Move) -> SignedPerm:
    """Apply one generator (or a degenerate no-op move) to pi."""
    if family is Family.PANCAKE:
        assert isinstance(move, int)
        return pi if move == 0 else prefix_reversal(pi, move)
    i, j = move  # type: ignore[misc]
    return pi if j < i else block_reversal(pi, i, j)


def sorting_sequence(
    sigma: SignedPerm,
    family: Family,
    pi: SignedPerm,
    sizes: Sequence[int],
    moves: Sequence[Move],
) -> list[Move]:
    """
    Translate a sorting sequence of pi into one for sigma = pi inflated by
    `sizes`.  The returned sequence has the same length and sorts sigma.
    """
    if inflate(pi, sizes) != sigma:
        raise ValueError("inconsistent inputs: inflating pi by the vector does not give sigma")
    current = pi
    vec = list(sizes)
    out: list[Move] = []
    for move in moves:
        if family is Family.PANCAKE:
            if not isinstance(move, int) or not 1 <= move <= len(current):
                raise ValueError(f"move {move!r} does not apply to a permutation of length {len(current)}")
            out.append(sum(vec[:move]))
            vec[:move] = vec[:move][::-1]
        else:
            i, j = move  # type: ignore[misc]
            if not 1 <= i <= j <= len(current):
                raise ValueError(f"move {move!r} does not apply to a permutation of length {len(current)}")
            out.append((sum(vec[: i - 1]) + 1, sum(vec[:j])))
            vec[i - 1 : j] = vec[i - 1 : j][::-1]
        current = apply_move(current, family, move)
    if current != identity(len(pi)):
        raise ValueError("the given moves do not sort pi")
    return out
