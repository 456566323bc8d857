"""
Ground-truth distances by breadth-first search over B_n.

Both generator families consist of involutions, so distance to the sorted
permutation is symmetric and the BFS layers from the identity are exactly
the distance classes.  States use the packed byte encoding; a prefix
reversal or block reversal is a translate plus slice reversal.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

from .distance import DEFAULT_K_CEILING, Family, ResourceLimitError, distance_polynomial
from .perm import NEGATE_TABLE, identity, pack_perm

DEFAULT_N_CEILING = 7


@dataclass(frozen=True)
class DistanceHistogram:
    """BFS layer sizes: counts[d] permutations at distance exactly d."""

    n: int
    family: Family
    counts: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.counts) - 1

    def within(self, k: int) -> int:
        """Number of permutations at distance <= k."""
        return sum(self.counts[: k + 1])


def _neighbors_pancake(state: bytes, n: int) -> list[bytes]:
    return [state[:i].translate(NEGATE_TABLE)[::-1] + state[i:] for i in range(1, n + 1)]


def _neighbors_reversal(state: bytes, n: int) -> list[bytes]:
    out = []
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.append(state[:i] + state[i:j].translate(NEGATE_TABLE)[::-1] + state[j:])
    return out


def _expand_frontier(chunk: list[bytes], family: Family, n: int) -> set[bytes]:
    gen = _neighbors_pancake if family is Family.PANCAKE else _neighbors_reversal
    out: set[bytes] = set()
    for state in chunk:
        out.update(gen(state, n))
    return out


def bfs_histogram(
    n: int,
    family: Family,
    n_ceiling: int = DEFAULT_N_CEILING,
    workers: int = 1,
) -> DistanceHistogram:
    """
    Exact layer sizes of B_n from the identity under the family's
    generators.  Refuses n above the ceiling (default 7, i.e. 645120
    states); raise it explicitly to go to n = 8 and beyond.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > n_ceiling:
        raise ResourceLimitError(
            f"n={n} exceeds the oracle ceiling of {n_ceiling} "
            f"({2 ** n * factorial(n)} states); raise the ceiling explicitly to proceed"
        )
    start = pack_perm(identity(n))
    visited: set[bytes] = {start}
    frontier: list[bytes] = [start]
    counts = [1]
    while frontier:
        if workers > 1 and len(frontier) >= 4 * workers:
            step = (len(frontier) + workers - 1) // workers
            chunks = [frontier[i : i + step] for i in range(0, len(frontier), step)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda ch: _expand_frontier(ch, family, n), chunks))
            produced: set[bytes] = set()
            for part in parts:
                produced |= part
        else:
            produced = _expand_frontier(frontier, family, n)
        produced -= visited
        if not produced:
            break
        visited |= produced
        counts.append(len(produced))
        frontier = list(produced)
    total = 2**n * factorial(n)
    if sum(counts) != total:
        raise AssertionError(
            f"BFS covered {sum(counts)} of {total} states; generator application is broken"
        )
    return DistanceHistogram(n, family, tuple(counts))


def count_within(
    n: int,
    k: int,
    family: Family,
    n_ceiling: int = DEFAULT_N_CEILING,
) -> int:
    """Number of length-n permutations at distance at most k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return bfs_histogram(n, family, n_ceiling).within(k)


@dataclass(frozen=True)
class VerifyRow:
    n: int
    k: int
    polynomial_value: int
    bfs_count: int

    @property
    def match(self) -> bool:
        return self.polynomial_value == self.bfs_count


@dataclass(frozen=True)
class VerifyReport:
    family: Family
    rows: tuple[VerifyRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def mismatches(self) -> list[VerifyRow]:
        return [r for r in self.rows if not r.match]

    def to_table(self) -> str:
        lines = [f"family={self.family.value}"]
        for r in self.rows:
            status = "ok" if r.match else "MISMATCH"
            lines.append(
                f"n={r.n} k={r.k} polynomial={r.polynomial_value} bfs={r.bfs_count} {status}"
            )
        if self.all_match:
            lines.append(f"RESULT: all {len(self.rows)} pairs match")
        else:
            lines.append(f"RESULT: {len(self.mismatches)} of {len(self.rows)} pairs mismatch")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family.value,
                "rows": [
                    {
                        "n": r.n,
                        "k": r.k,
                        "polynomial_value": r.polynomial_value,
                        "bfs_count": r.bfs_count,
                        "match": r.match,
                    }
                    for r in self.rows
                ],
                "all_match": self.all_match,
            }
        )


def verify(
    family: Family,
    k_max: int,
    n_max: int,
    k_ceiling: int | None = None,
    n_ceiling: int = DEFAULT_N_CEILING,
    workers: int = 1,
) -> VerifyReport:
    """
    Compare the enumerating polynomials against BFS counts for every
    1 <= n <= n_max and 0 <= k <= k_max.  Mismatches are report content,
    not errors.
    """
    if k_ceiling is None:
        k_ceiling = DEFAULT_K_CEILING[family]
    polys = [distance_polynomial(family, k, k_ceiling, workers) for k in range(k_max + 1)]
    rows = []
    for n in range(1, n_max + 1):
        hist = bfs_histogram(n, family, n_ceiling, workers)
        for k in range(k_max + 1):
            value = polys[k](n)
            if value.denominator != 1:
                raise AssertionError(f"polynomial value at n={n} is not an integer: {value}")
            rows.append(VerifyRow(n, k, int(value), hist.within(k)))
    return VerifyReport(family, tuple(rows))
