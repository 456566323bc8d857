#!/usr/bin/env python3
"""
Recompute the distance-class polynomial tables and report measured sizes.

Prints, for each family and k, the generator-set cardinality |Pi_k|, the
number of compact representatives |S_k|, the wall-clock time, and the
exact coefficient array.  The burnt-pancake run covers k <= 8 by default;
pass --stretch for k = 9 and 10 (several minutes, a few GB of RAM).

Usage:
    python scripts/build_tables.py [--stretch] [--cache-dir DIR]
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from signedgrids.distance import Family, reversal_pi, _pancake_pi_packed  # noqa: E402
from signedgrids.gridclass import closure_histogram  # noqa: E402
from signedgrids.perm import unpack_perm  # noqa: E402
from signedgrids.poly import format_coeff_array, from_histogram  # noqa: E402
from signedgrids import cache  # noqa: E402


def run_family(family: Family, k_max: int, cache_dir: Path | None) -> None:
    print(f"== {family.value} distance classes, k = 0..{k_max}")
    for k in range(k_max + 1):
        t0 = time.perf_counter()
        if family is Family.PANCAKE:
            packed = _pancake_pi_packed(k)
            generators = frozenset(unpack_perm(b) for b in packed)
        else:
            generators = reversal_pi(k)
        t_gen = time.perf_counter() - t0
        hist = closure_histogram(generators)
        polynomial = from_histogram(hist.counts)
        elapsed = time.perf_counter() - t0
        if cache_dir is not None:
            cache.write_permset(cache.pi_path(cache_dir, family, k), generators)
            cache.write_histogram(cache.hist_path(cache_dir, family, k), hist)
        print(
            f"k={k:>2}  |Pi_k|={len(generators):>8}  |S_k|={hist.total():>9}  "
            f"gen={t_gen:6.2f}s  total={elapsed:7.2f}s"
        )
        print(f"      {format_coeff_array(polynomial)}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--stretch", action="store_true", help="include pancake k = 9, 10")
    parser.add_argument("--cache-dir", type=Path, default=None)
    args = parser.parse_args()
    run_family(Family.PANCAKE, 10 if args.stretch else 8, args.cache_dir)
    run_family(Family.REVERSAL, 5, args.cache_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
