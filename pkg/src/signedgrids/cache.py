"""
On-disk cache for the distance-class pipeline.

Layout under the cache directory:

    {family}/pi_{k}.perms   generator set Pi_k, PermSet text format
    {family}/S_{k}.hist     length histogram of the compact representatives

Every cache file starts with a header line carrying the format version;
files with an unexpected header are rejected rather than silently
misread.  Warm-cache runs must produce byte-identical command output, so
everything written here is sorted.
"""
from __future__ import annotations

from pathlib import Path

from .distance import Family
from .gridclass import LengthHistogram, PermSet, permset_from_lines, permset_to_lines

PERMS_HEADER = "# signedgrids permset v1"
HIST_HEADER = "# signedgrids hist v1"


def pi_path(cache_dir: Path, family: Family, k: int) -> Path:
    return Path(cache_dir) / family.value / f"pi_{k}.perms"


def hist_path(cache_dir: Path, family: Family, k: int) -> Path:
    return Path(cache_dir) / family.value / f"S_{k}.hist"


def _read_lines(path: Path, header: str) -> list[str]:
    lines = path.read_text().splitlines()
    if not lines or lines[0] != header:
        raise ValueError(f"{path}: missing or unexpected header (expected {header!r})")
    return lines[1:]


def write_permset(path: Path, members: PermSet) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join([PERMS_HEADER] + permset_to_lines(members)) + "\n")


def read_permset(path: Path) -> PermSet:
    return permset_from_lines(_read_lines(path, PERMS_HEADER))


def write_histogram(path: Path, hist: LengthHistogram) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [HIST_HEADER, f"epsilon {1 if hist.has_epsilon else 0}"]
    lines.extend(f"{m} {hist.counts[m]}" for m in sorted(hist.counts))
    path.write_text("\n".join(lines) + "\n")


def read_histogram(path: Path) -> LengthHistogram:
    body = _read_lines(path, HIST_HEADER)
    if not body or not body[0].startswith("epsilon "):
        raise ValueError(f"{path}: missing epsilon line")
    has_epsilon = body[0].split()[1] == "1"
    counts: dict[int, int] = {}
    for line in body[1:]:
        if not line.strip():
            continue
        m_str, c_str = line.split()
        counts[int(m_str)] = int(c_str)
    return LengthHistogram(counts, has_epsilon)
