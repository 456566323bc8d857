"""Cache file formats round-trip losslessly and reject foreign files."""
import pytest

from signedgrids import cache
from signedgrids.distance import Family
from signedgrids.gridclass import LengthHistogram


class TestPermsetFiles:
    def test_round_trip(self, tmp_path):
        members = frozenset({(1, -2), (-1,), (2, -1, 3)})
        path = cache.pi_path(tmp_path, Family.PANCAKE, 2)
        cache.write_permset(path, members)
        assert cache.read_permset(path) == members

    def test_round_trip_with_epsilon(self, tmp_path):
        members = frozenset({(), (1,)})
        path = tmp_path / "s.perms"
        cache.write_permset(path, members)
        assert cache.read_permset(path) == members

    def test_header_checked(self, tmp_path):
        path = tmp_path / "bad.perms"
        path.write_text("1 2\n")
        with pytest.raises(ValueError, match="header"):
            cache.read_permset(path)


class TestHistogramFiles:
    def test_round_trip(self, tmp_path):
        hist = LengthHistogram({1: 2, 2: 2, 3: 1}, True)
        path = cache.hist_path(tmp_path, Family.REVERSAL, 1)
        cache.write_histogram(path, hist)
        assert cache.read_histogram(path) == hist

    def test_round_trip_no_epsilon(self, tmp_path):
        hist = LengthHistogram({4: 7}, False)
        path = tmp_path / "h.hist"
        cache.write_histogram(path, hist)
        assert cache.read_histogram(path) == hist

    def test_missing_epsilon_line(self, tmp_path):
        path = tmp_path / "h.hist"
        path.write_text(cache.HIST_HEADER + "\n1 2\n")
        with pytest.raises(ValueError, match="epsilon"):
            cache.read_histogram(path)

    def test_layout_paths(self, tmp_path):
        assert cache.pi_path(tmp_path, Family.PANCAKE, 9).name == "pi_9.perms"
        assert cache.hist_path(tmp_path, Family.REVERSAL, 3).name == "S_3.hist"
        assert cache.pi_path(tmp_path, Family.PANCAKE, 9).parent.name == "pancake"
