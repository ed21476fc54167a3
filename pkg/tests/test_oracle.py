import pytest

from cableslopes.cable import bezout
from cableslopes.exact import ExtRational
from cableslopes.intervals import cable_interval
from cableslopes.jn import witness_search
from cableslopes.oracle import (ScanReport, exhaustive_witness_check,
                                grid_scan_interval)

R = ExtRational.parse
C23 = bezout(2, 3)


class TestGridScan:
    def test_hull_matches_interval(self):
        for tau in (R("1/2"), R("1/4"), R("1/3"), ExtRational(0),
                    R("-7/6")):
            for J in (frozenset(), frozenset({1})):
                res = cable_interval(C23, J, tau)
                report = grid_scan_interval(C23, J, tau, 12, expected=res.t)
                assert report.mismatches == []
                assert report.hull_low == res.t.low
                assert report.hull_high == res.t.high

    def test_mismatch_detection(self):
        from cableslopes.exact import Arc
        wrong = Arc(ExtRational(-2), ExtRational(-1))
        report = grid_scan_interval(C23, frozenset(), R("1/2"), 8,
                                    expected=wrong)
        assert report.mismatches
        assert not report.ok

    def test_report_counts_points(self):
        report = grid_scan_interval(C23, frozenset(), R("1/2"), 6)
        assert isinstance(report, ScanReport)
        assert report.tested_points > 0
        assert report.ok


class TestExhaustiveWitnessCheck:
    def test_confirms_found_witness(self):
        values = ((R("1/3"), True), (R("1/2"), False), (R("1/2"), False))
        w = witness_search(values)
        assert exhaustive_witness_check(values, w)

    def test_confirms_nonexistence(self):
        values = ((R("1/3"), True), (R("1/2"), False), (R("1/2"), True))
        assert exhaustive_witness_check(values, None)

    def test_rejects_wrong_nonexistence_claim(self):
        values = ((R("1/4"), True), (R("1/4"), True), (R("1/4"), True))
        assert not exhaustive_witness_check(values, None)

    def test_rejects_invalid_witness(self):
        from cableslopes.jn import JNWitness
        values = ((R("1/3"), True), (R("1/2"), False), (R("1/2"), False))
        bogus = JNWitness(4, 2, (R("1/2"), R("1/2"), R("1/4")))
        assert not exhaustive_witness_check(values, bogus)

    def test_rejects_wrong_multiset(self):
        from cableslopes.jn import JNWitness
        values = ((R("1/3"), True), (R("1/2"), False), (R("1/2"), False))
        bogus = JNWitness(2, 1, (R("1/2"), R("1/2"), R("1/4")))
        assert not exhaustive_witness_check(values, bogus)

    def test_validates_input_range(self):
        with pytest.raises(ValueError):
            exhaustive_witness_check(((ExtRational(2), True),
                                      (R("1/2"), False)), None)
