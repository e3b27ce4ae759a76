"""Tests of analysis.report and analysis.executor modules
"""

import threading
import time

from windschitl.analysis import CheckItem, CheckStatus, VerificationReport
from windschitl.analysis.executor import map_ordered
from windschitl.analysis.report import certify
from windschitl.numerics import Interval, Real


def test_certify():
    assert certify(True) is CheckStatus.CERTIFIED
    assert certify(False) is CheckStatus.VIOLATED
    assert certify(None) is CheckStatus.INCONCLUSIVE


def test_status_passed():
    assert CheckStatus.CERTIFIED.passed
    assert CheckStatus.ATTAINED.passed
    assert not CheckStatus.INCONCLUSIVE.passed
    assert not CheckStatus.VIOLATED.passed


class TestVerificationReport:

    def make(self, *statuses):
        return VerificationReport("demo", 128, [CheckItem("a < b", s) for s in statuses])

    def test_exit_codes(self):
        assert self.make(CheckStatus.CERTIFIED, CheckStatus.ATTAINED).exit_code == 0
        assert self.make(CheckStatus.CERTIFIED, CheckStatus.INCONCLUSIVE).exit_code == 4
        assert self.make(CheckStatus.INCONCLUSIVE, CheckStatus.VIOLATED).exit_code == 1
        assert self.make().exit_code == 0

    def test_counts(self):
        report = self.make(CheckStatus.CERTIFIED, CheckStatus.CERTIFIED)
        report.extend([CheckItem("c < d", CheckStatus.INCONCLUSIVE)])
        assert report.counts() == {
            "certified": 2, "violated": 0, "inconclusive": 1, "attained": 0,
        }
        assert len(report.with_status(CheckStatus.CERTIFIED)) == 2
        assert report.inconclusive and not report.violated and not report.passed

    def test_dump(self):
        item = CheckItem(
            "gamma < w1", CheckStatus.CERTIFIED,
            x=Real.from_value(2, 128), precision_bits=128,
            gap=Interval.from_rational(1, 128), n=4,
        )
        report = VerificationReport("ordering", 128, [item])
        dumped = report.dump_to_dict(3)
        assert dumped["check"] == "ordering"
        assert dumped["rows"] == [{
            "relation": "gamma < w1", "x": "2", "status": "certified",
            "precision_bits": 128, "gap": "[1.00e+0, 1.00e+0]", "n": 4,
        }]


def test_map_ordered_keeps_order():
    def slow_square(n):
        time.sleep(0.001 * (10 - n))
        return n * n, threading.current_thread().name

    sequential = map_ordered(slow_square, range(10), max_workers=1)
    parallel = map_ordered(slow_square, range(10), max_workers=4)
    assert [v for v, _ in sequential] == [v for v, _ in parallel] == [n * n for n in range(10)]
    assert {name for _, name in sequential} == {threading.current_thread().name}
