"""Tests of numerics.bernoulli module
"""

import math
import threading
from fractions import Fraction

import pytest

from windschitl.exceptions import ParamsInvalid
from windschitl.numerics import BernoulliTable, bernoulli


def test_known_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(8) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(16) == Fraction(-3617, 510)
    assert bernoulli(20) == Fraction(-174611, 330)


def test_odd_indices_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 61, 2))


def test_signs_alternate():
    signs = [bernoulli(2 * k) > 0 for k in range(1, 30)]
    assert signs == [k % 2 == 1 for k in range(1, 30)]


def test_recurrence_holds():
    for m in range(1, 40):
        assert sum(math.comb(m + 1, j) * bernoulli(j) for j in range(m + 1)) == 0


def test_negative_index():
    with pytest.raises(ParamsInvalid):
        bernoulli(-1)


def test_table_growth_is_thread_safe():
    """Concurrent readers see the same values as a sequential table
    """
    table = BernoulliTable()
    results = {}

    def read(n):
        results[n] = table[n]

    threads = [threading.Thread(target=read, args=(n,)) for n in range(40, 80, 2)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    assert table.max_index >= 78
    assert all(results[n] == bernoulli(n) for n in results)
