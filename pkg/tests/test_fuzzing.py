import time

import numpy as np
import pytest

from scripts.errors import CoordinateOutOfRange, PreconditionViolated
from scripts.fuzzing import (
    PROPERTIES,
    exhaustive_grid,
    fuzz_axioms,
    general_position_tuples,
)
from scripts.predicates import Orientation, axiom4_outcome, axiom5_outcome, axiom5_pivot_b_outcome, orient


def counts_by_property(report):
    return report.counts.set_index("property")


def test_fuzz_axioms_no_violation():
    report = fuzz_axioms(2000, 42, 1000)
    assert report.violations == 0
    c = counts_by_property(report)
    assert list(c.index) == list(PROPERTIES)
    assert (c["tested"] == 2000).all()
    # les prémisses orientées produisent des instances non vides
    for name in ("axiom4", "axiom5", "axiom5_pivot_b", "left_of_segment"):
        assert c.loc[name, "tested"] > c.loc[name, "vacuous"]
    assert c.loc["axiom3", "vacuous"] == 0


def test_fuzz_axioms_zero_trials():
    report = fuzz_axioms(0, 0, 1000)
    assert report.violations == 0
    assert int(report.counts[["tested", "vacuous", "violated"]].to_numpy().sum()) == 0
    assert len(report.summary_lines()) == len(PROPERTIES)


def test_fuzz_axioms_small_bound():
    assert fuzz_axioms(200, 1, 2).violations == 0


def test_fuzz_axioms_large_bound():
    # déterminants au-delà de int64 : entiers Python
    assert fuzz_axioms(200, 5, 2**30).violations == 0


def test_fuzz_axioms_is_deterministic():
    a = fuzz_axioms(300, 9, 1000).counts
    b = fuzz_axioms(300, 9, 1000).counts
    assert a.equals(b)


def test_fuzz_axioms_preconditions():
    with pytest.raises(PreconditionViolated):
        fuzz_axioms(-1, 0, 1000)
    with pytest.raises(CoordinateOutOfRange):
        fuzz_axioms(10, 0, 0)


def test_general_position_tuples():
    stream = general_position_tuples(np.random.default_rng(0), 50)
    for _ in range(100):
        pts, weights = next(stream)
        assert len(pts) == 5 and len(set(pts)) == 5
        assert all(1 <= w <= 97 for w in weights)
        for i in range(5):
            for j in range(i + 1, 5):
                for k in range(j + 1, 5):
                    assert orient(pts[i], pts[j], pts[k]) is not Orientation.COLLINEAR


@pytest.mark.slow
@pytest.mark.parametrize("arity, check", [(4, axiom4_outcome), (5, axiom5_outcome), (5, axiom5_pivot_b_outcome)])
def test_exhaustive_small_grid(arity, check):
    tested, violated = exhaustive_grid(3, arity, check)
    assert tested > 0
    assert violated == 0


@pytest.mark.slow
def test_fuzz_axioms_full_run_under_ten_seconds():
    start = time.perf_counter()
    report = fuzz_axioms(100_000, 42, 1000)
    elapsed = time.perf_counter() - start
    assert report.violations == 0
    assert elapsed < 10.0, f"{elapsed:.1f} s"
