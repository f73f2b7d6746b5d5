"""Acceptance suite: one pass/fail line per criterion, printed as it runs.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines. Pinned
tolerances:

* criterion 4: Monte-Carlo mean over 20 seeds within 3 standard errors of
  the exact expectation;
* criterion 10: exact rational bound, no slack beyond a ``1e-9`` relative
  shrink of beta below the exact minimum density;
* all other criteria are exact integer or boolean comparisons.
"""

import pytest

from bergetools import verify

MC_SEEDS = range(20)
MC_STANDARD_ERRORS = 3

CRITERIA = {
    1: verify.check_polarity,
    2: verify.check_norm_graphs,
    3: verify.check_k22_bound,
    4: lambda: verify.check_composite(3, 9, MC_SEEDS),
    5: verify.check_chain,
    6: verify.check_small_extremal,
    7: verify.check_census,
    8: verify.check_peel,
    9: verify.check_norm_map,
    10: verify.check_kw,
    11: verify.check_clique_bound,
}


def _line(res):
    return f"criterion {res.check_id}: {res.status()} [{res.anchor}] " + \
        " ".join(f"{k}={v}" for k, v in res.values.items())


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    res = CRITERIA[number]()
    assert res.check_id == number
    print(_line(res))
    assert res.passed is True


def test_criterion_12_trend_report():
    res = verify.trend_report()
    print(_line(res))
    assert res.passed is None and len(res.values) == 4
