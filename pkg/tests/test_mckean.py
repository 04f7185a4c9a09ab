import math

import pytest
from hypothesis import given, strategies as st

from bwbdirac.charring import evaluate_at_torus, freudenthal_multiplicities
from bwbdirac.errors import DomainError
from bwbdirac.index import bwb_index
from bwbdirac.mckean import supertrace, supertrace_terms, t_independence_report
from bwbdirac.rootsys import Weight, build_root_system, inner

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


def test_examples():
    v = supertrace(A1, Weight.of(3), [0.7], 1.3, 8)
    assert abs(v - 2 * (math.cos(2.1) + math.cos(0.7))) < 1e-12
    assert abs(supertrace(A1, Weight.of(-1), [0.4], 0.2, 20)) < 1e-12
    assert abs(supertrace(A2, Weight.of(-2, 1), [0, 0], 1.0, 2) + 1) < 1e-12


def test_reports():
    assert t_independence_report(A1, Weight.of(3), [0.7], [0.1, 1, 10], 8).max_rel_dev < 1e-9
    rep = t_independence_report(A2, Weight.of(-2, 1), [0.3, 0.1], [0.5, 2], 12)
    assert rep.max_rel_dev < 1e-9
    assert rep.rows()[0].keys() == {"t", "value_re", "value_im"}
    zero = t_independence_report(A2, Weight.of(-1, 0), [0.3, 0.1], [0.5, 2], 12)
    assert all(abs(v) < 1e-12 for v in zero.values)


def test_rejections():
    with pytest.raises(DomainError, match="too small"):
        supertrace(A1, Weight.of(3), [0.7], 1.0, 7)
    with pytest.raises(DomainError):
        supertrace(A1, Weight.of(3), [0.7], 0.0, 8)
    with pytest.raises(DomainError):
        t_independence_report(A1, Weight.of(3), [0.7], [1.0], 8)


def test_off_shell_terms_vanish():
    mu = Weight.of(-3, 1)
    r2 = inner(A2, mu + A2.rho, mu + A2.rho)
    for lam, diff, scalar in supertrace_terms(A2, mu, r2 + 20):
        if scalar != 0:
            assert diff == 0


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
       st.lists(st.floats(-3, 3), min_size=2, max_size=2),
       st.integers(0, 15))
def test_matches_closed_form_and_truncation_stable(coords, theta, extra):
    mu = Weight(coords)
    r2 = inner(A2, mu + A2.rho, mu + A2.rho)
    a = supertrace(A2, mu, theta, 0.7, r2)
    b = supertrace(A2, mu, theta, 0.7, r2 + extra)
    assert a == b
    res = bwb_index(A2, mu)
    if res.zero:
        assert abs(a) < 1e-12
    else:
        chi = evaluate_at_torus(freudenthal_multiplicities(A2, res.lam), theta)
        assert abs(a - res.sign * chi) < 1e-9 * max(1.0, abs(chi))
