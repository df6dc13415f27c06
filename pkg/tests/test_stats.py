import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special
from scipy import stats as sps

from oracles import spearman_classic, t_two_tailed_even_df
from scholarnet.errors import DegenerateInput, InsufficientData
from scholarnet.metrics import AuthorMetrics
from scholarnet.stats import (
    average_ranks,
    betainc,
    correlation_table,
    rho_p_value,
    spearman,
    t_cdf,
    t_two_tailed,
)

# two-tailed p for rho = 0.5, n = 20 (t = 2.4494897, 18 df); agrees with the
# closed-form even-df series and a 40-digit mpmath evaluation
P_RHO_HALF_N20 = 0.0247695588041097


@pytest.mark.parametrize(
    "xs, expected",
    [([10, 20, 30], [1, 2, 3]), ([5, 5], [1.5, 1.5]), ([3, 1, 3, 2], [3.5, 1, 3.5, 2]), ([7], [1])],
)
def test_average_ranks_examples(xs, expected):
    assert average_ranks(xs) == expected


def test_average_ranks_fractions():
    assert average_ranks([Fraction(1, 3), Fraction(1, 2), Fraction(2, 6)]) == [1.5, 3, 1.5]


def test_average_ranks_empty():
    with pytest.raises(ValueError):
        average_ranks([])


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=40))
def test_average_ranks_properties(xs):
    ranks = average_ranks(xs)
    n = len(xs)
    assert sum(ranks) == n * (n + 1) / 2
    assert ranks == pytest.approx(list(sps.rankdata(xs)))


def test_spearman_examples():
    xs = [3.0, 1.0, 4.0, 1.5, 9.0, 2.6]
    assert spearman(xs, xs).rho == pytest.approx(1.0, abs=1e-15)
    up = [1, 2, 3, 4, 5]
    assert spearman(up, up[::-1]).rho == pytest.approx(-1.0, abs=1e-15)
    assert spearman(up, up[::-1]).p_value == 0.0
    assert spearman([1, 2, 3, 4, 5], [1, 3, 2, 5, 4]).rho == pytest.approx(0.8, abs=1e-12)


def test_spearman_constant_input():
    with pytest.raises(DegenerateInput):
        spearman([1, 1, 1], [1, 2, 3])
    with pytest.raises(DegenerateInput):
        spearman([1, 2, 3], [4, 4, 4])


def test_spearman_bad_lengths():
    with pytest.raises(ValueError):
        spearman([1, 2, 3], [1, 2])
    with pytest.raises(InsufficientData):
        spearman([1], [2])


@pytest.mark.parametrize("seed", range(30))
def test_spearman_matches_scipy_with_ties(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 200)
    xs = [rng.randint(0, 6) for _ in range(n)]
    ys = [x + rng.randint(-3, 3) for x in xs]
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        return
    ours = spearman(xs, ys)
    ref = sps.spearmanr(xs, ys)
    assert ours.rho == pytest.approx(ref.statistic, abs=1e-12)
    assert ours.p_value == pytest.approx(ref.pvalue, abs=1e-10)
    assert ours.n == n


@given(
    st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=3, max_size=40),
)
def test_spearman_symmetry_and_bounds(pairs):
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        return
    a = spearman(xs, ys)
    b = spearman(ys, xs)
    assert a.rho == pytest.approx(b.rho, abs=1e-12)
    assert -1 <= a.rho <= 1
    assert 0 <= a.p_value <= 1


def test_p_value_reference():
    assert rho_p_value(0.5, 20) == pytest.approx(P_RHO_HALF_N20, abs=1e-10)
    t = 0.5 * math.sqrt(18 / 0.75)
    assert t_two_tailed_even_df(t, 18) == pytest.approx(P_RHO_HALF_N20, abs=1e-12)


def test_p_value_monotone_in_abs_rho():
    for n in (5, 20, 300):
        ps = [rho_p_value(r / 100, n) for r in range(0, 100)]
        assert all(a > b for a, b in zip(ps, ps[1:]))
        assert rho_p_value(-0.3, n) == rho_p_value(0.3, n)
    assert rho_p_value(0.0, 10) == pytest.approx(1.0)


@pytest.mark.parametrize("a, b", [(0.5, 0.5), (1.0, 0.5), (9.0, 0.5), (2.5, 7.0), (50.0, 0.5), (5000.0, 0.5)])
def test_betainc_against_scipy(a, b):
    for i in range(1, 100):
        x = i / 100
        assert betainc(a, b, x) == pytest.approx(special.betainc(a, b, x), abs=1e-10)


def test_betainc_edges():
    assert betainc(2, 3, 0.0) == 0.0
    assert betainc(2, 3, 1.0) == 1.0
    with pytest.raises(ValueError):
        betainc(0, 1, 0.5)
    with pytest.raises(ValueError):
        betainc(1, 1, 1.5)


@pytest.mark.parametrize("df", [1, 2, 3, 7, 18, 30, 100, 10000])
def test_t_distribution_against_scipy(df):
    for t in (-40.0, -3.2, -1.0, -0.1, 0.0, 0.4, 1.96, 2.58, 7.5, 40.0):
        assert t_two_tailed(t, df) == pytest.approx(2 * sps.t.sf(abs(t), df), abs=1e-10)
        assert t_cdf(t, df) == pytest.approx(sps.t.cdf(t, df), abs=1e-10)


@pytest.mark.parametrize("df", [2, 4, 10, 18, 40])
def test_t_distribution_against_closed_form(df):
    for t in (0.05, 0.7, 1.5, 2.1, 3.3, 6.0):
        assert t_two_tailed(t, df) == pytest.approx(t_two_tailed_even_df(t, df), abs=1e-10)


def _row(i, **values):
    base = dict(citation_count=0, h_index=0, degree=0, weighted_degree=0, avg_tie_strength=Fraction(0),
                effectiveness=Fraction(0), ego_betweenness=Fraction(0), power_diversity=0, power_tie_diversity=0)
    base.update(values)
    return AuthorMetrics(author_id=i, **base)


def test_correlation_table_shape():
    rng = random.Random(7)
    rows = [
        _row(i, citation_count=rng.randint(0, 500), h_index=rng.randint(0, 9), degree=rng.randint(0, 20),
             weighted_degree=rng.randint(0, 40), avg_tie_strength=Fraction(rng.randint(1, 9), rng.randint(1, 4)),
             effectiveness=Fraction(rng.randint(0, 60), 3), ego_betweenness=Fraction(rng.randint(0, 90), 2),
             power_diversity=rng.randint(0, 5), power_tie_diversity=rng.randint(0, 7))
        for i in range(50)
    ]
    table = correlation_table(rows)
    assert len(table) == 14
    assert len({(r.measure_x, r.measure_y) for r in table}) == 14
    assert {r.measure_y for r in table} == {"citation_count", "h_index"}
    for r in table:
        assert r.defined and -1 <= r.rho <= 1 and 0 <= r.p_value <= 1 and r.n == 50
        assert r.significant == (r.p_value < 0.01)


def test_correlation_table_constant_columns():
    rows = [_row(i) for i in range(5)]
    table = correlation_table(rows)
    assert len(table) == 14
    assert all(not r.defined and not r.significant for r in table)


def test_correlation_table_monotone():
    rows = [_row(i, degree=i, citation_count=10 * i + 1, h_index=i % 2) for i in range(10)]
    by_pair = {(r.measure_x, r.measure_y): r for r in correlation_table(rows)}
    assert by_pair[("degree", "citation_count")].rho == pytest.approx(1.0)
    assert by_pair[("degree", "citation_count")].significant


def test_correlation_table_needs_three():
    with pytest.raises(InsufficientData, match="3 authors"):
        correlation_table([_row(0), _row(1)])


@pytest.mark.parametrize("seed", range(20))
def test_classic_formula_on_tie_free_data(seed):
    rng = random.Random(seed)
    xs = rng.sample(range(1000), 20)
    ys = rng.sample(range(1000), 20)
    assert spearman(xs, ys).rho == pytest.approx(spearman_classic(xs, ys), abs=1e-12)
