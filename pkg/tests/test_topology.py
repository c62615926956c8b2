from fractions import Fraction

import pytest
from hypothesis import given

from dyckdiv import PositiveSet, lambda_class
from dyckdiv.divisors import class_word_of_int, divisors, is_densely_divisible
from dyckdiv.topology import components, components_graph_oracle, step_function
from dyckdiv.words import omega
from oracles import brute_components
from strategies import lambdas, nonempty_sets, set_and_lambda

F = Fraction
S10 = PositiveSet.of(1, 2, 5, 10)


def test_components_example_two_spans():
    rep = components(S10, 2)
    assert brute_components(S10, F(2)) == 2
    assert rep.count == 2
    assert rep.spans == ((1, 2), (5, 10))
    # logs of [1, 4] and [5, 20]
    (a0, b0), (a1, b1) = rep.log_spans()
    assert a0 == 0.0 and b0 == pytest.approx(1.3862943611)
    assert a1 == pytest.approx(1.6094379124) and b1 == pytest.approx(2.9957322736)


def test_components_126_connected_and_empty():
    assert components(divisors(126).divisors, 2).count == 1
    assert components(PositiveSet(), 2).count == 0
    assert components(PositiveSet(), 2).spans == ()


@pytest.mark.parametrize("elems, lam, expected", [((1, 2, 5, 10), 2, 2), ((1,), 5, 1), ((1, 2, 4, 8), 2, 1), ((), 3, 0)])
def test_graph_oracle_examples(elems, lam, expected):
    S = PositiveSet.of(*elems)
    assert brute_components(S, F(lam)) == expected
    assert components_graph_oracle(S, lam) == expected


def test_touching_intervals_connect():
    # lam * 1 == 2 exactly: the closed intervals [1, 2] and [2, 4] share a point
    assert components(PositiveSet.of(1, 2), 2).count == 1
    assert components(PositiveSet.of(1, 2), F(199, 100)).count == 2


@pytest.mark.parametrize("fn", [components, components_graph_oracle])
def test_lambda_must_exceed_one(fn):
    with pytest.raises(ValueError):
        fn(S10, 1)


def test_step_function_of_ten():
    # direct evaluation below, at and above each singular value
    probes = {F(3, 2): 4, F(2): 2, F(9, 4): 2, F(5, 2): 1, F(11, 4): 1, F(5): 1, F(7): 1, F(10): 1, F(11): 1}
    for lam, count in probes.items():
        assert brute_components(S10, lam) == count
    rep = step_function(S10)
    assert rep.initial == 4
    assert rep.breakpoints == (2, F(5, 2), 5, 10)
    assert rep.values == (2, 1, 1, 1)
    assert rep.below == (4, 2, 1, 1)
    assert rep.above == rep.values
    assert rep.jumps() == [(2, 4, 2), (F(5, 2), 2, 1)]
    assert rep.value_at(F(2)) == 2 and rep.value_at(F(19, 10)) == 4 and rep.value_at(100) == 1


def test_step_function_singleton_and_empty():
    rep = step_function(PositiveSet.of(1))
    assert rep.breakpoints == () and rep.initial == 1
    assert rep.value_at(F(3, 2)) == 1 and rep.value_at(1000) == 1
    with pytest.raises(ValueError):
        step_function(PositiveSet())


def test_step_function_divisors_of_ten_final_value():
    rep = step_function(divisors(10).divisors)
    settled = [bp for bp, v in zip(rep.breakpoints, rep.values) if v == 1]
    assert settled[0] == F(5, 2)
    assert all(v == 1 for bp, v in zip(rep.breakpoints, rep.values) if bp >= F(5, 2))


@given(set_and_lambda())
def test_components_equals_omega_and_oracles(case):
    S, lam = case
    count = components(S, lam).count
    assert count == omega(lambda_class(S, lam))
    assert count == components_graph_oracle(S, lam) == brute_components(S, lam)


@given(set_and_lambda(singular=True))
def test_components_equals_omega_at_singular(case):
    S, lam = case
    assert components(S, lam).count == omega(lambda_class(S, lam))


@given(set_and_lambda())
def test_spans_are_separated(case):
    S, lam = case
    spans = components(S, lam).spans
    for (_, end), (start, _) in zip(spans, spans[1:]):
        assert lam * end < start
    assert sum(1 for s in S if any(a <= s <= b for a, b in spans)) == len(S)


@given(nonempty_sets)
def test_step_function_right_continuous(S):
    rep = step_function(S)
    assert rep.is_right_continuous()
    assert list(rep.values) == sorted(rep.values, reverse=True)
    assert rep.initial >= (rep.values[0] if rep.values else rep.initial)


@given(set_and_lambda(), lambdas)
def test_count_non_increasing(case, other):
    S, lam = case
    lo, hi = min(lam, other), max(lam, other)
    assert components(S, lo).count >= components(S, hi).count


def test_components_match_omega_small_integers():
    for n in range(1, 300):
        for lam in (F(3, 2), F(2), F(7, 3)):
            count = components(divisors(n).divisors, lam).count
            assert count == omega(class_word_of_int(n, lam))
            assert (count == 1) == is_densely_divisible(n, lam)
