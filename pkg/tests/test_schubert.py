import random

import pytest

from twisted_schubert.permutations import Permutation, all_permutations
from twisted_schubert.polyring import (
    MultiPoly, is_monomial_nonnegative, min_degree_part, parse_poly, staircase,
)
from twisted_schubert.schubert import (
    double_schubert, double_twisted_schubert, double_twisted_schubert_via_chains,
    enumerate_chains, expand_schubert, min_degree_chains, schubert, schubert_via_pipedreams,
    tv_schubert, twisted_schubert, twisted_schubert_via_chains,
)

from conftest import P

TABLE_S3 = {
    "321": "x1^2*x2",
    "231": "x1*x2^2 + x1*x2",
    "312": "x1^2*x3 + x1^2",
    "213": "x1*x3^2 + x1*x2 + 2*x1*x3 + x1",
    "132": "x2^2*x3 + x1*x3 + x2^2 + x2*x3 + x1 + x2",
    "123": "x2*x3^2 + x1*x2 + 2*x2*x3 + x3^2 + x2 + 2*x3 + 1",
}


@pytest.mark.parametrize("w,text", TABLE_S3.items())
def test_twisted_table(w, text):
    assert twisted_schubert(P(w)).to_text() == text
    assert twisted_schubert_via_chains(P(w)).to_text() == text


def test_partial_step_is_not_positive():
    from twisted_schubert.polyring import simple_divided_difference
    d = simple_divided_difference(2, twisted_schubert(P("132")))
    assert d == parse_poly("x2*x3 - x1 + x2 + x3 + 1", 3)


def test_schubert_2431():
    assert schubert(P("2431")).to_text() == "x1^2*x2*x3 + x1*x2^2*x3"
    assert schubert_via_pipedreams(P("2431")) == schubert(P("2431"))


def test_schubert_basics():
    assert schubert(Permutation.longest(4)) == staircase(4)
    assert schubert(P("1234")) == MultiPoly.one(4)
    assert schubert(P("2134")) == MultiPoly.x(1, 4)
    # stability under embedding
    assert schubert(P("2431")).embed(5) == schubert(P("24315"))


def test_double_twisted_closed_form():
    x = lambda i: MultiPoly.x(i, 3)
    y = lambda j: MultiPoly.y(j, 3)
    expected = (1 + x(2) - y(1)) * (1 + x(3) - y(1)) * (1 + x(3) - y(2)) + (x(2) - y(1)) * (x(1) - y(1))
    assert double_twisted_schubert(P("123")) == expected
    assert double_twisted_schubert_via_chains(P("123")) == expected
    assert expected.set_y_zero() == twisted_schubert(P("123"))


def test_chain_count_identity_s3():
    chains = enumerate_chains(P("123"))
    assert len(chains) == 9
    assert all(c.perms[-1] == P("321") for c in chains)


def test_degenerate_n1():
    one = Permutation.identity(1)
    assert twisted_schubert(one) == MultiPoly.one(1)
    assert schubert(one) == MultiPoly.one(1)
    assert double_twisted_schubert_via_chains(one) == MultiPoly.one(1)


def test_dual_paths_s4():
    for w in all_permutations(4):
        t = twisted_schubert(w)
        assert t == twisted_schubert_via_chains(w)
        assert is_monomial_nonnegative(t)
        assert min_degree_part(t) == schubert(w)
        assert schubert(w) == schubert_via_pipedreams(w)
        assert len(min_degree_chains(w)) == sum(1 for _ in min_degree_chains(w))


def test_sampled_s5():
    rng = random.Random(7)
    for w in rng.sample(all_permutations(5), 12):
        assert twisted_schubert(w) == twisted_schubert_via_chains(w)
        assert schubert(w) == schubert_via_pipedreams(w)


def test_double_y_zero():
    for w in all_permutations(3):
        assert double_schubert(w).set_y_zero() == schubert(w)
        assert double_twisted_schubert(w).set_y_zero() == twisted_schubert(w)


def test_twisted_depends_on_n():
    assert twisted_schubert(P("2134")) != twisted_schubert(P("213")).embed(4)


def test_expand_schubert():
    x1 = MultiPoly.x(1, 3)
    assert expand_schubert(x1) == {P("213"): 1}
    assert expand_schubert(MultiPoly.zero(3)) == {}
    # x1^2 = S_{312}; x1*x2 = S_{231}; x1^2 + x1 x2 expands with both
    sq = x1 * x1 + x1 * MultiPoly.x(2, 3)
    assert expand_schubert(sq, 3) == {P("312"): 1, P("231"): 1}
    assert expand_schubert(sq) == {P("31245"): 1, P("23145"): 1}
    with pytest.raises(ValueError):
        expand_schubert(MultiPoly.y(1, 3))


def test_expand_product_of_schuberts_s3():
    for u in all_permutations(3):
        for v in all_permutations(3):
            prod = schubert(u) * schubert(v)
            coeffs = expand_schubert(prod)
            assert all(c > 0 for c in coeffs.values())
            total = MultiPoly.zero(prod.n)
            for w, c in coeffs.items():
                total = total + schubert(w).embed(prod.n) * c
            assert total == prod


def test_tv_schubert_reduces():
    assert tv_schubert(P("123"), P("213")) == schubert(P("213"))
