import itertools

import pytest
from hypothesis import given, strategies as st

from twisted_schubert.permutations import (
    Permutation, all_permutations, alpha_beta_pairs, bruhat_leq, bruhat_leq_tableau,
    canonical_reduced_word, compose, cycles, is_reduced, reduced_words,
    remove_letters_factorization, subwords_with_product, word_product,
)

from conftest import P, perms


def test_compose_fixture():
    assert compose(P("213"), P("132")) == P("231")


def test_composition_convention():
    u, v = P("2314"), P("1243")
    assert all((u * v)(i) == u(v(i)) for i in range(1, 5))


def test_simple_multiplication_sides():
    w = P("3142")
    assert w.right_mul_simple(1) == P("1342")  # swaps positions
    assert w.left_mul_simple(1) == P("3241")  # swaps values


def test_parse_forms():
    assert P("2431") == P("2,4,3,1")
    assert str(Permutation.parse("2,1,3,4,5,6,7,8,9,10")) == "2,1,3,4,5,6,7,8,9,10"
    for bad in ("1134", "0213", "12a", "", "1,2,2"):
        with pytest.raises(ValueError):
            Permutation.parse(bad)


def test_word_and_length():
    w0 = Permutation.longest(4)
    assert w0.length() == 6
    assert Permutation.from_word((1, 2, 3, 2, 1), 4) == P("4231")
    assert canonical_reduced_word(P("4231")) == (1, 2, 3, 2, 1)
    assert len(reduced_words(Permutation.longest(3))) == 2
    assert len(reduced_words(w0)) == 16
    assert not is_reduced((1, 1), 3)


def test_code_roundtrip_s4():
    for w in all_permutations(4):
        assert Permutation.from_code(w.code(), 4) == w
        assert sum(w.code()) == w.length()


def test_alpha_beta_pairs_example():
    # pairs for w0 v = s1 s2 s3 s1 s2 as read off the wiring diagram
    assert alpha_beta_pairs((1, 2, 3, 1, 2), 4) == [(3, 4), (1, 4), (2, 4), (1, 3), (2, 3)]


def test_alpha_beta_rejects_nonreduced():
    with pytest.raises(ValueError):
        alpha_beta_pairs((1, 1), 3)


@given(perms(n_min=2, n_max=5))
def test_alpha_beta_enumerates_inversions(w):
    word = canonical_reduced_word(w)
    pairs = alpha_beta_pairs(word, w.n)
    assert sorted(pairs) == sorted(w.inversions())


@given(perms(n_min=1, n_max=6))
def test_inverse_and_length(w):
    assert compose(w, w.inverse()).is_identity()
    assert w.inverse().length() == w.length()
    assert word_product(canonical_reduced_word(w), w.n) == w


@given(perms(n_min=2, n_max=5), st.data())
def test_factorization_identity(w, data):
    word = canonical_reduced_word(w)
    J = data.draw(st.sets(st.integers(1, max(1, len(word)))))
    J = sorted(j for j in J if j <= len(word))
    remove_letters_factorization(word, J, w.n)  # asserts internally


def test_bruhat_agrees_with_tableau_s4():
    S4 = all_permutations(4)
    for v, w in itertools.product(S4, S4):
        assert bruhat_leq(v, w) == bruhat_leq_tableau(v, w)


def test_subwords_with_product():
    word = (1, 2, 1)
    assert subwords_with_product(word, P("213")) == [(1,), (3,)]
    assert subwords_with_product(word, P("123")) == [(), (1, 3)]
    assert subwords_with_product(word, P("123"), require_reduced=True) == [()]


def test_cycles():
    assert cycles(P("2314")) == [(1, 2, 3)]
    assert cycles(P("1234")) == []


def test_embed_trim():
    w = P("213")
    assert w.embed(5) == P("21345")
    assert w.embed(5).trim() == P("21")
    assert Permutation.identity(1).trim().n == 1
