import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import state_sum_bracket, total_linking_from_jones
from ttunlink.braid import (
    BraidWord,
    concat,
    conjugate,
    identity,
    juxtapose,
    make_braid,
    random_word,
)
from ttunlink.invariants import (
    NotTwoComponents,
    StrandLimitExceeded,
    jones_limit,
    jones_polynomial,
    kauffman_bracket,
    kauffman_bracket_generic,
    linking_matrix,
    predicted_two_component_linking,
    torus_pair_linking,
    unlink_consistent,
    unlink_jones,
)
from ttunlink.laurent import DELTA, LaurentPoly
from ttunlink.ttlink import TwistedTorusParams, torus_braid, twisted_torus_braid


def tt(*args):
    return twisted_torus_braid(TwistedTorusParams(*args))


def t_poly(terms):
    """Jones polynomial given as {t-exponent: coeff} with t = A^-4."""
    return LaurentPoly({-4 * e: c for e, c in terms.items()})


@st.composite
def small_words(draw, max_strands=4, max_len=9):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1, ())
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return BraidWord(n, tuple(draw(st.lists(gens, max_size=max_len))))


class TestBracket:
    @pytest.mark.parametrize("w, expected", [
        (identity(1), LaurentPoly.const(1)),
        (make_braid(2, [1]), LaurentPoly.monomial(3, -1)),
        (make_braid(2, [1, 1]), LaurentPoly({4: -1, -4: -1})),
    ])
    def test_values(self, w, expected):
        assert kauffman_bracket(w) == expected

    @pytest.mark.parametrize("n", range(1, 8))
    def test_empty_word_is_delta_power(self, n):
        assert kauffman_bracket(identity(n)) == DELTA ** (n - 1)

    @settings(max_examples=80, deadline=None)
    @given(small_words())
    def test_matches_state_sum(self, w):
        assert kauffman_bracket(w) == state_sum_bracket(w)

    @settings(max_examples=40, deadline=None)
    @given(small_words(max_strands=5, max_len=12))
    def test_matches_generic_route(self, w):
        assert kauffman_bracket(w) == kauffman_bracket_generic(w)

    def test_split_union(self):
        rng = random.Random(5)
        for _ in range(20):
            a = random_word(rng, rng.randint(2, 4), rng.randint(0, 10))
            b = random_word(rng, rng.randint(2, 4), rng.randint(0, 10))
            assert kauffman_bracket(juxtapose(a, b)) == kauffman_bracket(a) * kauffman_bracket(b) * DELTA

    def test_strand_limit(self):
        with pytest.raises(StrandLimitExceeded):
            kauffman_bracket(identity(5), limit=4)

    def test_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv("TTLINK_JONES_LIMIT", "6")
        assert jones_limit() == 6
        with pytest.raises(StrandLimitExceeded):
            kauffman_bracket(identity(7))

    def test_object_fallback_is_exact(self, monkeypatch):
        import ttunlink.invariants as inv

        rng = random.Random(17)
        words = [random_word(rng, 5, 40) for _ in range(5)] + [torus_braid(3, 30)]
        expected = [kauffman_bracket(w) for w in words]
        # a tiny headroom forces the arbitrary-precision path almost at once
        monkeypatch.setattr(inv, "_INT64_HEADROOM", 64)
        assert [kauffman_bracket(w) for w in words] == expected
        assert kauffman_bracket(words[0]) == kauffman_bracket_generic(words[0])


class TestJones:
    @pytest.mark.parametrize("w, expected", [
        (make_braid(2, [1]), LaurentPoly.const(1)),
        (identity(2), LaurentPoly({2: -1, -2: -1})),
        (tt(5, 2, 3, -1), LaurentPoly.const(1)),
        # right-handed trefoil t + t^3 - t^4
        (torus_braid(2, 3), t_poly({1: 1, 3: 1, 4: -1})),
        # T(2,5): t^2 + t^4 - t^5 + t^6 - t^7
        (torus_braid(2, 5), t_poly({2: 1, 4: 1, 5: -1, 6: 1, 7: -1})),
        # figure-eight t^-2 - t^-1 + 1 - t + t^2
        (make_braid(3, [1, -2, 1, -2]), t_poly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})),
    ])
    def test_values(self, w, expected):
        assert jones_polynomial(w) == expected

    def test_mirror_inverts_t(self):
        j = jones_polynomial(torus_braid(2, 3))
        m = jones_polynomial(torus_braid(2, -3))
        assert m == LaurentPoly({-e: c for e, c in j.coeffs.items()})

    def test_stabilization(self):
        w = make_braid(3, [1, -2, 1, -2])
        for g in (3, -3):
            assert jones_polynomial(BraidWord(4, w.letters + (g,))) == jones_polynomial(w)

    def test_conjugation_invariance(self):
        rng = random.Random(2024)
        for _ in range(500):
            n = rng.randint(2, 9)
            w = random_word(rng, n, rng.randint(0, 14))
            i = rng.randint(1, n - 1)
            g = rng.choice((i, -i))
            assert jones_polynomial(conjugate(w, g)) == jones_polynomial(w)

    @settings(max_examples=60, deadline=None)
    @given(small_words(max_strands=6, max_len=12), st.data())
    def test_cancelling_pair_insertion(self, w, data):
        if w.strands < 2:
            return
        pos = data.draw(st.integers(0, len(w.letters)))
        i = data.draw(st.integers(1, w.strands - 1))
        g = data.draw(st.sampled_from((i, -i)))
        longer = BraidWord(w.strands, w.letters[:pos] + (g, -g) + w.letters[pos:])
        assert jones_polynomial(longer) == jones_polynomial(w)

    def test_unlink_values(self):
        assert unlink_jones(1) == 1
        assert unlink_jones(3) == DELTA**2


class TestLinking:
    def test_hopf(self):
        assert linking_matrix(make_braid(2, [1, 1])).tolist() == [[0, 1], [1, 0]]

    def test_t8241(self):
        assert linking_matrix(tt(8, 2, 4, -1)).is_zero()

    def test_t6321(self):
        # the untouched component links each block component twice; the twist
        # removes one from the pair sharing the block
        m = linking_matrix(tt(6, 3, 2, -1))
        assert m.tolist() == [[0, 1, 2], [1, 0, 2], [2, 2, 0]]
        assert m[0, 2] == torus_pair_linking(6, 3) == 2

    @pytest.mark.parametrize("p, q", [(4, 2), (6, 3), (6, 4), (8, 6), (9, 6), (4, 4)])
    def test_torus_pairs(self, p, q):
        m = linking_matrix(torus_braid(p, q))
        c = m.c
        assert all(m[i, j] == torus_pair_linking(p, q) for i in range(c) for j in range(c) if i != j)

    @settings(max_examples=60, deadline=None)
    @given(small_words(max_strands=6, max_len=14))
    def test_total_agrees_with_jones_derivative(self, w):
        m = linking_matrix(w)
        if m.c < 2:
            return
        total = sum(m[i, j] for i in range(m.c) for j in range(i + 1, m.c))
        assert total_linking_from_jones(jones_polynomial(w), m.c) == total

    def test_symmetric_zero_diagonal(self):
        rng = random.Random(9)
        for _ in range(100):
            m = linking_matrix(random_word(rng, rng.randint(2, 8), 30)).tolist()
            assert all(m[i][i] == 0 for i in range(len(m)))
            assert m == [list(r) for r in zip(*m)]

    @pytest.mark.parametrize("args, expected", [
        ((8, 2, 4, -1), Fraction(0)),
        ((6, 4, 5, -1), Fraction(0)),
        ((4, 2, 2, 1), Fraction(3)),
        ((6, 2, 4, -1), Fraction(-1)),
    ])
    def test_prediction(self, args, expected):
        assert predicted_two_component_linking(TwistedTorusParams(*args)) == expected

    def test_prediction_needs_two_components(self):
        with pytest.raises(NotTwoComponents):
            predicted_two_component_linking(TwistedTorusParams(6, 3, 2, -1))

    @pytest.mark.parametrize("p", range(2, 9))
    def test_prediction_matches_traversal(self, p):
        for q in range(1, p):
            tp0 = TwistedTorusParams(p, q, 2, 1)
            if tp0.d != 2:
                continue
            for r in range(2, p + 1):
                for s in (-3, -2, -1, 1, 2, 3):
                    tp = TwistedTorusParams(p, q, r, s)
                    assert linking_matrix(twisted_torus_braid(tp))[0, 1] == predicted_two_component_linking(tp)


class TestConsistency:
    def test_t4231(self):
        rep = unlink_consistent(tt(4, 2, 3, -1))
        assert rep.consistent and rep.fully_clean and rep.components == 2

    def test_hopf(self):
        rep = unlink_consistent(make_braid(2, [1, 1]))
        assert not rep.consistent and rep.obstructions() == ["linking", "jones"]

    def test_t6241(self):
        rep = unlink_consistent(tt(6, 2, 4, -1))
        assert not rep.consistent and rep.linking == [[0, -1], [-1, 0]]

    def test_skipped(self):
        rep = unlink_consistent(tt(12, 3, 6, -1), limit=10)
        assert rep.jones_skipped and rep.consistent and not rep.fully_clean
        d = rep.to_json()
        assert d["jones"] == "skipped" and d["jones_unlink"] == "skipped"

    def test_json_shape(self):
        d = unlink_consistent(tt(8, 2, 4, -1)).to_json()
        assert d["components"] == 2
        assert d["linking"] == [[0, 0], [0, 0]]
        assert d["jones_unlink"] is True
        assert d["jones"] == [[-2, -1], [2, -1]]

    def test_component_checks(self):
        # T(6,2,4,-1) has two unknotted components but is linked
        rep = unlink_consistent(tt(6, 2, 4, -1), components=True)
        assert rep.component_jones_trivial == [True, True]
        rep = unlink_consistent(concat(torus_braid(4, 2), make_braid(4, [1, 1, 1, 1])), components=True)
        assert len(rep.component_jones_trivial) == 2

    def test_sublink_types(self):
        from ttunlink.braid import closure_components, delete_components

        w = tt(8, 2, 4, -1)
        for c in (0, 1):
            assert jones_polynomial(delete_components(w, {c})) == jones_polynomial(tt(4, 1, 2, -1))
        w = tt(6, 4, 5, -1)
        labels = closure_components(w)
        owned = [sum(1 for j in range(5) if labels.label[j] == c) for c in (0, 1)]
        three = owned.index(3)
        assert jones_polynomial(delete_components(w, {three})) == jones_polynomial(tt(3, 2, 3, -1))
        assert jones_polynomial(delete_components(w, {1 - three})) == jones_polynomial(tt(3, 2, 2, -1))

    @pytest.mark.parametrize("args", [(6, 2, 3, -1), (8, 6, 5, -2), (6, 4, 6, 1), (8, 2, 8, -3)])
    def test_sublinks_match_component_parameters(self, args):
        from ttunlink.braid import delete_components
        from ttunlink.ttlink import component_parameters

        tp = TwistedTorusParams(*args)
        w = twisted_torus_braid(tp)
        for c, (p1, q1, r1, s) in enumerate(component_parameters(tp)):
            sub = delete_components(w, {c})
            if r1 >= 2:
                direct = tt(p1, q1, r1, s)
            else:
                direct = torus_braid(p1, q1)
            assert jones_polynomial(sub) == jones_polynomial(direct)
