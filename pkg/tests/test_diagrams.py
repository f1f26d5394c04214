from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from conftest import bp
from hypothesis import given
from hypothesis import strategies as st

from deligne_gl.combinatorics import bipartitions
from deligne_gl.diagrams import (
    AlgebraElement,
    WalledDiagram,
    braiding,
    coev,
    compose,
    compose_diagrams,
    dual_word,
    embed_idempotent,
    enumerate_diagrams,
    ev,
    flip,
    identity,
    permutation_diagram,
    phi,
    phihat,
    pi_projection,
    psi,
    psihat,
    tensor,
    tensor_diagrams,
    w_rs,
    young_symmetrizer,
    z_idempotent,
)
from deligne_gl.scalars import T, RationalFunction

EMPTY = identity("")


def random_element(rng: random.Random, w: str, delta=None, terms: int = 3) -> AlgebraElement:
    ds = enumerate_diagrams(w, w)
    out = AlgebraElement.zero(w, w, delta)
    for d in rng.sample(ds, min(terms, len(ds))):
        out = out + AlgebraElement.of(d, rng.randint(-3, 3), delta)
    return out


def cup_cap(delta=None) -> AlgebraElement:
    """``coev_b o ev_w`` in ``B_{1,1}``."""
    return compose(coev("b", delta), ev("w", delta))


class TestWords:
    def test_w_rs(self):
        assert w_rs(2, 3) == "bbwww"
        assert w_rs(0, 0) == ""

    def test_dual_word(self):
        assert dual_word("bbw") == "wwb"
        assert dual_word(dual_word("bwwb")) == "bwwb"


class TestEnumeration:
    def test_examples(self):
        assert enumerate_diagrams("bbb", "") == []
        assert len(enumerate_diagrams("bbww", "")) == 2
        assert len(enumerate_diagrams("bwwb", "bw")) == 6

    def test_counts_for_all_small_shapes(self):
        for n in range(5):
            for m in range(5 - n):
                for bottom in map("".join, itertools.product("bw", repeat=n)):
                    for top in map("".join, itertools.product("bw", repeat=m)):
                        r, s = bottom.count("b"), bottom.count("w")
                        r2, s2 = top.count("b"), top.count("w")
                        ds = enumerate_diagrams(bottom, top)
                        if r + s2 != r2 + s:
                            assert ds == []
                        else:
                            assert len(ds) == factorial(r + s2) == len(set(ds))

    def test_colour_rule_enforced(self):
        with pytest.raises(ValueError):
            WalledDiagram("bb", "", (1, 0))
        with pytest.raises(ValueError):
            WalledDiagram("b", "w", (1, 0))

    def test_json_round_trip(self):
        for d in enumerate_diagrams("bww", "w"):
            data = d.to_json()
            again = WalledDiagram.from_edges(data["bottom"], data["top"], data["edges"])
            assert again == d


class TestComposition:
    def test_identity_is_neutral(self):
        rng = random.Random(3)
        for w in ["bw", "bbw", "bwb"]:
            x = random_element(rng, w)
            assert compose(identity(w), x) == x == compose(x, identity(w))

    def test_dimension_of_black(self):
        loop = compose(ev("b"), compose(braiding("b", "w"), coev("b")))
        assert loop == RationalFunction.t_power(1) * EMPTY

    def test_cup_cap_squares_to_t(self):
        u = cup_cap()
        assert compose(u, u) == T * u

    def test_associativity_random(self):
        rng = random.Random(11)
        words = ["", "b", "w", "bw", "wb", "bbw", "bww", "bwb"]
        done = 0
        while done < 200:
            a, b, c, d = (rng.choice(words) for _ in range(4))
            xs = enumerate_diagrams(a, b)
            ys = enumerate_diagrams(b, c)
            zs = enumerate_diagrams(c, d)
            if not (xs and ys and zs):
                continue
            x, y, z = (AlgebraElement.of(rng.choice(v)) for v in (xs, ys, zs))
            assert compose(compose(z, y), x) == compose(z, compose(y, x))
            done += 1

    @given(st.permutations(range(4)), st.permutations(range(4)))
    def test_permutations_compose_like_the_group(self, p, q):
        d, loops = compose_diagrams(permutation_diagram(q), permutation_diagram(p))
        assert loops == 0
        assert d == permutation_diagram([q[p[i]] for i in range(4)])

    def test_context_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity("b"), identity("w"))


class TestStructureMaps:
    def test_tensor_of_identities(self):
        assert tensor(identity("b"), identity("w")) == identity("bw")

    def test_tensor_associative(self):
        rng = random.Random(5)
        for _ in range(30):
            x, y, z = (rng.choice(enumerate_diagrams(w, w)) for w in ("bw", "b", "wb"))
            assert tensor_diagrams(tensor_diagrams(x, y), z) == tensor_diagrams(x, tensor_diagrams(y, z))

    @pytest.mark.parametrize("w1,w2", [("b", "w"), ("bw", "b"), ("bb", "wbw")])
    def test_braiding_is_symmetric(self, w1, w2):
        assert compose(braiding(w2, w1), braiding(w1, w2)) == identity(w1 + w2)

    @pytest.mark.parametrize("w", ["b", "w", "bbw", w_rs(2, 1)])
    def test_triangle_identities(self, w):
        ws = dual_word(w)
        assert compose(tensor(identity(w), ev(w)), tensor(coev(w), identity(w))) == identity(w)
        assert compose(tensor(ev(w), identity(ws)), tensor(identity(ws), coev(w))) == identity(ws)

    def test_psi_phi_identities(self):
        for r in range(1, 4):
            for s in range(1, 4):
                one = identity(w_rs(r, s))
                assert compose(phi(r, s), psi(r, s)) == one
                assert compose(phihat(r, s), psi(r, s)) == one
                assert compose(psihat(r, s), psi(r, s)) == T * one

    def test_phi_preconditions(self):
        with pytest.raises(ValueError):
            phi(2, 0)
        with pytest.raises(ValueError):
            phihat(0, 2)


class TestSymmetrizers:
    def test_trivial_symmetrizer(self):
        for r in range(1, 5):
            expected = AlgebraElement.zero("b" * r, "b" * r)
            for p in itertools.permutations(range(r)):
                expected = expected + AlgebraElement.of(permutation_diagram(p), Fraction(1, factorial(r)))
            assert young_symmetrizer((r,)) == expected

    def test_single_box(self):
        assert young_symmetrizer((1,)) == identity("b")
        assert young_symmetrizer((1,), "w") == identity("w")

    @pytest.mark.parametrize("alpha", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
    def test_idempotent(self, alpha):
        z = young_symmetrizer(alpha)
        assert compose(z, z) == z

    def test_z_lambda_examples(self):
        assert z_idempotent(bp((1,), (1,))) == identity("bw")
        assert z_idempotent(bp()) == EMPTY
        assert z_idempotent(bp((2,), (1, 1))) == tensor(young_symmetrizer((2,)), young_symmetrizer((1, 1), "w"))

    def test_z_lambda_idempotent(self):
        for r in range(3):
            for s in range(3):
                for lam in bipartitions(r, s):
                    z = z_idempotent(lam)
                    assert compose(z, z) == z


class TestProjectionAndFlip:
    def test_pi_fixes_group_algebra(self):
        a = tensor(young_symmetrizer((2,)), young_symmetrizer((1,), "w"))
        assert pi_projection(a) == a

    def test_pi_kills_cup_cap(self):
        assert pi_projection(cup_cap()).is_zero()

    def test_pi_multiplicative(self):
        rng = random.Random(2)
        for _ in range(25):
            x = random_element(rng, "bbw", terms=4)
            y = random_element(rng, "bbw", terms=4)
            assert pi_projection(compose(x, y)) == compose(pi_projection(x), pi_projection(y))

    def test_pi_context(self):
        with pytest.raises(ValueError):
            pi_projection(identity("wb"))

    def test_flip(self):
        rng = random.Random(8)
        assert flip(identity("bbw")) == identity("bbw")
        for _ in range(25):
            x = random_element(rng, "bbw")
            y = random_element(rng, "bbw")
            assert flip(flip(x)) == x
            assert flip(compose(y, x)) == compose(flip(x), flip(y))


class TestSmallIdempotents:
    def test_box_box_decomposition(self):
        u = cup_cap()
        e_box = identity("bw") - (1 / T) * u
        e_empty = (1 / T) * u
        for e in (e_box, e_empty):
            assert compose(e, e) == e
        assert compose(e_box, e_empty).is_zero()
        assert compose(e_empty, e_box).is_zero()
        assert e_box + e_empty == z_idempotent(bp((1,), (1,)))

    def test_embedding_matches_explicit_formula(self):
        assert embed_idempotent(EMPTY, bp(), 1) == (1 / T) * cup_cap()

    def test_embedding_recursion_idempotent(self):
        for lam, e in [(bp(), EMPTY), (bp((1,)), identity("b"))]:
            for i in (1, 2):
                f = embed_idempotent(e, lam, i)
                assert compose(f, f) == f

    def test_embedding_empty_undefined_at_zero(self):
        with pytest.raises(ValueError):
            embed_idempotent(identity("", Fraction(0)), bp(), 1)

    def test_specialised_embedding(self):
        for d in (Fraction(2), Fraction(-1), Fraction(1, 2)):
            f = embed_idempotent(identity("", d), bp(), 2)
            assert compose(f, f) == f
            assert f == embed_idempotent(EMPTY, bp(), 2).specialize(d)


class TestScalars:
    def test_reduced_form(self):
        x = (T * T - 1) / (T - 1)
        assert x == T + 1
        assert x.den == (Fraction(1),)

    def test_field_operations(self):
        x = (T + 2) / (T * T + 1)
        assert x * (1 / x) == 1
        assert (x - x) == 0
        assert x.evaluate(1) == Fraction(3, 2)

    def test_evaluate_pole(self):
        with pytest.raises(ZeroDivisionError):
            (1 / T).evaluate(0)
