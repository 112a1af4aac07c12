"""Twist words acting on H1 of a one-boundary surface."""

import random
import time

import pytest

from corktwist import intmat, mcg
from corktwist.mcg import Curve, Surface, TwistWord


def random_primitive_curve(rng, g, name="c"):
    while True:
        v = tuple(rng.randint(-3, 3) for _ in range(2 * g))
        if any(v) and intmat.is_primitive(list(v)):
            return Curve(name, v)


def test_surface_and_curve_validation():
    Surface(2, boundary=1)
    with pytest.raises(ValueError):
        Surface(-1, boundary=1)
    with pytest.raises(ValueError):
        Curve("bad", (2, 4))          # imprimitive
    with pytest.raises(ValueError):
        Curve("zero", (0, 0))         # null class is not embeddable-essential
    with pytest.raises(ValueError):
        Curve("odd", (1, 0, 0))       # class length must be even


def test_twist_word_basics():
    a = Curve("a1", (1, 0))
    b = Curve("b1", (0, 1))
    w = TwistWord(((a, 1), (b, -1)))
    assert str(w) == "T(a1) T'(b1)"
    assert not w.is_positive
    assert TwistWord(((a, 1),)).is_positive
    assert w.genus() == 1
    assert TwistWord(()).genus() is None
    both = w.concat(TwistWord(((a, 1),)))
    assert len(both) == 3
    with pytest.raises(ValueError):
        mcg.h1_action(TwistWord(()))


def test_transvection_formula_small_cases():
    # T_c(x) = x + <x, c> c: the twist fixes its own class, and with
    # <a1, b1> = +1 it sends b1 to b1 - a1
    a = Curve("a1", (1, 0))
    m = mcg.transvection(a)
    assert intmat.mat_vec(m, [1, 0]) == [1, 0]
    assert intmat.mat_vec(m, [0, 1]) == [-1, 1]
    x = [3, 5]
    shifted = intmat.mat_vec(m, x)
    assert shifted == [x[0] + mcg.pairing(x, a.h1_class) * 1, x[1]]


def test_h1_action_leftmost_letter_first():
    a = Curve("a1", (1, 0))
    b = Curve("b1", (0, 1))
    ab = mcg.h1_action(TwistWord(((a, 1), (b, 1))))
    manual = intmat.mat_mul(mcg.transvection(b), mcg.transvection(a))
    assert ab == manual


def test_h1_action_is_symplectic():
    rng = random.Random(17)
    for g in (1, 2, 3):
        for _ in range(8):
            letters = tuple(
                (random_primitive_curve(rng, g, f"c{i}"), rng.choice((1, -1)))
                for i in range(rng.randint(1, 5))
            )
            m = mcg.h1_action(TwistWord(letters))
            assert mcg.is_symplectic(m, g)


def test_inverse_letter_cancels():
    rng = random.Random(29)
    for g in (1, 2):
        c = random_primitive_curve(rng, g)
        w = TwistWord(((c, 1), (c, -1)))
        assert intmat.is_identity(mcg.h1_action(w))


def test_chain_curves_shape():
    for g in (1, 2, 3):
        chain = mcg.chain_curves(g)
        assert len(chain) == 2 * g
        # consecutive chain curves meet once, distant ones not at all
        for i, c in enumerate(chain):
            for j, d in enumerate(chain):
                want = 1 if abs(i - j) == 1 else 0
                assert abs(mcg.pairing(c.h1_class, d.h1_class)) == want


def test_chain_relation_identity():
    start = time.time()
    for g in (1, 2, 3, 4):
        assert mcg.verify_chain_relation(g)
    assert time.time() - start < 1.0


def test_chain_relation_sharp_at_genus_one():
    w = mcg.chain_word(1)
    g = 1
    power = 4 * g + 1
    m = intmat.mat_pow(mcg.h1_action(w), power)
    assert not intmat.is_identity(m)


def test_positive_inverse_length_and_identity():
    start = time.time()
    rng = random.Random(41)
    for g in (1, 2):
        want_len = 2 * g * (4 * g + 2) - 1
        for i in range(10):
            c = random_primitive_curve(rng, g, f"r{i}")
            w = mcg.positive_inverse(c)
            assert w.is_positive
            assert len(w) == want_len
            total = TwistWord(((c, 1),)).concat(w)
            assert intmat.is_identity(mcg.h1_action(total))
    assert time.time() - start < 1.0


def test_trivialize_length_and_action():
    chain = mcg.chain_curves(2)
    word = TwistWord(tuple((c, 1) for c in chain[:3]))
    per_letter = 2 * 2 * (4 * 2 + 2) - 1
    t = mcg.trivialize(word)
    assert t.is_positive
    assert len(t) == len(word) * per_letter
    assert intmat.is_identity(mcg.h1_action(word.concat(t)))


def test_trivialize_rejects_negative_words():
    a = Curve("a1", (1, 0))
    with pytest.raises(ValueError):
        mcg.trivialize(TwistWord(((a, -1),)))


def test_symplectic_frame_first_column():
    rng = random.Random(53)
    for g in (1, 2, 3):
        for _ in range(5):
            c = random_primitive_curve(rng, g)
            s = mcg.symplectic_frame(c)
            first_col = [s[i][0] for i in range(2 * g)]
            assert first_col == list(c.h1_class)
            assert mcg.is_symplectic(s, g)
