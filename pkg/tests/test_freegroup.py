import random

import pytest

from lefschetz.freegroup import (Automorphism, WordLengthError, compose, conjugacy_key,
                                 curve_key, inverse, least_rotation, multiply, power,
                                 reduce_word, set_word_cap, word_cap)


def test_reduce_examples():
    assert reduce_word((1, 2, -2)) == (1,)
    assert reduce_word(()) == ()
    assert reduce_word((1, 1)) == (1, 1)


def test_reduce_idempotent_and_range():
    rng = random.Random(1)
    for _ in range(200):
        w = tuple(rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randrange(30)))
        r = reduce_word(w)
        assert reduce_word(r) == r
        assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))
    with pytest.raises(ValueError):
        reduce_word((5,), rank=4)


def test_inverse_and_power():
    w = (1, 2, -3)
    assert multiply(w, inverse(w)) == ()
    assert power(w, 3) == w * 3
    assert power(w, -2) == inverse(w) * 2
    assert power(w, 0) == ()


def _brute_least(w):
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def test_booth_matches_brute_force():
    rng = random.Random(7)
    for _ in range(500):
        w = tuple(rng.choice([1, 2, -1]) for _ in range(rng.randrange(1, 12)))
        assert least_rotation(w) == _brute_least(w)


def test_conjugacy_and_curve_keys():
    w = (1, 2, -1, 3)
    assert conjugacy_key(multiply((2,), w, (-2,))) == conjugacy_key(w)
    assert curve_key(inverse(w)) == curve_key(w)
    assert conjugacy_key(inverse(w)) != conjugacy_key(w)


def test_compose_order():
    # f first: x1 -> x1 x2; then g: x2 -> x2 x2
    f = Automorphism(2, ((1, 2), (2,)))
    g = Automorphism(2, ((1,), (2, 2)))
    assert compose(f, g).images[0] == (1, 2, 2)
    assert compose(g, f).images[0] == (1, 2)


def test_identity_laws():
    f = Automorphism(2, ((1, 2), (2,)))
    fi = Automorphism(2, ((1, -2), (2,)))
    e = Automorphism.identity(2)
    assert compose(e, f) == f
    assert compose(f, fi).is_identity()


def test_word_cap():
    old = word_cap()
    try:
        set_word_cap(10)
        f = Automorphism(2, ((1, 2, 1, 2), (2,)))
        with pytest.raises(WordLengthError):
            f.apply((1, 1, 1))
    finally:
        set_word_cap(old)
