import random

import numpy as np
import pytest

from lefschetz.freegroup import Automorphism, compose
from lefschetz.mcg import (Twist, abelianize, apply_word, boundary_conjugation, chain,
                           detect_boundary_power, expand_separating, failing_relators,
                           generator_names, intersecting_pairs, mcg_equal, mcg_to_auto,
                           parse_word, relators, separating_chain_word, twist_table)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_relators_hold(g):
    assert failing_relators(g) == []


def test_named_examples():
    t = twist_table(3)
    assert mcg_equal(parse_word("a1 a2 a1"), parse_word("a2 a1 a2"), t)
    assert mcg_equal(parse_word("(a0 a2 a3 a4)^10"), parse_word("(a0 a1 a2 a3 a4)^6"), t)
    assert mcg_equal(parse_word("(a0 a1 a2 a3 a4 a5 a6)^9"), parse_word("(a0 a2 a3 a4 a5 a6)^12"), t)
    assert not mcg_equal(parse_word("a1"), parse_word("a2"), t)
    assert mcg_equal(parse_word("a3"), parse_word("a3 a1 a1^-1"), t)
    assert compose(t.twist_autos["a1"], t.twist_autos["a3"]) == compose(t.twist_autos["a3"], t.twist_autos["a1"])


def test_faithfulness_sanity():
    g = 3
    t = twist_table(g)
    names = [n for n in generator_names(g) if n.startswith("a")]
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            assert not mcg_equal(((x, 1),), ((y, 1),), t)


def test_random_words_absorb_rotated_relators():
    t = twist_table(3)
    rng = random.Random(3)
    rels = relators(3)
    names = [n for n in generator_names(3) if n.startswith("a")]
    for _ in range(200):
        w = tuple((rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randrange(8)))
        _, lhs, rhs = rng.choice(rels)
        r = lhs + tuple((g_, -s) for g_, s in reversed(rhs))
        k = rng.randrange(len(r))
        assert mcg_equal(w, w + r[k:] + r[:k], t)


def test_hyperelliptic_is_boundary_twist():
    for g in (1, 2, 3):
        t = twist_table(g)
        f = mcg_to_auto(chain(*range(1, 2 * g + 1), times=4 * g + 2), t)
        assert detect_boundary_power(f, t) == 1
        assert detect_boundary_power(compose(f, f), t) == 2
    t = twist_table(3)
    assert detect_boundary_power(Automorphism.identity(6), t) == 0
    assert detect_boundary_power(t.twist_autos["a1"], t) is None
    assert detect_boundary_power(boundary_conjugation(t, -3), t) == -3


def test_abelianize_homomorphism():
    t = twist_table(3)
    f, g = t.twist_autos["a0"], t.twist_autos["a4"]
    # f first, then g: column convention gives M_g · M_f
    assert np.array_equal(abelianize(compose(f, g)), abelianize(g).dot(abelianize(f)))


def test_pairing_pattern_and_transvections():
    g = 3
    t = twist_table(g)
    meet = intersecting_pairs(g)
    idx = range(0, 2 * g + 1)
    for i in idx:
        for j in idx:
            if i < j:
                p = abs(t.pair(t.homology_classes[f"a{i}"], t.homology_classes[f"a{j}"]))
                assert p == (1 if frozenset((i, j)) in meet else 0)
    eye = np.identity(2 * g, dtype=object)
    for name in ("s1",):
        assert np.array_equal(abelianize(t.twist_autos[name]), eye)


def test_transvection_law_for_conjugated_factor():
    t = twist_table(3)
    tw = Twist.of_factor("a1", parse_word("a2 a0^-1"), t)
    d = np.array(tw.homology(), dtype=object)
    M = abelianize(tw.autos()[0])
    assert np.array_equal(M, np.identity(6, dtype=object) + np.outer(d, t.pairing.dot(d)))


def test_conjugation_convention():
    # (a1)_{a2} = a2^-1 a1 a2 is the twist along a2(c1)
    t = twist_table(3)
    word = mcg_to_auto(parse_word("a2^-1 a1 a2"), t)
    along = Twist(3, apply_word(parse_word("a2"), t, t.curves["a1"]), 0, None)
    assert along == Twist.of_factor("a1", parse_word("a2"), t)
    assert word == Twist.of_factor("a1", parse_word("a2"), t).autos()[0]


def test_separating_twist():
    t = twist_table(3)
    assert mcg_equal(separating_chain_word(1, 3), (("s1", 1),), t)
    w = parse_word("a1 s1^-1 a4")
    assert mcg_equal(expand_separating(w, 3), w, t)
    assert all(n.startswith("a") for n, _ in expand_separating(w, 3))


def test_parse_word():
    assert parse_word("(a1 a2)^2") == (("a1", 1), ("a2", 1)) * 2
    assert parse_word("(a1,a2)^-1") == (("a2", -1), ("a1", -1))
    with pytest.raises(ValueError):
        parse_word("a9", 3)
    with pytest.raises(ValueError):
        parse_word("(a1")
