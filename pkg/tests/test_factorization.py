import random

import pytest

from lefschetz.factorization import (Factor, Factorization, GlobalConj, HurwitzL, HurwitzR,
                                     IllegalMove, MoveCertificate, Subst, block_commute_certificate,
                                     boundary_power, check_certificate, conjugation_certificate,
                                     factorizations_equal, global_conjugate, hurwitz_left,
                                     hurwitz_right, product, replay, rotate_certificate)
from lefschetz.mcg import chain, parse_word
from lefschetz.universal import build_universal


def test_factor_word_and_str():
    f = Factor("a1", parse_word("a2 a3^-1"))
    assert f.word() == parse_word("a3 a2^-1 a1 a2 a3^-1")
    assert str(f) == "a1 @ a2,a3^-1"
    assert str(Factor("s1")) == "s1"
    assert f.conjugate(parse_word("a3")).conj == parse_word("a2")


def test_generator_validation():
    with pytest.raises(ValueError):
        Factorization(3, (Factor("a7"),))
    with pytest.raises(ValueError):
        Factorization(2, (Factor("s2"),))
    with pytest.raises(ValueError):
        Factorization(3, (Factor("a1", parse_word("a8")),))


def test_hurwitz_moves():
    F = Factorization.from_word(3, parse_word("a1 a2 a3"))
    G = hurwitz_right(F, 1)
    assert G[0].base == "a2" and G[1].word() == parse_word("a2^-1 a1 a2")
    assert factorizations_equal(hurwitz_left(G, 1), F)
    assert product(G) == product(F)
    with pytest.raises(IndexError):
        hurwitz_right(F, 3)


def test_boundary_power_of_products():
    H = build_universal("H", 3)
    assert boundary_power(H) == 1
    assert boundary_power(H + H) == 2
    assert boundary_power(Factorization.from_word(3, parse_word("a1"))) is None


def test_replay_matches_word_level_moves():
    rng = random.Random(11)
    F = Factorization.from_word(3, chain(1, 2, 3, 4, 5, times=2))
    G, moves = F, []
    for _ in range(40):
        i = rng.randrange(1, len(F))
        if rng.random() < 0.5:
            G, m = hurwitz_right(G, i), HurwitzR(i)
        else:
            G, m = hurwitz_left(G, i), HurwitzL(i)
        moves.append(m)
    cert = MoveCertificate(moves)
    assert check_certificate(F, cert, G)
    assert check_certificate(G, cert.inverse(), F)


def test_global_conjugation_move():
    F = Factorization.from_word(3, parse_word("a1 a2"))
    phi = parse_word("a3 a0^-1")
    assert check_certificate(F, MoveCertificate([GlobalConj(phi)]), global_conjugate(F, phi))


def test_illegal_moves_are_reported():
    F = Factorization.from_word(3, parse_word("a1 a2"))
    with pytest.raises(IllegalMove) as e:
        replay(F, MoveCertificate([HurwitzR(1), HurwitzR(2)]))
    assert e.value.step == 2
    with pytest.raises(IllegalMove):
        replay(F, MoveCertificate([Subst("chain", "fwd", 1)]))


def test_subst_move():
    lhs = Factorization.from_word(3, chain(0, 2, 3, 4, times=10))
    rhs = Factorization.from_word(3, chain(0, 1, 2, 3, 4, times=6))
    assert check_certificate(lhs, MoveCertificate([Subst("chain", "fwd", 1)]), rhs)
    assert check_certificate(rhs, MoveCertificate([Subst("chain", "bwd", 1)]), lhs)


def test_macros_on_hyperelliptic_g1():
    F = Factorization.from_word(1, chain(1, 2, times=6))
    G, c = rotate_certificate(F)
    assert check_certificate(F, c, G)
    G, c = conjugation_certificate(F, [(2, 1), (5, -1)])
    assert check_certificate(F, c, G)
    P = Factorization.from_word(1, parse_word("a1 a2^-1")[:1])
    assert check_certificate(P + F, block_commute_certificate(P, F), F + P)


def test_rotate_needs_central_product():
    with pytest.raises(ValueError):
        rotate_certificate(Factorization.from_word(3, parse_word("a1 a2")))
