import random

import pytest

from lefschetz.factorization import (Factor, Factorization, HurwitzL, HurwitzR, IllegalMove,
                                     MoveCertificate, Subst, block_commute_certificate,
                                     check_certificate, conjugation_certificate, global_conjugate)
from lefschetz.freegroup import compose_all
from lefschetz.mcg import chain, parse_word
from lefschetz.stabilize import (DerivationCertificate, HypothesisError, PairCancel, PairCreate,
                                 Relation, SignedFactorization, apply_steps, bounded_search,
                                 compile_positive, derivation_for, reducible_normalize,
                                 replay_derivation, signed_equal, simplify, stable_equivalence,
                                 trade_ledger)
from lefschetz.universal import build_universal


def signed_product(state, g):
    return compose_all((t.autos()[0 if s == 1 else 1] for t, s in state), 2 * g)


def bases(sF):
    return [(f.base, s) for f, s in sF.factors]


def test_simplify_examples():
    F = Factorization(3, (Factor("a1"),))
    sF, c = simplify(F)
    assert bases(sF) == [("a1", 1)] and len(c) == 0
    sF, c = simplify(Factorization(3, (Factor("a1", parse_word("a2")),)))
    assert bases(sF) == [("a2", -1), ("a1", 1), ("a2", 1)]
    F = Factorization(3, (Factor("a1", parse_word("a2 a3^-1")),))
    sF, c = simplify(F)
    assert bases(sF) == [("a3", 1), ("a2", -1), ("a1", 1), ("a2", 1), ("a3", -1)]
    assert signed_equal(replay_derivation(SignedFactorization.positive(F), c), sF)
    with pytest.raises(ValueError):
        simplify(Factorization(3, (Factor("s1"),)))


def test_simplify_expands_separating_letters():
    F = Factorization(3, (Factor("a1", parse_word("s1")),))
    sF, c = simplify(F)
    assert signed_equal(replay_derivation(SignedFactorization.positive(F), c), sF)


def test_replay_examples():
    F = SignedFactorization.positive(Factorization.from_word(3, parse_word("a1 a2")))
    d = DerivationCertificate([PairCreate(2, "a4", 1), PairCancel(2)])
    assert signed_equal(replay_derivation(F, d), F)
    lhs = SignedFactorization.positive(Factorization.from_word(3, chain(0, 2, 3, 4, times=10)))
    rhs = SignedFactorization.positive(Factorization.from_word(3, chain(0, 1, 2, 3, 4, times=6)))
    assert signed_equal(replay_derivation(lhs, DerivationCertificate([Relation("chain", "fwd", 1)])), rhs)
    with pytest.raises(IllegalMove):
        replay_derivation(F, DerivationCertificate([PairCancel(1)]))
    with pytest.raises(IllegalMove):
        replay_derivation(F, DerivationCertificate([Relation("commute", "fwd", 1)]))


def test_random_legal_steps_preserve_product():
    g = 3
    rng = random.Random(5)
    F = SignedFactorization.positive(Factorization.from_word(g, parse_word("a1 a2 a3 a5")))
    state = F.signed_twists()
    P = signed_product(state, g)
    gens = ["a0", "a1", "a2", "a3", "a4", "a5", "a6"]
    done = 0
    while done < 1000:
        n = len(state)
        kind = rng.randrange(4)
        if kind == 0 or n < 2:
            m = PairCreate(rng.randrange(1, n + 2), rng.choice(gens), rng.choice((1, -1)))
        elif kind == 1:
            m = PairCancel(rng.randrange(1, n))
        elif kind == 2:
            m = HurwitzR(rng.randrange(1, n))
        else:
            m = HurwitzL(rng.randrange(1, n))
        if n > 12 and isinstance(m, PairCreate):
            continue
        try:
            nxt = apply_steps(list(state), [m], g)
        except IllegalMove:
            continue
        # keep curves short so the product stays cheap to evaluate
        if max((len(t.loop) for t, _ in nxt), default=0) > 60:
            continue
        state = nxt
        done += 1
        if done % 100 == 0:
            assert signed_product(state, g) == P
    assert signed_product(state, g) == P


def test_compile_examples():
    A = build_universal("A", 3)
    assert compile_positive(A, A, DerivationCertificate()) == (0, MoveCertificate())
    F = Factorization.from_word(3, parse_word("a1 a2 a1"))
    Fp = Factorization.from_word(3, parse_word("a2 a1 a2"))
    n, c = compile_positive(F, Fp, DerivationCertificate([Relation("braid", "fwd", 1)]))
    assert n == 0 and len(c) == 2 and check_certificate(F, c, Fp)
    F = Factorization(3, (Factor("a2", parse_word("a2")),))
    Fp = Factorization.from_word(3, parse_word("a2"))
    n, c = compile_positive(F, Fp, DerivationCertificate([PairCancel(1)]))
    assert n == 1 and check_certificate(F + A, c, Fp + A)


def test_compile_rejects_wrong_endpoints():
    F = Factorization.from_word(3, parse_word("a1 a2 a1"))
    with pytest.raises(ValueError):
        compile_positive(F, F, DerivationCertificate([Relation("braid", "fwd", 1)]))


def test_trade_ledger_examples():
    assert trade_ledger(MoveCertificate()).l == 0
    L = trade_ledger(MoveCertificate([Subst("chain", "fwd", 1)]))
    assert (L.k, L.l, L.b) == (0, 1, 1)
    L = trade_ledger(MoveCertificate([Subst("lantern", "fwd", 1)]))
    assert (L.k, L.l, L.d) == (1, 0, 1)


def _fs():
    # a T_δ-factorization with one type-1 separating fiber
    from lefschetz.braid import rn_braid_parts
    a1, a2, b1, b2 = rn_braid_parts(3, 4)
    return (Factorization.from_word(3, chain(*(b1 + b2 + a1))) + Factorization(3, (Factor("s1"),))
            + Factorization.from_word(3, chain(*(a1 + b1 + b2))))


def test_reducible_normalize():
    Fs = _fs()
    A = build_universal("A", 3)
    N, Ft, Ftp, c, cp, S = reducible_normalize(Fs, Fs)
    assert N == 0 and c == cp and check_certificate(Fs, c, S + Ft)
    lone = Factorization(3, (Factor("s1"),))
    assert len(reducible_normalize(lone, lone)[3]) == 0
    for conj, want in (("a4", 1), ("a4^-1", 1), ("a4^-1 a2", 2)):
        F = global_conjugate(Fs, parse_word(conj))
        N, Ft, Ftp, c, cp, S = reducible_normalize(F, Fs)
        assert N == want
        assert [f.base for f in S] == ["s1"] and not S[0].conj
        assert check_certificate(F + A * N, c, S + Ft)
        assert check_certificate(Fs + A * N, cp, S + Ftp)
    with pytest.raises(HypothesisError):
        reducible_normalize(Fs, build_universal("A", 3))


def test_stable_equivalence_trivial():
    A = build_universal("A", 3)
    res = stable_equivalence(A, A, DerivationCertificate())
    assert (res.ledger.k, res.ledger.l, res.ledger.n) == (0, 0, 0)
    assert len(res.certificate) == 0


def test_stable_equivalence_with_separating_fiber():
    F = global_conjugate(_fs(), parse_word("a4"))
    res = stable_equivalence(F, F, DerivationCertificate())
    assert res.ledger.N == 1 and (res.ledger.k, res.ledger.l) == (0, 0)


def test_stable_equivalence_hypotheses():
    A, B = build_universal("A", 3), build_universal("B", 3)
    with pytest.raises(HypothesisError):
        stable_equivalence(A, B, DerivationCertificate([Relation("chain", "fwd", 1)]))


def test_stable_equivalence_genus_one_conjugation():
    F = Factorization.from_word(1, chain(1, 2, times=6))
    Fp, c = conjugation_certificate(F, [(1, 1)])
    with pytest.raises(ValueError):
        # universal blocks need genus 3
        stable_equivalence(F, Fp, derivation_for(F, Fp, c))


def test_block_commute_derivation():
    H = Factorization.from_word(3, chain(*range(1, 7), times=14))
    P = Factorization.from_word(3, parse_word("a1 a3"))
    c = block_commute_certificate(P, H)
    d = derivation_for(P + H, H + P, c)
    n, cert = compile_positive(P + H, H + P, d)
    assert check_certificate(P + H, cert, H + P)


def test_bounded_search_examples():
    F = Factorization.from_word(3, parse_word("a1 a2 a1"))
    Fp = Factorization.from_word(3, parse_word("a2 a1 a2"))
    d = bounded_search(F, Fp, budget=2000)
    assert d is not None and len(d) == 1
    assert len(bounded_search(F, F)) == 0
    G = Factorization.from_word(3, parse_word("a1 a3 a5"))
    Gp = Factorization.from_word(3, parse_word("a5 a3 a1"))
    d = bounded_search(G, Gp, budget=5000, allow_create=False)
    assert d is not None and len(d) <= 3
    end = replay_derivation(SignedFactorization.positive(G), d)
    assert signed_equal(end, SignedFactorization.positive(Gp))
