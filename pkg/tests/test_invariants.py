from fractions import Fraction

import pytest

from lefschetz.exact import inertia, integer_kernel, rank
from lefschetz.factorization import Factor, Factorization, global_conjugate
from lefschetz.invariants import (census, endo_signature, euler_characteristic, first_betti,
                                  q_matrix, section_square, signature, vanishing_classes)
from lefschetz.mcg import chain, parse_word
from lefschetz.universal import build_universal


def test_inertia_examples():
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[2, 0], [0, -3]]) == (1, 1, 0)
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)
    assert inertia([[1, 2, 3], [2, 4, 6], [3, 6, 9]]) == (1, 0, 2)
    assert inertia([[Fraction(1, 2), 0], [0, 0]]) == (1, 0, 1)


def test_kernel_and_rank():
    rows = [[1, 2, 3], [2, 4, 6]]
    K = integer_kernel(rows, 3)
    assert len(K) == 2
    for v in K:
        assert all(isinstance(x, int) for x in v)
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in rows)
    assert rank(rows, 3) == 1


def test_q_matrix_shape():
    F = Factorization.from_word(3, parse_word("a1 a2 a4"))
    Q = q_matrix(vanishing_classes(F), 3)
    assert [Q[i][i] for i in range(3)] == [-1, -1, -1]
    assert Q[1][0] == 0 and abs(Q[0][1]) == 1 and Q[0][2] == 0


def test_euler_and_section():
    A = build_universal("A", 3)
    assert euler_characteristic(A) == 76
    assert section_square(A) == -1
    assert section_square(A + A) == -2
    with pytest.raises(ValueError):
        section_square(Factorization.from_word(3, parse_word("a1")))


def test_census_with_separating():
    F = Factorization(3, (Factor("a1"), Factor("s1", parse_word("a4")), Factor("a2")))
    c = census(F)
    assert (c.total, c.irreducible, c.separating) == (3, 2, {1: 1})


@pytest.mark.parametrize("kind,sig", [("A", -48), ("B", -42), ("C", -35), ("D", -40)])
def test_golden_signatures(kind, sig):
    rep = signature(build_universal(kind, 3))
    assert rep.signature == sig
    assert not rep.extrapolated


def test_form_ranks():
    ranks = [signature(build_universal(k, 3)).form_rank for k in "ABCD"]
    assert ranks == [72, 62, 51, 60]


def test_genus_one_and_endo():
    F = Factorization.from_word(1, chain(1, 2, times=6))
    assert signature(F).signature == -8
    assert endo_signature(census(F), 1) == -8
    H = build_universal("H", 3)
    assert signature(H).signature == endo_signature(census(H), 3) == -48


def test_conjugation_invariance():
    A = build_universal("A", 3)
    B = global_conjugate(A, parse_word("a5 a0^-1 a2"))
    assert signature(B).signature == -48


def test_first_betti():
    assert first_betti(build_universal("A", 3)) == 0
    assert first_betti(Factorization.from_word(3, parse_word("a1"))) == 5


def test_resigning_classes_keeps_signature():
    import random
    from lefschetz.invariants import signature_of_classes
    classes = vanishing_classes(build_universal("B", 3))
    rng = random.Random(2)
    flipped = [tuple(-x for x in c) if rng.random() < 0.5 else c for c in classes]
    assert signature_of_classes(flipped, 3)[0] == signature_of_classes(classes, 3)[0] == -42
