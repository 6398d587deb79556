"""Invariants of the Lefschetz fibration encoded by a factorization."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import inertia, integer_kernel
from .factorization import Factorization, product
from .mcg import detect_boundary_power, twist_table


@dataclass(frozen=True)
class FiberCensus:
    total: int
    irreducible: int
    separating: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SignatureReport:
    r: int
    kernel_rank: int
    signature: int
    form_rank: int
    census: FiberCensus
    extrapolated: bool  # True when separating vanishing cycles are present


def euler_characteristic(F, g: int | None = None) -> int:
    r = F if isinstance(F, int) else len(F)
    g = F.genus if g is None else g
    return 4 - 4 * g + r


def section_square(F: Factorization) -> int:
    m = detect_boundary_power(product(F), twist_table(F.genus))
    if m is None:
        raise ValueError("product is not a power of the boundary twist")
    return -m


def census(F: Factorization) -> FiberCensus:
    seps: dict = {}
    for f in F:
        if f.sep:
            seps[f.sep] = seps.get(f.sep, 0) + 1
    return FiberCensus(len(F), len(F) - sum(seps.values()), dict(sorted(seps.items())))


def vanishing_classes(F: Factorization) -> list[tuple]:
    """δ_i for each factor (zero for separating ones)."""
    return [t.homology() for t in F.twists()]


def q_matrix(classes, g: int) -> list[list[int]]:
    t = twist_table(g)
    r = len(classes)
    Q = [[0] * r for _ in range(r)]
    for i in range(r):
        Q[i][i] = -1
        for j in range(i + 1, r):
            Q[i][j] = t.pair(classes[i], classes[j])
    return Q


def restricted_form(classes, g: int) -> list[list[int]]:
    """Q' = KᵀQK on an integer basis K of Ker(Q − Qᵀ)."""
    Q = q_matrix(classes, g)
    r = len(Q)
    A = [[Q[i][j] - Q[j][i] for j in range(r)] for i in range(r)]
    K = integer_kernel(A, r)
    QK = [[sum(Q[i][l] * v[l] for l in range(r) if v[l]) for v in K] for i in range(r)]
    return [[sum(u[i] * QK[i][b] for i in range(r) if u[i]) for b in range(len(K))] for u in K]


def signature_of_classes(classes, g: int) -> tuple[int, int, int]:
    """(signature, dim Ker A, rank Q')."""
    Qp = restricted_form(classes, g)
    p, m, _ = inertia(Qp)
    return p - m, len(Qp), p + m


def signature(F: Factorization, table=None) -> SignatureReport:
    section_square(F)  # precondition: the fibration has a section
    cen = census(F)
    sig, k, rk = signature_of_classes(vanishing_classes(F), F.genus)
    return SignatureReport(len(F), k, sig, rk, cen, bool(cen.separating))


def endo_signature(cen: FiberCensus, g: int) -> int:
    s0 = cen.irreducible
    val = Fraction(-(g + 1), 2 * g + 1) * s0
    for h, s in cen.separating.items():
        val += (Fraction(4 * h * (g - h), 2 * g + 1) - 1) * s
    if val.denominator != 1:
        raise ValueError(f"Endo's formula gives the non-integer {val}")
    return int(val)


def first_betti(F: Factorization) -> int:
    """b_1 = 2g − rank of the span of the vanishing classes."""
    from .exact import rank
    classes = vanishing_classes(F)
    return 2 * F.genus - (rank(classes, 2 * F.genus) if classes else 0)
