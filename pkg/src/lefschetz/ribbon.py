"""Derivation of Dehn twist actions from a ribbon (disk-with-bands) model.

The surface Σ_{g,1} is a disk with 2g bands attached. Band k has a start
interval and an end interval on the disk boundary; its core, read from start
to end and closed up through the disk, is the free generator u_k. A simple
closed curve running once through a sequence of bands is given by its band
word. The twist along it is computed by following the arcs of each generator
across the chords the curve draws inside the disk.

For the chain of curves c_1..c_{2g} (c_i the core of band i) plus c_0 running
through bands 1 and 3, this yields the twist generators in the u-basis; the
change to the symplectic basis x_1..x_{2g} is given by ``handle_basis``.
"""
from __future__ import annotations

from .freegroup import inverse, multiply, reduce_word


def chain_order(g: int) -> list:
    """Order of band ends around the disk for the chain surface."""
    order = [(1, "s"), (2, "s"), (1, "e")]
    for i in range(3, 2 * g + 1):
        order += [(i, "s"), (i - 1, "e")]
    order.append((2 * g, "e"))
    return order


def chain_curves(g: int) -> dict:
    curves = {i: [(i, 1)] for i in range(1, 2 * g + 1)}
    if g >= 2:
        curves[0] = [(1, 1), (3, 1)]
    return curves


def _crosses(p, q, r, s) -> bool:
    a, b = sorted((p, q))
    return (a < r < b) != (a < s < b)


def twist_images(order, curve, rank: int, sign: int = 1) -> dict:
    """Images of u_1..u_rank under the twist (sign=1) or its inverse (sign=-1)."""
    pos = {end: k for k, end in enumerate(order)}

    def pt(band, end, lane):
        # lanes ascend along start intervals and descend along end intervals
        return (pos[(band, end)], lane if end == "s" else -lane)

    m = len(curve)
    entry, exit_ = [], []
    for band, d in curve:
        s, e = pt(band, "s", 1), pt(band, "e", 1)
        entry.append(s if d == 1 else e)
        exit_.append(e if d == 1 else s)
    chords = [(exit_[i], entry[(i + 1) % m], i) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if _crosses(chords[i][0], chords[i][1], chords[j][0], chords[j][1]):
                raise ValueError("band word does not describe a simple curve")
    letters = [band * d for band, d in curve]

    def loop_from(i, toward_entry):
        if toward_entry:
            return [letters[(i + 1 + k) % m] for k in range(m)]
        return [-letters[(i - k) % m] for k in range(m)]

    images = {}
    for j in range(1, rank + 1):
        P, Q = pt(j, "s", 0), pt(j, "e", 0)
        w = []
        hits = sorted((min(x, y), max(x, y), x, y, i) for x, y, i in chords
                      if min(x, y) < P < max(x, y))
        for lo, hi, x, y, i in hits:
            w += loop_from(i, (lo if sign == 1 else hi) == y)
        w.append(j)
        hits = sorted(((min(x, y), max(x, y), x, y, i) for x, y, i in chords
                       if min(x, y) < Q < max(x, y)), reverse=True)
        for lo, hi, x, y, i in hits:
            w += loop_from(i, (hi if sign == 1 else lo) == y)
        images[j] = reduce_word(w)
    return images


def boundary_word(order) -> tuple:
    """The boundary loop of the ribbon surface as a u-word."""
    pos = {end: k for k, end in enumerate(order)}
    n, w, k = len(order), [], 0
    while True:
        band, end = order[k]
        w.append(band if end == "s" else -band)
        k = pos[(band, "e" if end == "s" else "s")] + 1
        if k == n:
            return tuple(w)


def handle_basis(g: int) -> tuple[dict, dict]:
    """Mutually inverse substitutions between the u-basis and the x-basis.

    Returns (psi, psi_inv): psi[k] is x_k written in the u's, psi_inv[k] is
    u_k written in the x's. In the x-basis the chain boundary becomes
    ∏[x_{2j-1}, x_{2j}].
    """
    def a(i):
        return (2 * i - 1,)

    def b(i):
        return tuple(range(2 * i, 2 * g + 1, 2))

    psi, w = {}, ()
    for i in range(1, g + 1):
        j = g + 1 - i
        psi[2 * j - 1] = multiply(w, a(i), inverse(w))
        psi[2 * j] = multiply(w, inverse(b(i)), inverse(w))
        w = w + a(i)
    A, B, w = {}, {}, ()
    for i in range(1, g + 1):
        j = g + 1 - i
        A[i] = multiply(inverse(w), (2 * j - 1,), w)
        B[i] = multiply(inverse(w), (-(2 * j),), w)
        w = multiply(w, A[i])
    psi_inv = {2 * i - 1: A[i] for i in range(1, g + 1)}
    psi_inv[2 * g] = B[g]
    for i in range(g - 1, 0, -1):
        psi_inv[2 * i] = multiply(B[i], inverse(B[i + 1]))
    return psi, psi_inv


def substitute(images: dict, w) -> tuple:
    out = []
    for x in w:
        out.extend(images[x] if x > 0 else inverse(images[-x]))
    return reduce_word(out)


def derived_twists(g: int) -> dict:
    """Twist generator images in the x-basis: {i: (positive, inverse)} for c_i."""
    order = chain_order(g)
    psi, psi_inv = handle_basis(g)
    rank = 2 * g
    out = {}
    for i, curve in chain_curves(g).items():
        pair = []
        for sign in (1, -1):
            imgs = twist_images(order, curve, rank, sign)
            pair.append(tuple(substitute(psi_inv, substitute(imgs, psi[k]))
                              for k in range(1, rank + 1)))
        out[i] = tuple(pair)
    return out


def derived_curves(g: int) -> dict:
    """Based loops of c_0..c_{2g} in the x-basis."""
    _, psi_inv = handle_basis(g)
    return {i: substitute(psi_inv, [band * d for band, d in curve])
            for i, curve in chain_curves(g).items()}
