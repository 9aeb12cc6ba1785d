"""Linear-extension machinery: seeded extension, tightening, linearization.

All tie-breaking is delegated to explicit seed linear orders so outputs
are reproducible; the documented default seed is the identity chain
0 < 1 < ... < n-1 on whichever ground set the operation works over.
"""

from __future__ import annotations

from .errors import InputError, PreconditionError
from .halfspaces import HalfSpace
from .relations import (
    LinearOrder,
    PartialOrder,
    Quasiorder,
    Relation,
    chain_order,
    induced_order,
    symmetric_part,
)


def szpilrajn_extension(p: PartialOrder, seed: LinearOrder | None = None) -> LinearOrder:
    """Deterministic linear extension of p.

    Scans element pairs in seed order (low seed position first) and, when
    a pair is still incomparable, orients it as in the seed and takes the
    transitive closure before moving on.  Output is a function of
    (p, seed) only.
    """
    if seed is None:
        seed = chain_order(p.ground)
    if seed.ground.size != p.ground.size:
        raise InputError("seed lives on a different ground set")
    n = p.ground.size
    rows = list(p.rows)
    sequence = seed.sequence()
    for a in range(n):
        u = sequence[a]
        for b in range(a + 1, n):
            v = sequence[b]
            if rows[u] >> v & 1 or rows[v] >> u & 1:
                continue
            # insert u < v: everything below u moves below everything above v
            bit_u = 1 << u
            rv = rows[v]
            for x in range(n):
                if rows[x] & bit_u:
                    rows[x] |= rv
    return LinearOrder(p.ground, tuple(rows))


def tighten_halfspace(
    g: Quasiorder, a: HalfSpace, r: LinearOrder | None = None
) -> HalfSpace:
    """Shrink a half-space above g until its symmetric part matches g's.

    Removes from a every mutual pair whose classes the extension r orders
    downward; the result still contains g, sits inside a, and has exactly
    g's symmetric part.  r must linearly extend the induced order of g
    (default: the identity-seeded extension).
    """
    if g.ground != a.ground:
        raise InputError("relations live on different ground sets")
    if not g.issubset(a):
        raise PreconditionError("g is not contained in a", g.difference(a).pair_list()[0])
    qm = induced_order(g)
    if r is None:
        r = szpilrajn_extension(qm.induced)
    if r.ground.size != len(qm.classes):
        raise InputError("r does not live on the quotient of g")
    if not qm.induced.issubset(r):
        gap = qm.induced.difference(r).pair_list()
        raise PreconditionError("r does not extend the induced order of g", gap[0])
    mutual = symmetric_part(a)
    rows = list(a.rows)
    for x, y in mutual.pair_list():
        cx, cy = qm.class_of[x], qm.class_of[y]
        if cx != cy and r.has(cy, cx):
            rows[x] &= ~(1 << y)
    tight = HalfSpace(a.ground, tuple(rows))
    assert g.issubset(tight) and tight.issubset(a)
    assert symmetric_part(tight) == symmetric_part(g)
    return tight


def linearize_halfspace(a: HalfSpace, lam: LinearOrder) -> LinearOrder:
    """Fill the incomparabilities of an antisymmetric half-space from lam.

    The union of a with lam restricted to a's incomparable pairs is already
    a linear extension of a, and running it with lam and with lam reversed
    recovers a as the intersection.
    """
    if a.ground != lam.ground:
        raise InputError("relations live on different ground sets")
    bad = a.antisymmetry_violation()
    if bad is not None:
        raise PreconditionError("half-space is not antisymmetric", bad)
    comparable = a.union(a.inverse())
    extra = lam.difference(comparable)
    return LinearOrder(a.ground, a.union(extra).rows)


def two_linear_representation(
    a: HalfSpace, seed: LinearOrder | None = None
) -> tuple[LinearOrder, LinearOrder]:
    """Two linear orders on the quotient of a intersecting to its induced order.

    Certifies that the quotient of any half-space has order dimension at
    most 2.  The seed is an arbitrary linear order on the quotient
    (default: identity chain); the pair is the seed-filled and
    reverse-seed-filled linearizations.
    """
    qm = induced_order(a)
    pi = HalfSpace(qm.induced.ground, qm.induced.rows)
    if seed is None:
        seed = chain_order(pi.ground)
    if seed.ground.size != pi.ground.size:
        raise InputError("seed does not live on the quotient")
    first = linearize_halfspace(pi, seed)
    second = linearize_halfspace(pi, seed.inverse())
    assert first.intersection(second) == Relation(pi.ground, pi.rows)
    return first, second
