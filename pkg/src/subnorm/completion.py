"""Canonical completion of finite posets by cuts, with negation lifting.

The completion of a poset is realized as the lattice of cuts ``(L, L^u)``
with ``L = (L^u)^l``, ordered by inclusion of lower sets.  For a finite
poset this lattice is dense and compact over the embedded image, so it
is *the* canonical extension; a finite lattice is (up to the identity)
its own completion and is short-circuited as such.

Closed and open elements are recorded as the image of the embedding:
every nonempty down-directed subset of a finite poset has a minimum and
every nonempty up-directed subset a maximum, so nonempty directed meets
and joins never leave the image.  The degenerate empty family is treated
separately where it matters (an empty meet is the lattice top, an empty
join its bottom).
"""

from __future__ import annotations

from typing import Optional, Sequence, Union

from .errors import NegationLawsFail, TooLarge
from .order import FinLattice, FinPoset, bits, mask_of, to_lattice

_SCAN_CAP = 10  # exhaustive subset scans stop making sense beyond this


class CanonicalExtension:
    """A poset together with its completion and the embedding into it.

    ``embed[x]`` is the index in ``delta`` of the principal cut of ``x``;
    ``closed`` and ``open`` are bitmasks over delta indices.
    """

    __slots__ = ("base", "delta", "embed", "closed", "open")

    def __init__(self, base: FinPoset, delta: FinLattice,
                 embed: Sequence[int], closed: int, open: int):
        self.base = base
        self.delta = delta
        self.embed = tuple(embed)
        self.closed = closed
        self.open = open

    @property
    def image(self) -> int:
        return mask_of(self.embed)

    def __repr__(self) -> str:
        return f"CanonicalExtension(base_n={self.base.n}, delta_n={self.delta.n})"


def _cut_masks(p: FinPoset) -> list[int]:
    """All cuts, as lower-set bitmasks, ascending.

    Cuts are exactly the intersections of principal down-sets together
    with the full carrier, so close the principal down-sets under
    pairwise intersection.
    """
    full = (1 << p.n) - 1
    cuts = {full}
    cuts.update(p.down[x] for x in range(p.n))
    frontier = list(cuts)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(cuts):
                c = a & b
                if c not in cuts:
                    cuts.add(c)
                    fresh.append(c)
        frontier = fresh
    return sorted(cuts)


def _cut_label(p: FinPoset, mask: int, principal_of: Optional[int]) -> str:
    if principal_of is not None:
        return p.label(principal_of)
    return "{" + ",".join(p.label(x) for x in bits(mask)) + "}"


def dm_completion(p: Union[FinPoset, FinLattice]) -> CanonicalExtension:
    """Complete a poset by cuts; a lattice is returned as itself.

    The embedding sends ``x`` to its principal cut.  For lattices every
    cut is principal, so copying the carrier (identity embedding) gives
    the same object up to relabeling and avoids the cubic table rebuild
    on large carriers such as free Boolean algebras.
    """
    if isinstance(p, FinLattice):
        full = (1 << p.n) - 1
        return CanonicalExtension(p.poset, p, range(p.n), full, full)
    cuts = _cut_masks(p)
    index = {c: i for i, c in enumerate(cuts)}
    embed = [index[p.down[x]] for x in range(p.n)]
    principal = {index[p.down[x]]: x for x in range(p.n)}
    m = len(cuts)
    up = [mask_of(j for j in range(m) if cuts[i] & ~cuts[j] == 0)
          for i in range(m)]
    labels = [_cut_label(p, cuts[i], principal.get(i)) for i in range(m)]
    delta = to_lattice(FinPoset(up, labels))
    image = mask_of(embed)
    return CanonicalExtension(p, delta, embed, image, image)


def _directed_subsets(c: CanonicalExtension, down: bool) -> list[int]:
    """Nonempty (down|up)-directed subsets of the base, as base bitmasks."""
    p = c.base
    if p.n > _SCAN_CAP:
        raise TooLarge(f"subset scan over {p.n} base elements")
    out = []
    for mask in range(1, 1 << p.n):
        members = list(bits(mask))
        if down:
            ok = all(p.down[a] & p.down[b] & mask for a in members for b in members)
        else:
            ok = all(p.up[a] & p.up[b] & mask for a in members for b in members)
        if ok:
            out.append(mask)
    return out


def _meet_of_base(c: CanonicalExtension, base_mask: int) -> int:
    return c.delta.meet_all(mask_of(c.embed[x] for x in bits(base_mask)))


def _join_of_base(c: CanonicalExtension, base_mask: int) -> int:
    return c.delta.join_all(mask_of(c.embed[x] for x in bits(base_mask)))


def verify_dense(c: CanonicalExtension) -> bool:
    """Check by enumeration that every delta element is a join of closed
    and a meet of open elements, with closed/open themselves recomputed
    from directed subsets of the image."""
    delta = c.delta
    closed = mask_of(_meet_of_base(c, f) for f in _directed_subsets(c, down=True))
    opened = mask_of(_join_of_base(c, i) for i in _directed_subsets(c, down=False))
    for u in range(delta.n):
        below = mask_of(k for k in bits(closed) if delta.leq(k, u))
        above = mask_of(o for o in bits(opened) if delta.leq(u, o))
        if delta.join_all(below) != u or delta.meet_all(above) != u:
            return False
    return True


def verify_compact(c: CanonicalExtension) -> bool:
    """Check compactness by enumeration: whenever a nonempty down-directed
    ``F`` and nonempty up-directed ``I`` in the image satisfy
    ``meet(F) <= join(I)``, some ``a in F``, ``b in I`` has ``a <= b``."""
    p = c.base
    downs = _directed_subsets(c, down=True)
    ups = _directed_subsets(c, down=False)
    meets = {f: _meet_of_base(c, f) for f in downs}
    joins = {i: _join_of_base(c, i) for i in ups}
    for f in downs:
        for i in ups:
            if not c.delta.leq(meets[f], joins[i]):
                continue
            if not any(p.up[a] & i for a in bits(f)):
                return False
    return True


def _require_neg_laws(p: FinPoset, neg: Sequence[int], side: str) -> None:
    n = p.n
    for a in range(n):
        for b in bits(p.up[a]):
            if not p.leq(neg[b], neg[a]):
                raise NegationLawsFail("antitone", (a, b))
    if side == "sigma":
        for a in range(n):
            for b in range(n):
                if p.leq(neg[a], b) != p.leq(neg[b], a):
                    raise NegationLawsFail("left-self-adjunction", (a, b))
    else:
        for a in range(n):
            for b in range(n):
                if p.leq(a, neg[b]) != p.leq(b, neg[a]):
                    raise NegationLawsFail("right-self-adjunction", (a, b))


def extend_negation_sigma(c: CanonicalExtension, neg: Sequence[int]) -> tuple[int, ...]:
    """Lift an antitone, left-self-adjoint negation to the whole completion.

    Two steps: on open elements take the meet of negated approximants
    from below, then extend to arbitrary elements by joining over the
    opens above.  On a lattice base this collapses to the original table.
    """
    _require_neg_laws(c.base, neg, "sigma")
    delta, embed = c.delta, c.embed
    on_open = {}
    for o in bits(c.open):
        approx = mask_of(embed[neg[a]] for a in range(c.base.n)
                         if delta.leq(embed[a], o))
        on_open[o] = delta.meet_all(approx)
    table = []
    for u in range(delta.n):
        table.append(delta.join_all(mask_of(
            on_open[o] for o in bits(c.open) if delta.leq(u, o))))
    return tuple(table)


def extend_negation_pi(c: CanonicalExtension, neg: Sequence[int]) -> tuple[int, ...]:
    """Dual lifting for antitone, right-self-adjoint negations: joins of
    negated approximants on closed elements, then meets over the closeds
    below."""
    _require_neg_laws(c.base, neg, "pi")
    delta, embed = c.delta, c.embed
    on_closed = {}
    for k in bits(c.closed):
        approx = mask_of(embed[neg[a]] for a in range(c.base.n)
                         if delta.leq(k, embed[a]))
        on_closed[k] = delta.join_all(approx)
    table = []
    for u in range(delta.n):
        table.append(delta.meet_all(mask_of(
            on_closed[k] for k in bits(c.closed) if delta.leq(k, u))))
    return tuple(table)
