"""Extremality of the closure operators, verified by map enumeration.

For a directed instance, the closure-``i`` diamond dominates every map
below the original diamond that is monotone (all systems), also
join-preserving (2, 4), and also satisfies the contraction law
``f(a) <= f(a ^ f(a))`` (3, 4).  Dually, the closure box of systems 1
and 2 is below every map above the original box that is monotone,
submultiplicative over meets and fixes the top.  Candidate maps are
enumerated exhaustively (the size cap keeps that to at most ``n^n`` per
side), so this is an independent oracle for the closure construction.

No analogous first-order law pins down the box of systems 3 and 4: the
contraction closure adds pairs whose columns depend on row structure
the box cannot see, and on B4 with the single seed pair (x, y) the
system-3 box itself violates the candidate law box(a v box(a)) <=
box(a).  ``verify_prop41`` therefore checks the box side for systems 1
and 2 only; ``box_minimality_failure`` stays exposed for experiments.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from ..completion import dm_completion
from ..errors import MissingStructure, TooLarge
from ..order import FinLattice, bits
from ..slanted import build_slanted
from ..subordination import ProtoSubAlg, Property, close_i, property_holds

_N_CAP = 4


def _dominated_maps(lat: FinLattice, bound: Sequence[int],
                    below: bool) -> Iterator[tuple[int, ...]]:
    """All maps pointwise below (or above) the bound, pruned early on
    monotonicity against already-fixed positions."""
    p = lat.poset
    n = lat.n
    choices = [sorted(bits(p.down[bound[a]] if below else p.up[bound[a]]))
               for a in range(n)]
    f = [0] * n

    def rec(a: int) -> Iterator[tuple[int, ...]]:
        if a == n:
            yield tuple(f)
            return
        for v in choices[a]:
            ok = True
            for b in range(a):
                if p.leq(a, b) and not p.leq(v, f[b]):
                    ok = False
                    break
                if p.leq(b, a) and not p.leq(f[b], v):
                    ok = False
                    break
            if ok:
                f[a] = v
                yield from rec(a + 1)

    return rec(0)


def _is_monotone(lat: FinLattice, f: Sequence[int]) -> bool:
    p = lat.poset
    return all(lat.leq(f[a], f[b]) for a in range(lat.n) for b in bits(p.up[a]))


def _diamond_qualifies(lat: FinLattice, f: Sequence[int], i: int) -> bool:
    n = lat.n
    if i in (2, 4):
        if any(f[lat.join[a][b]] != lat.join[f[a]][f[b]]
               for a in range(n) for b in range(n)):
            return False
    if i in (3, 4):
        if any(not lat.leq(f[a], f[lat.meet[a][f[a]]]) for a in range(n)):
            return False
    return True


def _box_qualifies(lat: FinLattice, g: Sequence[int]) -> bool:
    n = lat.n
    if g[lat.top] != lat.top:
        return False
    return not any(not lat.leq(lat.meet[g[x]][g[y]], g[lat.meet[x][y]])
                   for x in range(n) for y in range(n))


def diamond_maximality_failure(lat: FinLattice, dia: Sequence[int],
                               dia_i: Sequence[int], i: int) -> Optional[dict]:
    """A qualifying map below ``dia`` that ``dia_i`` fails to dominate,
    or a reason ``dia_i`` itself does not qualify; None when maximal."""
    if not all(lat.leq(dia_i[a], dia[a]) for a in range(lat.n)):
        return {"side": "diamond", "reason": "closure map not dominated",
                "map": list(dia_i)}
    if not (_is_monotone(lat, dia_i) and _diamond_qualifies(lat, dia_i, i)):
        return {"side": "diamond", "reason": "closure map fails its own laws",
                "map": list(dia_i)}
    for f in _dominated_maps(lat, dia, below=True):
        if not _diamond_qualifies(lat, f, i):
            continue
        if not all(lat.leq(f[a], dia_i[a]) for a in range(lat.n)):
            return {"side": "diamond", "reason": "larger qualifying map",
                    "map": list(f)}
    return None


def box_minimality_failure(lat: FinLattice, box: Sequence[int],
                           box_i: Sequence[int]) -> Optional[dict]:
    if not all(lat.leq(box[a], box_i[a]) for a in range(lat.n)):
        return {"side": "box", "reason": "closure map not dominating",
                "map": list(box_i)}
    if not (_is_monotone(lat, box_i) and _box_qualifies(lat, box_i)):
        return {"side": "box", "reason": "closure map fails its own laws",
                "map": list(box_i)}
    for g in _dominated_maps(lat, box, below=False):
        if not _box_qualifies(lat, g):
            continue
        if not all(lat.leq(box_i[a], g[a]) for a in range(lat.n)):
            return {"side": "box", "reason": "smaller qualifying map",
                    "map": list(g)}
    return None


def verify_prop41(S: ProtoSubAlg, i: int) -> tuple[bool, Optional[dict]]:
    """Confirm extremality of both closure-``i`` operators on a directed
    instance by exhaustive map enumeration."""
    if S.n > _N_CAP:
        raise TooLarge(f"map enumeration on {S.n} elements")
    lat = S.lattice
    if lat is None or not lat.is_distributive:
        raise MissingStructure("closure extremality",
                               "a bounded distributive lattice carrier")
    if not (property_holds(S, Property.DD) and property_holds(S, Property.UD)):
        raise MissingStructure("closure extremality", "a directed instance")
    ext = dm_completion(lat)
    sa = build_slanted(S, ext)
    sai = build_slanted(close_i(S, i), ext)
    bad = diamond_maximality_failure(lat, sa.dia, sai.dia, i)
    if bad is not None:
        return False, bad
    if i in (1, 2):
        bad = box_minimality_failure(lat, sa.box, sai.box)
        if bad is not None:
            return False, bad
    return True, None
