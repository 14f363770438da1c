"""Finite posets, lattices and Boolean algebras over dense integer carriers.

Elements are the indices ``0..n-1``.  The order is stored row-wise as
bitmasks (``up[a]`` has bit ``b`` set iff ``a <= b``), which keeps pair
tests O(1) and lets closures and subset sweeps run bit-parallel; that is
what makes exhaustive enumeration over all ``2^(n*n)`` relations on a
carrier practical.  Subsets of the carrier are plain ``int`` bitmasks
throughout the package.

All structures are immutable after construction and safe to share
between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    InputFormatError,
    NotALattice,
    NotBounded,
    NotDistributive,
    PosetLawViolation,
    TooLarge,
    TooManyVariables,
)


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class FinPoset:
    """Finite partial order.

    ``up[a]`` is the bitmask of elements above-or-equal ``a`` (including
    ``a`` itself).  The constructor trusts its input; use
    :func:`validate_poset` for unchecked matrices.
    """

    __slots__ = ("n", "up", "down", "labels", "_tables")

    def __init__(self, up: Sequence[int], labels: Optional[Sequence[str]] = None):
        self.n = len(up)
        self.up = tuple(up)
        down = [0] * self.n
        for a in range(self.n):
            for b in bits(self.up[a]):
                down[b] |= 1 << a
        self.down = tuple(down)
        self.labels = tuple(labels) if labels is not None else None
        self._tables = None  # lazy per-carrier lookup tables, see subordination

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(a, b) for b in range(self.n)] for a in range(self.n)]

    def up_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.up[x]
        return out

    def down_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.down[x]
        return out

    def minimal_of(self, mask: int) -> int:
        """Bitmask of minimal elements within ``mask``."""
        out = 0
        for x in bits(mask):
            if self.down[x] & mask == 1 << x:
                out |= 1 << x
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FinPoset) and self.up == other.up

    def __hash__(self) -> int:
        return hash(self.up)

    def __repr__(self) -> str:
        return f"FinPoset(n={self.n})"


def validate_poset(matrix: Sequence[Sequence[object]],
                   labels: Optional[Sequence[str]] = None) -> FinPoset:
    """Build a poset from an n*n truth matrix, checking the order laws.

    Raises :class:`PosetLawViolation` naming the first offending pair or
    triple in index order.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise InputFormatError("order matrix must be square")
    up = [mask_of(b for b in range(n) if matrix[a][b]) for a in range(n)]
    for a in range(n):
        if not up[a] >> a & 1:
            raise PosetLawViolation("reflexivity", (a,))
    for a in range(n):
        for b in bits(up[a]):
            if a != b and up[b] >> a & 1:
                raise PosetLawViolation("antisymmetry", (a, b))
    for a in range(n):
        for b in bits(up[a]):
            if up[a] | up[b] != up[a]:
                c = next(c for c in bits(up[b] & ~up[a]))
                raise PosetLawViolation("transitivity", (a, b, c))
    return FinPoset(up, labels)


def poset_from_hasse(n: int, pairs: Iterable[tuple[int, int]],
                     labels: Optional[Sequence[str]] = None) -> FinPoset:
    """Reflexive-transitive closure of covering pairs ``i < j``."""
    up = [1 << a for a in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise InputFormatError(f"hasse pair {(i, j)} out of range")
        up[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for a in range(n):
            acc = up[a]
            for b in bits(acc):
                acc |= up[b]
            if acc != up[a]:
                up[a] = acc
                changed = True
    return validate_poset([[bool(up[a] >> b & 1) for b in range(n)] for a in range(n)], labels)


class FinLattice:
    """Bounded lattice over a :class:`FinPoset` carrier.

    ``meet``/``join`` are full n*n element tables.  ``is_distributive``
    and ``is_boolean`` are decided at construction; ``neg`` is the
    complement table when the lattice is Boolean, or any caller-supplied
    negation table otherwise.
    """

    __slots__ = ("poset", "meet", "join", "bot", "top",
                 "is_distributive", "is_boolean", "neg")

    def __init__(self, poset: FinPoset, meet, join, bot: int, top: int,
                 is_distributive: bool, is_boolean: bool,
                 neg: Optional[Sequence[int]] = None):
        self.poset = poset
        self.meet = tuple(tuple(row) for row in meet)
        self.join = tuple(tuple(row) for row in join)
        self.bot = bot
        self.top = top
        self.is_distributive = is_distributive
        self.is_boolean = is_boolean
        self.neg = tuple(neg) if neg is not None else None

    @property
    def n(self) -> int:
        return self.poset.n

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def label(self, i: int) -> str:
        return self.poset.label(i)

    def meet_all(self, mask: int) -> int:
        """Meet of a subset; the empty meet is top."""
        acc = self.top
        for x in bits(mask):
            acc = self.meet[acc][x]
        return acc

    def join_all(self, mask: int) -> int:
        """Join of a subset; the empty join is bottom."""
        acc = self.bot
        for x in bits(mask):
            acc = self.join[acc][x]
        return acc

    def with_neg(self, neg: Sequence[int]) -> "FinLattice":
        return FinLattice(self.poset, self.meet, self.join, self.bot, self.top,
                          self.is_distributive, self.is_boolean, neg)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FinLattice) and self.poset == other.poset
                and self.meet == other.meet and self.neg == other.neg)

    def __hash__(self) -> int:
        return hash((self.poset, self.meet, self.neg))

    def __repr__(self) -> str:
        return f"FinLattice(n={self.n})"


def _greatest_of(p: FinPoset, mask: int) -> Optional[int]:
    for m in bits(mask):
        if mask & ~p.down[m] == 0:
            return m
    return None


def _least_of(p: FinPoset, mask: int) -> Optional[int]:
    for m in bits(mask):
        if mask & ~p.up[m] == 0:
            return m
    return None


def to_lattice(p: FinPoset) -> FinLattice:
    """Compute meet/join tables, bounds and structural flags.

    Raises :class:`NotALattice` at the first pair (index order) lacking a
    greatest lower or least upper bound, and :class:`NotBounded` if the
    poset has no global bottom/top (a finite lattice always has both once
    all pairs have bounds, so this only triggers on the empty carrier).
    """
    n = p.n
    if n == 0:
        raise NotBounded("empty carrier has no bounds")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            g = _greatest_of(p, p.down[a] & p.down[b])
            if g is None:
                raise NotALattice("greatest lower bound", (a, b))
            l = _least_of(p, p.up[a] & p.up[b])
            if l is None:
                raise NotALattice("least upper bound", (a, b))
            meet[a][b] = meet[b][a] = g
            join[a][b] = join[b][a] = l
    bot = next(a for a in range(n) if p.up[a] == (1 << n) - 1)
    top = next(a for a in range(n) if p.down[a] == (1 << n) - 1)
    distributive = all(
        meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]
        for a in range(n) for b in range(n) for c in range(n))
    neg = None
    boolean = False
    if distributive:
        comp = []
        for a in range(n):
            c = next((b for b in range(n)
                      if meet[a][b] == bot and join[a][b] == top), None)
            if c is None:
                break
            comp.append(c)
        else:
            boolean = True
            neg = comp
    return FinLattice(p, meet, join, bot, top, distributive, boolean, neg)


def join_irreducibles(L: FinLattice) -> int:
    """Bitmask of non-bottom elements ``x`` with ``x = a v b  =>  x in {a, b}``.

    On a finite distributive lattice these coincide with the completely
    join-prime elements.
    """
    out = 0
    for x in range(L.n):
        if x == L.bot:
            continue
        if all(x in (a, b)
               for a in bits(L.poset.down[x]) for b in bits(L.poset.down[x])
               if L.join[a][b] == x):
            out |= 1 << x
    return out


def meet_irreducibles(L: FinLattice) -> int:
    out = 0
    for x in range(L.n):
        if x == L.top:
            continue
        if all(x in (a, b)
               for a in bits(L.poset.up[x]) for b in bits(L.poset.up[x])
               if L.meet[a][b] == x):
            out |= 1 << x
    return out


def is_filter(mask: int, L: FinLattice) -> bool:
    """Nonempty up-set closed under binary meets."""
    if mask == 0 or L.poset.up_closure(mask) != mask:
        return False
    return all(mask >> L.meet[a][b] & 1
               for a in bits(mask) for b in bits(mask))


def prime_filters(L: FinLattice) -> list[int]:
    """All proper filters ``P`` with ``a v b in P  =>  a in P or b in P``.

    Enumerated directly over subsets (the carrier cap keeps this exact);
    returned as bitmasks in ascending numeric order.
    """
    if not L.is_distributive:
        raise NotDistributive("prime filters computed on distributive lattices only")
    if L.n > 14:
        raise TooLarge(f"subset enumeration on {L.n} elements")
    full = (1 << L.n) - 1
    out = []
    for mask in range(1, full + 1):
        if mask >> L.bot & 1:
            continue  # contains bottom => improper
        if not is_filter(mask, L):
            continue
        if all((mask >> a & 1) or (mask >> b & 1)
               for a in range(L.n) for b in range(L.n)
               if mask >> L.join[a][b] & 1):
            out.append(mask)
    return out


def is_down_directed(mask: int, p: FinPoset) -> bool:
    """Every pair in the subset has a lower bound inside the subset.

    The empty set is down-directed (vacuously).
    """
    members = list(bits(mask))
    return all(p.down[a] & p.down[b] & mask
               for a in members for b in members) if members else True


def is_up_directed(mask: int, p: FinPoset) -> bool:
    members = list(bits(mask))
    return all(p.up[a] & p.up[b] & mask
               for a in members for b in members) if members else True


@dataclass(frozen=True)
class NegationReport:
    """Independent verdicts for the four negation laws."""

    antitone: bool
    involutive: bool
    left_self_adjoint: bool   # ~a <= b  iff  ~b <= a
    right_self_adjoint: bool  # a <= ~b  iff  b <= ~a

    def all_laws(self) -> bool:
        return (self.antitone and self.involutive
                and self.left_self_adjoint and self.right_self_adjoint)


def check_negation_laws(L: FinLattice, neg: Sequence[int]) -> NegationReport:
    n, p = L.n, L.poset
    if len(neg) != n:
        raise InputFormatError("negation table must be total")
    antitone = all(p.leq(neg[b], neg[a])
                   for a in range(n) for b in bits(p.up[a]))
    involutive = all(neg[neg[a]] == a for a in range(n))
    left = all(p.leq(neg[a], b) == p.leq(neg[b], a)
               for a in range(n) for b in range(n))
    right = all(p.leq(a, neg[b]) == p.leq(b, neg[a])
                for a in range(n) for b in range(n))
    return NegationReport(antitone, involutive, left, right)


_FREE_BA_CAP = 3


@lru_cache(maxsize=None)
def free_boolean_algebra(k: int) -> tuple[FinLattice, tuple[int, ...]]:
    """Free Boolean algebra on ``k`` generators as truth-table bitvectors.

    Element ``i`` *is* its truth table over the ``2^k`` valuations, so
    meet/join/complement are bitwise ops and the order is bitmask
    inclusion.  Generator ``g`` maps to its projection table.  Capped at
    ``k = 3`` (256 elements); larger requests are rejected outright, the
    relation matrices above that would be astronomically large.
    """
    if not 0 <= k <= _FREE_BA_CAP:
        raise TooManyVariables(k)
    m = 1 << k          # valuations
    n = 1 << m          # elements = truth tables
    full = n - 1
    up = [0] * n
    for a in range(n):
        rest = full & ~a
        s = rest
        acc = 1 << (a | rest)
        while s:
            s = (s - 1) & rest
            acc |= 1 << (a | s)
            if s == 0:
                break
        up[a] = acc | 1 << a
    poset = FinPoset(up)
    meet = [[a & b for b in range(n)] for a in range(n)]
    join = [[a | b for b in range(n)] for a in range(n)]
    neg = [full ^ a for a in range(n)]
    lat = FinLattice(poset, meet, join, 0, full, True, True, neg)
    gens = []
    for g in range(k):
        gens.append(mask_of(v for v in range(m) if v >> g & 1))
    return lat, tuple(gens)


# ---------------------------------------------------------------------------
# JSON interchange
#
# Algebra JSON is either {"elements": [...], "leq": [[0/1,...],...]} or
# {"hasse": [[i,j],...]} (reflexive-transitive closure applied), with an
# optional "neg" table.  Indices refer to positions in "elements".
# ---------------------------------------------------------------------------

def poset_from_json(obj: dict) -> tuple[FinPoset, Optional[tuple[int, ...]]]:
    if not isinstance(obj, dict):
        raise InputFormatError("algebra JSON must be an object")
    labels = obj.get("elements")
    if labels is not None and not isinstance(labels, list):
        raise InputFormatError('"elements" must be a list of names')
    if "leq" in obj:
        p = validate_poset(obj["leq"], labels)
    elif "hasse" in obj:
        pairs = [tuple(x) for x in obj["hasse"]]
        if labels is not None:
            n = len(labels)
        else:
            n = 1 + max((max(i, j) for i, j in pairs), default=-1)
        p = poset_from_hasse(n, pairs, labels)
    else:
        raise InputFormatError('algebra JSON needs "leq" or "hasse"')
    neg = obj.get("neg")
    if neg is not None:
        if len(neg) != p.n or not all(0 <= x < p.n for x in neg):
            raise InputFormatError('"neg" must map every element index')
        neg = tuple(int(x) for x in neg)
    return p, neg


def lattice_from_json(obj: dict) -> FinLattice:
    p, neg = poset_from_json(obj)
    lat = to_lattice(p)
    if neg is not None:
        lat = lat.with_neg(neg)
    return lat


def poset_to_json(p: FinPoset, neg: Optional[Sequence[int]] = None) -> dict:
    out = {
        "elements": [p.label(i) for i in range(p.n)],
        "leq": [[1 if p.leq(a, b) else 0 for b in range(p.n)] for a in range(p.n)],
    }
    if neg is not None:
        out["neg"] = list(neg)
    return out


def lattice_to_json(L: FinLattice) -> dict:
    return poset_to_json(L.poset, L.neg)
