"""Half-spaces in a right-angled Coxeter group: membership, shortest elements,
wall-crossing cosets and gallery-convex hulls.

A half-space H(w,s) is the set of elements strictly closer to ws than to w;
the complementary half-space is H(ws,s).  Each half-space has a unique
shortest element, computed as the minimal representative of the crossing
coset ws W_{s'} where s' is the set of generators commuting with s.
"""

from __future__ import annotations

from dataclasses import dataclass

from racb.coxeter import CoxeterSystem, Element, MismatchedSystemsError, ResourceCapError

DEFAULT_HULL_CAP = 5_000_000


@dataclass(frozen=True)
class HalfSpace:
    """H(w,s) = {h : d(h, ws) < d(h, w)}, determined by the wall between w and ws.

    `normalized` records that w*s is the unique shortest element of the set.
    """

    w: Element
    s: int
    normalized: bool = False

    @property
    def system(self) -> CoxeterSystem:
        return self.w.system

    def __post_init__(self):
        if not (0 <= self.s < self.system.rank):
            raise KeyError(f"generator index {self.s} out of range")

    def opposite(self) -> "HalfSpace":
        return HalfSpace(self.system.right_multiply(self.w, self.s), self.s)

    def __str__(self) -> str:
        return f"H({self.w}, {self.system.gens[self.s]})"


@dataclass(frozen=True)
class CrossingSet:
    """The coset rep W_{s'} of elements of H(w,s) whose s-neighbour leaves it."""

    rep: Element
    gens: frozenset[int]

    def contains(self, h: Element) -> bool:
        return coset_min(h, self.gens) == self.rep


def commuting_gens(sys: CoxeterSystem, s: int) -> frozenset[int]:
    """{s}' : the generators distinct from s that commute with s."""
    return sys.comm[s]


def coset_min(u: Element, gens: frozenset[int]) -> Element:
    """Unique minimal-length representative of the coset u W_T."""
    sys = u.system
    changed = True
    while changed:
        changed = False
        desc = sys.descent_set(u).members
        for t in sorted(desc & gens):
            u = sys.right_multiply(u, t)
            changed = True
            break
    return u


def contains(hs: HalfSpace, h: Element) -> bool:
    """Membership via the defining distance comparison.

    d(h,ws) and d(h,w) differ by exactly one, so d(h,ws) < d(h,w) is
    equivalent to s being a descent of h^-1 w.
    """
    sys = hs.system
    if h.system != sys:
        raise MismatchedSystemsError("chamber belongs to a different system")
    u = sys.multiply(sys.inverse(h), hs.w)
    return hs.s in sys.descent_set(u).members


def shortest_element(hs: HalfSpace) -> Element:
    """The unique shortest element of H(w,s).

    If the identity belongs to the half-space it is trivially the shortest;
    otherwise the shortest element is the minimal representative of the
    crossing coset ws W_{s'}.
    """
    sys = hs.system
    identity = sys.identity()
    if contains(hs, identity):
        return identity
    ws = sys.right_multiply(hs.w, hs.s)
    return coset_min(ws, commuting_gens(sys, hs.s))


def normalize(hs: HalfSpace) -> HalfSpace:
    """Equivalent half-space whose stored w*s is the shortest element."""
    sys = hs.system
    g = shortest_element(hs)
    return HalfSpace(sys.right_multiply(g, hs.s), hs.s, normalized=True)


def crossing_set(hs: HalfSpace) -> CrossingSet:
    """Elements h in H(w,s) with hs outside: the coset ws W_{s'}."""
    sys = hs.system
    gens = commuting_gens(sys, hs.s)
    ws = sys.right_multiply(hs.w, hs.s)
    return CrossingSet(coset_min(ws, gens), gens)


def wall(hs: HalfSpace) -> Element:
    """The reflection w s w^-1 fixing the wall of H(w,s); canonical, so wall
    equality is Element equality."""
    sys = hs.system
    ws = sys.right_multiply(hs.w, hs.s)
    return sys.multiply(ws, sys.inverse(hs.w))


def interval(u: Element, v: Element) -> set[Element]:
    """All elements on minimal galleries from u to v."""
    sys = u.system
    if v.system != sys:
        raise MismatchedSystemsError("interval endpoints in different systems")
    total = sys.dist(u, v)
    found = {u}
    frontier = {u}
    for step in range(total):
        nxt: set[Element] = set()
        for x in frontier:
            for s in range(sys.rank):
                y = sys.right_multiply(x, s)
                if y in found or y in nxt:
                    continue
                if sys.dist(u, y) == step + 1 and sys.dist(y, v) == total - step - 1:
                    nxt.add(y)
        found |= nxt
        frontier = nxt
    return found


def convex_hull(elements, cap: int = DEFAULT_HULL_CAP) -> set[Element]:
    """Smallest superset closed under minimal-gallery intervals.

    Computed as a fixpoint of pairwise interval closure; finite because the
    number of walls separating members from the identity is finite.
    """
    members = set(elements)
    if not members:
        raise ValueError("convex hull of an empty set")
    fresh = set(members)
    while fresh:
        added: set[Element] = set()
        pool = sorted(members, key=lambda e: (len(e.word), e.word))
        new = sorted(fresh, key=lambda e: (len(e.word), e.word))
        for x in new:
            for y in pool:
                for z in interval(x, y):
                    if z not in members:
                        added.add(z)
        members |= added
        if len(members) > cap:
            raise ResourceCapError(f"convex hull exceeded cap of {cap} elements")
        fresh = added
    return members
