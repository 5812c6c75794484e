"""Exact word arithmetic in finitely generated right-angled Coxeter systems.

Group elements exist only through canonical reduced words: the ShortLex-least
representative of the commutation class.  Two `Element` values are equal in
the group iff they are equal as Python values, so no coset hashing or
automatic structures are needed anywhere downstream.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_ENUMERATION_CAP = 5_000_000


class ResourceCapError(RuntimeError):
    """An enumeration exceeded its configured element cap."""


class MismatchedSystemsError(ValueError):
    """Operands belong to different Coxeter systems."""


class RacsFormatError(ValueError):
    """Malformed .racs system file; carries a line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _canonical_word(comm: tuple[frozenset[int], ...], word: Sequence[int]) -> tuple[int, ...]:
    # Lex-least linear extension of the heap of the (reduced) input word.
    # A letter may be emitted once every earlier unemitted letter commutes
    # with it; same letters never commute, so ties cannot occur.
    n = len(word)
    if n <= 1:
        return tuple(word)
    used = [False] * n
    out: list[int] = []
    for _ in range(n):
        best_i = -1
        best_g = -1
        for i in range(n):
            if used[i]:
                continue
            g = word[i]
            if best_i >= 0 and g >= best_g:
                continue
            movable = True
            for j in range(i):
                if not used[j] and word[j] not in comm[g]:
                    movable = False
                    break
            if movable:
                best_i, best_g = i, g
        used[best_i] = True
        out.append(best_g)
    return tuple(out)


def _reduce_append(comm: tuple[frozenset[int], ...], out: list[int], s: int) -> None:
    # Append one letter to a reduced word, keeping it reduced: cancel s if an
    # occurrence can commute past the suffix, otherwise the extension is
    # already reduced (all reduced words of an element differ by swaps only).
    i = len(out) - 1
    while i >= 0:
        g = out[i]
        if g == s:
            del out[i]
            return
        if s not in comm[g]:
            break
        i -= 1
    out.append(s)


@dataclass(frozen=True)
class CoxeterSystem:
    """A right-angled Coxeter system: named generators plus a commutation relation.

    `comm[i]` is the set of generator indices that commute with generator `i`
    (symmetric, irreflexive).  Non-commuting distinct generators have no
    relation; every generator is an involution.
    """

    gens: tuple[str, ...]
    comm: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("duplicate generator names")
        if len(self.comm) != len(self.gens):
            raise ValueError("commutation table size mismatch")
        for i, cs in enumerate(self.comm):
            if i in cs:
                raise ValueError(f"generator {self.gens[i]!r} marked as commuting with itself")
            for j in cs:
                if not (0 <= j < len(self.gens)):
                    raise ValueError("commutation index out of range")
                if i not in self.comm[j]:
                    raise ValueError(
                        f"asymmetric commutation between {self.gens[i]!r} and {self.gens[j]!r}"
                    )

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_pairs(cls, gens: Sequence[str], commuting: Iterable[tuple[str, str]]) -> "CoxeterSystem":
        index = {g: i for i, g in enumerate(gens)}
        sets: list[set[int]] = [set() for _ in gens]
        for a, b in commuting:
            if a not in index or b not in index:
                raise ValueError(f"unknown generator in commuting pair ({a!r}, {b!r})")
            if a == b:
                raise ValueError(f"generator {a!r} cannot commute with itself")
            sets[index[a]].add(index[b])
            sets[index[b]].add(index[a])
        return cls(tuple(gens), tuple(frozenset(s) for s in sets))

    @classmethod
    def cycle(cls, n: int, prefix: str = "s") -> "CoxeterSystem":
        """System on n generators where consecutive ones (cyclically) commute.

        For n = 5 this is the right-angled pentagon reflection group.
        """
        gens = [f"{prefix}{i + 1}" for i in range(n)]
        pairs = [(gens[i], gens[(i + 1) % n]) for i in range(n)]
        return cls.from_pairs(gens, pairs)

    # -- basic queries --------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.gens)

    def index_of(self, name: str) -> int:
        try:
            return self.gens.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def commutes(self, i: int, j: int) -> bool:
        return j in self.comm[i]

    def is_spherical(self, subset: Iterable[int]) -> bool:
        members = list(subset)
        return all(
            members[a] in self.comm[members[b]]
            for a in range(len(members))
            for b in range(a + 1, len(members))
        )

    def spherical_subsets(self) -> list[frozenset[int]]:
        """All spherical subsets (cliques of the commutation graph), incl. the empty set."""
        found: list[frozenset[int]] = [frozenset()]
        frontier: list[tuple[int, ...]] = [()]
        while frontier:
            nxt: list[tuple[int, ...]] = []
            for clique in frontier:
                last = clique[-1] if clique else -1
                for g in range(last + 1, self.rank):
                    if all(g in self.comm[m] for m in clique):
                        ext = clique + (g,)
                        found.append(frozenset(ext))
                        nxt.append(ext)
            frontier = nxt
        return found

    # -- elements and word arithmetic -----------------------------------------

    def identity(self) -> "Element":
        return Element(self, ())

    def generator(self, name: str) -> "Element":
        return Element(self, (self.index_of(name),))

    def normal_form(self, letters: Sequence[int | str]) -> "Element":
        word: list[int] = []
        for letter in letters:
            s = self.index_of(letter) if isinstance(letter, str) else letter
            if not (0 <= s < self.rank):
                raise KeyError(f"generator index {s} out of range")
            _reduce_append(self.comm, word, s)
        return Element(self, _canonical_word(self.comm, word))

    def element(self, text: str) -> "Element":
        """Parse a space-separated word in generator names ('-' or '' is the identity)."""
        text = text.strip()
        if text in ("", "-"):
            return self.identity()
        return self.normal_form(text.split())

    def _check(self, *elements: "Element") -> None:
        for e in elements:
            if e.system != self:
                raise MismatchedSystemsError("element belongs to a different Coxeter system")

    def multiply(self, a: "Element", b: "Element") -> "Element":
        self._check(a, b)
        word = list(a.word)
        for s in b.word:
            _reduce_append(self.comm, word, s)
        return Element(self, _canonical_word(self.comm, word))

    def inverse(self, a: "Element") -> "Element":
        self._check(a)
        return Element(self, _canonical_word(self.comm, tuple(reversed(a.word))))

    def dist(self, a: "Element", b: "Element") -> int:
        """Gallery distance d(a, b) = length of a^-1 b."""
        self._check(a, b)
        word = list(reversed(a.word))
        for s in b.word:
            _reduce_append(self.comm, word, s)
        return len(word)

    def descent_set(self, w: "Element") -> "SphericalSubset":
        """Generators s with l(ws) < l(w); always spherical, which is asserted."""
        self._check(w)
        word = w.word
        comm = self.comm
        desc: set[int] = set()
        for i, g in enumerate(word):
            if all(word[j] in comm[g] for j in range(i + 1, len(word))):
                desc.add(g)
        result = SphericalSubset(self, frozenset(desc))
        return result

    def right_multiply(self, w: "Element", s: int) -> "Element":
        self._check(w)
        word = list(w.word)
        _reduce_append(self.comm, word, s)
        return Element(self, _canonical_word(self.comm, word))

    def longest_in(self, subset: Iterable[int]) -> "Element":
        """Longest element of the finite special subgroup on a spherical subset."""
        members = sorted(set(subset))
        if not self.is_spherical(members):
            raise ValueError("subset is not spherical")
        return Element(self, tuple(members))

    # -- ball enumeration ------------------------------------------------------

    def ball(self, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list["Element"]:
        """All elements of length <= k, ordered by length then ShortLex.

        Every initial segment of the returned list is star-like with respect
        to the identity: minimal galleries only pass through strictly shorter
        elements, which appear earlier.
        """
        if k < 0:
            raise ValueError("radius must be non-negative")
        spheres = self.spheres(k, cap=cap)
        return [Element(self, w) for sphere in spheres for w in sphere]

    def spheres(self, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[list[tuple[int, ...]]]:
        """Canonical words of each sphere 0..k, each sphere sorted lexicographically."""
        comm = self.comm
        out: list[list[tuple[int, ...]]] = [[()]]
        total = 1
        current: list[tuple[int, ...]] = [()]
        for _ in range(k):
            nxt: set[tuple[int, ...]] = set()
            for w in current:
                desc = {
                    g for i, g in enumerate(w)
                    if all(w[j] in comm[g] for j in range(i + 1, len(w)))
                }
                for s in range(self.rank):
                    if s in desc:
                        continue
                    word = list(w)
                    _reduce_append(comm, word, s)
                    nxt.add(_canonical_word(comm, word))
            current = sorted(nxt)
            total += len(current)
            if total > cap:
                raise ResourceCapError(f"ball enumeration exceeded cap of {cap} elements")
            out.append(current)
        return out

    # -- distance-pattern properties used as fuzzing invariants ----------------

    def property_pm1_check(self, a: "Element", b: "Element", s: int) -> bool:
        """d(as,b) and d(a,bs) both differ from d(a,b) by exactly one."""
        self._check(a, b)
        d = self.dist(a, b)
        das = self.dist(self.right_multiply(a, s), b)
        dbs = self.dist(a, self.right_multiply(b, s))
        return abs(das - d) == 1 and abs(dbs - d) == 1

    def property_R_check(self, residue: Sequence["Element"], x: "Element") -> bool:
        """Distance pattern from x to a rank-2 spherical residue.

        The residue must be the four elements {r, rt, rt', rtt'} for distinct
        commuting t, t'.  The four distances must form three consecutive
        integers with the middle value attained twice, on the two non-adjacent
        chambers of the residue.
        """
        self._check(x, *residue)
        if len(set(residue)) != 4:
            raise ValueError("a rank-2 residue has exactly four distinct chambers")
        shortest = min(residue, key=lambda e: (len(e.word), e.word))
        gens: set[int] = set()
        for e in residue:
            if e == shortest:
                continue
            if self.dist(shortest, e) == 1:
                diff = self.multiply(self.inverse(shortest), e)
                gens.add(diff.word[0])
        if len(gens) != 2:
            raise ValueError("chambers do not form a {t,t'}-residue")
        t, u = sorted(gens)
        if not self.commutes(t, u):
            raise ValueError("generators of the residue do not commute")
        expected = {
            shortest,
            self.right_multiply(shortest, t),
            self.right_multiply(shortest, u),
            self.right_multiply(self.right_multiply(shortest, t), u),
        }
        if expected != set(residue):
            raise ValueError("chambers do not form a {t,t'}-residue")
        dists = sorted(((self.dist(x, e), e.word, e) for e in residue))
        values = [d for d, _, _ in dists]
        m = values[0]
        if values != [m, m + 1, m + 1, m + 2]:
            return False
        return self.dist(dists[1][2], dists[2][2]) == 2

    # -- serialization ----------------------------------------------------------

    def to_racs(self) -> str:
        lines = ["generators: " + " ".join(self.gens)]
        for i in range(self.rank):
            for j in sorted(self.comm[i]):
                if i < j:
                    lines.append(f"commute: {self.gens[i]} {self.gens[j]}")
        return "\n".join(lines) + "\n"

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_racs().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Element:
    """A group element as its canonical reduced word (generator indices)."""

    system: CoxeterSystem
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def names(self) -> tuple[str, ...]:
        return tuple(self.system.gens[i] for i in self.word)

    def __str__(self) -> str:
        return " ".join(self.names()) if self.word else "-"

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"

    def __mul__(self, other: "Element") -> "Element":
        return self.system.multiply(self, other)

    def inv(self) -> "Element":
        return self.system.inverse(self)

    def is_identity(self) -> bool:
        return not self.word


@dataclass(frozen=True)
class SphericalSubset:
    """A set of pairwise-commuting generators (the special subgroup is finite)."""

    system: CoxeterSystem
    members: frozenset[int]

    def __post_init__(self):
        if not self.system.is_spherical(self.members):
            raise ValueError("members do not pairwise commute")

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def names(self) -> tuple[str, ...]:
        return tuple(self.system.gens[i] for i in sorted(self.members))


def parse_racs(text: str) -> CoxeterSystem:
    """Parse the .racs text format.

    One `generators:` line, then one `commute: x y` line per unordered
    commuting pair.  `#` starts a comment.  Duplicate generators, unknown
    names, self-pairs and re-declared pairs (in either order) are rejected.
    """
    gens: list[str] | None = None
    pairs: list[tuple[str, str]] = []
    seen_pairs: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            if gens is not None:
                raise RacsFormatError(lineno, "repeated generators line")
            gens = line[len("generators:"):].split()
            if not gens:
                raise RacsFormatError(lineno, "empty generator list")
            if len(set(gens)) != len(gens):
                raise RacsFormatError(lineno, "duplicate generator names")
        elif line.startswith("commute:"):
            if gens is None:
                raise RacsFormatError(lineno, "commute line before generators line")
            names = line[len("commute:"):].split()
            if len(names) != 2:
                raise RacsFormatError(lineno, "commute line needs exactly two names")
            a, b = names
            if a == b:
                raise RacsFormatError(lineno, f"generator {a!r} cannot commute with itself")
            if a not in gens or b not in gens:
                raise RacsFormatError(lineno, f"unknown generator in pair ({a!r}, {b!r})")
            key = frozenset((a, b))
            if key in seen_pairs:
                raise RacsFormatError(lineno, f"pair ({a!r}, {b!r}) declared twice")
            seen_pairs.add(key)
            pairs.append((a, b))
        else:
            raise RacsFormatError(lineno, f"unrecognized line {line!r}")
    if gens is None:
        raise RacsFormatError(0, "missing generators line")
    return CoxeterSystem.from_pairs(gens, pairs)


def load_racs(path: str) -> CoxeterSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_racs(fh.read())
