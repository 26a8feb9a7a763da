"""Vertices of the infinite-dimensional hypercube graph.

A vertex picks, for every positive index i, exactly one of the signed
numbers i and -i; equivalently it is a sign function on the positive
integers.  Only eventually periodic sign functions with finitely many
pointwise overrides are representable here.  That class is closed under
single-index flips and under finitely supported symplectic permutations,
it meets many distinct connected components, and it keeps adjacency and
component membership decidable.

Two vertices are adjacent when their sign functions differ at exactly one
index, and they lie in the same connected component when they differ at
finitely many indices.  Because the degree of every vertex is countably
infinite, neighborhood operations take an explicit finite index window.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

__all__ = [
    "SignRule",
    "Vertex",
    "make_vertex",
    "vertex",
    "all_positive",
    "alternating",
    "clean_window",
]

_SIGN_CHARS = {"+": 1, "-": -1}


def _as_sign(value) -> int:
    """Coerce +1/-1 (or '+'/'-') to an integer sign."""
    if value in (1, -1):
        return int(value)
    if value in ("+", "-"):
        return _SIGN_CHARS[value]
    raise ValueError(f"expected a sign (+1, -1, '+' or '-'), got {value!r}")


def _as_overrides(raw) -> tuple[tuple[int, int], ...]:
    items = raw.items() if isinstance(raw, Mapping) else raw
    table: dict[int, int] = {}
    for key, value in items:
        index = int(key)
        if index < 1:
            raise ValueError(f"override index must be >= 1, got {index}")
        if index in table:
            raise ValueError(f"duplicate override for index {index}")
        table[index] = _as_sign(value)
    return tuple(sorted(table.items()))


def clean_window(window: Iterable[int]) -> tuple[int, ...]:
    """Sorted, duplicate-free tuple of positive indices."""
    out = sorted(set(int(i) for i in window))
    if out and out[0] < 1:
        raise ValueError(f"window indices must be >= 1, got {out[0]}")
    return tuple(out)


@dataclass(frozen=True)
class SignRule:
    """Eventually periodic sign function: a repeating pattern plus overrides.

    ``pattern[r]`` is the sign of every index i with i = r + 1 (mod period),
    except at the finitely many overridden indices.  The constructor accepts
    the pattern as a string of '+'/'-' or a sequence of +1/-1, and overrides
    as a mapping or pairs; both are stored as tuples.
    """

    period: int
    pattern: tuple[int, ...]
    overrides: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        period = int(self.period)
        if period < 1:
            raise ValueError(f"period must be >= 1, got {period}")
        pattern = tuple(_as_sign(s) for s in self.pattern)
        if len(pattern) != period:
            raise ValueError(
                f"pattern length {len(pattern)} does not match period {period}"
            )
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "overrides", _as_overrides(self.overrides))

    def sign_at(self, i: int) -> int:
        """Sign recorded for positive index i."""
        if i < 1:
            raise ValueError(f"index must be >= 1, got {i}")
        for key, value in self.overrides:
            if key == i:
                return value
        return self.pattern[(i - 1) % self.period]

    def canonical(self) -> "SignRule":
        """Minimal-period pattern with redundant overrides removed.

        Two rules denote the same sign function iff their canonical forms
        are equal, so all vertex equality goes through this form.
        """
        period, pattern = self.period, self.pattern
        for d in range(1, period + 1):
            if period % d == 0 and pattern == pattern[:d] * (period // d):
                period, pattern = d, pattern[:d]
                break
        kept = tuple(
            (i, s) for i, s in self.overrides if s != pattern[(i - 1) % period]
        )
        if period == self.period and kept == self.overrides:
            return self
        return SignRule(period, pattern, kept)

    def __repr__(self) -> str:
        pat = "".join("+" if s > 0 else "-" for s in self.pattern)
        over = {i: ("+" if s > 0 else "-") for i, s in self.overrides}
        return f"SignRule(period={self.period}, pattern={pat!r}, overrides={over})"


@dataclass(frozen=True)
class Vertex:
    """A vertex of the infinite hypercube, held in canonical form.

    Denotes the maximal singular subset ``{ sign(i) * i : i >= 1 }`` of the
    nonzero integers.  The stored rule is always canonical, so structural
    equality coincides with equality of sign functions.
    """

    rule: SignRule
    _over: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rule", self.rule.canonical())
        object.__setattr__(self, "_over", dict(self.rule.overrides))

    def sign_at(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"index must be >= 1, got {i}")
        got = self._over.get(i)
        if got is not None:
            return got
        return self.rule.pattern[(i - 1) % self.rule.period]

    def contains(self, i: int) -> bool:
        """Whether signed number i belongs to the vertex (exactly one of i, -i does)."""
        if i == 0:
            raise ValueError("vertices contain nonzero integers only")
        return self.sign_at(abs(i)) == (1 if i > 0 else -1)

    def flip(self, i: int) -> "Vertex":
        """The unique neighbor that differs exactly at index i.  An involution."""
        if i < 1:
            raise ValueError(f"flip index must be >= 1, got {i}")
        over = dict(self._over)
        over[i] = -self.sign_at(i)
        return Vertex(SignRule(self.rule.period, self.rule.pattern, over))

    def flip_all(self, indices: Iterable[int]) -> "Vertex":
        """Flip a set of distinct indices (order does not matter)."""
        out = self
        for i in set(indices):
            out = out.flip(i)
        return out

    def _diff(self, other: "Vertex") -> list[int] | None:
        """Indices where the sign functions differ, or None if infinite.

        The difference set is finite iff the two minimal patterns agree on
        every residue class modulo the lcm of the periods; in that case all
        differences sit at overridden indices.
        """
        pa, pb = self.rule, other.rule
        span = math.lcm(pa.period, pb.period)
        for r in range(span):
            if pa.pattern[r % pa.period] != pb.pattern[r % pb.period]:
                return None
        keys = set(self._over) | set(other._over)
        return sorted(i for i in keys if self.sign_at(i) != other.sign_at(i))

    def adjacent(self, other: "Vertex") -> bool:
        """Whether the sign functions differ at exactly one index."""
        diff = self._diff(other)
        return diff is not None and len(diff) == 1

    def same_component(self, other: "Vertex") -> bool:
        """Whether the two vertices differ at finitely many indices."""
        return self._diff(other) is not None

    def distance(self, other: "Vertex"):
        """Number of differing indices, or ``math.inf`` across components."""
        diff = self._diff(other)
        return math.inf if diff is None else len(diff)

    def difference_indices(self, other: "Vertex") -> list[int]:
        """Sorted indices where the two vertices differ (same component only)."""
        diff = self._diff(other)
        if diff is None:
            raise ValueError("vertices lie in different components")
        return diff

    def neighbors_in_window(self, window: Iterable[int]) -> list["Vertex"]:
        """The neighbors flip(v, i) for i in the window, ascending by i."""
        return [self.flip(i) for i in clean_window(window)]

    def ball(self, radius: int, window: Iterable[int]) -> list["Vertex"]:
        """All vertices reachable by flipping at most ``radius`` distinct
        window indices, ordered by flip count then index combination."""
        if radius < 0:
            raise ValueError(f"radius must be >= 0, got {radius}")
        win = clean_window(window)
        out = []
        for k in range(min(radius, len(win)) + 1):
            for combo in itertools.combinations(win, k):
                out.append(self.flip_all(combo))
        return out

    def iter_elements(self, bound: int) -> Iterator[int]:
        """The signed elements at indices 1..bound."""
        for i in range(1, bound + 1):
            yield self.sign_at(i) * i


def make_vertex(rule: SignRule) -> Vertex:
    """Canonicalizing constructor; equal sign functions give equal vertices."""
    return Vertex(rule)


def vertex(pattern="+", overrides=()) -> Vertex:
    """Build a vertex from a pattern (period inferred) and overrides."""
    pat = tuple(_as_sign(s) for s in pattern)
    return Vertex(SignRule(len(pat), pat, overrides))


def all_positive() -> Vertex:
    """The default basepoint {1, 2, 3, ...}."""
    return vertex("+")


def alternating() -> Vertex:
    """The vertex {1, -2, 3, -4, ...}, not in the basepoint's component."""
    return vertex("+-")
