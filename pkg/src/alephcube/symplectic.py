"""Finitely supported symplectic permutations of the nonzero integers.

A permutation s of Z \\ {0} is symplectic when s(-i) = -s(i); these are
exactly the permutations that carry vertices of the infinite hypercube to
vertices.  Only the moved positive indices are stored, so the symplectic
law holds by construction and the representable elements are exactly the
finitely supported ones.

Every such permutation factors uniquely into a finite permutation of the
positive indices followed by sign flips on finitely many of them (a wreath
pair); ``from_wreath``/``to_wreath`` convert between the two forms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .vertices import SignRule, Vertex

__all__ = [
    "SymplecticPerm",
    "WreathPair",
    "IDENTITY",
    "is_symplectic",
    "from_wreath",
    "to_wreath",
    "wreath_multiply",
    "weak_membership",
    "random_symplectic",
]


def _normalize_moves(raw) -> tuple[tuple[int, int], ...]:
    items = raw.items() if isinstance(raw, Mapping) else raw
    table: dict[int, int] = {}
    for key, value in items:
        i, v = int(key), int(value)
        if i < 1:
            raise ValueError(f"moves are stored for positive indices only, got {i}")
        if v == 0:
            raise ValueError("images must be nonzero")
        if i in table:
            raise ValueError(f"duplicate move for index {i}")
        if v != i:
            table[i] = v
    keys = set(table)
    images = {abs(v) for v in table.values()}
    if images != keys or len(images) != len(table):
        raise ValueError(
            "moved indices must map onto themselves (support not closed "
            f"or images collide): {dict(table)}"
        )
    return tuple(sorted(table.items()))


@dataclass(frozen=True)
class SymplecticPerm:
    """A symplectic permutation, stored as its moved positive indices.

    ``moves`` maps exactly the positive i with s(i) != i; negative arguments
    follow from s(-i) = -s(i).  Identity entries are stripped, so equal
    permutations compare equal structurally.
    """

    moves: tuple[tuple[int, int], ...] = ()
    _table: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        moves = _normalize_moves(self.moves)
        object.__setattr__(self, "moves", moves)
        object.__setattr__(self, "_table", dict(moves))

    @property
    def support(self) -> tuple[int, ...]:
        """The moved positive indices, ascending."""
        return tuple(i for i, _ in self.moves)

    def is_identity(self) -> bool:
        return not self.moves

    def apply(self, i: int) -> int:
        """Image of the signed index i; odd extension for i < 0."""
        if i == 0:
            raise ValueError("symplectic permutations act on nonzero integers")
        if i > 0:
            return self._table.get(i, i)
        return -self._table.get(-i, -i)

    def apply_vertex(self, v: Vertex) -> Vertex:
        """Elementwise image of a vertex; stays in the representable class.

        Only the signs at moved indices can change, so the result keeps the
        vertex's pattern and differs in finitely many overrides.
        """
        if not self.moves:
            return v
        inv = self.inverse()
        new_signs = {}
        for i, _ in self.moves:
            pre = inv.apply(i)
            new_signs[i] = 1 if v.contains(pre) else -1
        support = set(new_signs)
        merged = {i: s for i, s in v.rule.overrides if i not in support}
        merged.update(new_signs)
        return Vertex(SignRule(v.rule.period, v.rule.pattern, merged))

    def compose(self, other: "SymplecticPerm") -> "SymplecticPerm":
        """self after other: compose(a, b)(i) = a(b(i))."""
        keys = set(self._table) | set(other._table)
        return SymplecticPerm(
            {i: self.apply(other.apply(i)) for i in keys}
        )

    def inverse(self) -> "SymplecticPerm":
        inv: dict[int, int] = {}
        for i, v in self.moves:
            if v > 0:
                inv[v] = i
            else:
                inv[-v] = -i
        return SymplecticPerm(inv)

    def order(self) -> int:
        """Least k >= 1 with s^k = identity.

        Computed from the signed cycle structure: a cycle of the underlying
        index permutation contributes its length when the product of signs
        around it is +1, and twice its length otherwise.
        """
        seen: set[int] = set()
        result = 1
        for i, _ in self.moves:
            if i in seen:
                continue
            length, sign, j = 0, 1, i
            while True:
                seen.add(j)
                image = self.apply(j)
                length += 1
                if image < 0:
                    sign = -sign
                j = abs(image)
                if j == i:
                    break
            result = math.lcm(result, length if sign > 0 else 2 * length)
        return result

    def __repr__(self) -> str:
        return f"SymplecticPerm({dict(self.moves)})"


IDENTITY = SymplecticPerm()


def is_symplectic(raw: Mapping[int, int]) -> bool:
    """Whether a finite map on nonzero integers extends to a symplectic
    permutation by the identity: bijective on a symmetric support and odd."""
    table = {int(k): int(v) for k, v in raw.items()}
    if 0 in table or 0 in table.values():
        return False
    for k, v in table.items():
        if -k not in table or table[-k] != -v:
            return False
    return set(table.values()) == set(table)


@dataclass(frozen=True)
class WreathPair:
    """Factored form: a finite permutation of positive indices plus the set
    of indices whose sign gets flipped afterwards."""

    perm: tuple[tuple[int, int], ...] = ()
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        items = self.perm.items() if isinstance(self.perm, Mapping) else self.perm
        table: dict[int, int] = {}
        for key, value in items:
            i, v = int(key), int(value)
            if i < 1 or v < 1:
                raise ValueError("wreath permutation acts on positive indices")
            if i in table:
                raise ValueError(f"duplicate permutation entry for {i}")
            if v != i:
                table[i] = v
        if set(table.values()) != set(table):
            raise ValueError(f"wreath permutation is not a bijection: {table}")
        flips: set[int] = set()
        if isinstance(self.signs, Mapping):
            for key, value in self.signs.items():
                j, s = int(key), int(value)
                if j < 1:
                    raise ValueError("sign indices must be positive")
                if s == -1:
                    flips.add(j)
                elif s != 1:
                    raise ValueError(f"sign values must be +1 or -1, got {s}")
        else:
            for key in self.signs:
                j = int(key)
                if j < 1:
                    raise ValueError("sign indices must be positive")
                flips.add(j)
        object.__setattr__(self, "perm", tuple(sorted(table.items())))
        object.__setattr__(self, "signs", tuple(sorted(flips)))

    def perm_at(self, i: int) -> int:
        return dict(self.perm).get(i, i)

    def sign_at(self, i: int) -> int:
        return -1 if i in self.signs else 1

    @property
    def support_bound(self) -> int:
        bound = 0
        for i, v in self.perm:
            bound = max(bound, i, v)
        if self.signs:
            bound = max(bound, max(self.signs))
        return bound


def from_wreath(w: WreathPair) -> SymplecticPerm:
    """The permutation i -> sign(p(i)) * p(i) determined by a wreath pair."""
    perm = dict(w.perm)
    flips = set(w.signs)
    candidates = set(perm) | set(perm.values()) | flips
    moves = {}
    for i in candidates:
        j = perm.get(i, i)
        v = -j if j in flips else j
        if v != i:
            moves[i] = v
    return SymplecticPerm(moves)


def to_wreath(s: SymplecticPerm) -> WreathPair:
    """Inverse of :func:`from_wreath`; always succeeds."""
    perm = {}
    flips = set()
    for i, v in s.moves:
        j = abs(v)
        if j != i:
            perm[i] = j
        if v < 0:
            flips.add(j)
    return WreathPair(perm, flips)


def wreath_multiply(a: WreathPair, b: WreathPair) -> WreathPair:
    """Wreath product multiplication matching composition (b acts first).

    The permutation parts compose, and a sign flip of b at j lands at a's
    image of j, cancelling against a's own flip there if present.
    """
    pa, pb = dict(a.perm), dict(b.perm)
    keys = set(pa) | set(pb)
    perm = {i: pa.get(pb.get(i, i), pb.get(i, i)) for i in keys}
    moved_b_signs = {pa.get(j, j) for j in b.signs}
    signs = set(a.signs) ^ moved_b_signs
    return WreathPair(perm, signs)


def weak_membership(s: SymplecticPerm, base: Vertex) -> bool:
    """Whether s keeps the base vertex's connected component.

    True for every finitely supported permutation; the check exists for
    symmetry with oracle-backed maps, where it can genuinely fail.
    """
    return s.apply_vertex(base).same_component(base)


def random_symplectic(support_bound: int, seed=0) -> SymplecticPerm:
    """Uniformly random wreath pair on {1..support_bound}, as a permutation.

    Deterministic per seed; also accepts a ``random.Random`` for reuse.
    """
    if support_bound < 0:
        raise ValueError("support bound must be >= 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    images = list(range(1, support_bound + 1))
    rng.shuffle(images)
    perm = {i: v for i, v in zip(range(1, support_bound + 1), images)}
    flips = {i for i in range(1, support_bound + 1) if rng.random() < 0.5}
    return from_wreath(WreathPair(perm, flips))
