"""Automorphism oracles of the infinite hypercube and their reconstruction.

An oracle is a black-box vertex map promised to preserve adjacency.  Probing
it at a base vertex and at the base's neighbors along a finite index window
recovers, index by index, the unique symplectic permutation that agrees with
the oracle on every probed neighbor:

* normalize so the base is fixed, by composing with the sign flip on the
  indices where the base and its image differ;
* the normalized image of the neighbor at index i is again a neighbor of
  the base, and the single signed element it adds determines where the
  permutation sends the signed element just outside the base at i;
* the other sign follows from the symplectic law, and undoing the
  normalization yields the action actually taken by the oracle.

Images that break the neighbor geometry (not adjacent to the base, or
adding more than one element) certify that the callback is not an
automorphism, as does disagreement between reconstructions at nearby base
points.  Disagreement between reconstructions in *different* components
certifies that no single permutation induces the map globally; agreement is
evidence only, never a proof, since only finitely many probes are made.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .symplectic import SymplecticPerm
from .vertices import Vertex, clean_window

__all__ = [
    "MalformedOracleError",
    "AutomorphismOracle",
    "RegularOracle",
    "PiecewiseOracle",
    "CallbackOracle",
    "single_component_automorphism",
    "ReconstructionResult",
    "reconstruct_local",
    "reconstruct_component",
    "NonRegular",
    "ConsistentWithinWindow",
    "is_regular_verdict",
    "check_automorphism_on_sample",
]


class MalformedOracleError(Exception):
    """The queried map violated a property every automorphism must have."""


class AutomorphismOracle:
    """Base interface: a deterministic, total vertex map."""

    def evaluate(self, v: Vertex) -> Vertex:
        raise NotImplementedError


class RegularOracle(AutomorphismOracle):
    """Automorphism induced by applying a symplectic permutation elementwise."""

    def __init__(self, perm: SymplecticPerm):
        self.perm = perm

    def evaluate(self, v: Vertex) -> Vertex:
        return self.perm.apply_vertex(v)

    def __repr__(self) -> str:
        return f"RegularOracle({self.perm!r})"


class PiecewiseOracle(AutomorphismOracle):
    """Applies a per-component permutation, identity off the listed components.

    Each case is (component representative, permutation); the permutation
    must keep its component (automatic for finitely supported permutations)
    and the representatives must lie in pairwise distinct components.
    """

    def __init__(self, cases: Sequence[tuple[Vertex, SymplecticPerm]]):
        cases = list(cases)
        for k, (rep, perm) in enumerate(cases):
            if not perm.apply_vertex(rep).same_component(rep):
                raise ValueError(f"case {k}: permutation leaves the component")
            for rep2, _ in cases[:k]:
                if rep.same_component(rep2):
                    raise ValueError("case representatives share a component")
        self.cases = cases

    def evaluate(self, v: Vertex) -> Vertex:
        for rep, perm in self.cases:
            if v.same_component(rep):
                return perm.apply_vertex(v)
        return v

    def __repr__(self) -> str:
        return f"PiecewiseOracle({len(self.cases)} case(s))"


class CallbackOracle(AutomorphismOracle):
    """Wraps a user-supplied vertex map; trusted but validated when probed."""

    def __init__(self, fn: Callable[[Vertex], Vertex]):
        self.fn = fn

    def evaluate(self, v: Vertex) -> Vertex:
        out = self.fn(v)
        if not isinstance(out, Vertex):
            raise MalformedOracleError(f"callback returned {type(out).__name__}")
        return out


class TableOracle(AutomorphismOracle):
    """Finite list of vertex -> image pairs, identity elsewhere.

    The serializable counterpart of :class:`CallbackOracle`: nothing about
    the table is checked up front, so probing one of these can (and, for a
    bad table, will) trip the malformed-oracle detection.
    """

    def __init__(self, pairs: Iterable[tuple[Vertex, Vertex]]):
        self.pairs = tuple(pairs)
        self._table = dict(self.pairs)

    def evaluate(self, v: Vertex) -> Vertex:
        return self._table.get(v, v)

    def __repr__(self) -> str:
        return f"TableOracle({len(self.pairs)} pair(s))"


def single_component_automorphism(
    base: Vertex, perm: SymplecticPerm
) -> PiecewiseOracle:
    """The stock non-regular automorphism: acts as ``perm`` on the base's
    component and as the identity everywhere else.

    Rejects the identity permutation, which would give the trivial map.
    """
    if perm.is_identity():
        raise ValueError("permutation must not be the identity")
    return PiecewiseOracle([(base, perm)])


@dataclass
class ReconstructionResult:
    """Recovered windowed action of an oracle near a base vertex.

    ``action`` maps every probed positive index to its signed image; the
    negative side is implied by the symplectic law.  ``checked_at`` lists
    the extra base points where an independent reconstruction agreed.
    """

    window: tuple[int, ...]
    action: dict[int, int]
    checked_at: tuple[Vertex, ...] = ()
    queries: int = 0

    def finitize(self) -> SymplecticPerm:
        """The action as a closed permutation, when its moved indices stay
        inside the window; raises ValueError otherwise."""
        return SymplecticPerm({i: v for i, v in self.action.items() if v != i})

    def agrees_with(self, perm: SymplecticPerm) -> bool:
        return all(perm.apply(i) == v for i, v in self.action.items())


def reconstruct_local(
    oracle: AutomorphismOracle, at: Vertex, window: Iterable[int]
) -> ReconstructionResult:
    """Recover the oracle's action on a window of indices from probes at
    ``at`` and its window neighbors: exactly ``len(window) + 1`` queries.

    Raises :class:`MalformedOracleError` when a probe image contradicts the
    neighbor geometry of an automorphism (image of the base outside its
    component, neighbor image not adjacent to the normalized base, or two
    window indices claiming the same image).
    """
    win = clean_window(window)
    queries = 1
    image = oracle.evaluate(at)
    if not at.same_component(image):
        raise MalformedOracleError("image of the base vertex left its component")
    # Normalizing sign flip on the indices where the base moved; it is its
    # own inverse, which keeps undoing it cheap.
    flip_back = SymplecticPerm({i: -i for i in at.difference_indices(image)})

    action: dict[int, int] = {}
    for i in win:
        neighbor = at.flip(i)
        queries += 1
        probed = flip_back.apply_vertex(oracle.evaluate(neighbor))
        if not probed.same_component(at):
            raise MalformedOracleError(
                f"image of the neighbor at index {i} left the component"
            )
        added = probed.difference_indices(at)
        if len(added) != 1:
            raise MalformedOracleError(
                f"image of the neighbor at index {i} adds {len(added)} elements "
                "to the base instead of one"
            )
        new_element = added[0] if probed.contains(added[0]) else -added[0]
        outside = i if neighbor.contains(i) else -i
        sent_to = new_element if outside == i else -new_element
        action[i] = flip_back.apply(sent_to)

    if len({abs(v) for v in action.values()}) != len(action):
        raise MalformedOracleError("recovered action maps two indices together")
    return ReconstructionResult(window=win, action=action, queries=queries)


def _near_vertices(
    at: Vertex, window: tuple[int, ...], count: int, rng: random.Random
) -> list[Vertex]:
    """Seed-deterministic sample of neighbors / near-neighbors within the window."""
    out = []
    for _ in range(count):
        if not window:
            out.append(at)
            continue
        k = rng.randint(1, min(2, len(window)))
        out.append(at.flip_all(rng.sample(window, k)))
    return out


def reconstruct_component(
    oracle: AutomorphismOracle,
    at: Vertex,
    window: Iterable[int],
    checks: int,
    seed=0,
) -> ReconstructionResult:
    """Reconstruct at ``at`` and re-derive the action at ``checks`` nearby
    base points; the reconstructions of an automorphism restricted to one
    component all agree, so any disagreement flags a malformed oracle."""
    win = clean_window(window)
    base = reconstruct_local(oracle, at, win)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    total = base.queries
    checked = []
    for other in _near_vertices(at, win, checks, rng):
        again = reconstruct_local(oracle, other, win)
        total += again.queries
        if again.action != base.action:
            bad = sorted(i for i in win if again.action[i] != base.action[i])
            raise MalformedOracleError(
                f"local reconstructions disagree at indices {bad}; "
                "the map is not an automorphism"
            )
        checked.append(other)
    return ReconstructionResult(
        window=win, action=base.action, checked_at=tuple(checked), queries=total
    )


@dataclass(frozen=True)
class NonRegular:
    """Certificate: reconstructions in two components force different images
    for one index, so no single permutation induces the oracle."""

    index: int
    first_rep: Vertex
    second_rep: Vertex
    first_image: int
    second_image: int


@dataclass
class ConsistentWithinWindow:
    """All per-component reconstructions matched on the window.  This is
    compatible with regularity but does not prove it."""

    action: dict[int, int]


def is_regular_verdict(
    oracle: AutomorphismOracle,
    reps: Sequence[Vertex],
    window: Iterable[int],
) -> NonRegular | ConsistentWithinWindow:
    """Compare windowed reconstructions across component representatives."""
    if not reps:
        raise ValueError("need at least one component representative")
    for k, rep in enumerate(reps):
        for other in reps[:k]:
            if rep.same_component(other):
                raise ValueError("representatives share a component")
    win = clean_window(window)
    first = reconstruct_local(oracle, reps[0], win)
    for rep in reps[1:]:
        other = reconstruct_local(oracle, rep, win)
        for i in win:
            if other.action[i] != first.action[i]:
                return NonRegular(
                    index=i,
                    first_rep=reps[0],
                    second_rep=rep,
                    first_image=first.action[i],
                    second_image=other.action[i],
                )
    return ConsistentWithinWindow(action=first.action)


def check_automorphism_on_sample(
    oracle: AutomorphismOracle,
    base: Vertex,
    window: Iterable[int],
    samples: int,
    seed=0,
) -> bool:
    """Spot-check that the oracle preserves adjacency and non-adjacency on
    random vertex pairs near the base.  False on the first violation."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    win = clean_window(window)
    nearby = base.ball(2, win)
    for _ in range(samples):
        v = rng.choice(nearby)
        if win and rng.random() < 0.5:
            w = v.flip(rng.choice(win))
        else:
            w = rng.choice(nearby)
        if v.adjacent(w) != oracle.evaluate(v).adjacent(oracle.evaluate(w)):
            return False
    return True
