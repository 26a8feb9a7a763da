"""Finite hypercube ground truth.

The n-cube H_n (vertices: n-bit integers, edges: Hamming distance 1) is
small enough to enumerate automorphisms exhaustively, which pins down the
group the infinite-graph machinery must reproduce on windows.  Two
independent enumerators with overlapping ranges certify each other: brute
force over all vertex bijections (n <= 3), and greedy extension from the
image of one vertex and its neighbors (n <= 8 for counting, n <= 7 when
materializing the maps).

Indexing convention, used everywhere: coordinate k (1-based) of the cube
is bit k-1 of the vertex integer and character k-1 of its bitstring, and
it corresponds to index k of the infinite graph's sign functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .automorphism import RegularOracle
from .symplectic import SymplecticPerm, WreathPair, from_wreath
from .vertices import Vertex, all_positive

__all__ = [
    "FiniteCube",
    "CubeAutomorphism",
    "bits_to_int",
    "int_to_bits",
    "enumerate_automorphisms_bruteforce",
    "enumerate_automorphisms_extension",
    "count_automorphisms_extension",
    "iter_wreath_pairs",
    "wreath_to_cube",
    "cube_to_wreath",
    "embed_cube_vertex",
    "lift_cube_automorphism",
]

KERNEL_BACKEND = _kernels.BACKEND

_MAX_BRUTE = 3
_MAX_MATERIALIZE = 7
_MAX_COUNT = 8


def bits_to_int(bits: str) -> int:
    """Bitstring (coordinate 1 first) to vertex integer."""
    value = 0
    for k, ch in enumerate(bits, start=1):
        if ch == "1":
            value |= 1 << (k - 1)
        elif ch != "0":
            raise ValueError(f"bitstring characters must be 0/1, got {ch!r}")
    return value


def int_to_bits(v: int, n: int) -> str:
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} out of range for n={n}")
    return "".join("1" if v >> (k - 1) & 1 else "0" for k in range(1, n + 1))


@dataclass(frozen=True)
class FiniteCube:
    """The n-dimensional hypercube graph, 1 <= n <= 10."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= 10:
            raise ValueError(f"dimension must be in 1..10, got {self.n}")

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    def vertices(self) -> range:
        return range(1 << self.n)

    def adjacent(self, u: int, v: int) -> bool:
        return (u ^ v).bit_count() == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.vertices():
            for k in range(self.n):
                v = u ^ (1 << k)
                if u < v:
                    yield u, v


@dataclass(frozen=True)
class CubeAutomorphism:
    """A vertex bijection of the n-cube; ``mapping[v]`` is the image of v.

    Construction checks only the shape.  Use :meth:`is_valid` to verify the
    bijection and adjacency preservation, e.g. on untrusted input; the
    enumerators' outputs are certified wholesale by the acceptance tests.
    """

    n: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= 10:
            raise ValueError(f"dimension must be in 1..10, got {self.n}")
        size = 1 << self.n
        mapping = tuple(int(x) for x in self.mapping)
        if len(mapping) != size:
            raise ValueError(f"mapping must list {size} images")
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def is_valid(self) -> bool:
        size = 1 << self.n
        if any(not 0 <= x < size for x in self.mapping):
            return False
        if len(set(self.mapping)) != size:
            return False
        return all(
            (self.mapping[v] ^ self.mapping[v ^ (1 << k)]).bit_count() == 1
            for v in range(size)
            for k in range(self.n)
        )

    def compose(self, other: "CubeAutomorphism") -> "CubeAutomorphism":
        """self after other."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return CubeAutomorphism(
            self.n, tuple(self.mapping[x] for x in other.mapping)
        )


def enumerate_automorphisms_bruteforce(n: int) -> list[CubeAutomorphism]:
    """Every adjacency-preserving vertex bijection, by trying all (2^n)! of
    them; the slow but assumption-free enumerator (n <= 3)."""
    if not 1 <= n <= _MAX_BRUTE:
        raise ValueError(f"brute force is limited to n <= {_MAX_BRUTE}, got {n}")
    return [CubeAutomorphism(n, m) for m in _kernels.brute_force_maps(n)]


def enumerate_automorphisms_extension(n: int) -> list[CubeAutomorphism]:
    """Every automorphism, by extending the images of one vertex and its n
    neighbors greedily and validating the result (n <= 7; the full list at
    n = 8 would hold ~10^7 maps on 256 vertices, use the count instead)."""
    if not 1 <= n <= _MAX_MATERIALIZE:
        raise ValueError(
            f"materializing is limited to n <= {_MAX_MATERIALIZE}, got {n}; "
            "count_automorphisms_extension goes up to "
            f"{_MAX_COUNT}"
        )
    return [CubeAutomorphism(n, m) for m in _kernels.extension_maps(n)]


def count_automorphisms_extension(n: int) -> int:
    """Number of automorphisms found by the extension enumerator (n <= 8)."""
    if not 1 <= n <= _MAX_COUNT:
        raise ValueError(f"counting is limited to n <= {_MAX_COUNT}, got {n}")
    return int(_kernels.extension_count(n))


def iter_wreath_pairs(n: int) -> Iterator[WreathPair]:
    """All 2^n * n! wreath pairs supported in {1..n}, deterministic order."""
    indices = list(range(1, n + 1))
    for images in itertools.permutations(indices):
        perm = dict(zip(indices, images))
        for flips in range(1 << n):
            signs = {k for k in indices if flips >> (k - 1) & 1}
            yield WreathPair(perm, signs)


def wreath_to_cube(w: WreathPair, n: int) -> CubeAutomorphism:
    """The cube map that permutes coordinates by the pair's permutation and
    then flips the coordinates marked -1."""
    if w.support_bound > n:
        raise ValueError(
            f"wreath pair touches index {w.support_bound}, beyond n={n}"
        )
    size = 1 << n
    flip = 0
    for j in w.signs:
        flip |= 1 << (j - 1)
    table = []
    for v in range(size):
        out = 0
        for k in range(1, n + 1):
            if v >> (k - 1) & 1:
                out |= 1 << (w.perm_at(k) - 1)
        table.append(out ^ flip)
    return CubeAutomorphism(n, tuple(table))


def cube_to_wreath(a: CubeAutomorphism) -> WreathPair:
    """The unique wreath pair inducing a cube automorphism.

    Derived from the image of vertex 0 (the flip set) and the images of its
    neighbors (the coordinate permutation), then verified against the whole
    map; a map not of that form is rejected, which for true automorphisms
    never happens.
    """
    n = a.n
    flip = a.mapping[0]
    perm = {}
    for k in range(1, n + 1):
        image = a.mapping[1 << (k - 1)] ^ flip
        if image.bit_count() != 1:
            raise ValueError("map does not permute coordinates")
        perm[k] = image.bit_length()
    pair = WreathPair(perm, {j for j in range(1, n + 1) if flip >> (j - 1) & 1})
    if wreath_to_cube(pair, n) != a:
        raise ValueError("map is not induced by any wreath pair")
    return pair


def embed_cube_vertex(bits: str, base: Vertex | None = None) -> Vertex:
    """Embed an n-bit string into the infinite graph: bit k = 1 flips index
    k of the base vertex.  Adjacency- and distance-preserving."""
    if base is None:
        base = all_positive()
    return base.flip_all(k for k, ch in enumerate(bits, start=1) if ch == "1")


def _match_base_signs(s: SymplecticPerm, base: Vertex) -> SymplecticPerm:
    """Conjugate by the base's sign function so the permutation commutes
    with embedding relative to that base; the support is unchanged and at
    the all-positive basepoint this is the identity adjustment."""
    moves = {}
    for i, v in s.moves:
        moves[i] = base.sign_at(i) * base.sign_at(abs(v)) * v
    return SymplecticPerm(moves)


def lift_cube_automorphism(
    a: CubeAutomorphism, base: Vertex | None = None
) -> RegularOracle:
    """The regular oracle acting on embedded cube vertices exactly as the
    cube automorphism acts on bitstrings."""
    if base is None:
        base = all_positive()
    s = from_wreath(cube_to_wreath(a))
    return RegularOracle(_match_base_signs(s, base))
