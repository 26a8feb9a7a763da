"""Pure-Python enumeration kernels for the finite hypercube.

Same contract as the compiled kernels; selected as a fallback (or forced
via ALEPHCUBE_PURE_PYTHON=1).  Vertices are integers 0..2^n-1 with
coordinate k at bit k-1; maps are tuples indexed by vertex.
"""

from __future__ import annotations

import itertools

__all__ = ["brute_force_maps", "extension_maps", "extension_count"]


def brute_force_maps(n: int) -> list[tuple[int, ...]]:
    """All vertex bijections preserving Hamming-1 adjacency, in lexicographic
    order of the map tuple.  Cost grows as (2^n)!."""
    size = 1 << n
    edges = [
        (u, u ^ (1 << k)) for u in range(size) for k in range(n) if u < u ^ (1 << k)
    ]
    out = []
    for p in itertools.permutations(range(size)):
        if all((p[u] ^ p[v]).bit_count() == 1 for u, v in edges):
            out.append(p)
    return out


def _axis_base_maps(n: int):
    """Greedy extension of each axis bijection from a fixed vertex.

    The candidate fixes vertex 0, sends the neighbor along axis k to the
    neighbor along axis sigma(k), and extends: a vertex with two lowest set
    bits split off has its image forced as the common neighbor of the two
    partial images that differs from the image of their meet.  Candidates
    that break the forced choice, bijectivity, or any edge are dropped.

    Greedy extension commutes with XOR-translation of the images, so each
    axis bijection is extended once here and translated by the caller.
    """
    size = 1 << n
    by_weight = sorted(range(size), key=int.bit_count)
    for sigma in itertools.permutations(range(n)):
        m = [0] * size
        for k in range(n):
            m[1 << k] = 1 << sigma[k]
        ok = True
        for v in by_weight:
            if v.bit_count() < 2:
                continue
            i = v & -v
            j = (v ^ i) & -(v ^ i)
            fa, fb, fmeet = m[v ^ i], m[v ^ j], m[v ^ i ^ j]
            d = fa ^ fb
            if d.bit_count() != 2:
                ok = False
                break
            lo = d & -d
            c1, c2 = fa ^ lo, fa ^ (d ^ lo)
            if fmeet == c1:
                m[v] = c2
            elif fmeet == c2:
                m[v] = c1
            else:
                ok = False
                break
        if not ok or len(set(m)) != size:
            continue
        if all(
            (m[v] ^ m[v ^ (1 << k)]).bit_count() == 1
            for v in range(size)
            for k in range(n)
        ):
            yield m


def extension_maps(n: int) -> list[tuple[int, ...]]:
    """All adjacency-preserving bijections found by greedy extension from
    the image of one vertex and of its n neighbors, sorted canonically."""
    size = 1 << n
    out = []
    for base in _axis_base_maps(n):
        for c in range(size):
            out.append(tuple(x ^ c for x in base))
    out.sort()
    return out


def extension_count(n: int) -> int:
    """Number of maps :func:`extension_maps` would return, without storing them."""
    size = 1 << n
    return sum(size for _ in _axis_base_maps(n))
