"""Computable slice of the infinite-dimensional hypercube graph.

Vertices are eventually periodic sign functions with finite overrides;
symplectic permutations are stored by their finitely many moved indices.
On top of those sit automorphism oracles, the probe-based reconstruction
of the permutation inducing an oracle near a vertex, non-regularity
certificates, and a finite-hypercube brute-force oracle used as ground
truth.  See the ``cli`` module (``python -m alephcube``) for the
command-line surface.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .automorphism import (
    AutomorphismOracle,
    CallbackOracle,
    ConsistentWithinWindow,
    MalformedOracleError,
    NonRegular,
    PiecewiseOracle,
    ReconstructionResult,
    RegularOracle,
    check_automorphism_on_sample,
    is_regular_verdict,
    reconstruct_component,
    reconstruct_local,
    single_component_automorphism,
)
from .finitecube import (
    CubeAutomorphism,
    FiniteCube,
    bits_to_int,
    count_automorphisms_extension,
    cube_to_wreath,
    embed_cube_vertex,
    enumerate_automorphisms_bruteforce,
    enumerate_automorphisms_extension,
    int_to_bits,
    iter_wreath_pairs,
    lift_cube_automorphism,
    wreath_to_cube,
)
from .symplectic import (
    IDENTITY,
    SymplecticPerm,
    WreathPair,
    from_wreath,
    is_symplectic,
    random_symplectic,
    to_wreath,
    weak_membership,
    wreath_multiply,
)
from .vertices import (
    SignRule,
    Vertex,
    all_positive,
    alternating,
    make_vertex,
    vertex,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # vertices
    "SignRule",
    "Vertex",
    "make_vertex",
    "vertex",
    "all_positive",
    "alternating",
    # symplectic
    "SymplecticPerm",
    "WreathPair",
    "IDENTITY",
    "is_symplectic",
    "from_wreath",
    "to_wreath",
    "wreath_multiply",
    "weak_membership",
    "random_symplectic",
    # automorphism
    "AutomorphismOracle",
    "RegularOracle",
    "PiecewiseOracle",
    "CallbackOracle",
    "MalformedOracleError",
    "ReconstructionResult",
    "reconstruct_local",
    "reconstruct_component",
    "NonRegular",
    "ConsistentWithinWindow",
    "is_regular_verdict",
    "check_automorphism_on_sample",
    "single_component_automorphism",
    # finite cube
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
