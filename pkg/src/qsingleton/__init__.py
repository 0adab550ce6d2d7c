"""Stabilizer codes as isotropic subspaces of F_p^{2n}, with exact checks of
the lemmas leading to the quantum Singleton bound k + 2(d - 1) <= n."""

from qsingleton.code_generation import GeneratorConfig, catalog, random_code
from qsingleton.code_io import parse_code, parse_qubit_set, serialize_code
from qsingleton.field_linalg import Subspace
from qsingleton.stabilizer_core import (
    Distance,
    StabilizerCode,
    check_cleaning_identity,
    check_distance_correctability,
    check_singleton,
    check_two_disjoint,
    clean,
    distance,
    g,
    is_correctable,
    logical_space_dim,
    make_code,
)
from qsingleton.symplectic_space import PauliVector, QubitSet

__all__ = [
    "Distance",
    "GeneratorConfig",
    "PauliVector",
    "QubitSet",
    "StabilizerCode",
    "Subspace",
    "catalog",
    "check_cleaning_identity",
    "check_distance_correctability",
    "check_singleton",
    "check_two_disjoint",
    "clean",
    "distance",
    "g",
    "is_correctable",
    "logical_space_dim",
    "make_code",
    "parse_code",
    "parse_qubit_set",
    "random_code",
    "serialize_code",
]
