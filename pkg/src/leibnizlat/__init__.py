"""Exact-arithmetic toolkit for finite-dimensional Leibniz algebras."""

from .linalg import (
    BudgetExceeded,
    Field,
    LinalgError,
    Subspace,
    enumerate_subspaces,
    nullspace,
    rref,
    solve_linear,
    subspace_from_vectors,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
)
from .algebra import (
    AlgebraError,
    LeibnizAlgebra,
    Shape,
    StructureReport,
    UnsupportedFieldError,
    check_left_leibniz,
    check_right_leibniz,
)
from .lattice import (
    SubalgebraLattice,
    all_subalgebras_wqi,
    build_structure_report,
    enumerate_subalgebras,
    frattini_ideal,
    is_lower_semimodular_lattice,
    is_modular,
    is_upper_semimodular,
    is_weak_quasi_ideal,
    lattice_stats,
    maximal_subalgebras,
    wqi_elementwise,
)
from . import catalog, verify
from .specfile import SpecError, emit_spec, export_dot, export_json_report, parse_spec

__all__ = [
    "AlgebraError",
    "BudgetExceeded",
    "Field",
    "LeibnizAlgebra",
    "LinalgError",
    "Shape",
    "SpecError",
    "StructureReport",
    "SubalgebraLattice",
    "Subspace",
    "UnsupportedFieldError",
    "all_subalgebras_wqi",
    "build_structure_report",
    "catalog",
    "check_left_leibniz",
    "check_right_leibniz",
    "emit_spec",
    "enumerate_subalgebras",
    "enumerate_subspaces",
    "export_dot",
    "export_json_report",
    "frattini_ideal",
    "is_lower_semimodular_lattice",
    "is_modular",
    "is_upper_semimodular",
    "is_weak_quasi_ideal",
    "lattice_stats",
    "maximal_subalgebras",
    "nullspace",
    "parse_spec",
    "rref",
    "solve_linear",
    "subspace_from_vectors",
    "subspace_intersection",
    "subspace_leq",
    "subspace_sum",
    "verify",
    "wqi_elementwise",
]
