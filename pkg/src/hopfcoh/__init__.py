"""Exact engine for finite-dimensional Hopf algebra comodules, relative Hopf
modules, and the derived functors of their Hom and coinvariants functors."""

from hopfcoh.cohomology import (
    CochainComplex,
    EXT_rational,
    GradedComodule,
    a_ext,
    a_ext_H,
    a_free_resolution,
    cobar_resolution,
    complex_cohomology,
    derived_coinvariants,
    ext_H,
    ext_over_algebra,
    injective_resolution_fd_algebra,
)
from hopfcoh.comodule import (
    Comodule,
    ComoduleMap,
    HomComodule,
    coinvariants,
    colinear_maps,
    curry,
    curry_symmetric,
    free_comodule,
    generated_subcomodule,
    grouplike_comodule,
    hom_comodule,
    integral_projector,
    is_injective_comodule,
    isotypic_component,
    rationality_witness,
    regular_comodule,
    tensor_comodule,
    trivial_comodule,
    validate_comodule,
)
from hopfcoh.errors import HypothesisError, ResourceCapError, StructureError
from hopfcoh.fixtures import FIXTURE_NAMES, fixture_json, fixture_workspace, hopf_fixture
from hopfcoh.hopf import (
    Algebra,
    HopfAlgebra,
    IntegralData,
    NoAntipodeError,
    ValidationReport,
    dual_hopf,
    integrals,
    make_hopf,
    solve_antipode,
    validate_hopf,
)
from hopfcoh.linalg import GF, QQ, Field, Matrix, Subspace, kernel, kronecker, quotient, solve
from hopfcoh.relative import (
    AlgebraModule,
    ComoduleAlgebra,
    CoinvariantAlgebra,
    RelHopfModule,
    SmashAlgebra,
    a_hom_rational,
    adjunction_check,
    b_hom_from_A,
    coinvariant_subalgebra,
    from_smash_module,
    induce,
    is_injective_module,
    is_projective_module,
    nu_and_bullet,
    smash_product,
    tensor_over_A,
    to_smash_module,
    validate_comodule_algebra,
    validate_rel_hopf_module,
)
from hopfcoh.suite import run_suite
from hopfcoh.workspace import Workspace, load_workspace, parse_workspace, workspace_json

__all__ = [name for name in dir() if not name.startswith("_")]
