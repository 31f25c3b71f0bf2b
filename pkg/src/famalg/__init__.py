"""Exact construction of universal algebras of maps and isomorphisms between
algebras, their induced Hopf structures, and finite-field oracles."""

from .errors import (
    AssociativityViolation,
    BudgetExceeded,
    ConstructionError,
    DegreeOutOfRange,
    FamalgError,
    IncompatibleContext,
    ParseError,
    PresentationError,
    UnitViolation,
    ValidationError,
)
from .field import GF, QQ, Field, parse_field
from .ncpoly import FreeAlgebra, NcPoly, TensorElement, eval_in_tensor
from .ncgb import GroebnerData, Verdict, complete, is_zero_modulo, reduce
from .fpalg import (
    AlgMorphism,
    Family,
    FpAlgebra,
    Presentation,
    base_algebra,
    compose_families,
    derive_algebra,
    make_algebra,
    tensor_algebra,
)
from .fralg import (
    FrAlgebra,
    FrHopf,
    ModuleMap,
    algebraic_dual,
    function_algebra,
    fr_to_presentation,
    group_algebra,
    k_power,
    make_fr,
    tensor_fr,
)

__version__ = "0.1.0"
