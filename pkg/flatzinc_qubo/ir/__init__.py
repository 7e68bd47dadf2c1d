"""
Staged QIP(FD) intermediate representation: finite domains, exact affine
expressions, the immutable model, the substitution forest and the mutable
builder every pass works on.
"""


from .builder import ModelBuilder
from .check import check_model
from .domain import (
    BINARY,
    Domain,
    Interval,
    ValueSet,
    clamp_rational,
    interval_product,
    is_binary,
    is_singleton,
    make_value_set,
    singleton
)
from .expr import AffineExpr, eval_affine, line_bounds, sum_exprs
from .forest import Substitution, SubstitutionForest
from .model import (
    LinearConstraint,
    Objective,
    ProductConstraint,
    QipModel,
    Relation,
    Sense,
    Stage,
    Variable,
    VarKind,
    format_constraint
)


__all__ = [
    "BINARY",
    "AffineExpr",
    "Domain",
    "Interval",
    "LinearConstraint",
    "ModelBuilder",
    "Objective",
    "ProductConstraint",
    "QipModel",
    "Relation",
    "Sense",
    "Stage",
    "Substitution",
    "SubstitutionForest",
    "ValueSet",
    "Variable",
    "VarKind",
    "check_model",
    "clamp_rational",
    "eval_affine",
    "format_constraint",
    "interval_product",
    "is_binary",
    "is_singleton",
    "line_bounds",
    "make_value_set",
    "singleton",
    "sum_exprs"
]
