"""

QIP(FD) 中間表現のモデル型を定義する

- Stage: パイプラインの段階タグ
- Variable / LinearConstraint / ProductConstraint / Objective: モデルの構成要素
- QipModel: 不変のモデル本体（変数レジストリ、制約、目的関数、出力集合、代入フォレスト）
- format_constraint(): 矛盾メッセージ用に制約を文字列化する

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Iterator, Mapping, Optional, Tuple

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from enum import IntEnum, StrEnum

# SECTION: Packages(Local)
from flatzinc_qubo.ir.domain import Domain
from flatzinc_qubo.ir.expr import AffineExpr
from flatzinc_qubo.ir.forest import SubstitutionForest


# SECTION: Enums
class Stage(IntEnum):

    """

    Ordered pipeline stages; each pass requires a specific input stage.

    """

    RAW = 0
    NO_INEQUALITIES = 1
    CANONICAL = 2
    BINARY = 3


class Relation(StrEnum):
    EQ = "="
    LE = "<="


class Sense(StrEnum):
    MIN = "min"
    MAX = "max"
    SATISFY = "satisfy"


class VarKind(StrEnum):
    ORIGINAL = "original"
    PRODUCT_RESULT = "product-result"
    SLACK = "slack"
    SHIFTED = "shifted"
    ENCODING_BIT = "encoding-bit"
    INTERMEDIATE = "intermediate"


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Variable:
    id:     int
    name:   str
    domain: Domain
    kind:   VarKind = VarKind.ORIGINAL


@dataclass(frozen=True, slots=True)
class LinearConstraint:

    """

    expr = 0 or expr ≤ 0.

    """

    expr:     AffineExpr
    relation: Relation = Relation.EQ

    def format(self, names: Optional[Mapping[int, str]] = None) -> str:
        return f"{self.expr.format(names)} {self.relation.value} 0"


@dataclass(frozen=True, slots=True)
class ProductConstraint:

    """

    result = lhs · rhs; lhs == rhs for squares.

    """

    result: int
    lhs:    int
    rhs:    int

    @property
    def is_square(self) -> bool:
        return self.lhs == self.rhs

    @property
    def factors(self) -> Tuple[int, int]:
        return self.lhs, self.rhs

    def format(self, names: Optional[Mapping[int, str]] = None) -> str:

        # Initialize
        label = (lambda v: names.get(v, f"v{v}")) if names is not None else (lambda v: f"v{v}")

        # Process
        return f"{label(self.result)} = {label(self.lhs)} * {label(self.rhs)}"


@dataclass(frozen=True, slots=True)
class Objective:

    """

    Always minimized; `sense` remembers what the source model asked for.
    A maximize objective f is stored as −f.

    """

    expr:  AffineExpr = field(default_factory=AffineExpr)
    sense: Sense      = Sense.SATISFY


@dataclass(frozen=True, slots=True)
class QipModel:

    """

    Immutable staged model. `variables` is the complete id registry (ids are
    dense); variables that are targets of the forest are eliminated, the others
    are live and carry the domains the constraints range over.

    - live_ids() -> Tuple[int, ...]: ids not eliminated by the forest
    - domains() -> Dict[int, Domain]: domains of the live variables
    - names() -> Dict[int, str]: id → name for every registered variable

    """

    variables: Tuple[Variable, ...]
    linear:    Tuple[LinearConstraint, ...]  = ()
    products:  Tuple[ProductConstraint, ...] = ()
    objective: Objective                     = field(default_factory=Objective)
    outputs:   Tuple[int, ...]               = ()
    forest:    SubstitutionForest            = field(default_factory=SubstitutionForest)
    stage:     Stage                         = Stage.RAW

    def variable(self, var_id: int) -> Variable:
        return self.variables[var_id]

    def live_ids(self) -> Tuple[int, ...]:
        eliminated = self.forest.targets
        return tuple(v.id for v in self.variables if v.id not in eliminated)

    def live_variables(self) -> Iterator[Variable]:
        eliminated = self.forest.targets
        return (v for v in self.variables if v.id not in eliminated)

    def domains(self) -> Dict[int, Domain]:
        return {v.id: v.domain for v in self.live_variables()}

    def names(self) -> Dict[int, str]:
        return {v.id: v.name for v in self.variables}

    def original_ids(self) -> Tuple[int, ...]:
        return tuple(v.id for v in self.variables if v.kind is VarKind.ORIGINAL)

    def product_results(self) -> Dict[int, ProductConstraint]:
        return {p.result: p for p in self.products}

    def summary(self) -> Dict[str, int]:

        """

        Counts reported as stage statistics.

        """

        # Initialize
        live = self.live_ids()

        # Process
        return {
            "variables": len(live),
            "linear": len(self.linear),
            "products": len(self.products),
            "substitutions": len(self.forest),
            "max_domain": max((self.variables[v].domain.size for v in live), default=0)
        }


# SECTION: Public Functions
def format_constraint(model: QipModel, constraint: LinearConstraint | ProductConstraint) -> str:
    return constraint.format(model.names())
