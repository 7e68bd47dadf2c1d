"""

パスが共通で使う可変の作業用モデルを提供する

各パスは QipModel から ModelBuilder を作り、変数の追加・ドメインの更新・
代入による書き換えを行い、最後に build() で不変の QipModel を得る

- ModelBuilder: 作業用モデル

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Optional, Sequence, Set

# SECTION: Packages(Built-in)
import dataclasses
import logging
from fractions import Fraction

# SECTION: Packages(Third-Party)
import networkx as nx

# SECTION: Packages(Local)
from flatzinc_qubo.ir.domain import Domain
from flatzinc_qubo.ir.expr import AffineExpr
from flatzinc_qubo.ir.forest import Substitution, SubstitutionForest, check_addition, link
from flatzinc_qubo.ir.model import (
    LinearConstraint,
    Objective,
    ProductConstraint,
    QipModel,
    Relation,
    Sense,
    Stage,
    Variable,
    VarKind
)
from flatzinc_qubo.utils.errors import Inconsistent, ModelError


logger = logging.getLogger(__name__)


# SECTION: Public Classes
class ModelBuilder:

    """

    Mutable working copy of a QipModel.

    - fresh() -> int: registers a new variable
    - narrow() -> bool: intersects a domain with a rational interval
    - add_linear() -> bool: adds a constraint, resolving constant ones
    - substitute(): eliminates a variable everywhere and records it in the forest
    - build() -> QipModel: immutable snapshot tagged with a stage

    """

    def __init__(self, model: Optional[QipModel] = None) -> None:

        # Process
        self.variables: List[Variable]          = list(model.variables) if model else []
        self.linear:    List[LinearConstraint]  = list(model.linear) if model else []
        self.products:  List[ProductConstraint] = list(model.products) if model else []
        self.objective: AffineExpr              = model.objective.expr if model else AffineExpr()
        self.sense:     Sense                   = model.objective.sense if model else Sense.SATISFY
        self.outputs:   List[int]               = list(model.outputs) if model else []

        self._substitutions: List[Substitution] = list(model.forest) if model else []
        self._graph:         nx.DiGraph         = model.forest.graph.copy() if model else nx.DiGraph()
        self._eliminated:    Set[int]           = set(model.forest.targets) if model else set()

    # SECTION: Variables
    def fresh(self, name: str, domain: Domain, kind: VarKind) -> int:

        # Initialize
        var_id: int = len(self.variables)

        # Process
        self.variables.append(Variable(var_id, name, domain, kind))
        logger.debug("new %s variable %s in %s", kind.value, name, domain)

        return var_id

    def domain(self, var_id: int) -> Domain:
        return self.variables[var_id].domain

    def name(self, var_id: int) -> str:
        return self.variables[var_id].name

    def kind(self, var_id: int) -> VarKind:
        return self.variables[var_id].kind

    def set_domain(self, var_id: int, domain: Domain) -> None:
        self.variables[var_id] = dataclasses.replace(self.variables[var_id], domain=domain)

    def narrow(self, var_id: int, lo: Optional[int], hi: Optional[int], reason: str = "") -> bool:

        """

        Intersects D(var) with [lo, hi] (None means unbounded).

        :raises Inconsistent: when the domain empties

        :return: True when the domain shrank
        :rtype: bool

        """

        # Initialize
        current: Domain = self.domain(var_id)
        narrowed: Optional[Domain] = current.clamp(lo, hi)

        # Process
        if narrowed is None:
            raise Inconsistent(reason or f"{self.name(var_id)} in {current} has no value in [{lo}, {hi}]")
        if narrowed is current:
            return False
        self.set_domain(var_id, narrowed)

        return True

    def is_live(self, var_id: int) -> bool:
        return var_id not in self._eliminated

    def live_ids(self) -> List[int]:
        return [v.id for v in self.variables if v.id not in self._eliminated]

    def domains(self) -> Dict[int, Domain]:
        return {v.id: v.domain for v in self.variables if v.id not in self._eliminated}

    def names(self) -> Dict[int, str]:
        return {v.id: v.name for v in self.variables}

    # SECTION: Constraints
    def add_linear(self, expr: AffineExpr, relation: Relation = Relation.EQ, source: str = "") -> bool:

        """

        Appends expr = 0 / expr ≤ 0. Constant constraints are resolved on the
        spot: trivially true ones are dropped, false ones raise.

        :param source: text named in the Inconsistent message (defaults to the constraint itself)
        :type source: str

        :raises Inconsistent: for a false constant constraint

        :return: True when a constraint was stored
        :rtype: bool

        """

        # Initialize
        constraint: Optional[LinearConstraint] = self._resolve(LinearConstraint(expr, relation), source)

        # Process
        if constraint is None:
            return False
        self.linear.append(constraint)

        return True

    def add_product(self, result: int, lhs: int, rhs: int) -> None:
        self.products.append(ProductConstraint(result, lhs, rhs))

    def replace_product(self, index: int, replacement: Sequence[ProductConstraint]) -> None:

        """

        Replaces products[index] in place, keeping the position so that factors
        keep preceding the results that use them.

        """

        # Process
        self.products[index:index + 1] = list(replacement)

    def product_indices(self, var_id: int) -> List[int]:
        return [i for i, p in enumerate(self.products) if var_id in (p.result, p.lhs, p.rhs)]

    def product_result_ids(self) -> Set[int]:
        return {p.result for p in self.products}

    def factor_ids(self) -> Set[int]:
        return {v for p in self.products for v in p.factors}

    # SECTION: Substitution
    def substitute(self, var_id: int, expr: AffineExpr) -> None:

        """

        Eliminates `var_id` by `expr` in every linear constraint and the
        objective, and records var := expr in the forest. Product occurrences
        are renamed when expr is a single variable; any other product occurrence
        must have been rewritten by the caller beforehand.

        :raises ModelError: when the variable still occurs in a product
        :raises SubstitutionError: duplicate target or cycle
        :raises Inconsistent: when a constraint becomes a false constant

        """

        # Initialize
        rename:   Optional[int] = _single_variable(expr)
        rewritten: List[LinearConstraint] = []
        names:    Dict[int, str]

        # Process
        check_addition(self._graph, var_id, expr)
        if rename is None and self.product_indices(var_id):
            raise ModelError(f"{self.name(var_id)} occurs in a product and cannot be replaced by {expr}")
        link(self._graph, var_id, expr)
        self._substitutions.append(Substitution(var_id, expr))
        self._eliminated.add(var_id)

        names = self.names()
        for constraint in self.linear:
            if var_id not in constraint.expr.terms:
                rewritten.append(constraint)
                continue
            updated = self._resolve(
                LinearConstraint(constraint.expr.substitute(var_id, expr), constraint.relation),
                constraint.format(names)
            )
            if updated is not None:
                rewritten.append(updated)
        self.linear = rewritten
        self.objective = self.objective.substitute(var_id, expr)

        if rename is not None:
            self.products = [
                ProductConstraint(
                    rename if p.result == var_id else p.result,
                    rename if p.lhs == var_id else p.lhs,
                    rename if p.rhs == var_id else p.rhs
                )
                for p in self.products
            ]

    def fix(self, var_id: int, value: int) -> None:
        self.substitute(var_id, AffineExpr.const(value))

    # SECTION: Snapshot
    def build(self, stage: Stage) -> QipModel:
        return QipModel(
            variables=tuple(self.variables),
            linear=tuple(self.linear),
            products=tuple(self.products),
            objective=Objective(self.objective, self.sense),
            outputs=tuple(self.outputs),
            forest=SubstitutionForest(tuple(self._substitutions), self._graph.copy()),
            stage=stage
        )

    # SECTION: Private
    def _resolve(self, constraint: LinearConstraint, source: str) -> Optional[LinearConstraint]:

        # Initialize
        value: Fraction

        # Process
        if not constraint.expr.is_constant:
            return constraint
        value = constraint.expr.constant
        if value == 0 or (constraint.relation is Relation.LE and value < 0):
            return None

        raise Inconsistent(source or constraint.format(self.names()))


# SECTION: Private Functions
def _single_variable(expr: AffineExpr) -> Optional[int]:
    if expr.constant == 0 and len(expr.terms) == 1:
        (var_id, coeff), = expr.terms.items()
        if coeff == 1:
            return var_id
    return None
