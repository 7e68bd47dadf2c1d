"""

FznModel を QIP(FD) 中間表現（Stage.RAW）に変換する

- lower_to_qip(): 変換の入口

"""


# SECTION: Packages(Type Annotation)
from typing import Callable, Dict, List, Optional, Set, Tuple, Union

# SECTION: Packages(Built-in)
import logging
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.frontend.payload import (
    ArrayLit,
    BoolLit,
    Call,
    ConstraintItem,
    Expr,
    FznModel,
    IndexRef,
    IntRange,
    IntSet,
    Ref,
    TypeSpec,
    VarDecl
)
from flatzinc_qubo.frontend.printer import print_expr
from flatzinc_qubo.frontend.validate import validate_subset
from flatzinc_qubo.ir import (
    AffineExpr,
    Domain,
    Interval,
    ModelBuilder,
    QipModel,
    Relation,
    Sense,
    Stage,
    VarKind,
    interval_product,
    line_bounds,
    make_value_set
)
from flatzinc_qubo.utils.errors import FznSubsetError, ModelError


logger = logging.getLogger(__name__)

Value = Union[AffineExpr, Tuple[AffineExpr, ...]]


# SECTION: Public Functions
def lower_to_qip(model: FznModel) -> QipModel:

    """

    Lowers a validated FlatZinc model.

    - int_lin_le(a, xs, d) → Σaᵢxᵢ − d ≤ 0, int_lin_eq likewise with = 0
    - int_times(a, b, c) → product c = a·b
    - maximize f → minimize −f, satisfy → zero objective
    - booleans are 0..1 integers, contiguous value sets become intervals

    :param model: parsed model
    :type model: FznModel

    :raises FznSubsetError: the model leaves the supported subset
    :raises Inconsistent: a product result or an assignment empties a domain
    :raises ModelError: malformed arguments (array length mismatch, non-constant coefficients)

    :return: raw-stage model
    :rtype: QipModel

    """

    # Initialize
    diagnostics = validate_subset(model)
    result:      QipModel

    # Process
    if diagnostics:
        raise FznSubsetError(diagnostics)
    result = _Lowering(model).run()
    logger.info(
        "lowered to %d variables, %d linear constraints, %d products",
        len(result.variables), len(result.linear), len(result.products)
    )

    return result


# SECTION: Private Classes
class _Lowering:

    def __init__(self, model: FznModel) -> None:
        self.model:    FznModel         = model
        self.builder:  ModelBuilder     = ModelBuilder()
        self.scope:    Dict[str, Value] = {}
        self.indices:  Dict[str, IntRange] = {}
        self.declared: List[int]        = []
        self.outputs:  List[int]        = []
        self.results:  Set[int]         = set()
        self.factors:  Set[int]         = set()
        self.handlers: Dict[str, Callable[[ConstraintItem], None]] = {
            "int_lin_eq": lambda c: self._linear_sum(c, Relation.EQ),
            "int_lin_le": lambda c: self._linear_sum(c, Relation.LE),
            "bool_lin_eq": lambda c: self._linear_sum(c, Relation.EQ),
            "bool_lin_le": lambda c: self._linear_sum(c, Relation.LE),
            "int_eq": lambda c: self._compare(c, Relation.EQ, 0),
            "bool_eq": lambda c: self._compare(c, Relation.EQ, 0),
            "bool2int": lambda c: self._compare(c, Relation.EQ, 0),
            "int_le": lambda c: self._compare(c, Relation.LE, 0),
            "bool_le": lambda c: self._compare(c, Relation.LE, 0),
            "int_lt": lambda c: self._compare(c, Relation.LE, 1),
            "bool_lt": lambda c: self._compare(c, Relation.LE, 1),
            "int_plus": self._plus,
            "bool_not": self._not,
            "int_times": self._product,
            "bool_and": self._product
        }

    def run(self) -> QipModel:

        # Process
        for param in self.model.parameters:
            if param.type.base in ("int", "bool"):
                self.scope[param.name] = self._array(param.value) if param.array is not None else self._operand(param.value)
                if param.array is not None:
                    self.indices[param.name] = param.array
        for decl in self.model.variables:
            self._declare(decl)
        for item in self.model.constraints:
            self.handlers[item.predicate](item)
        self._solve()
        self.builder.outputs = self.outputs or list(self.declared)

        return self.builder.build(Stage.RAW)

    # SECTION: Declarations
    def _declare(self, decl: VarDecl) -> None:

        # Initialize
        domain: Optional[Domain] = _domain(decl.type)
        items:  List[AffineExpr] = []

        # Process
        if decl.array is None:
            self.scope[decl.name] = AffineExpr.variable(self._scalar(decl.name, domain, decl.value))
            if decl.is_output:
                self.outputs.extend(self.scope[decl.name].variables())
            return

        self.indices[decl.name] = decl.array
        if isinstance(decl.value, ArrayLit):
            for item in decl.value.items:
                expr = self._operand(item)
                if domain is not None and not expr.is_constant:
                    (var_id,) = expr.variables()
                    self.builder.narrow(var_id, domain.min, domain.max, f"{print_expr(item)} in {decl.name}")
                items.append(expr)
        else:
            if domain is None:
                raise ModelError(f"array {decl.name} has neither bounds nor elements")
            for index in range(decl.array.lo, decl.array.hi + 1):
                items.append(AffineExpr.variable(self._scalar(f"{decl.name}[{index}]", domain, None)))
        self.scope[decl.name] = tuple(items)
        if decl.is_output:
            self.outputs.extend(v for item in items for v in item.variables() if v not in self.outputs)

    def _scalar(self, name: str, domain: Optional[Domain], value: Optional[Expr]) -> int:

        """

        Registers one original variable. An assignment narrows it to a literal
        or ties it to another variable by an equality.

        """

        # Initialize
        bound:  Optional[AffineExpr] = None if value is None else self._operand(value)
        var_id: int

        # Process
        if domain is None:
            if bound is None:
                raise ModelError(f"variable {name} has no finite domain")
            low, high = line_bounds(bound, self.builder.domains())
            domain = Interval(int(low), int(high))
        var_id = self.builder.fresh(name, domain, VarKind.ORIGINAL)
        self.declared.append(var_id)
        if bound is not None and bound.is_constant:
            self.builder.narrow(var_id, int(bound.constant), int(bound.constant), f"{name} = {bound.constant}")
        elif bound is not None:
            self.builder.add_linear(AffineExpr.variable(var_id) - bound, Relation.EQ, f"{name} = {print_expr(value)}")

        return var_id

    # SECTION: Constraints
    def _linear_sum(self, item: ConstraintItem, relation: Relation) -> None:

        # Initialize
        coeffs = self._coefficients(item.args[0])
        terms = self._array(item.args[1])
        bound = self._operand(item.args[2])

        # Process
        if len(coeffs) != len(terms):
            raise ModelError(f"{item.predicate}: {len(coeffs)} coefficients for {len(terms)} variables")
        expr = AffineExpr()
        for coeff, term in zip(coeffs, terms):
            expr = expr + term.scaled(coeff)
        self.builder.add_linear(expr - bound, relation, _source(item))

    def _compare(self, item: ConstraintItem, relation: Relation, offset: int) -> None:
        left, right = (self._operand(a) for a in item.args)
        self.builder.add_linear(left - right + AffineExpr.const(offset), relation, _source(item))

    def _plus(self, item: ConstraintItem) -> None:
        a, b, c = (self._operand(a) for a in item.args)
        self.builder.add_linear(a + b - c, Relation.EQ, _source(item))

    def _not(self, item: ConstraintItem) -> None:
        a, b = (self._operand(a) for a in item.args)
        self.builder.add_linear(a + b - AffineExpr.const(1), Relation.EQ, _source(item))

    def _product(self, item: ConstraintItem) -> None:

        """

        c = a·b. A literal factor gives a linear constraint. A literal result,
        a result already defined by a product or already used as a factor goes
        through a fresh intermediate product variable and an equality.

        """

        # Initialize
        left, right, result = (self._operand(a) for a in item.args)
        source: str = _source(item)

        # Process
        if left.is_constant or right.is_constant:
            factor, other = (left, right) if left.is_constant else (right, left)
            self.builder.add_linear(result - other.scaled(factor.constant), Relation.EQ, source)
            return

        (lhs,), (rhs,) = left.variables(), right.variables()
        hull = interval_product(self.builder.domain(lhs), self.builder.domain(rhs))
        target = None if result.is_constant else result.variables()[0]
        if target is None or target in self.results or target in self.factors or target in (lhs, rhs):
            target_expr = result
            target = self.builder.fresh(
                f"{self.builder.name(lhs)}*{self.builder.name(rhs)}", hull, VarKind.INTERMEDIATE
            )
            self.builder.add_product(target, lhs, rhs)
            self.builder.add_linear(target_expr - AffineExpr.variable(target), Relation.EQ, source)
        else:
            self.builder.narrow(target, hull.lo, hull.hi, source)
            self.builder.add_product(target, lhs, rhs)
        self.results.add(target)
        self.factors.update((lhs, rhs))

    def _solve(self) -> None:

        # Initialize
        solve = self.model.solve
        expr:  AffineExpr = AffineExpr() if solve.objective is None else self._operand(solve.objective)

        # Process
        if solve.kind == "minimize":
            self.builder.objective, self.builder.sense = expr, Sense.MIN
        elif solve.kind == "maximize":
            self.builder.objective, self.builder.sense = -expr, Sense.MAX
        else:
            self.builder.objective, self.builder.sense = AffineExpr(), Sense.SATISFY

    # SECTION: Operands
    def _operand(self, expr: Expr) -> AffineExpr:

        # Process
        if isinstance(expr, bool):
            return AffineExpr.const(int(expr))
        if isinstance(expr, int):
            return AffineExpr.const(expr)
        if isinstance(expr, BoolLit):
            return AffineExpr.const(int(expr.value))
        if isinstance(expr, Ref):
            value = self.scope.get(expr.name)
            if isinstance(value, AffineExpr):
                return value
            raise ModelError(f"{expr.name} is not a scalar")
        if isinstance(expr, IndexRef):
            value = self.scope.get(expr.name)
            if isinstance(value, tuple):
                return value[expr.index - self.indices[expr.name].lo]
            raise ModelError(f"{expr.name} is not an array")

        raise ModelError(f"unsupported operand {print_expr(expr)}")

    def _array(self, expr: Expr) -> Tuple[AffineExpr, ...]:
        if isinstance(expr, ArrayLit):
            return tuple(self._operand(item) for item in expr.items)
        if isinstance(expr, Ref) and isinstance(self.scope.get(expr.name), tuple):
            return self.scope[expr.name]  # type: ignore[return-value]
        raise ModelError(f"expected an array, got {print_expr(expr)}")

    def _coefficients(self, expr: Expr) -> Tuple[Fraction, ...]:

        # Initialize
        items = self._array(expr)

        # Process
        if not all(item.is_constant for item in items):
            raise ModelError(f"coefficients {print_expr(expr)} are not constants")

        return tuple(item.constant for item in items)


# SECTION: Private Functions
def _domain(spec: TypeSpec) -> Optional[Domain]:

    # Process
    if spec.base == "bool":
        return Interval(0, 1)
    if isinstance(spec.bounds, IntRange):
        return Interval(spec.bounds.lo, spec.bounds.hi)
    if isinstance(spec.bounds, IntSet):
        values = make_value_set(spec.bounds.values)
        return Interval(values.min, values.max) if values.is_contiguous else values

    return None


def _source(item: ConstraintItem) -> str:
    return print_expr(Call(item.predicate, item.args))

