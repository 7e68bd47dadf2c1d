"""

バイナリ QIP(FD) を QUBO に変換する

- integer_scale(): 制約と目的関数を整数係数にする
- objective_span(): 目的関数の取りうる範囲 (lo, hi)
- penalty_factor(): 共通のペナルティ係数 C = (hi − lo) / ε + 1
- equation_penalty(): 等式 e = 0 のペナルティ（e ≥ 0 なら e そのもの、それ以外は e²）
- quadratize_product(): 積 z = x·y の Rosenberg ペナルティ
- assemble(): 目的関数 + C·(ペナルティの和) を正規化された Qubo にまとめる

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Mapping, Optional, Tuple

# SECTION: Packages(Built-in)
import dataclasses
import logging
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.ir import (
    BINARY,
    AffineExpr,
    Domain,
    LinearConstraint,
    Objective,
    ProductConstraint,
    QipModel,
    Relation,
    Stage,
    is_binary,
    line_bounds
)
from flatzinc_qubo.qubo.matrix import Qubo, normalize
from flatzinc_qubo.qubo.quad import QuadExpr
from flatzinc_qubo.utils.errors import Inconsistent, ModelError
from flatzinc_qubo.utils.rational import RationalLike, as_rational


logger = logging.getLogger(__name__)

Span = Tuple[Fraction, Fraction]


# SECTION: Public Functions
def integer_scale(model: QipModel) -> Tuple[QipModel, Fraction]:

    """

    Multiplies every constraint by the least common multiple of its own
    denominators, and the objective by one global factor g.

    :param model: binary model
    :type model: QipModel

    :raises ModelError: wrong stage

    :return: integral model and scale = 1/g (objective units per energy unit)
    :rtype: Tuple[QipModel, Fraction]

    """

    # Initialize
    linear:    List[LinearConstraint]
    objective: AffineExpr
    factor:    int

    # Process
    if model.stage is not Stage.BINARY:
        raise ModelError(f"integer_scale expects stage BINARY, got {model.stage.name}")

    linear = [LinearConstraint(c.expr.integral()[0], c.relation) for c in model.linear]
    objective, factor = model.objective.expr.integral()
    if factor != 1:
        logger.debug("objective scaled by %d", factor)

    scaled = dataclasses.replace(
        model,
        linear=tuple(linear),
        objective=Objective(objective, model.objective.sense)
    )

    return scaled, Fraction(1, factor)


def objective_span(objective: AffineExpr, domains: Mapping[int, Domain]) -> Span:

    """

    Smallest and largest value Σ gᵢxᵢ + c can take over the domain boxes.

    :rtype: Tuple[Fraction, Fraction]

    """

    return line_bounds(objective, domains)


def penalty_factor(span: Span, epsilon: RationalLike = constant.PENALTY_EPSILON) -> Fraction:

    """

    :param span: (lo, hi) of the objective
    :type span: Tuple[Fraction, Fraction]

    :param epsilon: smallest positive penalty of a violated constraint
    :type epsilon: RationalLike

    :raises ModelError: for a non-positive epsilon

    :return: C = (hi − lo)/ε + 1
    :rtype: Fraction

    """

    # Initialize
    value: Fraction = as_rational(epsilon)

    # Process
    if value <= 0:
        raise ModelError(f"epsilon must be positive, got {value}")
    low, high = span

    return (high - low) / value + 1


def equation_penalty(constraint: LinearConstraint, domains: Mapping[int, Domain], label: str = "") -> QuadExpr:

    """

    Penalty of e = 0 over bits, zero exactly when the equation holds.

    - l > 0 or u < 0: the equation can never hold
    - l ≥ 0: e itself
    - otherwise: e² with b² folded to b

    :param constraint: equation over binary variables
    :type constraint: LinearConstraint

    :param domains: bit domains used for (l, u)
    :type domains: Mapping[int, Domain]

    :raises Inconsistent: when the equation cannot hold
    :raises ModelError: for an inequality

    :rtype: QuadExpr

    """

    # Initialize
    low, high = line_bounds(constraint.expr, domains)

    # Process
    if constraint.relation is not Relation.EQ:
        raise ModelError(f"inequality {constraint.format()} left at QUBO assembly")
    if low > 0 or high < 0:
        raise Inconsistent(label or constraint.format())
    if low >= 0:
        return QuadExpr.from_affine(constraint.expr)

    return QuadExpr.square(constraint.expr)


def quadratize_product(product: ProductConstraint) -> QuadExpr:

    """

    x·y − 2x·z − 2y·z + 3z for z = x·y. Non-negative on bits and zero exactly
    when z equals x·y.

    :rtype: QuadExpr

    """

    # Initialize
    x: int = product.lhs
    y: int = product.rhs
    z: int = product.result

    # Process
    return QuadExpr(
        linear={z: 3},
        quadratic={(x, y): 1, (x, z): -2, (y, z): -2}
    )


def assemble(model: QipModel, scale: RationalLike = 1, penalty: Optional[RationalLike] = None) -> Qubo:

    """

    min Σ gᵢbᵢ + C·(Σ equation penalties + Σ product penalties), with one
    common C. A live bit whose domain is a single value v is pinned by the
    penalty of b − v = 0.

    :param model: binary model with integer coefficients
    :type model: QipModel

    :param scale: objective units per energy unit (from integer_scale)
    :type scale: RationalLike

    :param penalty: fixed C instead of penalty_factor(objective_span)
    :type penalty: Optional[RationalLike]

    :raises ModelError: wrong stage, non-binary variable or fractional coefficient
    :raises Inconsistent: an equation that can never hold

    :return: normalized QUBO with decoding metadata
    :rtype: Qubo

    """

    # Initialize
    domains:  Dict[int, Domain] = model.domains()
    relaxed:  Dict[int, Domain] = {v: BINARY for v in domains}
    names:    Dict[int, str]    = model.names()
    index:    Tuple[int, ...]   = tuple(sorted(domains))
    position: Dict[int, int]    = {var_id: i for i, var_id in enumerate(index)}
    total:    QuadExpr
    factor:   Fraction

    # Process
    if model.stage is not Stage.BINARY:
        raise ModelError(f"assemble expects stage BINARY, got {model.stage.name}")
    for var_id, domain in domains.items():
        if not is_binary(domain):
            raise ModelError(f"{names[var_id]} in {domain} is not binary")
    for constraint in model.linear:
        if any(c.denominator != 1 for c in (*constraint.expr.terms.values(), constraint.expr.constant)):
            raise ModelError(f"{constraint.format(names)} has fractional coefficients; run integer_scale first")

    span = objective_span(model.objective.expr, relaxed)
    factor = as_rational(penalty) if penalty is not None else penalty_factor(span)
    if factor <= span[1] - span[0]:
        logger.warning("penalty %s does not exceed the objective span %s; violations may win", factor, span)

    penalties = QuadExpr()
    for constraint in model.linear:
        penalties = penalties + equation_penalty(constraint, relaxed, constraint.format(names))
    for product in model.products:
        penalties = penalties + quadratize_product(product)
    for var_id, domain in domains.items():
        if domain.size == 1:
            pin = LinearConstraint(AffineExpr.of({var_id: 1}, -domain.min))
            penalties = penalties + equation_penalty(pin, relaxed, f"{names[var_id]} = {domain.min}")
    total = QuadExpr.from_affine(model.objective.expr) + penalties.scaled(factor)

    missing = [v for v in total.variables() if v not in position]
    if missing:
        raise ModelError(f"penalty terms use eliminated variables {missing}")

    weights: List[Tuple[int, int, Fraction]] = [(position[v], position[v], w) for v, w in total.linear.items()]
    weights.extend((position[a], position[b], w) for (a, b), w in total.quadratic.items())
    qubo = normalize(weights, len(index), total.constant, scale)
    logger.info("assembled QUBO with %d bits, %d entries, C = %s", qubo.n, len(qubo.entries), factor)

    return dataclasses.replace(
        qubo,
        index_map=index,
        penalty=factor,
        forest=model.forest,
        outputs=model.outputs,
        variables=model.variables,
        sense=model.objective.sense,
        objective=model.objective.expr,
        objective_bounds=span
    )
