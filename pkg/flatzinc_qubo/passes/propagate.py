"""

区間包による境界整合性の伝播、単一値変数の消去、早期の矛盾検出を行う

- prune_linear(): 線形制約1つでドメインを絞る
- prune_product(): 積制約1つでドメインを絞る
- fixpoint(): 変化がなくなるか上限回数に達するまで伝播を繰り返す
- eliminate_singletons(): |D| = 1 の変数を定数として消去する

ドメインは区間包（min / max）だけで絞り、値集合の穴は使わない
矛盾が見つかった場合は Inconsistent を送出する

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Mapping, Optional, Tuple

# SECTION: Packages(Built-in)
import logging
import math
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.ir import (
    AffineExpr,
    Domain,
    LinearConstraint,
    ModelBuilder,
    ProductConstraint,
    QipModel,
    Relation,
    Substitution,
    VarKind,
    interval_product,
    line_bounds
)
from flatzinc_qubo.utils.errors import Inconsistent


logger = logging.getLogger(__name__)

Bounds = Tuple[Optional[int], Optional[int]]


# SECTION: Public Functions
def prune_linear(constraint: LinearConstraint, domains: Mapping[int, Domain], label: str = "") -> Dict[int, Domain]:

    """

    One Jacobi step of bounds propagation on Σaᵢxᵢ + c = 0 (or ≤ 0). Every
    variable is bounded against the residual range of the other terms, all
    computed from the incoming domains. Inequalities only prune the upper side
    of each term.

    :param constraint: linear constraint
    :type constraint: LinearConstraint

    :param domains: current domains (not modified)
    :type domains: Mapping[int, Domain]

    :param label: text for the Inconsistent message
    :type label: str

    :raises Inconsistent: when a domain empties

    :return: domains that changed, keyed by variable id
    :rtype: Dict[int, Domain]

    """

    # Initialize
    low, high = line_bounds(constraint.expr, domains)
    bounds:  Dict[int, Bounds] = {}

    # Process
    for var_id, coeff in constraint.expr.terms.items():
        domain = domains[var_id]
        term_low, term_high = sorted((coeff * domain.min, coeff * domain.max))
        rest_low = low - term_low
        rest_high = high - term_high
        # coeff·x ∈ [−rest_high, −rest_low]
        if coeff > 0:
            upper: Optional[int] = math.floor(-rest_low / coeff)
            lower: Optional[int] = math.ceil(-rest_high / coeff)
        else:
            lower = math.ceil(-rest_low / coeff)
            upper = math.floor(-rest_high / coeff)
        if constraint.relation is Relation.LE:
            if coeff > 0:
                lower = None
            else:
                upper = None
        bounds[var_id] = (lower, upper)

    return _apply(bounds, domains, label or constraint.format())


def prune_product(product: ProductConstraint, domains: Mapping[int, Domain], label: str = "") -> Dict[int, Domain]:

    """

    Intersects the result with the interval product of the factors. A factor is
    narrowed to the hull of result / other factor only when the other factor
    excludes zero.

    :raises Inconsistent: when a domain empties

    :return: domains that changed
    :rtype: Dict[int, Domain]

    """

    # Initialize
    hull = interval_product(domains[product.lhs], domains[product.rhs])
    bounds: Dict[int, Bounds] = {product.result: (hull.lo, hull.hi)}
    result = domains[product.result]

    # Process
    for factor, other in ((product.lhs, product.rhs), (product.rhs, product.lhs)):
        divisor = domains[other]
        if divisor.min <= 0 <= divisor.max:
            continue
        quotients = [
            Fraction(r, d) for r in (result.min, result.max) for d in (divisor.min, divisor.max)
        ]
        lower, upper = math.ceil(min(quotients)), math.floor(max(quotients))
        previous = bounds.get(factor, (None, None))
        bounds[factor] = (
            lower if previous[0] is None else max(lower, previous[0]),
            upper if previous[1] is None else min(upper, previous[1])
        )

    return _apply(bounds, domains, label or product.format())


def fixpoint(model: QipModel, cap: Optional[int] = None) -> QipModel:

    """

    Applies prune_linear and prune_product until no domain changes or the
    number of prune steps reaches the cap (default 10·|constraints|·|vars|).
    Hitting the cap is logged, not raised.

    :param model: model at any stage
    :type model: QipModel

    :param cap: maximum number of prune steps
    :type cap: Optional[int]

    :raises Inconsistent: when a domain empties

    :return: model with narrowed domains and the same stage
    :rtype: QipModel

    """

    # Initialize
    builder:  ModelBuilder = ModelBuilder(model)
    domains:  Dict[int, Domain] = builder.domains()
    names:    Dict[int, str] = builder.names()
    count:    int = len(model.linear) + len(model.products)
    limit:    int = cap if cap is not None else constant.ITERATION_CAP_FACTOR * count * max(1, len(domains))
    steps:    int = 0
    changed:  bool = count > 0

    # Process
    while changed:
        changed = False
        for constraint in builder.linear:
            if steps >= limit:
                break
            steps += 1
            updates = prune_linear(constraint, domains, constraint.format(names))
            domains.update(updates)
            changed = changed or bool(updates)
        for product in builder.products:
            if steps >= limit:
                break
            steps += 1
            updates = prune_product(product, domains, product.format(names))
            domains.update(updates)
            changed = changed or bool(updates)
        if changed and steps >= limit:
            logger.warning("propagation stopped at the iteration cap of %d steps", limit)
            break

    for var_id, domain in domains.items():
        if domain is not builder.domain(var_id):
            builder.set_domain(var_id, domain)
    logger.info("propagation finished after %d prune steps", steps)

    return builder.build(model.stage)


def eliminate_singletons(model: QipModel) -> Tuple[QipModel, List[Substitution]]:

    """

    One pass over the domains as given: removes every live variable whose
    domain is a single value v and records x := v. A product with a singleton
    factor becomes the linear constraint y − v·w = 0. A singleton product result
    whose factors are not singletons is moved onto a fresh hull-domain product
    variable fixed to v by an equality. Folding does not narrow the remaining
    domains; variables fixed only by the folded constraints stay live until
    the next fixpoint.

    :param model: model at any stage
    :type model: QipModel

    :raises Inconsistent: when folding the values falsifies a constraint

    :return: the reduced model and the substitutions that were added
    :rtype: Tuple[QipModel, List[Substitution]]

    """

    # Initialize
    builder:  ModelBuilder = ModelBuilder(model)
    values:   Dict[int, int] = {v.id: v.domain.min for v in model.live_variables() if v.domain.size == 1}
    names:    Dict[int, str] = builder.names()
    source:   str

    # Process
    for index in reversed(range(len(builder.products))):
        product = builder.products[index]
        source = product.format(names)
        if product.lhs in values or product.rhs in values:
            left = _constant_or_variable(product.lhs, values)
            right = _constant_or_variable(product.rhs, values)
            factor, other = (left, right) if left.is_constant else (right, left)
            builder.replace_product(index, [])
            builder.add_linear(AffineExpr.variable(product.result) - other.scaled(factor.constant), Relation.EQ, source)
        elif product.result in values:
            hull = interval_product(builder.domain(product.lhs), builder.domain(product.rhs))
            carrier = builder.fresh(f"{names[product.lhs]}*{names[product.rhs]}", hull, VarKind.INTERMEDIATE)
            builder.replace_product(index, [ProductConstraint(carrier, product.lhs, product.rhs)])
            builder.add_linear(
                AffineExpr.variable(carrier) - AffineExpr.const(values[product.result]), Relation.EQ, source
            )

    for var_id, value in values.items():
        builder.fix(var_id, value)
        logger.debug("fixed %s := %d", names[var_id], value)

    reduced = builder.build(model.stage)
    added = list(reduced.forest.substitutions[len(model.forest):])
    if added:
        logger.info("eliminated %d singleton variables", len(added))

    return reduced, added


# SECTION: Private Functions
def _apply(bounds: Mapping[int, Bounds], domains: Mapping[int, Domain], label: str) -> Dict[int, Domain]:

    # Initialize
    updates: Dict[int, Domain] = {}

    # Process
    for var_id, (lower, upper) in bounds.items():
        narrowed = domains[var_id].clamp(lower, upper)
        if narrowed is None:
            raise Inconsistent(label)
        if narrowed is not domains[var_id]:
            updates[var_id] = narrowed

    return updates


def _constant_or_variable(var_id: int, values: Mapping[int, int]) -> AffineExpr:
    if var_id in values:
        return AffineExpr.const(values[var_id])
    return AffineExpr.variable(var_id)
