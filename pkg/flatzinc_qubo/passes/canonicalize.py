"""

すべての変数のドメインを最小値 0 に揃える（正準化）

- shift_variable(): 変数1つを x := x' + min(D(x)) で置き換える
- canonicalize_all(): Stage.NO_INEQUALITIES → Stage.CANONICAL

積の因子を先に（ID の昇順で）シフトし、積の結果変数は直接シフトしない
因子が正準でも最小値が 0 でない結果変数は y' = x·w と y − y' = 0 に切り離してからシフトする

"""


# SECTION: Packages(Type Annotation)
from typing import Optional

# SECTION: Packages(Built-in)
import logging

# SECTION: Packages(Local)
from flatzinc_qubo.ir import (
    AffineExpr,
    ModelBuilder,
    ProductConstraint,
    QipModel,
    Relation,
    Stage,
    VarKind,
    interval_product
)
from flatzinc_qubo.utils.errors import ModelError


logger = logging.getLogger(__name__)


# SECTION: Public Functions
def shift_variable(model: QipModel, var_id: int) -> QipModel:

    """

    Replaces x by x' + m with m = min(D(x)) and D(x') = D(x) − m.

    - linear occurrences a·x become a·x' + a·m
    - y = x·w becomes y' = x'·w plus y − y' − m·w = 0
    - y = x·x becomes y' = x'·x' plus y − y' − 2m·x' − m² = 0

    :param model: model at Stage.NO_INEQUALITIES
    :type model: QipModel

    :param var_id: live variable with min(D) ≠ 0 that is not a product result
    :type var_id: int

    :raises ModelError: when a precondition does not hold

    :return: rewritten model
    :rtype: QipModel

    """

    # Initialize
    builder: ModelBuilder = ModelBuilder(model)

    # Process
    if model.stage is not Stage.NO_INEQUALITIES:
        raise ModelError(f"shift_variable expects stage NO_INEQUALITIES, got {model.stage.name}")
    _shift(builder, var_id)

    return builder.build(model.stage)


def canonicalize_all(model: QipModel) -> QipModel:

    """

    Shifts every live variable so that min(D) = 0: product factors first, then
    detached product results, then all remaining variables, each in ascending
    id order. Two-valued domains become {0, d}, contiguous ones become binary.

    :param model: model at Stage.NO_INEQUALITIES
    :type model: QipModel

    :raises ModelError: wrong stage

    :return: canonical model
    :rtype: QipModel

    """

    # Initialize
    builder: ModelBuilder = ModelBuilder(model)
    shifts:  int = 0
    target:  Optional[int]

    # Process
    if model.stage is not Stage.NO_INEQUALITIES:
        raise ModelError(f"canonicalize_all expects stage NO_INEQUALITIES, got {model.stage.name}")

    while True:
        results = builder.product_result_ids()
        target = min(
            (v for v in builder.factor_ids() if builder.domain(v).min != 0 and v not in results),
            default=None
        )
        if target is not None:
            _shift(builder, target)
            shifts += 1
            continue
        index = _detachable(builder)
        if index is None:
            break
        _detach(builder, index)

    for var_id in builder.live_ids():
        if builder.domain(var_id).min != 0:
            _shift(builder, var_id)
            shifts += 1

    logger.info("canonicalized with %d shifts", shifts)

    return builder.build(Stage.CANONICAL)


# SECTION: Private Functions
def _shift(builder: ModelBuilder, var_id: int) -> None:

    # Initialize
    domain = builder.domain(var_id)
    offset: int = domain.min
    name:   str = builder.name(var_id)
    shifted: int

    # Process
    if not builder.is_live(var_id):
        raise ModelError(f"{name} is not a live variable")
    if offset == 0:
        raise ModelError(f"{name} in {domain} is already canonical")
    if var_id in builder.product_result_ids():
        raise ModelError(f"{name} is a product result; shift its factors instead")

    shifted = builder.fresh(f"{name}'", domain.shifted(-offset), VarKind.SHIFTED)
    for index in reversed(builder.product_indices(var_id)):
        product = builder.products[index]
        result = AffineExpr.variable(product.result)
        if product.is_square:
            replacement = builder.fresh(
                f"{builder.name(shifted)}^2",
                interval_product(builder.domain(shifted), builder.domain(shifted)),
                VarKind.PRODUCT_RESULT
            )
            builder.replace_product(index, [ProductConstraint(replacement, shifted, shifted)])
            builder.add_linear(
                result - AffineExpr.variable(replacement) - AffineExpr.variable(shifted, 2 * offset)
                - AffineExpr.const(offset * offset),
                Relation.EQ
            )
            continue
        other = product.rhs if product.lhs == var_id else product.lhs
        replacement = builder.fresh(
            f"{builder.name(shifted)}*{builder.name(other)}",
            interval_product(builder.domain(shifted), builder.domain(other)),
            VarKind.PRODUCT_RESULT
        )
        if product.lhs == var_id:
            builder.replace_product(index, [ProductConstraint(replacement, shifted, other)])
        else:
            builder.replace_product(index, [ProductConstraint(replacement, other, shifted)])
        builder.add_linear(
            result - AffineExpr.variable(replacement) - AffineExpr.variable(other, offset),
            Relation.EQ
        )

    builder.substitute(var_id, AffineExpr.of({shifted: 1}, offset))
    logger.debug("shifted %s by %d", name, offset)


def _detachable(builder: ModelBuilder) -> Optional[int]:

    """

    Index of the first product whose factors are canonical but whose result is not.

    """

    # Process
    for index, product in enumerate(builder.products):
        if builder.domain(product.result).min != 0 and all(builder.domain(f).min == 0 for f in product.factors):
            return index

    return None


def _detach(builder: ModelBuilder, index: int) -> None:

    # Initialize
    product: ProductConstraint = builder.products[index]
    carrier: int

    # Process
    carrier = builder.fresh(
        f"{builder.name(product.result)}'",
        interval_product(builder.domain(product.lhs), builder.domain(product.rhs)),
        VarKind.PRODUCT_RESULT
    )
    builder.replace_product(index, [ProductConstraint(carrier, product.lhs, product.rhs)])
    builder.add_linear(AffineExpr.variable(product.result) - AffineExpr.variable(carrier), Relation.EQ)
    logger.debug("detached %s from its product", builder.name(product.result))

