"""

不等式制約をスラック変数付きの等式制約に置き換える

- eliminate_inequalities(): Stage.RAW → Stage.NO_INEQUALITIES

各不等式 e ≤ 0 は分母の最小公倍数を掛けて整数係数にしてから、下限 l と上限 u で分類する

- l > 0: 満たせないので Inconsistent
- u ≤ 0: 常に成り立つので削除
- l = 0 < u: スラックなしの等式 e = 0
- l < 0 < u: スラック s ∈ [0, −⌈l⌉] を加えた等式 e + s = 0

"""


# SECTION: Packages(Built-in)
import logging
import math

# SECTION: Packages(Local)
from flatzinc_qubo.ir import (
    AffineExpr,
    Interval,
    LinearConstraint,
    ModelBuilder,
    QipModel,
    Relation,
    Stage,
    VarKind,
    line_bounds
)
from flatzinc_qubo.utils.errors import Inconsistent, ModelError


logger = logging.getLogger(__name__)


# SECTION: Public Functions
def eliminate_inequalities(model: QipModel) -> QipModel:

    """

    :param model: raw-stage model
    :type model: QipModel

    :raises ModelError: when the model is not at Stage.RAW
    :raises Inconsistent: when an inequality cannot be satisfied

    :return: model without inequalities, forest unchanged
    :rtype: QipModel

    """

    # Initialize
    builder:     ModelBuilder = ModelBuilder(model)
    names                     = builder.names()
    domains                   = builder.domains()
    kept:        list         = []
    slack_count: int          = 0

    # Process
    if model.stage is not Stage.RAW:
        raise ModelError(f"eliminate_inequalities expects stage RAW, got {model.stage.name}")

    for constraint in model.linear:
        if constraint.relation is Relation.EQ:
            kept.append(constraint)
            continue
        expr, _ = constraint.expr.integral()
        low, high = line_bounds(expr, domains)
        if low > 0:
            raise Inconsistent(constraint.format(names))
        if high <= 0:
            logger.debug("dropped tautology %s", constraint.format(names))
            continue
        if low == 0:
            kept.append(LinearConstraint(expr, Relation.EQ))
            continue
        slack = builder.fresh(f"_s{slack_count}", Interval(0, -math.ceil(low)), VarKind.SLACK)
        slack_count += 1
        kept.append(LinearConstraint(expr + AffineExpr.variable(slack), Relation.EQ))

    builder.linear = kept
    logger.info("replaced inequalities with %d slack variables", slack_count)

    return builder.build(Stage.NO_INEQUALITIES)
