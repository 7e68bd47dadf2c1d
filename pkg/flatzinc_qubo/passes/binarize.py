"""

整数変数をバイナリ変数に置き換える（one-hot / 自己有界バイナリ）

- binary_encode_coeffs(): [0, M] を過不足なく表す係数列
- choose_strategy(): 変数ごとのエンコーディングを選ぶ
- onehot_encode(): x := Σ dₚ·bₚ と Σ bₚ = 1
- binary_encode(): x := Σ vₛ·xₛ
- binarize_all(): Stage.CANONICAL → Stage.BINARY

積に現れる変数は先に積を書き換えてから線形の出現を置き換える
y = x·w は yₛ = bₛ·w、y = x·x はビットそのもの（b² = b）とビット同士の積で表す

エラーコード
E400台割り当て

- Error: E400 => 穴のある値集合に binary 戦略が指定された

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Sequence, Tuple

# SECTION: Packages(Built-in)
import logging

# SECTION: Packages(Local)
from flatzinc_qubo.config import BinaryRule, EncodingConfig, Strategy
from flatzinc_qubo.ir import (
    BINARY,
    AffineExpr,
    Domain,
    Interval,
    ModelBuilder,
    ProductConstraint,
    QipModel,
    Relation,
    Stage,
    ValueSet,
    Variable,
    VarKind,
    interval_product,
    is_binary
)
from flatzinc_qubo.utils.errors import EncodingError, ModelError


logger = logging.getLogger(__name__)


# SECTION: Public Functions
def binary_encode_coeffs(upper: int, rule: BinaryRule = BinaryRule.COEFFICIENT) -> List[int]:

    """

    Coefficients v whose subset sums are exactly {0, …, M}.

    With r = ⌊log₂ M⌋: if M = 2^(r+1) − 1 the list is 1, 2, …, 2^r. Otherwise it
    starts with 1, 2, …, 2^(r−1) and the remainder M − (2^r − 1) is covered by
    one coefficient (COEFFICIENT) or by recursing on it (RECURSIVE, a remainder
    of 1 gives [1]).

    :param upper: M ≥ 2
    :type upper: int

    :param rule: remainder rule
    :type rule: BinaryRule

    :raises EncodingError: when M < 2

    :return: coefficient list
    :rtype: List[int]

    """

    # Initialize
    exponent:  int
    remainder: int

    # Process
    if upper < 2:
        raise EncodingError(f"binary encoding needs a maximum of at least 2, got {upper}")

    exponent = upper.bit_length() - 1
    if upper == 2 ** (exponent + 1) - 1:
        return [2 ** s for s in range(exponent + 1)]

    remainder = upper - (2 ** exponent - 1)
    head = [2 ** s for s in range(exponent)]
    if rule is BinaryRule.COEFFICIENT or remainder == 1:
        return head + [remainder]

    return head + binary_encode_coeffs(remainder, rule)


def choose_strategy(variable: Variable, config: EncodingConfig) -> Strategy:

    """

    :raises EncodingError: binary strategy requested for a value set with holes

    :return: Strategy.ONEHOT or Strategy.BINARY
    :rtype: Strategy

    """

    # Initialize
    domain = variable.domain
    gappy: bool = isinstance(domain, ValueSet) and not domain.is_contiguous

    # Process
    if config.strategy is Strategy.BINARY:
        if gappy:
            raise EncodingError(f"binary encoding cannot represent {variable.name} in {domain}")
        return Strategy.BINARY
    if config.strategy is Strategy.ONEHOT or gappy:
        return Strategy.ONEHOT

    return Strategy.ONEHOT if domain.size <= config.onehot_threshold else Strategy.BINARY


def onehot_encode(model: QipModel, var_id: int) -> QipModel:

    """

    :param model: canonical model
    :type model: QipModel

    :param var_id: variable with |D| ≥ 3 that is not a product result
    :type var_id: int

    :raises ModelError: when a precondition does not hold

    :return: model with var := Σ dₚ·bₚ and Σ bₚ − 1 = 0
    :rtype: QipModel

    """

    # Initialize
    builder: ModelBuilder = _checked_builder(model, var_id)

    # Process
    if builder.domain(var_id).size < 3:
        raise ModelError(f"one-hot encoding needs at least 3 values, {builder.name(var_id)} has {builder.domain(var_id)}")
    _encode_onehot(builder, var_id)

    return builder.build(model.stage)


def binary_encode(model: QipModel, var_id: int, rule: BinaryRule = BinaryRule.COEFFICIENT) -> QipModel:

    """

    :param model: canonical model
    :type model: QipModel

    :param var_id: variable with D = [0, M], M ≥ 2, that is not a product result
    :type var_id: int

    :raises ModelError: when a precondition does not hold
    :raises EncodingError: when the domain has holes

    :return: model with var := Σ vₛ·xₛ
    :rtype: QipModel

    """

    # Initialize
    builder: ModelBuilder = _checked_builder(model, var_id)
    domain:  Domain = builder.domain(var_id)

    # Process
    if not domain.is_contiguous:
        raise EncodingError(f"binary encoding cannot represent {builder.name(var_id)} in {domain}")
    _encode_binary(builder, var_id, rule)

    return builder.build(model.stage)


def binarize_all(model: QipModel, config: EncodingConfig = EncodingConfig()) -> QipModel:

    """

    Encodes variables until every live domain is a subset of {0, 1}. Product
    factors go first, in ascending id order. Squares of a bit fold to the bit
    itself, and products of two bits bound their result to [0, 1].

    :param model: canonical model
    :type model: QipModel

    :param config: encoding strategy
    :type config: EncodingConfig

    :raises ModelError: wrong stage
    :raises EncodingError: an explicit strategy cannot represent a domain

    :return: binary model
    :rtype: QipModel

    """

    # Initialize
    builder: ModelBuilder = ModelBuilder(model)
    before:  int          = len(model.variables)
    encoded: int          = 0

    # Process
    if model.stage is not Stage.CANONICAL:
        raise ModelError(f"binarize_all expects stage CANONICAL, got {model.stage.name}")

    while True:
        _fold_bit_squares(builder)
        _bound_bit_products(builder)
        results = builder.product_result_ids()
        pending = [v for v in builder.live_ids() if not is_binary(builder.domain(v)) and v not in results]
        if not pending:
            break
        factors = builder.factor_ids()
        target = min((v for v in pending if v in factors), default=pending[0])
        _encode(builder, target, config)
        encoded += 1

    leftover = [builder.name(v) for v in builder.live_ids() if not is_binary(builder.domain(v))]
    if leftover:
        raise EncodingError(f"variables left without encoding: {', '.join(leftover)}")
    logger.info("encoded %d variables with %d new variables", encoded, len(builder.variables) - before)

    return builder.build(Stage.BINARY)


# SECTION: Private Functions
def _checked_builder(model: QipModel, var_id: int) -> ModelBuilder:

    # Initialize
    builder: ModelBuilder = ModelBuilder(model)

    # Process
    if model.stage is not Stage.CANONICAL:
        raise ModelError(f"encoding expects stage CANONICAL, got {model.stage.name}")
    if not builder.is_live(var_id):
        raise ModelError(f"{builder.name(var_id)} is not a live variable")
    if var_id in builder.product_result_ids():
        raise ModelError(f"{builder.name(var_id)} is a product result; encode its factors instead")
    if builder.domain(var_id).min != 0:
        raise ModelError(f"{builder.name(var_id)} in {builder.domain(var_id)} is not canonical")

    return builder


def _encode(builder: ModelBuilder, var_id: int, config: EncodingConfig) -> None:

    # Initialize
    variable: Variable = builder.variables[var_id]

    # Process
    if variable.domain.size == 2:
        _encode_pair(builder, var_id)
    elif choose_strategy(variable, config) is Strategy.ONEHOT:
        _encode_onehot(builder, var_id)
    else:
        _encode_binary(builder, var_id, config.binary_rule)


def _encode_pair(builder: ModelBuilder, var_id: int) -> None:

    """

    {0, d} → d·b with a single bit.

    """

    # Initialize
    name: str = builder.name(var_id)
    bit:  int = builder.fresh(f"{name}.b0", BINARY, VarKind.ENCODING_BIT)

    # Process
    _rewrite_encoded(builder, var_id, [builder.domain(var_id).max], [bit], exclusive=False)
    logger.debug("encoded %s with one scaled bit", name)


def _encode_onehot(builder: ModelBuilder, var_id: int) -> None:

    # Initialize
    name:   str = builder.name(var_id)
    values: List[int] = list(builder.domain(var_id).values())
    bits:   List[int] = [builder.fresh(f"{name}#{d}", BINARY, VarKind.ENCODING_BIT) for d in values]

    # Process
    builder.add_linear(AffineExpr.of({b: 1 for b in bits}, -1), Relation.EQ)
    _rewrite_encoded(builder, var_id, values, bits, exclusive=True)
    logger.debug("encoded %s one-hot with %d bits", name, len(bits))


def _encode_binary(builder: ModelBuilder, var_id: int, rule: BinaryRule) -> None:

    # Initialize
    name:   str = builder.name(var_id)
    coeffs: List[int] = binary_encode_coeffs(builder.domain(var_id).max, rule)
    bits:   List[int] = [builder.fresh(f"{name}.b{s}", BINARY, VarKind.ENCODING_BIT) for s in range(len(coeffs))]

    # Process
    _rewrite_encoded(builder, var_id, coeffs, bits, exclusive=False)
    logger.debug("encoded %s with binary coefficients %s", name, coeffs)


def _rewrite_encoded(
    builder:   ModelBuilder,
    var_id:    int,
    coeffs:    Sequence[int],
    bits:      Sequence[int],
    exclusive: bool
) -> None:

    """

    Replaces var by Σ cₛ·bₛ everywhere. Products are rewritten first:

    - y = x·w: yₛ = bₛ·w for every nonzero cₛ, y = Σ cₛ·yₛ
    - y = x·x: y = Σ cₛ²·bₛ + Σ 2cₛcₜ·qₛₜ with qₛₜ = bₛ·bₜ; cross terms are
      dropped when at most one bit can be set (`exclusive`)

    y is eliminated by substitution when its domain covers the interval
    product of the old factors and it is not a factor itself, otherwise it is
    tied to the new sum by an equation.

    """

    # Initialize
    domain:  Domain = builder.domain(var_id)
    pending: List[Tuple[int, AffineExpr, Interval]] = []
    names:   Dict[int, str]

    # Process
    for index in reversed(builder.product_indices(var_id)):
        product = builder.products[index]
        names = builder.names()
        replacement: List[ProductConstraint] = []
        if product.is_square:
            hull = interval_product(domain, domain)
            definition = AffineExpr.of({b: c * c for c, b in zip(coeffs, bits)})
            if not exclusive:
                for s, (c_s, b_s) in enumerate(zip(coeffs, bits)):
                    for c_t, b_t in zip(coeffs[s + 1:], bits[s + 1:]):
                        cross = builder.fresh(f"{names[b_s]}*{names[b_t]}", BINARY, VarKind.PRODUCT_RESULT)
                        replacement.append(ProductConstraint(cross, b_s, b_t))
                        definition = definition + AffineExpr.variable(cross, 2 * c_s * c_t)
        else:
            other = product.rhs if product.lhs == var_id else product.lhs
            hull = interval_product(domain, builder.domain(other))
            definition = AffineExpr()
            for c_s, b_s in zip(coeffs, bits):
                if c_s == 0:
                    continue
                partial = builder.fresh(
                    f"{names[b_s]}*{names[other]}",
                    interval_product(BINARY, builder.domain(other)),
                    VarKind.PRODUCT_RESULT
                )
                if product.lhs == var_id:
                    replacement.append(ProductConstraint(partial, b_s, other))
                else:
                    replacement.append(ProductConstraint(partial, other, b_s))
                definition = definition + AffineExpr.variable(partial, c_s)
        builder.replace_product(index, replacement)
        pending.append((product.result, definition, hull))

    builder.substitute(var_id, AffineExpr.of(dict(zip(bits, coeffs))))

    for result, definition, hull in pending:
        if _covers(builder.domain(result), hull) and result not in builder.factor_ids():
            builder.substitute(result, definition)
        else:
            builder.add_linear(AffineExpr.variable(result) - definition, Relation.EQ)


def _fold_bit_squares(builder: ModelBuilder) -> None:

    """

    y = b·b with b binary becomes y := b; if D(y) ∩ {0, 1} is a single value
    the bit is pinned to it first.

    """

    # Process
    for index in reversed(range(len(builder.products))):
        product = builder.products[index]
        if not product.is_square or not is_binary(builder.domain(product.lhs)):
            continue
        label = product.format(builder.names())
        builder.replace_product(index, [])
        builder.narrow(product.result, 0, 1, label)
        if builder.domain(product.result).size == 1:
            builder.add_linear(
                AffineExpr.variable(product.result) - AffineExpr.const(builder.domain(product.result).min),
                Relation.EQ,
                label
            )
        builder.substitute(product.result, AffineExpr.variable(product.lhs))


def _bound_bit_products(builder: ModelBuilder) -> None:

    # Initialize
    names: Dict[int, str] = builder.names()

    # Process
    for product in builder.products:
        if is_binary(builder.domain(product.lhs)) and is_binary(builder.domain(product.rhs)):
            builder.narrow(product.result, 0, 1, product.format(names))


def _covers(domain: Domain, hull: Interval) -> bool:
    return domain.is_contiguous and domain.min <= hull.lo and domain.max >= hull.hi
