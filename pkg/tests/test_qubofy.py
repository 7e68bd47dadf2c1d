# SECTION: Packages(Built-in)
import itertools
from fractions import Fraction

# SECTION: Packages(Third-Party)
import dimod
import numpy as np
import pytest

# SECTION: Packages(Local)
from flatzinc_qubo.ir import (
    BINARY,
    AffineExpr,
    Interval,
    LinearConstraint,
    ModelBuilder,
    ProductConstraint,
    Relation,
    Sense,
    Stage,
    VarKind
)
from flatzinc_qubo.qubo import (
    QuadExpr,
    Qubo,
    assemble,
    equation_penalty,
    export_bqm,
    integer_matrix,
    integer_scale,
    normalize,
    objective_span,
    penalty_factor,
    quadratize_product
)
from flatzinc_qubo.solve import energy
from flatzinc_qubo.utils.errors import GuardExceeded, Inconsistent, ModelError


BITS = {0: BINARY, 1: BINARY, 2: BINARY}


def _bits(count: int) -> ModelBuilder:

    # Initialize
    builder = ModelBuilder()

    # Process
    for k in range(count):
        builder.fresh(f"b{k}", BINARY, VarKind.ENCODING_BIT)

    return builder


# SECTION: Quadratic expressions
def test_quad_expr_folds_the_diagonal_and_drops_zeros():

    # Initialize
    expr = QuadExpr({0: 1, 1: 0}, {(1, 1): 2, (2, 0): 3, (0, 2): -3})

    # Process
    assert expr.linear == {0: 1, 1: 2}
    assert expr.quadratic == {}
    assert expr.variables() == (0, 1)


def test_square_of_an_affine_expression():

    # Initialize
    expr = AffineExpr.of({0: 2, 1: -1}, 1)
    square = QuadExpr.square(expr)

    # Process
    for b0, b1 in itertools.product((0, 1), repeat=2):
        assert square.evaluate({0: b0, 1: b1}) == (2 * b0 - b1 + 1) ** 2


def test_evaluate_needs_every_value_without_default():

    # Initialize
    expr = QuadExpr({0: 1, 1: 1})

    # Process
    assert expr.evaluate({0: 1}, default=0) == 1
    with pytest.raises(ModelError):
        expr.evaluate({0: 1})


def test_product_penalty_truth_table():

    # Initialize
    penalty = quadratize_product(ProductConstraint(2, 0, 1))

    # Process
    assert penalty.linear == {2: 3}
    assert penalty.quadratic == {(0, 1): 1, (0, 2): -2, (1, 2): -2}
    for x, y, z in itertools.product((0, 1), repeat=3):
        value = penalty.evaluate({0: x, 1: y, 2: z})
        assert value == 0 if z == x * y else value >= 1


# SECTION: Penalties
def test_objective_span_over_mixed_signs():
    span = objective_span(AffineExpr.of({0: 2, 1: -3}, 1), {0: Interval(0, 4), 1: Interval(0, 2)})
    assert span == (Fraction(-5), Fraction(9))


def test_penalty_factor():
    assert penalty_factor((Fraction(-2), Fraction(6))) == 9
    assert penalty_factor((Fraction(0), Fraction(0))) == 1
    assert penalty_factor((Fraction(0), Fraction(4)), Fraction(1, 2)) == 9
    with pytest.raises(ModelError):
        penalty_factor((Fraction(0), Fraction(1)), 0)


def test_equation_penalty_squares_a_mixed_sign_equation():

    # Initialize
    penalty = equation_penalty(LinearConstraint(AffineExpr.of({0: 1, 1: 1}, -1)), BITS)

    # Process
    assert penalty.linear == {0: -1, 1: -1}
    assert penalty.quadratic == {(0, 1): 2}
    assert penalty.constant == 1


def test_equation_penalty_keeps_a_nonnegative_equation_linear():
    penalty = equation_penalty(LinearConstraint(AffineExpr.of({0: 1, 1: 2})), BITS)
    assert penalty == QuadExpr({0: 1, 1: 2})


def test_equation_penalty_rejects_inequalities_and_impossible_equations():
    with pytest.raises(ModelError):
        equation_penalty(LinearConstraint(AffineExpr.of({0: 1}, -1), Relation.LE), BITS)
    with pytest.raises(Inconsistent) as error:
        equation_penalty(LinearConstraint(AffineExpr.of({0: 1}, 1)), BITS, "b + 1 = 0")
    assert error.value.constraint == "b + 1 = 0"


# SECTION: Scaling and assembly
def test_integer_scale():

    # Initialize
    builder = _bits(2)
    builder.add_linear(AffineExpr.of({0: Fraction(1, 2), 1: Fraction(1, 3)}, -1))
    builder.objective, builder.sense = AffineExpr.of({0: Fraction(1, 2), 1: Fraction(1, 4)}), Sense.MIN

    # Process
    model, scale = integer_scale(builder.build(Stage.BINARY))

    assert scale == Fraction(1, 4)
    assert model.linear == (LinearConstraint(AffineExpr.of({0: 3, 1: 2}, -6)),)
    assert model.objective.expr == AffineExpr.of({0: 2, 1: 1})
    assert model.objective.sense is Sense.MIN


def test_integer_scale_requires_the_binary_stage():
    with pytest.raises(ModelError):
        integer_scale(_bits(1).build(Stage.CANONICAL))


def test_assemble_a_single_objective_bit():

    # Initialize
    builder = _bits(1)
    builder.objective, builder.sense = AffineExpr.of({0: -1}), Sense.MIN

    # Process
    qubo = assemble(builder.build(Stage.BINARY))

    assert qubo.entries == {(0, 0): -1}
    assert qubo.offset == 0
    assert qubo.penalty == 2
    assert qubo.objective_bounds == (-1, 0)
    assert qubo.index_map == (0,)


def test_assemble_a_sum_to_one_constraint():

    # Initialize
    builder = _bits(2)
    builder.add_linear(AffineExpr.of({0: 1, 1: 1}, -1))

    # Process
    qubo = assemble(builder.build(Stage.BINARY))

    assert qubo.entries == {(0, 0): -1, (1, 1): -1, (0, 1): 2}
    assert qubo.offset == 1
    assert [energy(qubo, bits) for bits in ((0, 0), (1, 0), (0, 1), (1, 1))] == [1, 0, 0, 1]


def test_assemble_pins_a_fixed_bit():

    # Initialize
    builder = ModelBuilder()
    builder.fresh("b", Interval(1, 1), VarKind.ENCODING_BIT)

    # Process
    qubo = assemble(builder.build(Stage.BINARY))

    assert qubo.entries == {(0, 0): -1}
    assert qubo.offset == 1


def test_assemble_uses_a_fixed_penalty():

    # Initialize
    builder = _bits(2)
    builder.add_linear(AffineExpr.of({0: 1, 1: 1}, -1))

    # Process
    qubo = assemble(builder.build(Stage.BINARY), penalty=5)

    assert qubo.penalty == 5
    assert qubo.entries == {(0, 0): -5, (1, 1): -5, (0, 1): 10}


def test_assemble_preconditions():

    # Initialize
    fractional = _bits(2)
    fractional.add_linear(AffineExpr.of({0: Fraction(1, 2), 1: 1}, -1))
    wide = ModelBuilder()
    wide.fresh("x", Interval(0, 2), VarKind.ORIGINAL)

    # Process
    with pytest.raises(ModelError):
        assemble(_bits(1).build(Stage.CANONICAL))
    with pytest.raises(ModelError):
        assemble(fractional.build(Stage.BINARY))
    with pytest.raises(ModelError):
        assemble(wide.build(Stage.BINARY))


# SECTION: Matrix
def test_normalize_folds_the_lower_triangle():

    # Initialize
    qubo = normalize([(1, 0, 2), (0, 1, 1), (1, 1, 3), (1, 1, -3), (0, 0, Fraction(1, 2))], 2, offset=4)

    # Process
    assert qubo.entries == {(0, 0): Fraction(1, 2), (0, 1): 3}
    assert qubo.offset == 4
    assert qubo.density == pytest.approx(2 / 3)


@pytest.mark.parametrize("kwargs", [
    {"n": 2, "entries": {(1, 0): Fraction(1)}},
    {"n": 2, "entries": {(0, 2): Fraction(1)}},
    {"n": 1, "entries": {(0, 0): Fraction(0)}},
    {"n": 1, "scale": Fraction(0)}
])
def test_qubo_validation(kwargs):
    with pytest.raises(ModelError):
        Qubo(**kwargs)


def test_integer_matrix():

    # Initialize
    qubo = Qubo(2, {(0, 0): Fraction(1, 2), (0, 1): Fraction(-1, 3)})

    # Process
    matrix, denominator = integer_matrix(qubo)

    assert denominator == 6
    assert matrix.dtype == np.int64
    assert matrix.tolist() == [[3, -2], [0, 0]]


def test_integer_matrix_guard():
    with pytest.raises(GuardExceeded):
        integer_matrix(Qubo(1, {(0, 0): Fraction(2 ** 62)}))


def test_export_bqm_matches_the_energy():

    # Initialize
    qubo = Qubo(2, {(0, 0): Fraction(-1), (1, 1): Fraction(-1), (0, 1): Fraction(2)}, offset=Fraction(1))
    bqm = export_bqm(qubo)

    # Process
    assert bqm.vartype is dimod.BINARY
    for bits in itertools.product((0, 1), repeat=2):
        assert bqm.energy(dict(enumerate(bits))) == pytest.approx(float(energy(qubo, bits)))
