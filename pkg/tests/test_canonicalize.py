# SECTION: Packages(Third-Party)
import pytest

# SECTION: Packages(Local)
from flatzinc_qubo.ir import (
    AffineExpr,
    Interval,
    LinearConstraint,
    ModelBuilder,
    ProductConstraint,
    Sense,
    Stage,
    ValueSet,
    VarKind
)
from flatzinc_qubo.passes import canonicalize_all, shift_variable
from flatzinc_qubo.solve import Optimal, brute_force_qip
from flatzinc_qubo.utils.errors import ModelError


def test_shift_in_a_linear_constraint():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(2, 5), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(0, 5), VarKind.ORIGINAL)
    builder.add_linear(AffineExpr.of({x: 1, y: 1}, -6))

    # Process
    model = shift_variable(builder.build(Stage.NO_INEQUALITIES), x)

    assert model.variable(2).name == "x'"
    assert model.variable(2).kind is VarKind.SHIFTED
    assert model.variable(2).domain == Interval(0, 3)
    assert model.linear == (LinearConstraint(AffineExpr.of({y: 1, 2: 1}, -4)),)
    assert model.forest.definition(x) == AffineExpr.of({2: 1}, 2)


def test_shift_of_a_product_factor():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(2, 3), VarKind.ORIGINAL)
    w = builder.fresh("w", Interval(0, 1), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(0, 3), VarKind.ORIGINAL)
    builder.add_product(y, x, w)

    # Process
    model = shift_variable(builder.build(Stage.NO_INEQUALITIES), x)

    assert model.variable(4).name == "x'*w"
    assert model.products == (ProductConstraint(4, 3, w),)
    assert model.linear == (LinearConstraint(AffineExpr.of({y: 1, 4: -1, w: -2})),)


def test_shift_of_a_square():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(1, 3), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(0, 9), VarKind.ORIGINAL)
    builder.add_product(y, x, x)

    # Process
    model = shift_variable(builder.build(Stage.NO_INEQUALITIES), x)

    assert model.variable(3).name == "x'^2"
    assert model.variable(3).domain == Interval(0, 4)
    assert model.products == (ProductConstraint(3, 2, 2),)
    assert model.linear == (LinearConstraint(AffineExpr.of({y: 1, 3: -1, 2: -2}, -1)),)


def test_shift_preconditions():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 3), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(1, 9), VarKind.ORIGINAL)
    builder.add_product(y, x, x)
    model = builder.build(Stage.NO_INEQUALITIES)

    # Process
    with pytest.raises(ModelError):
        shift_variable(model, x)
    with pytest.raises(ModelError):
        shift_variable(model, y)
    with pytest.raises(ModelError):
        shift_variable(builder.build(Stage.RAW), y)


def test_canonicalize_two_valued_domains():

    # Initialize
    builder = ModelBuilder()
    builder.fresh("x", Interval(3, 4), VarKind.ORIGINAL)
    builder.fresh("z", ValueSet((-1, 4)), VarKind.ORIGINAL)

    # Process
    model = canonicalize_all(builder.build(Stage.NO_INEQUALITIES))

    assert model.stage is Stage.CANONICAL
    assert [v.domain for v in model.live_variables()] == [Interval(0, 1), ValueSet((0, 5))]


def test_canonicalize_a_product_chain_keeps_the_optimum():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(1, 2), VarKind.ORIGINAL)
    y1 = builder.fresh("y1", Interval(1, 4), VarKind.ORIGINAL)
    y2 = builder.fresh("y2", Interval(1, 8), VarKind.ORIGINAL)
    builder.add_product(y1, x, x)
    builder.add_product(y2, y1, x)
    builder.objective, builder.sense = AffineExpr.of({y2: 1, x: -5}), Sense.MIN
    source = builder.build(Stage.NO_INEQUALITIES)

    # Process
    model = canonicalize_all(source)

    assert all(v.domain.min == 0 for v in model.live_variables())
    before, after = brute_force_qip(source), brute_force_qip(model)
    assert isinstance(before, Optimal) and isinstance(after, Optimal)
    assert before.objective == after.objective == -4


def test_canonicalize_detaches_a_result_with_a_nonzero_minimum():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 2), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(-3, 4), VarKind.ORIGINAL)
    builder.add_product(y, x, x)

    # Process
    model = canonicalize_all(builder.build(Stage.NO_INEQUALITIES))

    assert model.products == (ProductConstraint(2, x, x),)
    assert model.variable(2).domain == Interval(0, 4)
    assert y in model.forest
    assert all(v.domain.min == 0 for v in model.live_variables())
