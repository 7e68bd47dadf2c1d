# SECTION: Packages(Built-in)
from fractions import Fraction

# SECTION: Packages(Third-Party)
import pytest

# SECTION: Packages(Local)
from flatzinc_qubo.ir import (
    BINARY,
    AffineExpr,
    Interval,
    LinearConstraint,
    ModelBuilder,
    Objective,
    ProductConstraint,
    QipModel,
    Relation,
    Stage,
    SubstitutionForest,
    ValueSet,
    Variable,
    VarKind,
    check_model,
    eval_affine,
    interval_product,
    is_binary,
    line_bounds,
    make_value_set
)
from flatzinc_qubo.ir.domain import domain_from_json, domain_to_json
from flatzinc_qubo.utils.errors import Inconsistent, ModelError, SubstitutionError
from flatzinc_qubo.utils.rational import common_denominator, parse_rational


# SECTION: Domains
def test_interval_basics():

    # Initialize
    domain = Interval(-2, 3)

    # Process
    assert domain.size == 6
    assert list(domain.values()) == [-2, -1, 0, 1, 2, 3]
    assert 3 in domain and 4 not in domain
    assert domain.shifted(2) == Interval(0, 5)
    assert domain.clamp(0, None) == Interval(0, 3)
    assert domain.clamp(4, None) is None
    assert domain.clamp(None, None) is domain


def test_empty_interval_is_rejected():
    with pytest.raises(ModelError):
        Interval(3, 1)


def test_value_set_clamp_keeps_holes():

    # Initialize
    domain = make_value_set([5, 1, 3, 3])

    # Process
    assert domain == ValueSet((1, 3, 5))
    assert not domain.is_contiguous
    assert domain.clamp(2, 5) == ValueSet((3, 5))
    assert domain.clamp(6, 9) is None


def test_interval_product_uses_the_corners():
    assert interval_product(Interval(-2, 1), Interval(-2, 1)) == Interval(-2, 4)
    assert interval_product(Interval(0, 3), Interval(-1, 2)) == Interval(-3, 6)


def test_is_binary():
    assert is_binary(BINARY)
    assert is_binary(Interval(1, 1))
    assert not is_binary(Interval(0, 2))
    assert not is_binary(Interval(-1, 0))


@pytest.mark.parametrize("domain", [Interval(-3, 4), ValueSet((0, 2, 7))])
def test_domain_json(domain):
    assert domain_from_json(domain_to_json(domain)) == domain


# SECTION: Expressions
def test_affine_expression_drops_zero_terms():

    # Initialize
    expr = AffineExpr.of({1: 2, 0: 0, 3: Fraction(1, 2)}, 1)

    # Process
    assert expr.variables() == (1, 3)
    assert (expr - expr).is_constant
    assert expr.format({1: "x", 3: "y"}) == "2*x + 1/2*y + 1"
    assert AffineExpr.of({0: -1}).format() == "-v0"


def test_substitute_and_integral():

    # Initialize
    expr = AffineExpr.of({0: Fraction(1, 2), 1: Fraction(1, 3)}, -1)

    # Process
    assert expr.substitute(0, AffineExpr.of({2: 1}, 2)) == AffineExpr.of({1: Fraction(1, 3), 2: Fraction(1, 2)})
    assert expr.integral() == (AffineExpr.of({0: 3, 1: 2}, -6), 6)


def test_eval_affine_is_exact():

    # Initialize
    expr = AffineExpr.of({0: Fraction(1, 3), 1: Fraction(2, 3)})

    # Process
    assert eval_affine(expr, {0: 1, 1: 1}) == 1
    assert eval_affine(AffineExpr.of({0: 3, 1: -2}, 1), {0: 1, 1: 2}) == 0
    with pytest.raises(ModelError):
        eval_affine(expr, {0: 1})


def test_line_bounds():

    # Initialize
    domains = {0: Interval(0, 1), 1: Interval(0, 2), 2: Interval(0, 3)}

    # Process
    assert line_bounds(AffineExpr.of({0: 3, 1: -2}), domains) == (-4, 3)
    assert line_bounds(AffineExpr.of({2: -1}), domains) == (-3, 0)
    assert line_bounds(AffineExpr.const(5), domains) == (5, 5)


def test_rationals():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert common_denominator([Fraction(1, 2), Fraction(1, 3), Fraction(2)]) == 6
    with pytest.raises(ValueError):
        parse_rational("2/4")


# SECTION: Substitution forest
def test_forest_resolves_a_chain():

    # Initialize
    forest = SubstitutionForest().add(0, AffineExpr.of({1: 1}, 2)).add(2, AffineExpr.of({0: 2}, 1))

    # Process
    assert forest.resolve_assignment({1: 1}) == {1: 1, 0: 3, 2: 7}
    assert forest.evaluation_order() == (0, 2)
    assert forest.targets == frozenset({0, 2})


def test_forest_resolves_a_onehot_definition():
    forest = SubstitutionForest().add(0, AffineExpr.of({1: 1, 2: 3, 3: 5}))
    assert forest.resolve_assignment({1: 0, 2: 1, 3: 0})[0] == 3


def test_forest_rejects_duplicates_and_cycles():

    # Initialize
    forest = SubstitutionForest().add(0, AffineExpr.variable(1))

    # Process
    with pytest.raises(SubstitutionError):
        forest.add(0, AffineExpr.const(1))
    with pytest.raises(SubstitutionError):
        forest.add(2, AffineExpr.variable(2))
    with pytest.raises(SubstitutionError):
        forest.add(1, AffineExpr.variable(0))


def test_forest_rejects_non_integer_values():

    # Initialize
    forest = SubstitutionForest().add(0, AffineExpr.of({1: Fraction(1, 2)}))

    # Process
    with pytest.raises(SubstitutionError):
        forest.resolve_assignment({1: 1})


def test_forest_from_substitutions_matches_add():

    # Initialize
    forest = SubstitutionForest().add(0, AffineExpr.of({1: 1}, 2)).add(2, AffineExpr.of({0: 2}, 1))

    # Process
    assert SubstitutionForest.from_substitutions(forest.substitutions) == forest


# SECTION: Builder
def test_builder_substitute_rewrites_constraints_and_objective():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(2, 5), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(0, 5), VarKind.ORIGINAL)
    builder.add_linear(AffineExpr.of({x: 1, y: 1}, -6))
    builder.objective = AffineExpr.variable(x)

    # Process
    builder.substitute(x, AffineExpr.const(2))
    model = builder.build(Stage.RAW)

    assert model.linear == (LinearConstraint(AffineExpr.of({y: 1}, -4)),)
    assert model.objective.expr == AffineExpr.const(2)
    assert model.live_ids() == (y,)


def test_builder_detects_false_constants():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 5), VarKind.ORIGINAL)
    builder.add_linear(AffineExpr.of({x: 1}, -6))

    # Process
    assert not builder.add_linear(AffineExpr.const(-1), Relation.LE)
    with pytest.raises(Inconsistent):
        builder.add_linear(AffineExpr.const(1))
    with pytest.raises(Inconsistent):
        builder.fix(x, 1)


def test_builder_narrow():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 5), VarKind.ORIGINAL)

    # Process
    assert builder.narrow(x, 1, 3)
    assert not builder.narrow(x, 0, 9)
    assert builder.domain(x) == Interval(1, 3)
    with pytest.raises(Inconsistent):
        builder.narrow(x, 4, None)


def test_builder_refuses_to_replace_a_product_factor_by_a_sum():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 3), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(0, 9), VarKind.ORIGINAL)
    builder.add_product(y, x, x)

    # Process
    with pytest.raises(ModelError):
        builder.substitute(x, AffineExpr.of({2: 1, 3: 2}))


# SECTION: Model checks
def _model(*variables: Variable, **kwargs) -> QipModel:
    return QipModel(variables=tuple(variables), **kwargs)


def test_check_model_accepts_a_lowered_model():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(-1, 3), VarKind.ORIGINAL)
    y = builder.fresh("y", Interval(0, 9), VarKind.ORIGINAL)
    builder.add_product(y, x, x)
    builder.add_linear(AffineExpr.of({x: 1, y: 1}, -2), Relation.LE)

    # Process
    assert check_model(builder.build(Stage.RAW)) == []


def test_check_model_reports_stage_mismatches():

    # Initialize
    model = _model(
        Variable(0, "x", Interval(0, 2)),
        linear=(LinearConstraint(AffineExpr.of({0: 1}, -1), Relation.LE),),
        stage=Stage.BINARY
    )

    # Process
    codes = [d.code for d in check_model(model)]
    assert codes == ["E301", "E301"]


def test_check_model_reports_product_ordering():

    # Initialize
    model = _model(
        Variable(0, "x", Interval(0, 2)),
        Variable(1, "y1", Interval(0, 16)),
        Variable(2, "y2", Interval(0, 4)),
        products=(ProductConstraint(1, 2, 0), ProductConstraint(2, 0, 0))
    )

    # Process
    assert [d.code for d in check_model(model)] == ["E302"]


def test_check_model_reports_eliminated_variables_in_constraints():

    # Initialize
    model = _model(
        Variable(0, "x", Interval(0, 2)),
        Variable(1, "y", Interval(0, 2)),
        linear=(LinearConstraint(AffineExpr.of({0: 1, 1: 1}, -2)),),
        forest=SubstitutionForest().add(0, AffineExpr.variable(1))
    )

    # Process
    assert [d.code for d in check_model(model)] == ["E300"]


def test_check_model_reports_unregistered_ids():

    # Initialize
    model = _model(
        Variable(0, "x", Interval(0, 2)),
        linear=(LinearConstraint(AffineExpr.of({0: 1, 4: 1}, -2)),),
        products=(ProductConstraint(5, 0, 0),),
        objective=Objective(AffineExpr.of({0: 1, 6: 2})),
        forest=SubstitutionForest().add(7, AffineExpr.variable(8))
    )

    # Process
    messages = [d.message for d in check_model(model)]

    assert messages == [
        "x + v4 - 2 = 0 uses unregistered id 4",
        "v5 = x * x uses unregistered id 5",
        "objective uses unregistered id 6",
        "substitution target v7 is not a registered variable",
        "substitution for v7 uses unregistered id 8"
    ]


def test_summary_counts_live_variables():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 6), VarKind.ORIGINAL)
    builder.fresh("y", Interval(0, 1), VarKind.ORIGINAL)
    builder.fix(x, 2)

    # Process
    assert builder.build(Stage.RAW).summary() == {
        "variables": 1, "linear": 0, "products": 0, "substitutions": 1, "max_domain": 2
    }
