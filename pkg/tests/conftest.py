"""

テスト共通のフィクスチャ

- data_dir: tests/data のパス
- make_random_model: 往復検証用の小さな Stage.RAW モデルを作る関数

"""


# SECTION: Packages(Type Annotation)
from typing import Callable, List

# SECTION: Packages(Built-in)
import random
from fractions import Fraction
from pathlib import Path

# SECTION: Packages(Third-Party)
import pytest

# SECTION: Packages(Local)
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
    make_value_set
)


RandomModelFactory = Callable[[random.Random, bool], QipModel]

DATA_DIR: Path = Path(__file__).parent / "data"


# SECTION: Fixtures
@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def example_text() -> str:
    return (DATA_DIR / "small_example.fzn").read_text(encoding="utf-8")


@pytest.fixture
def make_random_model() -> RandomModelFactory:
    return random_model


# SECTION: Public Functions
def random_model(rng: random.Random, intervals_only: bool = False) -> QipModel:

    """

    Up to three integer variables with at most seven values each, up to three
    linear constraints with small rational coefficients, at most one product
    and a random objective sense.

    :param rng: seeded generator
    :type rng: random.Random

    :param intervals_only: avoid value sets with holes
    :type intervals_only: bool

    :rtype: QipModel

    """

    # Initialize
    builder: ModelBuilder = ModelBuilder()
    ids:     List[int] = []

    # Process
    for k in range(rng.randint(1, 3)):
        ids.append(builder.fresh(f"x{k}", _random_domain(rng, intervals_only), VarKind.ORIGINAL))

    if rng.random() < 0.4:
        lhs, rhs = rng.choice(ids), rng.choice(ids)
        hull = interval_product(builder.domain(lhs), builder.domain(rhs))
        result = builder.fresh("p", hull, VarKind.ORIGINAL)
        builder.add_product(result, lhs, rhs)
        ids.append(result)

    for _ in range(rng.randint(0, 3)):
        relation = Relation.EQ if rng.random() < 0.3 else Relation.LE
        builder.add_linear(_random_expr(rng, ids), relation)

    sense = rng.choice([Sense.MIN, Sense.MAX, Sense.SATISFY])
    if sense is not Sense.SATISFY:
        builder.objective, builder.sense = _random_expr(rng, ids), sense
    builder.outputs = list(ids)

    return builder.build(Stage.RAW)


# SECTION: Private Functions
def _random_domain(rng: random.Random, intervals_only: bool) -> Domain:

    # Initialize
    size: int = rng.randint(1, 7)
    low:  int = rng.randint(-2, 2)

    # Process
    if intervals_only or size < 3 or rng.random() < 0.6:
        return Interval(low, low + size - 1)

    return make_value_set(rng.sample(range(low, low + 9), size))


def _random_expr(rng: random.Random, ids: List[int]) -> AffineExpr:

    # Initialize
    chosen = rng.sample(ids, rng.randint(1, min(3, len(ids))))

    # Process
    return AffineExpr.of(
        {v: Fraction(rng.choice([-2, -1, 1, 2]), rng.randint(1, 3)) for v in chosen},
        Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    )
