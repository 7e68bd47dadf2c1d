# SECTION: Packages(Built-in)
import itertools
import random
from fractions import Fraction

# SECTION: Packages(Third-Party)
import pytest

# SECTION: Packages(Local)
from flatzinc_qubo.config import AnnealParams
from flatzinc_qubo.frontend import lower_to_qip, parse_file, parse_model
from flatzinc_qubo.ir import AffineExpr, Interval, ModelBuilder, Sense, Stage, VarKind
from flatzinc_qubo.pipeline import compile_text
from flatzinc_qubo.qubo import Qubo, normalize
from flatzinc_qubo.solve import (
    AnnealResult,
    ExhaustiveResult,
    Infeasible,
    Optimal,
    Solver,
    all_energies,
    anneal_qubo,
    bits_of,
    brute_force_qip,
    decode,
    energy,
    exhaustive_qubo,
    is_feasible,
    matrix_energy,
    objective_value
)
from flatzinc_qubo.utils.errors import GuardExceeded, ModelError


ONE_OF_TWO = Qubo(2, {(0, 0): Fraction(-1), (1, 1): Fraction(-1), (0, 1): Fraction(2)}, offset=Fraction(1))


def _random_qubo(seed: int, n: int) -> Qubo:

    # Initialize
    rng = random.Random(seed)
    weights = []

    # Process
    for i in range(n):
        for j in range(i, n):
            if rng.random() < 0.5:
                weights.append((i, j, Fraction(rng.randint(-9, 9), rng.choice([1, 2]))))

    return normalize(weights, n, offset=Fraction(rng.randint(-3, 3)))


# SECTION: Energy
def test_energy_of_every_assignment():
    assert [energy(ONE_OF_TWO, bits) for bits in ((0, 0), (1, 0), (0, 1), (1, 1))] == [1, 0, 0, 1]


def test_energy_rejects_a_wrong_length():
    with pytest.raises(ModelError):
        energy(ONE_OF_TWO, (1,))


def test_matrix_energy_agrees_with_the_sparse_sum():

    # Initialize
    qubo = _random_qubo(7, 6)

    # Process
    for bits in itertools.product((0, 1), repeat=6):
        assert matrix_energy(qubo, bits) == energy(qubo, bits)


# SECTION: Exhaustive search
def test_exhaustive_breaks_ties_towards_the_smallest_code():

    # Initialize
    result = exhaustive_qubo(ONE_OF_TWO)

    # Process
    assert result.energy == 0
    assert result.assignment == (1, 0)
    assert result.count == 2


def test_exhaustive_of_an_empty_qubo():
    assert exhaustive_qubo(Qubo(0, offset=Fraction(3))) == ExhaustiveResult(Fraction(3), (), 1)


def test_exhaustive_guard():

    # Process
    with pytest.raises(GuardExceeded) as error:
        exhaustive_qubo(Qubo(26))

    assert "use anneal" in str(error.value)


@pytest.mark.parametrize("seed", range(5))
def test_exhaustive_matches_a_plain_enumeration(seed):

    # Initialize
    qubo = _random_qubo(seed, 7)
    energies = [energy(qubo, bits_of(code, 7)) for code in range(1 << 7)]

    # Process
    result = exhaustive_qubo(qubo)

    assert result.energy == min(energies)
    assert result.count == energies.count(min(energies))
    assert result.assignment == bits_of(energies.index(min(energies)), 7)
    assert all_energies(qubo) == energies


def test_bits_of():
    assert bits_of(6, 4) == (0, 1, 1, 0)
    assert all_energies(ONE_OF_TWO) == [1, 0, 0, 1]


# SECTION: Annealing
def test_anneal_is_deterministic_for_a_seed():

    # Initialize
    qubo = _random_qubo(3, 10)
    params = AnnealParams(seed=42, sweeps=200, restarts=4)

    # Process
    first, second = anneal_qubo(qubo, params), anneal_qubo(qubo, params)

    assert first == second
    assert first.energy == energy(qubo, first.assignment)


def test_anneal_result_does_not_depend_on_the_worker_count():

    # Initialize
    qubo = _random_qubo(4, 10)

    # Process
    serial = anneal_qubo(qubo, AnnealParams(seed=9, sweeps=200, restarts=6, workers=1))
    threaded = anneal_qubo(qubo, AnnealParams(seed=9, sweeps=200, restarts=6, workers=3))

    assert serial == threaded


def test_anneal_finds_the_minimum_of_a_small_qubo():

    # Initialize
    qubo = _random_qubo(5, 8)

    # Process
    result = anneal_qubo(qubo, AnnealParams(seed=1, check_deltas=True))

    assert result.energy == exhaustive_qubo(qubo).energy


def test_anneal_of_an_empty_qubo():
    assert anneal_qubo(Qubo(0, offset=Fraction(2))) == AnnealResult(Fraction(2), (), 0)


# SECTION: Oracle
def test_brute_force_of_the_inequality_example(example_text):

    # Initialize
    model = lower_to_qip(parse_model(example_text))

    # Process
    verdict = brute_force_qip(model)

    assert isinstance(verdict, Optimal)
    assert verdict.objective == -2
    assert (verdict.assignment[0], verdict.assignment[1]) == (0, 2)
    assert is_feasible(model, verdict.assignment)


def test_brute_force_reports_infeasibility(data_dir):
    assert isinstance(brute_force_qip(lower_to_qip(parse_file(data_dir / "inconsistent.fzn"))), Infeasible)


def test_brute_force_maximizes():

    # Initialize
    builder = ModelBuilder()
    x = builder.fresh("x", Interval(0, 3), VarKind.ORIGINAL)
    builder.objective, builder.sense = AffineExpr.of({x: -1}), Sense.MAX
    model = builder.build(Stage.RAW)

    # Process
    verdict = brute_force_qip(model)

    assert isinstance(verdict, Optimal)
    assert verdict.assignment == {x: 3}
    assert verdict.objective == 3
    assert objective_value(model, {x: 1}) == 1


def test_brute_force_guard():

    # Initialize
    builder = ModelBuilder()
    for k in range(3):
        builder.fresh(f"x{k}", Interval(0, 99), VarKind.ORIGINAL)

    # Process
    with pytest.raises(GuardExceeded):
        brute_force_qip(builder.build(Stage.RAW), max_points=10 ** 5)


# SECTION: Decoding
def test_decode_the_inequality_example(example_text):

    # Initialize
    qubo = compile_text(example_text).qubo

    # Process
    result = decode(qubo, Solver.exhaustive(qubo).assignment)

    assert result.outputs == (("x", 0), ("y", 2))
    assert result.objective == -2
    assert result.energy == -2
    assert result.feasible is True


def test_decode_flags_an_infeasible_assignment(example_text):

    # Initialize
    qubo = compile_text(example_text).qubo
    energies = all_energies(qubo)

    # Process
    worst = energies.index(max(energies))
    result = decode(qubo, bits_of(worst, qubo.n))

    assert result.feasible is False


def test_decode_needs_an_index_map():
    with pytest.raises(ModelError):
        decode(Qubo(1), (0,))
