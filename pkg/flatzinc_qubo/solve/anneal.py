"""

QUBO のシミュレーテッドアニーリング

- AnnealResult: 最良エネルギー（厳密値）と割り当て
- anneal_qubo(): 再起動を含む実行

再起動 r の乱数は SeedSequence([seed, r]) から作るので、workers の数によらず結果は同じ
浮動小数点で探索し、最良の割り当てだけを厳密なエネルギーで採点し直す

"""


# SECTION: Packages(Type Annotation)
from typing import List, Tuple

# SECTION: Packages(Built-in)
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

# SECTION: Packages(Third-Party)
import numpy as np

# SECTION: Packages(Local)
from flatzinc_qubo.config import AnnealParams
from flatzinc_qubo.constant import constant
from flatzinc_qubo.qubo import Qubo
from flatzinc_qubo.solve.energy import energy
from flatzinc_qubo.solve.kernels import anneal_run
from flatzinc_qubo.utils.errors import ModelError


logger = logging.getLogger(__name__)


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class AnnealResult:
    energy:     Fraction
    assignment: Tuple[int, ...]
    restart:    int


# SECTION: Public Functions
def anneal_qubo(qubo: Qubo, params: AnnealParams = AnnealParams()) -> AnnealResult:

    """

    Best of `params.restarts` independent runs. Ties in exact energy go to the
    lowest restart index.

    :param qubo: QUBO
    :type qubo: Qubo

    :param params: schedule, seed and parallelism
    :type params: AnnealParams

    :raises ModelError: when check_deltas finds an incremental energy that drifted

    :return: best assignment found
    :rtype: AnnealResult

    """

    # Initialize
    matrix:       np.ndarray
    temperatures: np.ndarray
    results:      List[AnnealResult]

    # Process
    if qubo.n == 0:
        return AnnealResult(qubo.offset, (), 0)

    matrix = _float_matrix(qubo)
    temperatures = np.geomspace(_initial_temperature(qubo, params), params.final_temperature, params.sweeps)

    def restart(index: int) -> AnnealResult:
        rng = np.random.default_rng(np.random.SeedSequence([params.seed, index]))
        state = rng.integers(0, 2, size=qubo.n, dtype=np.int8)
        uniforms = rng.random((params.sweeps, qubo.n))
        _, best_state, mismatches = anneal_run(matrix, state, temperatures, uniforms, params.check_deltas)
        if mismatches:
            raise ModelError(f"restart {index}: {mismatches} incremental energy updates disagreed with recomputation")
        bits = tuple(int(b) for b in best_state)
        return AnnealResult(energy(qubo, bits), bits, index)

    if params.workers == 1:
        results = [restart(r) for r in range(params.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=params.workers) as pool:
            results = list(pool.map(restart, range(params.restarts)))

    best = min(results, key=lambda r: (r.energy, r.restart))
    logger.info("annealing best energy %s from restart %d of %d", best.energy, best.restart, params.restarts)

    return best


# SECTION: Private Functions
def _float_matrix(qubo: Qubo) -> np.ndarray:

    # Initialize
    matrix: np.ndarray = np.zeros((qubo.n, qubo.n), dtype=np.float64)

    # Process
    for (i, j), weight in qubo.entries.items():
        matrix[i, j] = float(weight)

    return matrix


def _initial_temperature(qubo: Qubo, params: AnnealParams) -> float:

    """

    params.initial_temperature, or 10·max|Q_ij| raised to 10·final when the
    weights are too small to give a cooling schedule.

    """

    # Initialize
    largest: float = max((abs(float(w)) for w in qubo.entries.values()), default=0.0)

    # Process
    if params.initial_temperature is not None:
        return params.initial_temperature

    return max(
        constant.ANNEAL_TEMPERATURE_FACTOR * largest,
        constant.ANNEAL_TEMPERATURE_FACTOR * params.final_temperature
    )
