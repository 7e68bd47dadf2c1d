"""

numba でコンパイルするソルバーのカーネル

- gray_code_minimum(): グレイコード順の全探索（int64 で厳密）
- gray_code_energies(): 全割り当てのエネルギー表
- anneal_run(): 1回分の単一ビット反転メトロポリス法

行列はすべて上三角で、対角が一次の係数

"""


# SECTION: Packages(Type Annotation)
from typing import Tuple

# SECTION: Packages(Third-Party)
import numpy as np
from numba import njit


# SECTION: Public Functions
@njit(cache=True, nogil=True)
def gray_code_minimum(matrix: np.ndarray) -> Tuple[int, int, int]:

    """

    Walks all 2ⁿ assignments in Gray-code order with O(n) work per flip.

    :return: (minimum of bᵀ·M·b, smallest code Σ bᵢ·2ⁱ reaching it, number of minimizers)

    """

    n = matrix.shape[0]
    state = np.zeros(n, dtype=np.int64)
    value = 0
    code = 0
    best = 0
    best_code = 0
    count = 1

    for step in range(1, 1 << n):
        bit = _lowest_set_bit(step)
        value += _flip_delta(matrix, state, bit)
        state[bit] ^= 1
        code ^= 1 << bit
        if value < best:
            best = value
            best_code = code
            count = 1
        elif value == best:
            count += 1
            if code < best_code:
                best_code = code

    return best, best_code, count


@njit(cache=True, nogil=True)
def gray_code_energies(matrix: np.ndarray) -> np.ndarray:

    """

    :return: array e with e[Σ bᵢ·2ⁱ] = bᵀ·M·b

    """

    n = matrix.shape[0]
    state = np.zeros(n, dtype=np.int64)
    energies = np.zeros(1 << n, dtype=np.int64)
    value = 0
    code = 0

    for step in range(1, 1 << n):
        bit = _lowest_set_bit(step)
        value += _flip_delta(matrix, state, bit)
        state[bit] ^= 1
        code ^= 1 << bit
        energies[code] = value

    return energies


@njit(cache=True, nogil=True)
def anneal_run(
    matrix:       np.ndarray,
    state:        np.ndarray,
    temperatures: np.ndarray,
    uniforms:     np.ndarray,
    check_deltas: bool
) -> Tuple[float, np.ndarray, int]:

    """

    One annealing run from `state` (modified in place). Sweep k visits the
    bits in index order at temperatures[k]; uniforms[k, i] decides the
    Metropolis test of bit i.

    :return: (best bᵀ·M·b seen, its state, number of delta mismatches found by check_deltas)

    """

    n = matrix.shape[0]
    fields = np.empty(n, dtype=np.float64)
    for i in range(n):
        fields[i] = _field(matrix, state, i)

    value = _full_energy(matrix, state)
    best = value
    best_state = state.copy()
    mismatches = 0

    for sweep in range(temperatures.shape[0]):
        temperature = temperatures[sweep]
        for i in range(n):
            delta = fields[i] if state[i] == 0 else -fields[i]
            if delta > 0 and uniforms[sweep, i] >= np.exp(-delta / temperature):
                continue
            change = 1 if state[i] == 0 else -1
            state[i] ^= 1
            value += delta
            for j in range(n):
                if j < i:
                    fields[j] += change * matrix[j, i]
                elif j > i:
                    fields[j] += change * matrix[i, j]
            if check_deltas:
                exact = _full_energy(matrix, state)
                if abs(exact - value) > 1e-6 * (1.0 + abs(exact)):
                    mismatches += 1
                    value = exact
            if value < best:
                best = value
                best_state[:] = state

    return best, best_state, mismatches


# SECTION: Private Functions
@njit(cache=True, nogil=True)
def _lowest_set_bit(step: int) -> int:
    bit = 0
    while (step >> bit) & 1 == 0:
        bit += 1
    return bit


@njit(cache=True, nogil=True)
def _field(matrix: np.ndarray, state: np.ndarray, i: int):

    # energy change of setting bit i from 0 to 1 with the other bits fixed
    total = matrix[i, i]
    for j in range(matrix.shape[0]):
        if state[j] == 0 or j == i:
            continue
        total += matrix[j, i] if j < i else matrix[i, j]
    return total


@njit(cache=True, nogil=True)
def _flip_delta(matrix: np.ndarray, state: np.ndarray, i: int):
    field = _field(matrix, state, i)
    return field if state[i] == 0 else -field


@njit(cache=True, nogil=True)
def _full_energy(matrix: np.ndarray, state: np.ndarray):
    total = 0.0
    n = matrix.shape[0]
    for i in range(n):
        if state[i] == 0:
            continue
        for j in range(i, n):
            if state[j] != 0:
                total += matrix[i, j]
    return total
