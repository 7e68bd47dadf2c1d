"""

QUBO のエネルギー計算

- energy(): 上三角の係数を直接たどる厳密な値
- matrix_energy(): 整数化した密行列による bᵀ·Q·b

"""


# SECTION: Packages(Type Annotation)
from typing import Sequence

# SECTION: Packages(Built-in)
from fractions import Fraction

# SECTION: Packages(Third-Party)
import numpy as np

# SECTION: Packages(Local)
from flatzinc_qubo.qubo import Qubo, integer_matrix
from flatzinc_qubo.utils.errors import ModelError


# SECTION: Public Functions
def energy(qubo: Qubo, bits: Sequence[int]) -> Fraction:

    """

    :param qubo: QUBO
    :type qubo: Qubo

    :param bits: 0/1 value per QUBO index
    :type bits: Sequence[int]

    :raises ModelError: when the assignment length is not n

    :return: Σ Q_ij·bᵢ·bⱼ + offset
    :rtype: Fraction

    """

    # Initialize
    total: Fraction = qubo.offset

    # Process
    _check_length(qubo, bits)
    for (i, j), weight in qubo.entries.items():
        if bits[i] and bits[j]:
            total += weight

    return total


def matrix_energy(qubo: Qubo, bits: Sequence[int]) -> Fraction:

    """

    Same value as energy(), computed as bᵀ·M·b / d + offset over the integer
    matrix M = d·Q.

    :rtype: Fraction

    """

    # Initialize
    vector: np.ndarray

    # Process
    _check_length(qubo, bits)
    if qubo.n == 0:
        return qubo.offset
    matrix, denominator = integer_matrix(qubo)
    vector = np.asarray(bits, dtype=np.int64)

    return Fraction(int(vector @ matrix @ vector), denominator) + qubo.offset


# SECTION: Private Functions
def _check_length(qubo: Qubo, bits: Sequence[int]) -> None:
    if len(bits) != qubo.n:
        raise ModelError(f"assignment has {len(bits)} bits, the QUBO has {qubo.n}")
