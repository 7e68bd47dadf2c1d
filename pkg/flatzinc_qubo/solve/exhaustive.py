"""

QUBO の全探索ソルバー

- exhaustive_qubo(): 厳密な最小エネルギー・最小化解・最小化解の個数
- all_energies(): 全割り当てのエネルギー（検証用）

エラーコード
E500台割り当て

- Error: E500 => ビット数が上限 (EXHAUSTIVE_MAX_BITS) を超えた

"""


# SECTION: Packages(Type Annotation)
from typing import List, Tuple

# SECTION: Packages(Built-in)
import logging
from dataclasses import dataclass
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.qubo import Qubo, integer_matrix
from flatzinc_qubo.solve.kernels import gray_code_energies, gray_code_minimum
from flatzinc_qubo.utils.errors import GuardExceeded


logger = logging.getLogger(__name__)


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class ExhaustiveResult:

    """

    :param assignment: the minimizer with the smallest Σ bᵢ·2ⁱ
    :type assignment: Tuple[int, ...]

    :param count: number of assignments reaching the minimum
    :type count: int

    """

    energy:     Fraction
    assignment: Tuple[int, ...]
    count:      int


# SECTION: Public Functions
def exhaustive_qubo(qubo: Qubo, max_bits: int = constant.EXHAUSTIVE_MAX_BITS) -> ExhaustiveResult:

    """

    :param qubo: QUBO
    :type qubo: Qubo

    :param max_bits: largest n enumerated
    :type max_bits: int

    :raises GuardExceeded: when n > max_bits or the weights leave int64

    :return: exact minimum
    :rtype: ExhaustiveResult

    """

    # Process
    _guard(qubo, max_bits)
    if qubo.n == 0:
        return ExhaustiveResult(qubo.offset, (), 1)

    matrix, denominator = integer_matrix(qubo)
    best, code, count = gray_code_minimum(matrix)
    logger.debug("enumerated %d assignments, %d minimizers", 1 << qubo.n, count)

    return ExhaustiveResult(
        energy=Fraction(int(best), denominator) + qubo.offset,
        assignment=bits_of(int(code), qubo.n),
        count=int(count)
    )


def all_energies(qubo: Qubo, max_bits: int = constant.EXHAUSTIVE_MAX_BITS) -> List[Fraction]:

    """

    :raises GuardExceeded: when n > max_bits

    :return: energy of every assignment, indexed by Σ bᵢ·2ⁱ
    :rtype: List[Fraction]

    """

    # Process
    _guard(qubo, max_bits)
    if qubo.n == 0:
        return [qubo.offset]

    matrix, denominator = integer_matrix(qubo)

    return [Fraction(int(e), denominator) + qubo.offset for e in gray_code_energies(matrix)]


def bits_of(code: int, n: int) -> Tuple[int, ...]:
    return tuple((code >> i) & 1 for i in range(n))


# SECTION: Private Functions
def _guard(qubo: Qubo, max_bits: int) -> None:
    if qubo.n > max_bits:
        raise GuardExceeded(f"exhaustive search over {qubo.n} bits exceeds the limit of {max_bits}; use anneal")
