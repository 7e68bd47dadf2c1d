"""

正規化された QUBO 行列とそのメタデータ

- Qubo: 上三角の係数・オフセット・スケール・復号用の情報
- normalize(): 任意の (i, j, w) の並びを上三角・ゼロなしの Qubo にする
- integer_matrix(): 共通分母を掛けた int64 の密行列
- export_bqm(): dimod.BinaryQuadraticModel への変換

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Iterable, Mapping, Optional, Tuple

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from fractions import Fraction

# SECTION: Packages(Third-Party)
import dimod
import numpy as np

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.ir import AffineExpr, Sense, SubstitutionForest, Variable
from flatzinc_qubo.utils.errors import GuardExceeded, ModelError
from flatzinc_qubo.utils.rational import RationalLike, as_rational, common_denominator


Entry = Tuple[int, int]


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Qubo:

    """

    energy(b) = Σᵢ≤ⱼ Q_ij·bᵢ·bⱼ + offset. A feasible assignment has energy equal to
    the integer-scaled objective; scale converts it back to objective units.

    :param n: number of bits
    :type n: int

    :param entries: (i, j) with i ≤ j → nonzero weight, sorted
    :type entries: Mapping[Entry, Fraction]

    :param index_map: QUBO index → variable id
    :type index_map: Tuple[int, ...]

    :param objective_bounds: (lo, hi) of the scaled objective, None when unknown
    :type objective_bounds: Optional[Tuple[Fraction, Fraction]]

    """

    n:                int
    entries:          Mapping[Entry, Fraction]              = field(default_factory=dict)
    offset:           Fraction                              = Fraction(0)
    scale:            Fraction                              = Fraction(1)
    index_map:        Tuple[int, ...]                       = ()
    penalty:          Optional[Fraction]                    = None
    forest:           SubstitutionForest                    = field(default_factory=SubstitutionForest)
    outputs:          Tuple[int, ...]                       = ()
    variables:        Tuple[Variable, ...]                  = ()
    sense:            Sense                                 = Sense.SATISFY
    objective:        AffineExpr                            = field(default_factory=AffineExpr)
    objective_bounds: Optional[Tuple[Fraction, Fraction]]   = None

    def __post_init__(self) -> None:
        for (i, j), weight in self.entries.items():
            if not 0 <= i <= j < self.n:
                raise ModelError(f"entry ({i}, {j}) is outside the upper triangle of a {self.n}-bit QUBO")
            if weight == 0:
                raise ModelError(f"entry ({i}, {j}) is stored with weight 0")
        if self.scale <= 0:
            raise ModelError(f"scale must be positive, got {self.scale}")

    @property
    def density(self) -> float:
        return len(self.entries) / (self.n * (self.n + 1) // 2) if self.n else 0.0

    def variable_index(self) -> Dict[int, int]:
        return {var_id: index for index, var_id in enumerate(self.index_map)}


# SECTION: Public Functions
def normalize(
    weights: Iterable[Tuple[int, int, RationalLike]],
    n:       int,
    offset:  RationalLike = 0,
    scale:   RationalLike = 1
) -> Qubo:

    """

    Folds (i, j) with i > j onto (j, i), sums repeated positions and drops zeros.
    A weight at (i, i) is a linear weight since bᵢ² = bᵢ.

    :param weights: raw (i, j, w) triples
    :type weights: Iterable[Tuple[int, int, RationalLike]]

    :param n: number of bits
    :type n: int

    :return: normalized QUBO without decoding metadata
    :rtype: Qubo

    """

    # Initialize
    entries: Dict[Entry, Fraction] = {}

    # Process
    for i, j, weight in weights:
        key = (min(i, j), max(i, j))
        entries[key] = entries.get(key, Fraction(0)) + as_rational(weight)

    return Qubo(
        n=n,
        entries={k: v for k, v in sorted(entries.items()) if v != 0},
        offset=as_rational(offset),
        scale=as_rational(scale)
    )


def integer_matrix(qubo: Qubo) -> Tuple[np.ndarray, int]:

    """

    Dense upper-triangular matrix of the weights multiplied by their common
    denominator.

    :raises GuardExceeded: when a partial sum could leave the int64 range

    :return: (n × n int64 matrix, denominator)
    :rtype: Tuple[np.ndarray, int]

    """

    # Initialize
    denominator: int = common_denominator(qubo.entries.values())
    matrix:      np.ndarray = np.zeros((qubo.n, qubo.n), dtype=np.int64)
    magnitude:   int = 0

    # Process
    for (i, j), weight in qubo.entries.items():
        scaled = weight * denominator
        magnitude += abs(int(scaled))
        matrix[i, j] = int(scaled)
    if magnitude >= constant.INT64_SAFE_LIMIT:
        raise GuardExceeded(f"QUBO weights sum to {magnitude}, beyond exact int64 arithmetic")

    return matrix, denominator


def export_bqm(qubo: Qubo) -> dimod.BinaryQuadraticModel:

    """

    BINARY vartype model labelled by QUBO index; weights become floats.

    """

    # Initialize
    bqm = dimod.BinaryQuadraticModel(dimod.BINARY)

    # Process
    bqm.add_variables_from((i, 0.0) for i in range(qubo.n))
    for (i, j), weight in qubo.entries.items():
        if i == j:
            bqm.add_linear(i, float(weight))
        else:
            bqm.add_quadratic(i, j, float(weight))
    bqm.offset = float(qubo.offset)

    return bqm
