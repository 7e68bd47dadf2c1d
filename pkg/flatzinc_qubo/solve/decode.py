"""

QUBO の割り当てを元の変数の値に戻す

- SolveResult: エネルギー・各変数の値・目的関数値・実行可能性の判定
- decode(): 置換フォレストを評価して SolveResult を作る

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Optional, Sequence, Tuple

# SECTION: Packages(Built-in)
from dataclasses import dataclass
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.ir import Sense, eval_affine
from flatzinc_qubo.qubo import Qubo
from flatzinc_qubo.solve.energy import energy
from flatzinc_qubo.utils.errors import ModelError


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class SolveResult:

    """

    :param values: value of every registered variable, keyed by id
    :type values: Dict[int, int]

    :param outputs: (name, value) of the output variables in declaration order
    :type outputs: Tuple[Tuple[str, int], ...]

    :param objective: objective in the sense of the source model, None for satisfy
    :type objective: Optional[Fraction]

    :param feasible: energy ≤ upper objective bound, None without bounds
    :type feasible: Optional[bool]

    """

    energy:     Fraction
    bits:       Tuple[int, ...]
    values:     Dict[int, int]
    outputs:    Tuple[Tuple[str, int], ...]
    objective:  Optional[Fraction]
    feasible:   Optional[bool]


# SECTION: Public Functions
def decode(qubo: Qubo, bits: Sequence[int]) -> SolveResult:

    """

    A violated constraint costs at least C > hi − lo, so an assignment is
    feasible exactly when its energy does not exceed hi.

    :param qubo: QUBO carrying its index map and forest
    :type qubo: Qubo

    :param bits: 0/1 per QUBO index
    :type bits: Sequence[int]

    :raises ModelError: length mismatch or missing decoding data
    :raises SubstitutionError: when the forest cannot be resolved

    :rtype: SolveResult

    """

    # Initialize
    value:     Fraction = energy(qubo, bits)
    values:    Dict[int, int]
    objective: Optional[Fraction] = None
    feasible:  Optional[bool] = None

    # Process
    if len(qubo.index_map) != qubo.n:
        raise ModelError("the QUBO has no index map; decoding needs its sidecar")

    values = qubo.forest.resolve_assignment({var_id: int(bits[i]) for i, var_id in enumerate(qubo.index_map)})
    names = {v.id: v.name for v in qubo.variables}

    if qubo.sense is not Sense.SATISFY:
        objective = eval_affine(qubo.objective, values) * qubo.scale
        if qubo.sense is Sense.MAX:
            objective = -objective
    if qubo.objective_bounds is not None:
        feasible = value <= qubo.objective_bounds[1]

    return SolveResult(
        energy=value,
        bits=tuple(int(b) for b in bits),
        values=values,
        outputs=tuple((names.get(v, f"v{v}"), values[v]) for v in qubo.outputs if v in values),
        objective=objective,
        feasible=feasible
    )
