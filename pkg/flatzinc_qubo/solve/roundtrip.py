"""

変換全体の往復検証

- Report: オラクルの判定・復号した解の判定・各段階の統計
- roundtrip_check(): 変換 → 全探索 → 復号 → 元のモデルで検査

合格条件

- オラクルが Infeasible: 変換が Inconsistent を報告する、または最小エネルギー解を復号した点が実行不可能
- オラクルが Optimal: 復号した点が実行可能で、目的関数値がオラクルの最適値と一致する

"""


# SECTION: Packages(Type Annotation)
from typing import Any, Dict, Optional, Tuple

# SECTION: Packages(Built-in)
import logging
from dataclasses import dataclass, field
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.config import CompileConfig
from flatzinc_qubo.constant import constant
from flatzinc_qubo.ir import QipModel
from flatzinc_qubo.pipeline import StageStats, compile_model
from flatzinc_qubo.solve.decode import decode
from flatzinc_qubo.solve.exhaustive import exhaustive_qubo
from flatzinc_qubo.solve.oracle import Infeasible, Optimal, OracleVerdict, brute_force_qip, is_feasible, objective_value
from flatzinc_qubo.utils.errors import Inconsistent
from flatzinc_qubo.utils.rational import format_rational


logger = logging.getLogger(__name__)


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Report:

    """

    :param inconsistent: constraint text when the pipeline raised Inconsistent
    :type inconsistent: Optional[str]

    :param decoded_feasible: the decoded argmin satisfies the source model
    :type decoded_feasible: Optional[bool]

    :param energy_feasible: the decoded argmin passes the energy ≤ hi test
    :type energy_feasible: Optional[bool]

    :param objective_match: decoded objective equals the oracle optimum
    :type objective_match: Optional[bool]

    """

    passed:            bool
    oracle:            OracleVerdict
    inconsistent:      Optional[str]           = None
    energy:            Optional[Fraction]      = None
    argmin_count:      Optional[int]           = None
    decoded_feasible:  Optional[bool]          = None
    energy_feasible:   Optional[bool]          = None
    decoded_objective: Optional[Fraction]      = None
    objective_match:   Optional[bool]          = None
    stages:            Tuple[StageStats, ...]  = field(default_factory=tuple)

    def to_json(self) -> Dict[str, Any]:

        # Initialize
        optimum: Optional[str] = None

        # Process
        if isinstance(self.oracle, Optimal):
            optimum = format_rational(self.oracle.objective)

        return {
            "passed": self.passed,
            "oracle": "optimal" if isinstance(self.oracle, Optimal) else "infeasible",
            "oracle_objective": optimum,
            "inconsistent": self.inconsistent,
            "energy": None if self.energy is None else format_rational(self.energy),
            "argmin_count": self.argmin_count,
            "decoded_feasible": self.decoded_feasible,
            "energy_feasible": self.energy_feasible,
            "decoded_objective": None if self.decoded_objective is None else format_rational(self.decoded_objective),
            "objective_match": self.objective_match,
            "stages": [{"stage": name, **stats} for name, stats in self.stages]
        }


# SECTION: Public Functions
def roundtrip_check(
    model:         QipModel,
    config:        CompileConfig = CompileConfig(),
    max_qubo_bits: int           = constant.EXHAUSTIVE_MAX_BITS,
    check:         bool          = False
) -> Report:

    """

    :param model: lowered model at Stage.RAW
    :type model: QipModel

    :param config: pipeline settings
    :type config: CompileConfig

    :param max_qubo_bits: largest QUBO solved exhaustively
    :type max_qubo_bits: int

    :param check: run check_model after every pipeline stage
    :type check: bool

    :raises GuardExceeded: when the oracle or the QUBO enumeration is too large

    :return: verdicts of both sides
    :rtype: Report

    """

    # Initialize
    oracle: OracleVerdict = brute_force_qip(model)

    # Process
    try:
        compilation = compile_model(model, config, check)
    except Inconsistent as e:
        logger.info("pipeline reported %s", e)
        return Report(passed=isinstance(oracle, Infeasible), oracle=oracle, inconsistent=e.constraint)

    best = exhaustive_qubo(compilation.qubo, max_qubo_bits)
    result = decode(compilation.qubo, best.assignment)
    feasible = is_feasible(model, result.values)
    objective = objective_value(model, result.values) if feasible else None

    if isinstance(oracle, Optimal):
        match: Optional[bool] = feasible and objective == oracle.objective
        passed = bool(match)
    else:
        match = None
        passed = not feasible

    return Report(
        passed=passed,
        oracle=oracle,
        energy=best.energy,
        argmin_count=best.count,
        decoded_feasible=feasible,
        energy_feasible=result.feasible,
        decoded_objective=objective,
        objective_match=match,
        stages=compilation.stages
    )
