"""

ソルバーと検証機能のインターフェースを提供するモジュール

"""


# SECTION: Packages(Type Annotation)
from typing import Sequence

# SECTION: Packages(Local)
from flatzinc_qubo.config import AnnealParams, CompileConfig
from flatzinc_qubo.constant import constant
from flatzinc_qubo.ir import QipModel
from flatzinc_qubo.qubo import Qubo

from .anneal import AnnealResult, anneal_qubo
from .decode import SolveResult, decode
from .exhaustive import ExhaustiveResult, exhaustive_qubo
from .oracle import OracleVerdict, brute_force_qip
from .roundtrip import Report, roundtrip_check


# SECTION: Public Classes
class Solver:

    """

    QUBO の求解・復号・検証のインターフェースを提供する

    - exhaustive() -> ExhaustiveResult
    - anneal() -> AnnealResult
    - decode() -> SolveResult
    - brute_force() -> OracleVerdict
    - roundtrip() -> Report

    """

    @classmethod
    def exhaustive(cls, qubo: Qubo, max_bits: int = constant.EXHAUSTIVE_MAX_BITS) -> ExhaustiveResult:
        return exhaustive_qubo(qubo, max_bits)

    @classmethod
    def anneal(cls, qubo: Qubo, params: AnnealParams = AnnealParams()) -> AnnealResult:
        return anneal_qubo(qubo, params)

    @classmethod
    def decode(cls, qubo: Qubo, bits: Sequence[int]) -> SolveResult:
        return decode(qubo, bits)

    @classmethod
    def brute_force(cls, model: QipModel) -> OracleVerdict:
        return brute_force_qip(model)

    @classmethod
    def roundtrip(
        cls,
        model:         QipModel,
        config:        CompileConfig = CompileConfig(),
        max_qubo_bits: int           = constant.EXHAUSTIVE_MAX_BITS
    ) -> Report:

        """

        変換と全探索の結果を総当たりのオラクルと照合する
        Inconsistent は例外ではなく Report.inconsistent として返る

        :param model: Stage.RAW のモデル
        :type model: QipModel

        :param config: 変換の設定
        :type config: CompileConfig

        :param max_qubo_bits: 全探索する QUBO のビット数の上限
        :type max_qubo_bits: int

        :raises GuardExceeded: 探索空間が上限を超えた場合

        :return: 照合結果
        :rtype: Report

        """

        return roundtrip_check(model, config, max_qubo_bits)
