"""

実行時の設定値を格納するデータクラスを提供する

- Strategy / BinaryRule: エンコーディングの選択肢
- EncodingConfig: バイナリ化の設定
- CompileConfig: 変換パイプライン全体の設定
- AnnealParams: シミュレーテッドアニーリングの設定

既定値はすべて constant.py に定義されている

"""


# SECTION: Packages(Type Annotation)
from typing import Optional

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.utils.errors import ConfigError


# SECTION: Enums
class Strategy(StrEnum):
    AUTO = "auto"
    ONEHOT = "onehot"
    BINARY = "binary"


class BinaryRule(StrEnum):

    """

    RECURSIVE splits the remainder into further power-of-two runs,
    COEFFICIENT closes with a single remainder coefficient.

    """

    RECURSIVE = "recursive"
    COEFFICIENT = "coefficient"


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class EncodingConfig:

    """

    :param strategy: auto picks one-hot for small domains and sets with holes
    :type strategy: Strategy

    :param onehot_threshold: largest domain size encoded one-hot under auto (≥ 2)
    :type onehot_threshold: int

    :param binary_rule: coefficient rule of the self-bounding binary encoding
    :type binary_rule: BinaryRule

    """

    strategy:         Strategy   = Strategy.AUTO
    onehot_threshold: int        = constant.ONEHOT_THRESHOLD
    binary_rule:      BinaryRule = BinaryRule.COEFFICIENT

    def __post_init__(self) -> None:
        if self.onehot_threshold < constant.MIN_ONEHOT_THRESHOLD:
            raise ConfigError(
                f"onehot_threshold must be at least {constant.MIN_ONEHOT_THRESHOLD}, got {self.onehot_threshold}"
            )


@dataclass(frozen=True, slots=True)
class CompileConfig:

    """

    :param encoding: binarization settings
    :type encoding: EncodingConfig

    :param penalty: fixed penalty factor C instead of the computed one
    :type penalty: Optional[Fraction]

    :param propagate: run bounds propagation between inequality elimination and shifting
    :type propagate: bool

    :param iteration_cap: prune-step cap of the propagation (None: 10·|C|·|V|)
    :type iteration_cap: Optional[int]

    """

    encoding:      EncodingConfig     = field(default_factory=EncodingConfig)
    penalty:       Optional[Fraction] = None
    propagate:     bool               = True
    iteration_cap: Optional[int]      = None

    def __post_init__(self) -> None:
        if self.penalty is not None and self.penalty <= 0:
            raise ConfigError(f"penalty must be positive, got {self.penalty}")
        if self.iteration_cap is not None and self.iteration_cap < 0:
            raise ConfigError(f"iteration_cap must not be negative, got {self.iteration_cap}")


@dataclass(frozen=True, slots=True)
class AnnealParams:

    """

    Single-flip Metropolis annealing with a geometric schedule.

    :param seed: 64-bit unsigned seed; restart r draws from SeedSequence([seed, r])
    :type seed: int

    :param initial_temperature: None means 10·max|Q entry|
    :type initial_temperature: Optional[float]

    :param workers: threads running restarts in parallel
    :type workers: int

    :param check_deltas: recompute the full energy after every accepted flip
    :type check_deltas: bool

    """

    seed:                int             = 0
    sweeps:              int             = constant.ANNEAL_SWEEPS
    restarts:            int             = constant.ANNEAL_RESTARTS
    initial_temperature: Optional[float] = None
    final_temperature:   float           = constant.ANNEAL_FINAL_TEMPERATURE
    workers:             int             = constant.ANNEAL_WORKERS
    check_deltas:        bool            = False

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.sweeps < 1 or self.restarts < 1 or self.workers < 1:
            raise ConfigError("sweeps, restarts and workers must be positive")
        if self.final_temperature <= 0:
            raise ConfigError(f"final temperature must be positive, got {self.final_temperature}")
        if self.initial_temperature is not None and self.initial_temperature <= self.final_temperature:
            raise ConfigError(
                f"initial temperature {self.initial_temperature} must exceed final temperature {self.final_temperature}"
            )
