"""

flatzinc_qubo で使用する定数を定義する

Encoding Constant ... 整数変数のバイナリ化で使用する定数を定義

- ONEHOT_THRESHOLD: auto戦略でone-hotを選ぶドメインサイズの上限
- MIN_ONEHOT_THRESHOLD: ONEHOT_THRESHOLDに指定できる最小値

Propagation Constant ... 境界整合性の伝播で使用する定数を定義

- ITERATION_CAP_FACTOR: 伝播回数の上限係数（係数 * |制約| * |変数|）

Penalty Constant ... ペナルティ係数の計算で使用する定数を定義

- PENALTY_EPSILON: 整数化後の違反の最小量

Solver Constant ... ソルバーで使用する定数を定義

- EXHAUSTIVE_MAX_BITS: 全探索できるQUBO変数数の上限
- ORACLE_MAX_POINTS: ブルートフォースオラクルが列挙できる点数の上限
- ANNEAL_SWEEPS / ANNEAL_RESTARTS / ANNEAL_FINAL_TEMPERATURE: アニーリングの初期値
- ANNEAL_TEMPERATURE_FACTOR: 初期温度 = 係数 * max|Q|

File Constant ... 入出力ファイルで使用する定数を定義

- QUBO_SUFFIX / SIDECAR_SUFFIX: 出力ファイルの拡張子

"""


# SECTION: Packages(Type Annotation)
from typing import Final

# SECTION: Constants

## SECTION: Encoding Constant
ONEHOT_THRESHOLD:     Final[int] = 4
MIN_ONEHOT_THRESHOLD: Final[int] = 2

## SECTION: Propagation Constant
ITERATION_CAP_FACTOR: Final[int] = 10

## SECTION: Penalty Constant
PENALTY_EPSILON: Final[int] = 1

## SECTION: Solver Constant
EXHAUSTIVE_MAX_BITS:       Final[int]   = 25
ORACLE_MAX_POINTS:         Final[int]   = 10_000_000
ANNEAL_SWEEPS:             Final[int]   = 2000
ANNEAL_RESTARTS:           Final[int]   = 8
ANNEAL_WORKERS:            Final[int]   = 1
ANNEAL_FINAL_TEMPERATURE:  Final[float] = 0.01
ANNEAL_TEMPERATURE_FACTOR: Final[float] = 10.0
INT64_SAFE_LIMIT:          Final[int]   = 2 ** 62

## SECTION: File Constant
QUBO_SUFFIX:    Final[str] = ".qubo"
SIDECAR_SUFFIX: Final[str] = ".sub.json"
QUBO_HEADER:    Final[str] = "QUBO"
OFFSET_HEADER:  Final[str] = "OFFSET"
SCALE_HEADER:   Final[str] = "SCALE"

## SECTION: Logging Constant
LOG_FORMAT: Final[str] = "%(asctime)s %(levelname)s %(name)s: %(message)s"
