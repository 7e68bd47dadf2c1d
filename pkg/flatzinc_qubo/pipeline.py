"""

FlatZinc から QUBO までの変換パイプライン

- Compilation: 変換結果（Qubo・各段階のモデルと統計）
- compile_model(): QipModel (Stage.RAW) → Qubo
- compile_text() / compile_file(): FlatZinc テキスト・ファイル → Qubo
- Compiler: 上記をまとめたクラスメソッドのインターフェース

段階の順序

1. eliminate_inequalities: スラック変数の導入
2. fixpoint + eliminate_singletons: 境界整合性（CompileConfig.propagate）
3. canonicalize_all: ドメインの最小値を 0 に
4. binarize_all + eliminate_singletons: バイナリ化
5. integer_scale + assemble: QUBO の組み立て

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Tuple, Union

# SECTION: Packages(Built-in)
import logging
from dataclasses import dataclass
from pathlib import Path

# SECTION: Packages(Local)
from flatzinc_qubo.config import CompileConfig
from flatzinc_qubo.frontend import lower_to_qip, parse_file, parse_model
from flatzinc_qubo.ir import QipModel, Stage, check_model
from flatzinc_qubo.passes import (
    binarize_all,
    canonicalize_all,
    eliminate_inequalities,
    eliminate_singletons,
    fixpoint
)
from flatzinc_qubo.qubo import Qubo, assemble, integer_scale
from flatzinc_qubo.utils.errors import ModelError


logger = logging.getLogger(__name__)

StageStats = Tuple[str, Dict[str, Union[int, float]]]


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Compilation:

    """

    :param source: lowered model before any pass
    :type source: QipModel

    :param binary: model handed to QUBO assembly (integer coefficients)
    :type binary: QipModel

    :param stages: (stage name, counts) in pipeline order
    :type stages: Tuple[StageStats, ...]

    """

    source: QipModel
    binary: QipModel
    qubo:   Qubo
    stages: Tuple[StageStats, ...]


class Compiler:

    """

    変換パイプラインのインターフェースを提供する

    - compile_model() -> Compilation
    - compile_text() -> Compilation
    - compile_file() -> Compilation

    """

    @classmethod
    def compile_model(cls, model: QipModel, config: CompileConfig = CompileConfig()) -> Compilation:
        return compile_model(model, config)

    @classmethod
    def compile_text(cls, text: str, config: CompileConfig = CompileConfig()) -> Compilation:
        return compile_text(text, config)

    @classmethod
    def compile_file(cls, path: Union[str, Path], config: CompileConfig = CompileConfig()) -> Compilation:
        return compile_file(path, config)


# SECTION: Public Functions
def compile_model(model: QipModel, config: CompileConfig = CompileConfig(), check: bool = False) -> Compilation:

    """

    :param model: lowered model at Stage.RAW
    :type model: QipModel

    :param config: encoding, penalty and propagation settings
    :type config: CompileConfig

    :param check: run check_model after every stage
    :type check: bool

    :raises Inconsistent: when a stage proves the model infeasible
    :raises ModelError: when check finds a malformed intermediate model

    :return: QUBO and stage statistics
    :rtype: Compilation

    """

    # Initialize
    stages:  List[StageStats] = [("raw", model.summary())]
    current: QipModel

    # Process
    current = _checked(eliminate_inequalities(model), check)
    stages.append(("no_inequalities", current.summary()))

    if config.propagate:
        current = fixpoint(current, config.iteration_cap)
        current, _ = eliminate_singletons(current)
        current = _checked(current, check)
        stages.append(("propagated", current.summary()))

    current = _checked(canonicalize_all(current), check)
    stages.append(("canonical", current.summary()))

    current = binarize_all(current, config.encoding)
    current, _ = eliminate_singletons(current)
    current = _checked(current, check)
    stages.append(("binary", current.summary()))

    current, scale = integer_scale(current)
    qubo = assemble(current, scale, config.penalty)
    stages.append(("qubo", {"bits": qubo.n, "entries": len(qubo.entries), "density": round(qubo.density, 4)}))

    for name, stats in stages:
        logger.info("stage %s: %s", name, ", ".join(f"{k}={v}" for k, v in stats.items()))

    return Compilation(model, current, qubo, tuple(stages))


def compile_text(text: str, config: CompileConfig = CompileConfig()) -> Compilation:
    return compile_model(lower_to_qip(parse_model(text)), config)


def compile_file(path: Union[str, Path], config: CompileConfig = CompileConfig()) -> Compilation:
    return compile_model(lower_to_qip(parse_file(path)), config)


# SECTION: Private Functions
def _checked(model: QipModel, check: bool) -> QipModel:

    # Initialize
    findings = check_model(model) if check else []

    # Process
    if findings:
        raise ModelError(f"malformed model at stage {Stage(model.stage).name}: " + "; ".join(map(str, findings)))

    return model
