"""

コンパイラ全体で使用する例外と診断情報を定義する

- FlatZincQuboError: すべての例外の基底クラス
- Diagnostic: 検証処理が返す診断情報

エラーコード
E100台 FlatZincフロントエンド

- Error: E100 => 構文エラー
- Error: E101 => 名前の重複または未宣言
- Error: E102 => サポート外の構文要素

E200台 モデルの矛盾

- Error: E200 => 制約を満たす割り当てが存在しない

E300台 中間表現

- Error: E300 => モデルの前提条件または不変条件違反
- Error: E301 => 段階タグと内容の不一致
- Error: E302 => 積制約の順序の誤り
- Error: E310 => 代入フォレストの不正

E400台 エンコーディング

- Error: E400 => エンコーディングを適用できない

E500台 ソルバー

- Error: E500 => 探索空間が上限を超えた

E600台 ファイル形式

- Error: E600 => .qubo または解テキストの書式の誤り
- Error: E601 => .qubo の正規化の条件を満たさない
- Error: E602 => .sub.json の内容が壊れている、または .qubo と合わない

E700台 設定

- Error: E700 => 設定値が不正

"""


# SECTION: Packages(Type Annotation)
from typing import Optional, Sequence

# SECTION: Packages(Built-in)
from dataclasses import dataclass


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Diagnostic:

    """

    Single finding reported by validate_subset, check_model or the .qubo checker.

    :param code: stable error code (E1xx, E3xx, E6xx)
    :type code: str

    :param message: human-readable description naming the offending item
    :type message: str

    """

    code:    str
    message: str
    line:    Optional[int] = None
    column:  Optional[int] = None

    def __str__(self) -> str:
        if self.line is None:
            return f"{self.code}: {self.message}"
        if self.column is None:
            return f"{self.code} (line {self.line}): {self.message}"
        return f"{self.code} (line {self.line}, column {self.column}): {self.message}"


class FlatZincQuboError(Exception):

    """

    Base class of every error raised by the package.

    """

    code: str = "E000"


class FznSyntaxError(FlatZincQuboError):

    """

    Raised when the FlatZinc text does not match the accepted grammar.

    """

    code = "E100"

    def __init__(
        self,
        message:  str,
        line:     Optional[int]  = None,
        column:   Optional[int]  = None,
        expected: Sequence[str]  = ()
    ) -> None:

        # Process
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        text = message
        if line is not None:
            text = f"line {line}, column {column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class FznNameError(FlatZincQuboError):

    """

    Raised for duplicate declarations and references to undeclared identifiers.

    """

    code = "E101"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None) -> None:
        self.line = line
        self.column = column
        super().__init__(message if line is None else f"line {line}, column {column}: {message}")


class FznSubsetError(FlatZincQuboError):

    """

    Raised when a parsed model uses an unsupported predicate, or leaves the
    plain-integer subset under strict parsing or lowering.

    """

    code = "E102"

    def __init__(self, diagnostics: Sequence[Diagnostic]) -> None:
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(d.message for d in self.diagnostics))


class Inconsistent(FlatZincQuboError):

    """

    The model has no solution; carries the text of the constraint that proved it.

    """

    code = "E200"

    def __init__(self, constraint: str) -> None:
        self.constraint = constraint
        super().__init__(f"inconsistent: {constraint}")


class ModelError(FlatZincQuboError):

    """

    A pass was called on a model that violates its preconditions.

    """

    code = "E300"


class SubstitutionError(FlatZincQuboError):

    """

    Duplicate target, cycle, or non-integer value in the substitution forest.

    """

    code = "E310"


class EncodingError(FlatZincQuboError):

    """

    The requested encoding cannot represent the variable's domain.

    """

    code = "E400"


class GuardExceeded(FlatZincQuboError):

    """

    An enumeration would exceed its search-space guard.

    """

    code = "E500"


class QuboFormatError(FlatZincQuboError):

    """

    A .qubo or .sub.json file is malformed.

    """

    code = "E600"

    def __init__(self, diagnostics: Sequence[Diagnostic]) -> None:
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class ConfigError(FlatZincQuboError):

    """

    Invalid configuration value.

    """

    code = "E700"
