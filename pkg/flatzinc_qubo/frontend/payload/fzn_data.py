"""

FlatZinc の構文木を格納するデータクラスを提供する

位置情報（line / column）は比較対象に含めないので、
parse(print(parse(t))) == parse(t) がそのまま比較できる

- IntRange / IntSet / FloatRange / BoolLit / FloatLit / StringLit: リテラル
- Ref / IndexRef / ArrayLit / Call: 参照・配列・注釈呼び出し
- TypeSpec: 宣言の型（基本型と範囲）
- ParamDecl / VarDecl / ConstraintItem / SolveItem: 各アイテム
- FznModel: モデル全体

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Optional, Tuple, Union

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field


# SECTION: Literals
@dataclass(frozen=True, slots=True)
class IntRange:
    lo: int
    hi: int


@dataclass(frozen=True, slots=True)
class IntSet:
    values: Tuple[int, ...]


@dataclass(frozen=True, slots=True)
class FloatRange:
    lo: str
    hi: str


@dataclass(frozen=True, slots=True)
class BoolLit:
    value: bool


@dataclass(frozen=True, slots=True)
class FloatLit:

    """

    Float literal kept as its source text.

    """

    text: str


@dataclass(frozen=True, slots=True)
class StringLit:
    text: str


# SECTION: References
@dataclass(frozen=True, slots=True)
class Ref:
    name:   str
    line:   Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class IndexRef:
    name:   str
    index:  int
    line:   Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class ArrayLit:
    items: Tuple["Expr", ...]


@dataclass(frozen=True, slots=True)
class Call:

    """

    Annotation term such as output_array([1..3]) or int_search(...).

    """

    name: str
    args: Tuple["Expr", ...] = ()


Expr = Union[int, BoolLit, FloatLit, StringLit, IntRange, IntSet, Ref, IndexRef, ArrayLit, Call]


# SECTION: Declarations
@dataclass(frozen=True, slots=True)
class TypeSpec:

    """

    :param base: "int", "bool", "float" or "set of int"
    :type base: str

    :param bounds: range or explicit set restricting the base type (None: unbounded)
    :type bounds: Union[None, IntRange, IntSet, FloatRange]

    """

    base:   str
    bounds: Union[None, IntRange, IntSet, FloatRange] = None


@dataclass(frozen=True, slots=True)
class ParamDecl:
    name:   str
    type:   TypeSpec
    value:  Expr
    array:  Optional[IntRange] = None
    line:   Optional[int]      = field(default=None, compare=False)
    column: Optional[int]      = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class VarDecl:

    """

    Variable or variable-array declaration.

    :param array: index set for arrays, None for scalars
    :type array: Optional[IntRange]

    :param value: assignment (literal, reference or array of those)
    :type value: Optional[Expr]

    """

    name:        str
    type:        TypeSpec
    array:       Optional[IntRange] = None
    annotations: Tuple[Expr, ...]   = ()
    value:       Optional[Expr]     = None
    line:        Optional[int]      = field(default=None, compare=False)
    column:      Optional[int]      = field(default=None, compare=False)

    @property
    def is_output(self) -> bool:
        return any(
            (isinstance(a, Ref) and a.name == "output_var") or (isinstance(a, Call) and a.name == "output_array")
            for a in self.annotations
        )


@dataclass(frozen=True, slots=True)
class ConstraintItem:
    predicate:   str
    args:        Tuple[Expr, ...]
    annotations: Tuple[Expr, ...] = ()
    line:        Optional[int]    = field(default=None, compare=False)
    column:      Optional[int]    = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class SolveItem:

    """

    :param kind: "satisfy", "minimize" or "maximize"
    :type kind: str

    """

    kind:        str
    objective:   Optional[Expr]   = None
    annotations: Tuple[Expr, ...] = ()
    line:        Optional[int]    = field(default=None, compare=False)
    column:      Optional[int]    = field(default=None, compare=False)


@dataclass(frozen=True, slots=True)
class FznModel:

    """

    Parsed FlatZinc model.

    - bindings() -> Dict[str, object]: parameter name → integer or integer tuple
    - variable() -> VarDecl: declaration by name

    """

    parameters:  Tuple[ParamDecl, ...]
    variables:   Tuple[VarDecl, ...]
    constraints: Tuple[ConstraintItem, ...]
    solve:       SolveItem

    def bindings(self) -> Dict[str, Union[int, Tuple[int, ...]]]:

        # Initialize
        result: Dict[str, Union[int, Tuple[int, ...]]] = {}

        # Process
        for param in self.parameters:
            value = param.value
            if isinstance(value, BoolLit):
                result[param.name] = int(value.value)
            elif isinstance(value, int):
                result[param.name] = value
            elif isinstance(value, ArrayLit) and all(isinstance(v, (int, BoolLit)) for v in value.items):
                result[param.name] = tuple(int(v.value) if isinstance(v, BoolLit) else v for v in value.items)

        return result

    def variable(self, name: str) -> VarDecl:
        for decl in self.variables:
            if decl.name == name:
                return decl
        raise KeyError(name)
