"""

FlatZinc テキストを FznModel に変換する

- parse_model(): テキストをパースし、名前解決まで行う
- parse_file(): ファイルを読み込んで parse_model() を呼ぶ

エラーコード
E100台割り当て

- Error: E100 => 構文エラー（位置と期待されたトークン）
- Error: E101 => 宣言の重複、未宣言の識別子、配列の範囲外参照
- Error: E102 => サポート外の述語（常に検査）、strict=True ではサポート外の要素全般

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Iterable, List, Optional, Tuple, Union

# SECTION: Packages(Built-in)
import logging
from pathlib import Path

# SECTION: Packages(Third-Party)
from lark import Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

# SECTION: Packages(Local)
from flatzinc_qubo.frontend.grammar import get_parser
from flatzinc_qubo.frontend.payload import (
    ArrayLit,
    BoolLit,
    Call,
    ConstraintItem,
    Expr,
    FloatLit,
    FloatRange,
    FznModel,
    IndexRef,
    IntRange,
    IntSet,
    ParamDecl,
    Ref,
    SolveItem,
    StringLit,
    TypeSpec,
    VarDecl
)
from flatzinc_qubo.frontend.validate import check_predicates, validate_subset
from flatzinc_qubo.utils.errors import FznNameError, FznSubsetError, FznSyntaxError


logger = logging.getLogger(__name__)

Item = Union[ParamDecl, VarDecl, ConstraintItem, SolveItem]


# SECTION: Public Functions
def parse_model(text: str, strict: bool = False) -> FznModel:

    """

    Parses FlatZinc text. `%` comments are ignored. Constraints must use a
    predicate from SUPPORTED_PREDICATES.

    :param text: model source
    :type text: str

    :param strict: also run the full validate_subset and raise on any finding
    :type strict: bool

    :raises FznSyntaxError: grammar mismatch, empty domain, misplaced solve item
    :raises FznNameError: duplicate declaration, undeclared identifier
    :raises FznSubsetError: unsupported predicate, or strict mode and the model leaves the supported subset

    :return: parsed model
    :rtype: FznModel

    """

    # Initialize
    items: List[Item]
    model: FznModel

    # Process
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as e:
        raise _syntax_error(e) from e

    items = _FznTransformer().transform(tree)
    model = _assemble(items)
    logger.info(
        "parsed %d parameters, %d variables, %d constraints",
        len(model.parameters), len(model.variables), len(model.constraints)
    )

    diagnostics = validate_subset(model) if strict else check_predicates(model.constraints)
    if diagnostics:
        raise FznSubsetError(diagnostics)

    return model


def parse_file(path: Union[str, Path], strict: bool = False) -> FznModel:
    return parse_model(Path(path).read_text(encoding="utf-8"), strict)


# SECTION: Private Classes
class _FznTransformer(Transformer):

    """

    Parse tree → payload dataclasses. Items carry their source position.

    """

    # SECTION: Items
    def start(self, children: list) -> list:
        return list(children)

    @v_args(meta=True)
    def par_decl(self, meta, children: list) -> ParamDecl:
        (array, spec), name, value = children
        return ParamDecl(str(name), spec, value, array, meta.line, meta.column)

    @v_args(meta=True)
    def var_decl(self, meta, children: list) -> VarDecl:
        (array, spec), name, annotations, value = children
        return VarDecl(str(name), spec, array, annotations, value, meta.line, meta.column)

    @v_args(meta=True)
    def constraint_item(self, meta, children: list) -> ConstraintItem:
        name, args, annotations = children
        return ConstraintItem(str(name), args, annotations, meta.line, meta.column)

    @v_args(meta=True)
    def solve_item(self, meta, children: list) -> SolveItem:
        annotations, (kind, objective) = children
        return SolveItem(kind, objective, annotations, meta.line, meta.column)

    # SECTION: Types
    def scalar_type(self, children: list) -> Tuple[None, TypeSpec]:
        return None, children[0]

    def array_type(self, children: list) -> Tuple[IntRange, TypeSpec]:
        lo, hi, spec = children
        return IntRange(int(lo), int(hi)), spec

    def par_int(self, _: list) -> TypeSpec:
        return TypeSpec("int")

    def par_bool(self, _: list) -> TypeSpec:
        return TypeSpec("bool")

    def par_float(self, _: list) -> TypeSpec:
        return TypeSpec("float")

    def par_set(self, _: list) -> TypeSpec:
        return TypeSpec("set of int")

    var_int = par_int
    var_bool = par_bool
    var_float = par_float

    def var_range(self, children: list) -> TypeSpec:
        return TypeSpec("int", IntRange(int(children[0]), int(children[1])))

    def var_set(self, children: list) -> TypeSpec:
        return TypeSpec("int", children[0])

    def var_float_range(self, children: list) -> TypeSpec:
        return TypeSpec("float", FloatRange(str(children[0]), str(children[1])))

    def var_set_of(self, children: list) -> TypeSpec:
        return TypeSpec("set of int", children[0])

    def set_base(self, children: list) -> Union[None, IntRange, IntSet]:
        if not children:
            return None
        if len(children) == 2:
            return IntRange(int(children[0]), int(children[1]))
        return children[0]

    # SECTION: Solve
    def satisfy(self, _: list) -> Tuple[str, None]:
        return "satisfy", None

    def minimize(self, children: list) -> Tuple[str, Expr]:
        return "minimize", children[0]

    def maximize(self, children: list) -> Tuple[str, Expr]:
        return "maximize", children[0]

    # SECTION: Annotations
    def annotations(self, children: list) -> Tuple[Expr, ...]:
        return tuple(children)

    def ann_name(self, children: list) -> Ref:
        token: Token = children[0]
        return Ref(str(token), token.line, token.column)

    def ann_call(self, children: list) -> Call:
        return Call(str(children[0]), children[1])

    # SECTION: Expressions
    def args(self, children: list) -> Tuple[Expr, ...]:
        return tuple(c for c in children if c is not None)

    def int_list(self, children: list) -> IntSet:
        return IntSet(tuple(int(c) for c in children if c is not None))

    def int_lit(self, children: list) -> int:
        return int(children[0])

    def float_lit(self, children: list) -> FloatLit:
        return FloatLit(str(children[0]))

    def true_lit(self, _: list) -> BoolLit:
        return BoolLit(True)

    def false_lit(self, _: list) -> BoolLit:
        return BoolLit(False)

    def string_lit(self, children: list) -> StringLit:
        return StringLit(str(children[0]))

    def ref(self, children: list) -> Ref:
        token: Token = children[0]
        return Ref(str(token), token.line, token.column)

    def indexed(self, children: list) -> IndexRef:
        token: Token = children[0]
        return IndexRef(str(token), int(children[1]), token.line, token.column)

    def call(self, children: list) -> Call:
        return Call(str(children[0]), children[1])

    def array_lit(self, children: list) -> ArrayLit:
        return ArrayLit(children[0])

    def range_lit(self, children: list) -> IntRange:
        return IntRange(int(children[0]), int(children[1]))

    def set_lit(self, children: list) -> IntSet:
        return children[0]


# SECTION: Private Functions
def _syntax_error(error: UnexpectedInput) -> FznSyntaxError:

    # Initialize
    line:     Optional[int] = getattr(error, "line", None)
    column:   Optional[int] = getattr(error, "column", None)
    expected: Iterable[str] = ()
    message:  str

    # Process
    if isinstance(error, UnexpectedToken):
        message = f"unexpected token {str(error.token)!r}"
        expected = error.expected or ()
        if error.token.type == "$END":
            message = "unexpected end of input"
    elif isinstance(error, UnexpectedCharacters):
        message = f"unexpected character {error.char!r}"
        expected = error.allowed or ()
    elif isinstance(error, UnexpectedEOF):
        message = "unexpected end of input"
        expected = error.expected or ()
    else:
        message = "syntax error"
    if line is not None and line < 0:
        line, column = None, None

    return FznSyntaxError(message, line, column, [str(e) for e in expected])


def _assemble(items: List[Item]) -> FznModel:

    """

    Orders items into a model and resolves names. Every identifier must be
    declared before use; annotation arguments are not resolved.

    """

    # Initialize
    declared:    Dict[str, Optional[IntRange]] = {}
    parameters:  List[ParamDecl]               = []
    variables:   List[VarDecl]                 = []
    constraints: List[ConstraintItem]          = []
    solve:       Optional[SolveItem]           = None

    # Process
    for item in items:
        if solve is not None:
            raise FznSyntaxError("item after solve item", item.line, item.column)
        if isinstance(item, (ParamDecl, VarDecl)):
            if constraints:
                raise FznSyntaxError(f"declaration of {item.name} after constraints", item.line, item.column)
            if item.name in declared:
                raise FznNameError(f"duplicate declaration of {item.name}", item.line, item.column)
            _check_declaration(item)
            if item.value is not None:
                _resolve(item.value, declared)
            declared[item.name] = item.array
            (parameters if isinstance(item, ParamDecl) else variables).append(item)
        elif isinstance(item, ConstraintItem):
            for arg in item.args:
                _resolve(arg, declared)
            constraints.append(item)
        else:
            if item.objective is not None:
                _resolve(item.objective, declared)
            solve = item

    if solve is None:
        raise FznSyntaxError("missing solve item")

    return FznModel(tuple(parameters), tuple(variables), tuple(constraints), solve)


def _check_declaration(item: Union[ParamDecl, VarDecl]) -> None:

    # Initialize
    bounds = item.type.bounds

    # Process
    if isinstance(bounds, IntRange) and bounds.lo > bounds.hi:
        raise FznSyntaxError(f"empty domain {bounds.lo}..{bounds.hi} for {item.name}", item.line, item.column)
    if isinstance(bounds, IntSet) and not bounds.values:
        raise FznSyntaxError(f"empty domain {{}} for {item.name}", item.line, item.column)
    if item.array is not None and isinstance(item.value, ArrayLit):
        size = max(0, item.array.hi - item.array.lo + 1)
        if size != len(item.value.items):
            raise FznSyntaxError(
                f"array {item.name} has {len(item.value.items)} elements but index set {item.array.lo}..{item.array.hi}",
                item.line, item.column
            )


def _resolve(expr: Expr, declared: Dict[str, Optional[IntRange]]) -> None:

    # Process
    if isinstance(expr, Ref):
        if expr.name not in declared:
            raise FznNameError(f"undeclared identifier {expr.name}", expr.line, expr.column)
    elif isinstance(expr, IndexRef):
        if expr.name not in declared:
            raise FznNameError(f"undeclared identifier {expr.name}", expr.line, expr.column)
        index_set = declared[expr.name]
        if index_set is None or not index_set.lo <= expr.index <= index_set.hi:
            raise FznNameError(f"index {expr.index} out of range for {expr.name}", expr.line, expr.column)
    elif isinstance(expr, ArrayLit):
        for item in expr.items:
            _resolve(item, declared)
