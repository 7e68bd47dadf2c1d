"""

FznModel を正規化した FlatZinc テキストに戻す

parse_model(print_model(m)) == m が成り立つ（位置情報は比較対象外）

- print_model(): モデル全体を文字列化する
- print_expr(): 式を文字列化する

"""


# SECTION: Packages(Type Annotation)
from typing import List, Optional, Tuple

# SECTION: Packages(Local)
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


# SECTION: Public Functions
def print_model(model: FznModel) -> str:

    """

    One item per line: parameters, variables, constraints, solve.

    :param model: model to print
    :type model: FznModel

    :return: FlatZinc text ending with a newline
    :rtype: str

    """

    # Initialize
    lines: List[str] = []

    # Process
    lines.extend(_print_param(p) for p in model.parameters)
    lines.extend(_print_var(v) for v in model.variables)
    lines.extend(_print_constraint(c) for c in model.constraints)
    lines.append(_print_solve(model.solve))

    return "\n".join(lines) + "\n"


def print_expr(expr: Expr) -> str:

    # Process
    if isinstance(expr, bool):
        return "true" if expr else "false"
    if isinstance(expr, int):
        return str(expr)
    if isinstance(expr, BoolLit):
        return "true" if expr.value else "false"
    if isinstance(expr, (FloatLit, StringLit)):
        return expr.text
    if isinstance(expr, IntRange):
        return f"{expr.lo}..{expr.hi}"
    if isinstance(expr, IntSet):
        return "{" + ",".join(str(v) for v in expr.values) + "}"
    if isinstance(expr, Ref):
        return expr.name
    if isinstance(expr, IndexRef):
        return f"{expr.name}[{expr.index}]"
    if isinstance(expr, ArrayLit):
        return "[" + ",".join(print_expr(item) for item in expr.items) + "]"
    if isinstance(expr, Call):
        return f"{expr.name}({','.join(print_expr(a) for a in expr.args)})"

    raise TypeError(f"cannot print {expr!r}")


# SECTION: Private Functions
def _print_type(spec: TypeSpec) -> str:
    if spec.bounds is None:
        return spec.base
    if isinstance(spec.bounds, FloatRange):
        return f"{spec.bounds.lo}..{spec.bounds.hi}"
    if spec.base == "set of int":
        return f"set of {print_expr(spec.bounds)}"
    return print_expr(spec.bounds)


def _print_array_prefix(array: Optional[IntRange]) -> str:
    return "" if array is None else f"array [{array.lo}..{array.hi}] of "


def _print_annotations(annotations: Tuple[Expr, ...]) -> str:
    return "".join(f" :: {print_expr(a)}" for a in annotations)


def _print_param(param: ParamDecl) -> str:
    return f"{_print_array_prefix(param.array)}{_print_type(param.type)}: {param.name} = {print_expr(param.value)};"


def _print_var(var: VarDecl) -> str:

    # Initialize
    text: str = f"{_print_array_prefix(var.array)}var {_print_type(var.type)}: {var.name}"

    # Process
    text += _print_annotations(var.annotations)
    if var.value is not None:
        text += f" = {print_expr(var.value)}"

    return text + ";"


def _print_constraint(item: ConstraintItem) -> str:
    return f"constraint {item.predicate}({','.join(print_expr(a) for a in item.args)}){_print_annotations(item.annotations)};"


def _print_solve(item: SolveItem) -> str:

    # Initialize
    goal: str = item.kind

    # Process
    if item.objective is not None:
        goal += f" {print_expr(item.objective)}"

    return f"solve{_print_annotations(item.annotations)} {goal};"
