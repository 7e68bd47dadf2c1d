"""

FznModel がサポート範囲（整数のみの FlatZinc サブセット）に収まっているか検査する

- SUPPORTED_PREDICATES: 受け付ける述語と引数の数
- check_predicates(): 述語がサポート対象か検査する（パース時に常に実行）
- validate_subset(): 診断情報のリストを返す

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Final, Iterable, List, Set

# SECTION: Packages(Local)
from flatzinc_qubo.frontend.payload import ArrayLit, BoolLit, ConstraintItem, FloatLit, FznModel, IndexRef, Ref, VarDecl
from flatzinc_qubo.utils.errors import Diagnostic, FznSubsetError


# SECTION: Constants
SUPPORTED_PREDICATES: Final[Dict[str, int]] = {
    "int_lin_eq": 3,
    "int_lin_le": 3,
    "int_times": 3,
    "int_eq": 2,
    "int_le": 2,
    "int_lt": 2,
    "int_plus": 3,
    "bool2int": 2,
    "bool_eq": 2,
    "bool_le": 2,
    "bool_lt": 2,
    "bool_not": 2,
    "bool_lin_eq": 3,
    "bool_lin_le": 3,
    "bool_and": 3
}

CODE: Final[str] = FznSubsetError.code


# SECTION: Public Functions
def check_predicates(constraints: Iterable[ConstraintItem]) -> List[Diagnostic]:

    """

    :param constraints: constraint items in source order
    :type constraints: Iterable[ConstraintItem]

    :return: one diagnostic per predicate missing from SUPPORTED_PREDICATES
    :rtype: List[Diagnostic]

    """

    # Initialize
    found: List[Diagnostic] = []

    # Process
    for item in constraints:
        if item.predicate not in SUPPORTED_PREDICATES:
            kind = "reified predicate" if item.predicate.endswith("_reif") else "predicate"
            found.append(Diagnostic(CODE, f"unsupported {kind} {item.predicate}", item.line, item.column))

    return found


def validate_subset(model: FznModel) -> List[Diagnostic]:

    """

    Checks predicates against the whitelist, argument counts, variable types
    and the objective. Reified predicates, float and set variables and
    unbounded integers without an assignment are rejected.

    :param model: parsed model
    :type model: FznModel

    :return: one diagnostic per offending item; empty when the model is supported
    :rtype: List[Diagnostic]

    """

    # Initialize
    found:  List[Diagnostic] = []
    scalar: Dict[str, VarDecl] = {d.name: d for d in model.variables}
    params: Set[str]           = {p.name for p in model.parameters}

    # Process
    for decl in model.variables:
        if decl.type.base == "float":
            found.append(Diagnostic(CODE, f"unsupported float variable {decl.name}", decl.line, decl.column))
        elif decl.type.base == "set of int":
            found.append(Diagnostic(CODE, f"unsupported set variable {decl.name}", decl.line, decl.column))
        elif decl.type.base == "int" and decl.type.bounds is None and not _is_bounded_value(decl, scalar, params):
            found.append(Diagnostic(CODE, f"unbounded integer variable {decl.name}", decl.line, decl.column))

    found.extend(check_predicates(model.constraints))
    for item in model.constraints:
        arity = SUPPORTED_PREDICATES.get(item.predicate)
        if arity is None:
            continue
        if len(item.args) != arity:
            found.append(Diagnostic(
                CODE, f"{item.predicate} expects {arity} arguments, got {len(item.args)}", item.line, item.column
            ))
        elif any(isinstance(a, FloatLit) for a in _flatten(item.args)):
            found.append(Diagnostic(CODE, f"float argument in {item.predicate}", item.line, item.column))

    objective = model.solve.objective
    if objective is not None and not isinstance(objective, (int, BoolLit, Ref, IndexRef)):
        found.append(Diagnostic(CODE, "objective must be a variable or an integer", model.solve.line, model.solve.column))

    return found


# SECTION: Private Functions
def _is_bounded_value(decl: VarDecl, declared: Dict[str, VarDecl], params: Set[str]) -> bool:

    """

    An unbounded `var int` is accepted when it is assigned a literal, a parameter
    or a bounded variable (its domain is then taken from the assignment).

    """

    # Initialize
    value = decl.value

    # Process
    if isinstance(value, ArrayLit):
        return all(_is_bounded_item(item, declared, params, decl.name) for item in value.items)

    return value is not None and _is_bounded_item(value, declared, params, decl.name)


def _is_bounded_item(value: object, declared: Dict[str, VarDecl], params: Set[str], owner: str) -> bool:
    if isinstance(value, (int, BoolLit)):
        return True
    if isinstance(value, (Ref, IndexRef)) and value.name in params:
        return True
    if isinstance(value, Ref) and value.name in declared and value.name != owner:
        target = declared[value.name]
        return target.type.bounds is not None or target.type.base == "bool" or _is_bounded_value(target, declared, params)
    return False


def _flatten(args: tuple) -> list:
    flat: list = []
    for arg in args:
        if isinstance(arg, ArrayLit):
            flat.extend(_flatten(arg.items))
        else:
            flat.append(arg)
    return flat
