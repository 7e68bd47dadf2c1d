"""

QipModel の不変条件と段階タグの整合性を検査する

- check_model(): 診断情報のリストを返す（空なら整形式）

"""


# SECTION: Packages(Type Annotation)
from typing import FrozenSet, List, Set

# SECTION: Packages(Local)
from flatzinc_qubo.ir.domain import is_binary
from flatzinc_qubo.ir.model import QipModel, Relation, Stage, VarKind
from flatzinc_qubo.utils.errors import Diagnostic


# SECTION: Constants
INVARIANT: str = "E300"
STAGE:     str = "E301"
ORDERING:  str = "E302"


# SECTION: Public Functions
def check_model(model: QipModel) -> List[Diagnostic]:

    """

    Verifies id density, variable kinds, constraint shapes, product ordering,
    forest consistency (targets and definitions use registered ids) and that
    the stage tag matches the content. Ids outside the registry are reported,
    never looked up.

    :param model: model to inspect
    :type model: QipModel

    :return: findings; empty iff the model is well-formed
    :rtype: List[Diagnostic]

    """

    # Initialize
    found:      List[Diagnostic] = []
    names                        = model.names()
    eliminated: FrozenSet[int]   = model.forest.targets
    defined:    Set[int]         = set()

    # Process
    for index, variable in enumerate(model.variables):
        if variable.id != index:
            found.append(Diagnostic(INVARIANT, f"variable {variable.name} has id {variable.id} at position {index}"))
        if variable.kind is VarKind.ENCODING_BIT and not is_binary(variable.domain):
            found.append(Diagnostic(INVARIANT, f"encoding bit {variable.name} has domain {variable.domain}"))

    for variable in model.live_variables():
        if model.stage >= Stage.CANONICAL and variable.domain.min != 0:
            found.append(Diagnostic(STAGE, f"{variable.name} in {variable.domain} is not canonical at stage {model.stage.name}"))
        if model.stage >= Stage.BINARY and not is_binary(variable.domain):
            found.append(Diagnostic(STAGE, f"{variable.name} in {variable.domain} is not binary at stage {model.stage.name}"))

    for constraint in model.linear:
        text = constraint.format(names)
        if constraint.expr.is_constant:
            found.append(Diagnostic(INVARIANT, f"constraint without variables: {text}"))
        if constraint.relation is Relation.LE and model.stage >= Stage.NO_INEQUALITIES:
            found.append(Diagnostic(STAGE, f"inequality {text} at stage {model.stage.name}"))
        for v in constraint.expr.terms:
            if v not in names:
                found.append(Diagnostic(INVARIANT, f"{text} uses unregistered id {v}"))
            elif v in eliminated:
                found.append(Diagnostic(INVARIANT, f"{text} uses eliminated variable {names[v]}"))

    for index, product in enumerate(model.products):
        text = product.format(names)
        unknown = [v for v in (product.result, *product.factors) if v not in names]
        if unknown:
            found.extend(Diagnostic(INVARIANT, f"{text} uses unregistered id {v}") for v in unknown)
            continue
        later = {p.result for p in model.products[index:]}
        for factor in product.factors:
            if factor in later:
                found.append(Diagnostic(ORDERING, f"{text}: factor {names[factor]} is defined by this or a later product"))
        if product.result in defined:
            found.append(Diagnostic(INVARIANT, f"{text}: {names[product.result]} is the result of two products"))
        defined.add(product.result)
        if any(v in eliminated for v in (product.result, *product.factors)):
            found.append(Diagnostic(INVARIANT, f"{text} uses an eliminated variable"))

    for v in model.objective.expr.terms:
        if v not in names:
            found.append(Diagnostic(INVARIANT, f"objective uses unregistered id {v}"))
        elif v in eliminated:
            found.append(Diagnostic(INVARIANT, f"objective uses eliminated variable {names[v]}"))

    for substitution in model.forest:
        label = names.get(substitution.target, f"v{substitution.target}")
        if substitution.target not in names:
            found.append(Diagnostic(INVARIANT, f"substitution target {label} is not a registered variable"))
        found.extend(
            Diagnostic(INVARIANT, f"substitution for {label} uses unregistered id {v}")
            for v in substitution.expr.terms if v not in names
        )

    found.extend(
        Diagnostic(INVARIANT, f"output id {v} is not a registered variable")
        for v in model.outputs if not 0 <= v < len(model.variables)
    )

    return found
