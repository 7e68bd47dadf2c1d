"""

変換前の QIP(FD) モデルを総当たりで解く検証用オラクル

- Optimal / Infeasible: 判定結果
- is_feasible(): 割り当てが元のモデルの制約をすべて満たすか
- objective_value(): 元の向き（maximize ならそのまま最大化の値）での目的関数値
- brute_force_qip(): 全探索による最適解

変換パイプラインのコードは一切使わず、モデルのデータだけを読む

エラーコード
E500台割り当て

- Error: E500 => 探索点数が上限 (ORACLE_MAX_POINTS) を超えた

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Mapping, Optional, Union

# SECTION: Packages(Built-in)
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.ir import AffineExpr, QipModel, Relation, Sense
from flatzinc_qubo.utils.errors import GuardExceeded


logger = logging.getLogger(__name__)


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Optimal:

    """

    :param assignment: value of every live variable of the model
    :type assignment: Dict[int, int]

    :param objective: objective in the sense the model asked for (0 for satisfy)
    :type objective: Fraction

    """

    assignment: Dict[int, int]
    objective:  Fraction


@dataclass(frozen=True, slots=True)
class Infeasible:
    pass


OracleVerdict = Union[Optimal, Infeasible]


# SECTION: Public Functions
def is_feasible(model: QipModel, assignment: Mapping[int, int]) -> bool:

    """

    :param model: model whose constraints are checked
    :type model: QipModel

    :param assignment: values of (at least) the live variables
    :type assignment: Mapping[int, int]

    :return: True when every value lies in its domain and every constraint holds
    :rtype: bool

    """

    # Process
    for var_id in model.live_ids():
        if var_id not in assignment or assignment[var_id] not in model.variables[var_id].domain:
            return False
    for constraint in model.linear:
        value = _value(constraint.expr, assignment)
        if value > 0 or (constraint.relation is Relation.EQ and value != 0):
            return False

    return all(assignment[p.result] == assignment[p.lhs] * assignment[p.rhs] for p in model.products)


def objective_value(model: QipModel, assignment: Mapping[int, int]) -> Fraction:

    # Initialize
    value: Fraction = _value(model.objective.expr, assignment)

    # Process
    return -value if model.objective.sense is Sense.MAX else value


def brute_force_qip(model: QipModel, max_points: int = constant.ORACLE_MAX_POINTS) -> OracleVerdict:

    """

    Enumerates the Cartesian product of the domains of the live variables that
    are not product results; product results are computed from their factors
    in list order. The first minimizer in lexicographic order (ascending ids)
    is returned.

    :param model: model to solve
    :type model: QipModel

    :param max_points: largest number of enumerated points
    :type max_points: int

    :raises GuardExceeded: when the search space exceeds max_points

    :return: Optimal or Infeasible
    :rtype: OracleVerdict

    """

    # Initialize
    results = {p.result for p in model.products}
    free:    List[int] = [v for v in model.live_ids() if v not in results]
    points:  int = math.prod(model.variables[v].domain.size for v in free)
    best:    Optional[Dict[int, int]] = None
    minimum: Optional[Fraction] = None

    # Process
    if points > max_points:
        raise GuardExceeded(f"brute force over {points} points exceeds the limit of {max_points}")

    for values in itertools.product(*(list(model.variables[v].domain.values()) for v in free)):
        point = dict(zip(free, values))
        for product in model.products:
            point[product.result] = point[product.lhs] * point[product.rhs]
        if not is_feasible(model, point):
            continue
        value = _value(model.objective.expr, point)
        if minimum is None or value < minimum:
            minimum, best = value, point

    logger.debug("brute force enumerated %d points", points)
    if best is None:
        return Infeasible()

    return Optimal(best, objective_value(model, best))


# SECTION: Private Functions
def _value(expr: AffineExpr, assignment: Mapping[int, int]) -> Fraction:
    return expr.constant + sum((c * assignment[v] for v, c in expr.terms.items()), Fraction(0))
