"""

代入フォレスト S を提供する

消去された変数を残った変数のアフィン式で表す代入の集合
依存関係（target → 式に現れる変数）は networkx の有向グラフとして保持し、
閉路の検出と評価順序（トポロジカル順）の決定に利用する

- Substitution: target := expr
- SubstitutionForest: 代入の順序付きリスト
- check_addition(): 代入を追加できるか確認する

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Tuple

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from fractions import Fraction

# SECTION: Packages(Third-Party)
import networkx as nx

# SECTION: Packages(Local)
from flatzinc_qubo.ir.expr import AffineExpr, eval_affine
from flatzinc_qubo.utils.errors import ModelError, SubstitutionError


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Substitution:
    target: int
    expr:   AffineExpr


@dataclass(frozen=True, slots=True)
class SubstitutionForest:

    """

    Ordered, acyclic set of substitutions. Each target is defined once; the
    leaves of the dependency graph are the live model variables.

    - add() -> SubstitutionForest: new forest with one more substitution
    - resolve_assignment() -> Dict[int, int]: values for every eliminated variable

    """

    substitutions: Tuple[Substitution, ...] = ()
    graph:         nx.DiGraph               = field(default_factory=nx.DiGraph, compare=False, repr=False)

    # SECTION: Constructors
    @classmethod
    def from_substitutions(cls, substitutions: Iterable[Substitution]) -> "SubstitutionForest":

        """

        Builds a forest from an ordered list, checking every addition.

        :raises SubstitutionError: duplicate target or cycle

        """

        # Initialize
        graph: nx.DiGraph = nx.DiGraph()
        items: Tuple[Substitution, ...] = tuple(substitutions)

        # Process
        for item in items:
            check_addition(graph, item.target, item.expr)
            link(graph, item.target, item.expr)

        return cls(items, graph)

    # SECTION: Properties
    @property
    def targets(self) -> FrozenSet[int]:
        return frozenset(s.target for s in self.substitutions)

    def __len__(self) -> int:
        return len(self.substitutions)

    def __iter__(self) -> Iterator[Substitution]:
        return iter(self.substitutions)

    def __contains__(self, target: object) -> bool:
        return target in self.targets

    def definition(self, target: int) -> AffineExpr:
        for item in self.substitutions:
            if item.target == target:
                return item.expr
        raise KeyError(target)

    # SECTION: Operations
    def add(self, target: int, expr: AffineExpr) -> "SubstitutionForest":

        """

        :param target: variable being eliminated
        :type target: int

        :param expr: its definition over other variables
        :type expr: AffineExpr

        :raises SubstitutionError: duplicate target or cycle

        :return: new forest with the substitution appended
        :rtype: SubstitutionForest

        """

        # Initialize
        graph: nx.DiGraph = self.graph.copy()

        # Process
        check_addition(graph, target, expr)
        link(graph, target, expr)

        return SubstitutionForest((*self.substitutions, Substitution(target, expr)), graph)

    def evaluation_order(self) -> Tuple[int, ...]:

        """

        Targets ordered so that every target comes after the targets it depends on.

        """

        # Initialize
        targets: FrozenSet[int] = self.targets

        # Process
        return tuple(v for v in reversed(list(nx.topological_sort(self.graph))) if v in targets)

    def resolve_assignment(self, leaf_values: Mapping[int, int]) -> Dict[int, int]:

        """

        Evaluates every substitution bottom-up.

        :param leaf_values: values of the live variables
        :type leaf_values: Mapping[int, int]

        :raises SubstitutionError: when a leaf is unassigned or a value is not integral

        :return: leaf values extended with every eliminated variable
        :rtype: Dict[int, int]

        """

        # Initialize
        values:      Dict[int, int] = dict(leaf_values)
        definitions: Dict[int, AffineExpr] = {s.target: s.expr for s in self.substitutions}
        value:       Fraction

        # Process
        for target in self.evaluation_order():
            try:
                value = eval_affine(definitions[target], values)
            except ModelError as e:
                raise SubstitutionError(f"cannot resolve v{target}: {e}") from e
            if value.denominator != 1:
                raise SubstitutionError(f"substitution for v{target} evaluates to non-integer {value}")
            values[target] = int(value)

        return values


# SECTION: Public Functions
def check_addition(graph: nx.DiGraph, target: int, expr: AffineExpr) -> None:

    """

    :raises SubstitutionError: when `target` already has a definition, occurs in
        its own definition, or is reachable from one of the variables of `expr`

    """

    # Process
    if graph.nodes.get(target, {}).get("defined"):
        raise SubstitutionError(f"v{target} is already substituted")
    for var_id in expr.variables():
        if var_id == target:
            raise SubstitutionError(f"cycle: v{target} occurs in its own definition")
        if graph.has_node(var_id) and graph.has_node(target) and nx.has_path(graph, var_id, target):
            raise SubstitutionError(f"cycle: v{target} is reachable from v{var_id}")


def link(graph: nx.DiGraph, target: int, expr: AffineExpr) -> None:
    graph.add_node(target, defined=True)
    for var_id in expr.variables():
        graph.add_edge(target, var_id)
