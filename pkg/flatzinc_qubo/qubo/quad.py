"""

バイナリ変数上の二次式（ペナルティ項の入れ物）

- QuadExpr: 一次項・二次項・定数項

ビット変数なので b·b は b に畳み込み、二次項のキーは常に (小さいID, 大きいID)

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Mapping, Optional, Tuple

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.ir import AffineExpr
from flatzinc_qubo.utils.errors import ModelError
from flatzinc_qubo.utils.rational import RationalLike, as_rational


Pair = Tuple[int, int]


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class QuadExpr:

    """

    Σ aᵢ·bᵢ + Σ a_ij·bᵢ·bⱼ + c over bits. Zero coefficients are dropped and
    squares are folded into the linear part.

    - from_affine() -> QuadExpr: the affine expression itself
    - square() -> QuadExpr: the expanded square of an affine expression
    - evaluate() -> Fraction: value under a 0/1 assignment

    """

    linear:    Mapping[int, Fraction]  = field(default_factory=dict)
    quadratic: Mapping[Pair, Fraction] = field(default_factory=dict)
    constant:  Fraction                = Fraction(0)

    def __post_init__(self) -> None:

        # Initialize
        linear:    Dict[int, Fraction] = {}
        quadratic: Dict[Pair, Fraction] = {}

        # Process
        for var_id, coeff in self.linear.items():
            linear[var_id] = linear.get(var_id, Fraction(0)) + as_rational(coeff)
        for (left, right), coeff in self.quadratic.items():
            if left == right:
                linear[left] = linear.get(left, Fraction(0)) + as_rational(coeff)
                continue
            pair = (min(left, right), max(left, right))
            quadratic[pair] = quadratic.get(pair, Fraction(0)) + as_rational(coeff)

        object.__setattr__(self, "linear", {k: v for k, v in sorted(linear.items()) if v != 0})
        object.__setattr__(self, "quadratic", {k: v for k, v in sorted(quadratic.items()) if v != 0})
        object.__setattr__(self, "constant", as_rational(self.constant))

    # SECTION: Constructors
    @classmethod
    def from_affine(cls, expr: AffineExpr) -> "QuadExpr":
        return cls(dict(expr.terms), {}, expr.constant)

    @classmethod
    def square(cls, expr: AffineExpr) -> "QuadExpr":

        """

        (Σ aᵢbᵢ + c)² = Σ (aᵢ² + 2c·aᵢ)·bᵢ + Σ 2aᵢaⱼ·bᵢbⱼ + c², using bᵢ² = bᵢ.

        """

        # Initialize
        items = list(expr.terms.items())
        linear:    Dict[int, Fraction] = {}
        quadratic: Dict[Pair, Fraction] = {}

        # Process
        for position, (var_id, coeff) in enumerate(items):
            linear[var_id] = coeff * coeff + 2 * expr.constant * coeff
            for other_id, other_coeff in items[position + 1:]:
                quadratic[(var_id, other_id)] = 2 * coeff * other_coeff

        return cls(linear, quadratic, expr.constant * expr.constant)

    # SECTION: Arithmetic
    def __add__(self, other: "QuadExpr") -> "QuadExpr":

        # Initialize
        linear:    Dict[int, Fraction] = dict(self.linear)
        quadratic: Dict[Pair, Fraction] = dict(self.quadratic)

        # Process
        for var_id, coeff in other.linear.items():
            linear[var_id] = linear.get(var_id, Fraction(0)) + coeff
        for pair, coeff in other.quadratic.items():
            quadratic[pair] = quadratic.get(pair, Fraction(0)) + coeff

        return QuadExpr(linear, quadratic, self.constant + other.constant)

    def scaled(self, factor: RationalLike) -> "QuadExpr":

        # Initialize
        value: Fraction = as_rational(factor)

        # Process
        return QuadExpr(
            {k: v * value for k, v in self.linear.items()},
            {k: v * value for k, v in self.quadratic.items()},
            self.constant * value
        )

    # SECTION: Queries
    @property
    def is_zero(self) -> bool:
        return not self.linear and not self.quadratic and self.constant == 0

    def variables(self) -> Tuple[int, ...]:
        return tuple(sorted({*self.linear, *(v for pair in self.quadratic for v in pair)}))

    def evaluate(self, assignment: Mapping[int, int], default: Optional[int] = None) -> Fraction:

        """

        :param assignment: 0/1 value per variable id
        :type assignment: Mapping[int, int]

        :param default: value for variables missing from the assignment (None: raise)
        :type default: Optional[int]

        :raises ModelError: for a missing variable without default

        :rtype: Fraction

        """

        # Initialize
        total: Fraction = self.constant

        # Process
        def value(var_id: int) -> int:
            if var_id in assignment:
                return assignment[var_id]
            if default is None:
                raise ModelError(f"v{var_id} has no value")
            return default

        for var_id, coeff in self.linear.items():
            total += coeff * value(var_id)
        for (left, right), coeff in self.quadratic.items():
            total += coeff * value(left) * value(right)

        return total
