"""

アフィン式 Σ aᵢxᵢ + c を提供する

- AffineExpr: 変数ID → 有理数係数 と定数項
- eval_affine(): 割り当ての下で式を正確に評価する
- line_bounds(): ドメインから式の下限・上限を求める

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Iterable, Mapping, Optional, Tuple

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.ir.domain import Domain
from flatzinc_qubo.utils.errors import ModelError
from flatzinc_qubo.utils.rational import RationalLike, as_rational, common_denominator


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class AffineExpr:

    """

    Immutable affine expression over variable ids. Zero coefficients are
    dropped on construction, so `terms` never stores one.

    - variables() -> Tuple[int, ...]: variables in ascending id order
    - substitute() -> AffineExpr: replaces one variable by another expression
    - scaled() -> AffineExpr: multiplies every coefficient and the constant
    - integral() -> Tuple[AffineExpr, int]: clears all denominators

    """

    terms:    Mapping[int, Fraction] = field(default_factory=dict)
    constant: Fraction               = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms",
            {v: Fraction(c) for v, c in sorted(self.terms.items()) if c != 0}
        )
        object.__setattr__(self, "constant", Fraction(self.constant))

    # SECTION: Constructors
    @classmethod
    def of(cls, terms: Optional[Mapping[int, RationalLike]] = None, constant: RationalLike = 0) -> "AffineExpr":
        return cls({v: as_rational(c) for v, c in (terms or {}).items()}, as_rational(constant))

    @classmethod
    def variable(cls, var_id: int, coeff: RationalLike = 1) -> "AffineExpr":
        return cls.of({var_id: coeff})

    @classmethod
    def const(cls, value: RationalLike) -> "AffineExpr":
        return cls.of({}, value)

    # SECTION: Properties
    @property
    def is_constant(self) -> bool:
        return not self.terms

    def variables(self) -> Tuple[int, ...]:
        return tuple(self.terms)

    def coeff(self, var_id: int) -> Fraction:
        return self.terms.get(var_id, Fraction(0))

    # SECTION: Arithmetic
    def __add__(self, other: "AffineExpr") -> "AffineExpr":

        # Initialize
        terms: Dict[int, Fraction] = dict(self.terms)

        # Process
        for var_id, coeff in other.terms.items():
            terms[var_id] = terms.get(var_id, Fraction(0)) + coeff

        return AffineExpr(terms, self.constant + other.constant)

    def __sub__(self, other: "AffineExpr") -> "AffineExpr":
        return self + other.scaled(-1)

    def __neg__(self) -> "AffineExpr":
        return self.scaled(-1)

    def scaled(self, factor: RationalLike) -> "AffineExpr":
        k = as_rational(factor)
        return AffineExpr({v: c * k for v, c in self.terms.items()}, self.constant * k)

    def substitute(self, var_id: int, replacement: "AffineExpr") -> "AffineExpr":

        """

        Replaces every occurrence of `var_id` by `replacement`.

        :return: the rewritten expression (self when var_id does not occur)
        :rtype: AffineExpr

        """

        # Initialize
        coeff: Fraction = self.terms.get(var_id, Fraction(0))
        rest:  Dict[int, Fraction]

        # Process
        if coeff == 0:
            return self
        rest = {v: c for v, c in self.terms.items() if v != var_id}

        return AffineExpr(rest, self.constant) + replacement.scaled(coeff)

    def integral(self) -> Tuple["AffineExpr", int]:

        """

        :return: the expression multiplied by the least common multiple of its
            denominators, and that multiplier
        :rtype: Tuple[AffineExpr, int]

        """

        # Initialize
        factor: int = common_denominator([*self.terms.values(), self.constant])

        # Process
        return self.scaled(factor), factor

    def format(self, names: Optional[Mapping[int, str]] = None) -> str:

        """

        Renders e.g. "3*x - 2*y + 1" using the given names (ids otherwise).

        """

        # Initialize
        parts: list = []

        # Process
        for var_id, coeff in self.terms.items():
            name = names[var_id] if names is not None and var_id in names else f"v{var_id}"
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = name if magnitude == 1 else f"{magnitude}*{name}"
            parts.append(f"{sign} {body}")
        if self.constant != 0 or not parts:
            sign = "-" if self.constant < 0 else "+"
            parts.append(f"{sign} {abs(self.constant)}")
        text = " ".join(parts)

        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()


# SECTION: Public Functions
def eval_affine(expr: AffineExpr, assignment: Mapping[int, int]) -> Fraction:

    """

    Exact value Σ coeff·value + constant.

    :param expr: expression to evaluate
    :type expr: AffineExpr

    :param assignment: variable id → integer
    :type assignment: Mapping[int, int]

    :raises ModelError: when a variable of the expression is unassigned

    :return: exact value
    :rtype: Fraction

    """

    # Initialize
    total: Fraction = expr.constant

    # Process
    for var_id, coeff in expr.terms.items():
        if var_id not in assignment:
            raise ModelError(f"variable {var_id} is not assigned")
        total += coeff * assignment[var_id]

    return total


def line_bounds(expr: AffineExpr, domains: Mapping[int, Domain]) -> Tuple[Fraction, Fraction]:

    """

    Lower and upper bound of the expression over the domain hulls:
    l takes max(D) for negative coefficients and min(D) for positive ones, u the reverse.

    :return: (l, u) with l ≤ u
    :rtype: Tuple[Fraction, Fraction]

    """

    # Initialize
    low:  Fraction = expr.constant
    high: Fraction = expr.constant

    # Process
    for var_id, coeff in expr.terms.items():
        domain = domains[var_id]
        if coeff > 0:
            low += coeff * domain.min
            high += coeff * domain.max
        else:
            low += coeff * domain.max
            high += coeff * domain.min

    return low, high


def sum_exprs(exprs: Iterable[AffineExpr]) -> AffineExpr:
    total = AffineExpr()
    for expr in exprs:
        total = total + expr
    return total
