"""

有限整数ドメインを提供する

- Interval: 区間 [lo, hi]
- ValueSet: 昇順の値集合（穴のあるドメイン）
- make_value_set(): 値の列から ValueSet を作る
- interval_product(): 区間演算による積の包
- domain_to_json() / domain_from_json(): サイドカー用の変換

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

# SECTION: Packages(Built-in)
import math
from dataclasses import dataclass
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.utils.errors import ModelError


# SECTION: Public Classes
@dataclass(frozen=True, slots=True)
class Interval:

    """

    Contiguous integer domain [lo, hi].

    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ModelError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def min(self) -> int:
        return self.lo

    @property
    def max(self) -> int:
        return self.hi

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def is_contiguous(self) -> bool:
        return True

    def values(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, value: object) -> bool:
        return isinstance(value, int) and self.lo <= value <= self.hi

    def shifted(self, delta: int) -> "Interval":
        return Interval(self.lo + delta, self.hi + delta)

    def clamp(self, lo: Optional[int], hi: Optional[int]) -> Optional["Interval"]:

        """

        Intersects with [lo, hi]; None bounds are open.

        :return: narrowed interval, or None when empty
        :rtype: Optional[Interval]

        """

        # Initialize
        new_lo: int = self.lo if lo is None else max(self.lo, lo)
        new_hi: int = self.hi if hi is None else min(self.hi, hi)

        # Process
        if new_lo > new_hi:
            return None
        if new_lo == self.lo and new_hi == self.hi:
            return self

        return Interval(new_lo, new_hi)

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True, slots=True)
class ValueSet:

    """

    Explicit finite set of integers, kept sorted and duplicate-free.

    """

    items: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.items:
            raise ModelError("empty value set")
        if any(a >= b for a, b in zip(self.items, self.items[1:])):
            raise ModelError(f"value set {self.items} is not sorted and distinct")

    @property
    def min(self) -> int:
        return self.items[0]

    @property
    def max(self) -> int:
        return self.items[-1]

    @property
    def size(self) -> int:
        return len(self.items)

    @property
    def is_contiguous(self) -> bool:
        return self.max - self.min + 1 == len(self.items)

    def values(self) -> Iterator[int]:
        return iter(self.items)

    def __contains__(self, value: object) -> bool:
        return value in self.items

    def shifted(self, delta: int) -> "ValueSet":
        return ValueSet(tuple(v + delta for v in self.items))

    def clamp(self, lo: Optional[int], hi: Optional[int]) -> Optional["ValueSet"]:

        # Initialize
        kept: Tuple[int, ...]

        # Process
        kept = tuple(
            v for v in self.items
            if (lo is None or v >= lo) and (hi is None or v <= hi)
        )
        if not kept:
            return None
        if len(kept) == len(self.items):
            return self

        return ValueSet(kept)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.items) + "}"


# SECTION: Types
Domain = Union[Interval, ValueSet]

BINARY: Interval = Interval(0, 1)


# SECTION: Public Functions
def make_value_set(values: Iterable[int]) -> ValueSet:
    return ValueSet(tuple(sorted(set(values))))


def singleton(value: int) -> Interval:
    return Interval(value, value)


def is_singleton(domain: Domain) -> bool:
    return domain.size == 1


def is_binary(domain: Domain) -> bool:

    """

    True when the domain is a subset of {0, 1}.

    """

    return domain.min >= 0 and domain.max <= 1


def clamp_rational(domain: Domain, lo: Optional[Fraction], hi: Optional[Fraction]) -> Optional[Domain]:

    """

    Intersects with a rational interval: lower bounds are rounded up and upper
    bounds down, since every value is an integer.

    :return: narrowed domain or None when it empties
    :rtype: Optional[Domain]

    """

    # Process
    return domain.clamp(
        None if lo is None else math.ceil(lo),
        None if hi is None else math.floor(hi)
    )


def interval_product(left: Domain, right: Domain) -> Interval:

    """

    Hull of {a·b} by interval arithmetic: min and max of the four corner products.
    The same rule is used for squares, so x·x over [−2, 1] gives [−2, 4].

    :rtype: Interval

    """

    # Initialize
    corners: Tuple[int, int, int, int] = (
        left.min * right.min,
        left.min * right.max,
        left.max * right.min,
        left.max * right.max
    )

    # Process
    return Interval(min(corners), max(corners))


def domain_to_json(domain: Domain) -> Dict[str, object]:
    if isinstance(domain, Interval):
        return {"lo": domain.lo, "hi": domain.hi}
    return {"values": list(domain.items)}


def domain_from_json(data: Dict[str, object]) -> Domain:
    if "values" in data:
        return ValueSet(tuple(int(v) for v in data["values"]))  # type: ignore[union-attr]
    return Interval(int(data["lo"]), int(data["hi"]))  # type: ignore[arg-type]
