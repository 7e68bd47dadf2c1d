"""

有理数（fractions.Fraction）の補助関数を提供する

- as_rational(): int / str / Fraction を Fraction に変換する
- format_rational(): "p" または "p/q" 形式の文字列にする
- parse_rational(): 既約形式の文字列だけを受け付けて Fraction にする
- common_denominator(): 分母の最小公倍数を求める

"""


# SECTION: Packages(Type Annotation)
from typing import Iterable, Union

# SECTION: Packages(Built-in)
import math
from fractions import Fraction

# SECTION: Types
RationalLike = Union[int, str, Fraction]


# SECTION: Public Functions
def as_rational(value: RationalLike) -> Fraction:

    """

    :param value: integer, rational text or Fraction
    :type value: RationalLike

    :return: exact value
    :rtype: Fraction

    """

    # Process
    if isinstance(value, bool):
        return Fraction(int(value))
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:

    """

    Parses "p" or "p/q" and rejects anything that is not already reduced,
    so that printing the result gives back the same text.

    :param text: rational literal
    :type text: str

    :raises ValueError: when the literal is not in reduced form

    :return: exact value
    :rtype: Fraction

    """

    # Initialize
    value: Fraction

    # Process
    value = Fraction(text)
    if str(value) != text:
        raise ValueError(f"rational {text!r} is not in reduced form")

    return value


def common_denominator(values: Iterable[Fraction]) -> int:

    """

    :param values: rationals
    :type values: Iterable[Fraction]

    :return: least common multiple of the denominators (1 for an empty input)
    :rtype: int

    """

    # Initialize
    result: int = 1

    # Process
    for value in values:
        result = math.lcm(result, Fraction(value).denominator)

    return result
