"""

解のテキスト形式（FlatZinc の出力形式に合わせる）

    x = 3;
    y = 0;
    % energy = -2

- format_solution(): 復号済みの解
- format_bits(): サイドカーなしで求解したビット列
- parse_solution(): 出力変数の値とエネルギーを読み戻す

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Optional, Sequence, Tuple

# SECTION: Packages(Built-in)
import re
from fractions import Fraction

# SECTION: Packages(Local)
from flatzinc_qubo.solve import SolveResult
from flatzinc_qubo.utils.errors import Diagnostic, QuboFormatError
from flatzinc_qubo.utils.rational import format_rational, parse_rational


# SECTION: Constants
_ASSIGNMENT = re.compile(r"^(\S+) = (-?\d+);$")
_ENERGY = re.compile(r"^% energy = (\S+)$")


# SECTION: Public Functions
def format_solution(result: SolveResult) -> str:

    # Initialize
    lines: List[str] = [f"{name} = {value};" for name, value in result.outputs]

    # Process
    lines.append(f"% energy = {format_rational(result.energy)}")

    return "\n".join(lines) + "\n"


def format_bits(energy: Fraction, bits: Sequence[int]) -> str:
    return f"% bits = {''.join(str(int(b)) for b in bits)}\n% energy = {format_rational(energy)}\n"


def parse_solution(text: str) -> Tuple[Dict[str, int], Optional[Fraction]]:

    """

    :raises QuboFormatError: for a line that is neither an assignment nor a comment

    :return: output values by name and the energy (None when absent)
    :rtype: Tuple[Dict[str, int], Optional[Fraction]]

    """

    # Initialize
    values: Dict[str, int] = {}
    energy: Optional[Fraction] = None

    # Process
    for number, line in enumerate(text.splitlines(), start=1):
        if match := _ASSIGNMENT.match(line):
            values[match.group(1)] = int(match.group(2))
        elif match := _ENERGY.match(line):
            energy = parse_rational(match.group(1))
        elif line and not line.startswith("%"):
            raise QuboFormatError([Diagnostic("E600", f"unexpected solution line {line!r}", number)])

    return values, energy
