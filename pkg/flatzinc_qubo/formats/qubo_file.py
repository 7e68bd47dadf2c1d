"""

.qubo テキスト形式の読み書きと検査

    QUBO <n> <m>
    OFFSET <有理数>
    SCALE <有理数>
    <i> <j> <有理数>      (m 行, 0 ≤ i ≤ j < n, (i, j) の辞書順)

有理数は既約の "p" または "p/q"、"#" で始まる行はコメント

- write_qubo() / save_qubo(): Qubo をテキストにする
- check_qubo(): 診断情報のリストを返す（空なら正しい形式）
- read_qubo() / load_qubo(): テキストを Qubo にする

エラーコード
E600台割り当て

- Error: E600 => 書式の誤り
- Error: E601 => 正規化の条件を満たさない（下三角・重複・順序・ゼロ係数）

"""


# SECTION: Packages(Type Annotation)
from typing import Dict, List, Optional, Tuple, Union

# SECTION: Packages(Built-in)
from fractions import Fraction
from pathlib import Path

# SECTION: Packages(Local)
from flatzinc_qubo.constant import constant
from flatzinc_qubo.qubo import Qubo
from flatzinc_qubo.utils.errors import Diagnostic, QuboFormatError
from flatzinc_qubo.utils.rational import format_rational, parse_rational


# SECTION: Constants
SYNTAX: str = "E600"
NORMAL: str = "E601"


# SECTION: Public Functions
def write_qubo(qubo: Qubo) -> str:

    """

    :param qubo: normalized QUBO
    :type qubo: Qubo

    :return: file text ending with a newline
    :rtype: str

    """

    # Initialize
    lines: List[str] = [
        f"{constant.QUBO_HEADER} {qubo.n} {len(qubo.entries)}",
        f"{constant.OFFSET_HEADER} {format_rational(qubo.offset)}",
        f"{constant.SCALE_HEADER} {format_rational(qubo.scale)}"
    ]

    # Process
    lines.extend(f"{i} {j} {format_rational(w)}" for (i, j), w in sorted(qubo.entries.items()))

    return "\n".join(lines) + "\n"


def save_qubo(qubo: Qubo, path: Union[str, Path]) -> None:
    Path(path).write_text(write_qubo(qubo), encoding="utf-8")


def check_qubo(text: str) -> List[Diagnostic]:

    """

    :param text: file text
    :type text: str

    :return: findings with line numbers; empty iff the text is a valid normalized QUBO
    :rtype: List[Diagnostic]

    """

    return _scan(text)[1]


def read_qubo(text: str) -> Qubo:

    """

    :raises QuboFormatError: when check_qubo reports anything

    :return: QUBO without decoding metadata
    :rtype: Qubo

    """

    # Initialize
    parsed, found = _scan(text)

    # Process
    if found or parsed is None:
        raise QuboFormatError(found)

    return parsed


def load_qubo(path: Union[str, Path]) -> Qubo:
    return read_qubo(Path(path).read_text(encoding="utf-8"))


# SECTION: Private Functions
def _scan(text: str) -> Tuple[Optional[Qubo], List[Diagnostic]]:

    # Initialize
    found:    List[Diagnostic] = []
    rows:     List[Tuple[int, List[str]]] = []
    entries:  Dict[Tuple[int, int], Fraction] = {}
    previous: Optional[Tuple[int, int]] = None
    header:   Dict[str, Fraction] = {}
    n:        int = 0
    m:        int = 0

    # Process
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((number, line.split()))

    if len(rows) < 3:
        return None, [Diagnostic(SYNTAX, "missing QUBO, OFFSET or SCALE header", rows[-1][0] if rows else 1)]

    (first, size), (second, offset), (third, scale) = rows[:3]
    if len(size) != 3 or size[0] != constant.QUBO_HEADER or not all(_is_count(t) for t in size[1:]):
        found.append(Diagnostic(SYNTAX, "expected 'QUBO <n> <m>'", first))
    else:
        n, m = int(size[1]), int(size[2])
    for number, tokens, name in ((second, offset, constant.OFFSET_HEADER), (third, scale, constant.SCALE_HEADER)):
        value = _rational(tokens[1]) if len(tokens) == 2 and tokens[0] == name else None
        if value is None:
            found.append(Diagnostic(SYNTAX, f"expected '{name} <rational>'", number))
        else:
            header[name] = value
    if header.get(constant.SCALE_HEADER, Fraction(1)) <= 0:
        found.append(Diagnostic(SYNTAX, "scale must be positive", third))

    for number, tokens in rows[3:]:
        if len(tokens) != 3 or not _is_count(tokens[0]) or not _is_count(tokens[1]) or _rational(tokens[2]) is None:
            found.append(Diagnostic(SYNTAX, "expected '<i> <j> <rational>'", number))
            continue
        key = (int(tokens[0]), int(tokens[1]))
        weight = _rational(tokens[2])
        if key[0] > key[1]:
            found.append(Diagnostic(NORMAL, f"entry {key} is below the diagonal", number))
        if key[1] >= n:
            found.append(Diagnostic(NORMAL, f"entry {key} is outside a {n}-bit matrix", number))
        if key in entries:
            found.append(Diagnostic(NORMAL, f"duplicate entry {key}", number))
        elif previous is not None and key < previous:
            found.append(Diagnostic(NORMAL, f"entry {key} is out of order", number))
        if weight == 0:
            found.append(Diagnostic(NORMAL, f"entry {key} has weight 0", number))
        entries[key] = weight  # type: ignore[assignment]
        previous = key

    if len(rows) - 3 != m:
        found.append(Diagnostic(SYNTAX, f"header announces {m} entries, found {len(rows) - 3}", first))
    if found:
        return None, found

    return Qubo(
        n=n,
        entries=entries,
        offset=header[constant.OFFSET_HEADER],
        scale=header[constant.SCALE_HEADER]
    ), []


def _is_count(token: str) -> bool:
    return token.isascii() and token.isdigit() and str(int(token)) == token


def _rational(token: str) -> Optional[Fraction]:
    try:
        return parse_rational(token)
    except (ValueError, ZeroDivisionError):
        return None
