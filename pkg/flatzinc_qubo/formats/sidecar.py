"""

置換フォレストなど復号に必要な情報を保存する .sub.json サイドカー

- write_sidecar() / save_sidecar(): Qubo のメタデータを JSON にする
- read_sidecar() / load_sidecar(): JSON を読み、.qubo から読んだ Qubo に付け加える

キー

- variables: [{id, name, kind, domain}]
- qubo_index: QUBO のインデックス順の変数ID
- substitutions: [{target, terms: [{var, coeff}], constant}]（評価順ではなく記録順）
- outputs: 出力変数ID
- objective_sense / objective: 元の向きと整数化後の目的関数
- penalty_C / objective_bounds: ペナルティ係数と目的関数の範囲 [lo, hi]

エラーコード

- Error: E602 => サイドカーの内容が壊れている、または .qubo と合わない

"""


# SECTION: Packages(Type Annotation)
from typing import Any, Dict, List, Union

# SECTION: Packages(Built-in)
import dataclasses
import json
from pathlib import Path

# SECTION: Packages(Local)
from flatzinc_qubo.ir import AffineExpr, Sense, Substitution, SubstitutionForest, Variable, VarKind
from flatzinc_qubo.ir.domain import domain_from_json, domain_to_json
from flatzinc_qubo.qubo import Qubo
from flatzinc_qubo.utils.errors import Diagnostic, FlatZincQuboError, QuboFormatError
from flatzinc_qubo.utils.rational import format_rational, parse_rational


# SECTION: Constants
SIDECAR: str = "E602"


# SECTION: Public Functions
def write_sidecar(qubo: Qubo) -> str:

    """

    :param qubo: QUBO produced by assemble
    :type qubo: Qubo

    :return: JSON text ending with a newline
    :rtype: str

    """

    # Initialize
    document: Dict[str, Any] = {
        "variables": [
            {"id": v.id, "name": v.name, "kind": v.kind.value, "domain": domain_to_json(v.domain)}
            for v in qubo.variables
        ],
        "qubo_index": list(qubo.index_map),
        "substitutions": [
            {"target": s.target, **_expr_to_json(s.expr)} for s in qubo.forest
        ],
        "outputs": list(qubo.outputs),
        "objective_sense": qubo.sense.value,
        "objective": _expr_to_json(qubo.objective),
        "penalty_C": None if qubo.penalty is None else format_rational(qubo.penalty),
        "objective_bounds": None if qubo.objective_bounds is None else [
            format_rational(b) for b in qubo.objective_bounds
        ]
    }

    # Process
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def save_sidecar(qubo: Qubo, path: Union[str, Path]) -> None:
    Path(path).write_text(write_sidecar(qubo), encoding="utf-8")


def read_sidecar(text: str, qubo: Qubo) -> Qubo:

    """

    :param text: sidecar JSON
    :type text: str

    :param qubo: matrix read from the matching .qubo file
    :type qubo: Qubo

    :raises QuboFormatError: malformed JSON, missing keys or an index map that does not fit the matrix

    :return: qubo with its decoding metadata restored
    :rtype: Qubo

    """

    # Initialize
    document: Dict[str, Any]

    # Process
    try:
        document = json.loads(text)
        variables = tuple(
            Variable(int(v["id"]), str(v["name"]), domain_from_json(v["domain"]), VarKind(v["kind"]))
            for v in document["variables"]
        )
        forest = SubstitutionForest.from_substitutions(
            Substitution(int(s["target"]), _expr_from_json(s)) for s in document["substitutions"]
        )
        index_map = tuple(int(v) for v in document["qubo_index"])
        bounds = document.get("objective_bounds")
        penalty = document.get("penalty_C")
        restored = dataclasses.replace(
            qubo,
            index_map=index_map,
            penalty=None if penalty is None else parse_rational(penalty),
            forest=forest,
            outputs=tuple(int(v) for v in document["outputs"]),
            variables=variables,
            sense=Sense(document["objective_sense"]),
            objective=_expr_from_json(document.get("objective", {"terms": [], "constant": "0"})),
            objective_bounds=None if bounds is None else (parse_rational(bounds[0]), parse_rational(bounds[1]))
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, FlatZincQuboError) as e:
        raise QuboFormatError([Diagnostic(SIDECAR, f"invalid sidecar: {e}")]) from e

    if len(index_map) != qubo.n:
        raise QuboFormatError([Diagnostic(SIDECAR, f"sidecar maps {len(index_map)} bits, the QUBO has {qubo.n}")])

    return restored


def load_sidecar(path: Union[str, Path], qubo: Qubo) -> Qubo:
    return read_sidecar(Path(path).read_text(encoding="utf-8"), qubo)


# SECTION: Private Functions
def _expr_to_json(expr: AffineExpr) -> Dict[str, Any]:
    return {
        "terms": [{"var": v, "coeff": format_rational(c)} for v, c in expr.terms.items()],
        "constant": format_rational(expr.constant)
    }


def _expr_from_json(data: Dict[str, Any]) -> AffineExpr:

    # Initialize
    terms: List[Dict[str, Any]] = data["terms"]

    # Process
    return AffineExpr.of(
        {int(t["var"]): parse_rational(str(t["coeff"])) for t in terms},
        parse_rational(str(data["constant"]))
    )
