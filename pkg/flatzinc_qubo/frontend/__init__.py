"""

FlatZinc（整数のみのサブセット）を読み込み、QIP(FD) 中間表現に変換する機能を取り扱う

- parse_model() / parse_file(): テキストを FznModel にする
- print_model(): FznModel をテキストに戻す
- check_predicates() / validate_subset(): サポート範囲の検査
- lower_to_qip(): FznModel を QipModel にする

"""


from .lower import lower_to_qip
from .parser import parse_file, parse_model
from .payload import FznModel
from .printer import print_expr, print_model
from .validate import SUPPORTED_PREDICATES, check_predicates, validate_subset
