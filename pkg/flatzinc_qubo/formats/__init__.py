"""

ファイル形式（.qubo / .sub.json / 解のテキスト）を取り扱う

"""


from .qubo_file import check_qubo, load_qubo, read_qubo, save_qubo, write_qubo
from .sidecar import load_sidecar, read_sidecar, save_sidecar, write_sidecar
from .solution import format_bits, format_solution, parse_solution
