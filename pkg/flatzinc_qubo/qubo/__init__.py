"""

バイナリ QIP(FD) から正規化された QUBO を組み立てる機能を取り扱う

- QuadExpr: ペナルティ項
- Qubo / normalize() / export_bqm(): 行列表現
- integer_scale() … assemble(): 変換の各段階

"""


from .matrix import Qubo, export_bqm, integer_matrix, normalize
from .quad import QuadExpr
from .qubofy import (
    assemble,
    equation_penalty,
    integer_scale,
    objective_span,
    penalty_factor,
    quadratize_product
)
