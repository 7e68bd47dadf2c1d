"""

FlatZincの構文木を格納するためのデータクラスを取り扱う

- FznModel: パース結果のモデル全体

"""


from .fzn_data import (
    ArrayLit,
    BoolLit,
    Call,
    ConstraintItem,
    Expr,
    FloatLit,
    FloatRange,
    FznModel,
    IndexRef,
    IntRange,
    IntSet,
    ParamDecl,
    Ref,
    SolveItem,
    StringLit,
    TypeSpec,
    VarDecl
)
