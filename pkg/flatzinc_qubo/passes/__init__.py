"""

QIP(FD) モデルを段階的に書き換えるパスを取り扱う

- propagate: 境界の伝播と単一値変数の消去
- deinequalify: 不等式の消去 (RAW → NO_INEQUALITIES)
- canonicalize: ドメインの正準化 (NO_INEQUALITIES → CANONICAL)
- binarize: バイナリ化 (CANONICAL → BINARY)

"""


from .binarize import binarize_all, binary_encode, binary_encode_coeffs, choose_strategy, onehot_encode
from .canonicalize import canonicalize_all, shift_variable
from .deinequalify import eliminate_inequalities
from .propagate import eliminate_singletons, fixpoint, prune_linear, prune_product
