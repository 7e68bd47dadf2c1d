"""

受け付ける FlatZinc の文法（lark / LALR）を定義する

- FZN_GRAMMAR: 文法定義
- get_parser(): 文法から作った Lark パーサーを返す（プロセス内で1つだけ作る）

"""


# SECTION: Packages(Type Annotation)
from typing import Final

# SECTION: Packages(Built-in)
import functools

# SECTION: Packages(Third-Party)
from lark import Lark


# SECTION: Constants
FZN_GRAMMAR: Final[str] = r"""
start: item*

?item: par_decl
     | var_decl
     | constraint_item
     | solve_item

par_decl: par_type ":" NAME "=" expr ";"

par_type: par_base                                    -> scalar_type
        | "array" "[" INT ".." INT "]" "of" par_base  -> array_type

par_base: "int"              -> par_int
        | "bool"             -> par_bool
        | "float"            -> par_float
        | "set" "of" "int"   -> par_set

var_decl: var_type ":" NAME annotations ["=" expr] ";"

var_type: "var" var_base                                    -> scalar_type
        | "array" "[" INT ".." INT "]" "of" "var" var_base  -> array_type

var_base: "int"                  -> var_int
        | "bool"                 -> var_bool
        | "float"                -> var_float
        | INT ".." INT           -> var_range
        | "{" int_list "}"       -> var_set
        | FLOAT ".." FLOAT       -> var_float_range
        | "set" "of" set_base    -> var_set_of

set_base: "int"
        | INT ".." INT
        | "{" int_list "}"

constraint_item: "constraint" NAME "(" args ")" annotations ";"

solve_item: "solve" annotations goal ";"

goal: "satisfy"          -> satisfy
    | "minimize" expr    -> minimize
    | "maximize" expr    -> maximize

annotations: ("::" annotation)*

annotation: NAME                  -> ann_name
          | NAME "(" args ")"     -> ann_call

args: [expr ("," expr)*]

int_list: [INT ("," INT)*]

expr: INT                   -> int_lit
    | FLOAT                 -> float_lit
    | "true"                -> true_lit
    | "false"               -> false_lit
    | ESCAPED_STRING        -> string_lit
    | NAME                  -> ref
    | NAME "[" INT "]"      -> indexed
    | NAME "(" args ")"     -> call
    | "[" args "]"          -> array_lit
    | INT ".." INT          -> range_lit
    | "{" int_list "}"      -> set_lit

FLOAT.2: /-?[0-9]+\.[0-9]+([eE][-+]?[0-9]+)?/
       | /-?[0-9]+[eE][-+]?[0-9]+/
INT: /-?[0-9]+/
NAME: /[A-Za-z_][A-Za-z0-9_]*/
COMMENT: /%[^\n]*/

%import common.ESCAPED_STRING
%import common.WS
%ignore WS
%ignore COMMENT
"""


# SECTION: Public Functions
@functools.cache
def get_parser() -> Lark:

    """

    :return: LALR parser with position propagation enabled
    :rtype: Lark

    """

    # Process
    return Lark(FZN_GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=True)
