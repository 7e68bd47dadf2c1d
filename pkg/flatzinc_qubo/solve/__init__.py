"""

QUBO のソルバー（全探索・アニーリング）、復号、検証用オラクルを取り扱う

"""


from .anneal import AnnealResult, anneal_qubo
from .decode import SolveResult, decode
from .energy import energy, matrix_energy
from .exhaustive import ExhaustiveResult, all_energies, bits_of, exhaustive_qubo
from .oracle import Infeasible, Optimal, OracleVerdict, brute_force_qip, is_feasible, objective_value
from .roundtrip import Report, roundtrip_check
from .solver import Solver
