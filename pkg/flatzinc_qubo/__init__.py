"""
This package compiles integer FlatZinc models into QUBO matrices and checks
the result against a brute-force search of the original model.

The package provides imports for the following components:
- `Interface`: Compile, solve and verify with one set of settings.
- `Compiler`: The pass pipeline from FlatZinc text to a normalized QUBO.
- `Solver`: Exhaustive and annealing solvers, decoding and the round-trip check.
- `CompileConfig` / `EncodingConfig` / `AnnealParams`: Runtime settings.

The individual passes live in `flatzinc_qubo.passes`, the file formats in
`flatzinc_qubo.formats` and the command line in `flatzinc_qubo.cli`.
"""


from flatzinc_qubo.config import AnnealParams, BinaryRule, CompileConfig, EncodingConfig, Strategy
from flatzinc_qubo.interface import Interface
from flatzinc_qubo.pipeline import Compilation, Compiler, compile_file, compile_model, compile_text
from flatzinc_qubo.qubo import Qubo, export_bqm
from flatzinc_qubo.solve import Solver
from flatzinc_qubo.utils.errors import FlatZincQuboError, GuardExceeded, Inconsistent

__all__ = [
    "Interface",
    "Compiler",
    "Solver",
    "Compilation",
    "Qubo",
    "AnnealParams",
    "BinaryRule",
    "CompileConfig",
    "EncodingConfig",
    "Strategy",
    "FlatZincQuboError",
    "GuardExceeded",
    "Inconsistent",
    "compile_file",
    "compile_model",
    "compile_text",
    "export_bqm"
]
