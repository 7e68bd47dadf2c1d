"""
Interface class bundles the compiler and the solvers behind one object.

The instance keeps the compile and annealing settings so that converting a
FlatZinc file and solving or checking the result take a single call each.
"""


# SECTION: Packages(Type Annotation)
from typing import ClassVar, Type, Union

# SECTION: Packages(Built-in)
from dataclasses import dataclass, field
from pathlib import Path

# SECTION: Packages(Local)
from flatzinc_qubo.config import AnnealParams, CompileConfig
from flatzinc_qubo.frontend import lower_to_qip, parse_file
from flatzinc_qubo.pipeline import Compilation, Compiler
from flatzinc_qubo.qubo import Qubo
from flatzinc_qubo.solve import Report, SolveResult, Solver


# SECTION: Public Classes
@dataclass(slots=True)
class Interface:

    """
    Provides the compile / solve / verify workflow.

    :param config: pipeline settings used by convert() and roundtrip()
    :type config: CompileConfig

    :param params: annealing settings used by solve(method="anneal")
    :type params: AnnealParams
    """

    config: CompileConfig = field(default_factory=CompileConfig)
    params: AnnealParams  = field(default_factory=AnnealParams)

    compiler: ClassVar[Type[Compiler]] = Compiler
    solver:   ClassVar[Type[Solver]]   = Solver

    def convert(self, path: Union[str, Path]) -> Compilation:
        return self.compiler.compile_file(path, self.config)

    def solve(self, qubo: Qubo, method: str = "exhaustive") -> SolveResult:

        """
        Solves and decodes a QUBO produced by convert() or restored from its sidecar.

        :param method: "exhaustive" or "anneal"
        :type method: str

        :raises ValueError: for an unknown method
        :raises GuardExceeded: exhaustive search over too many bits
        """

        # Process
        if method == "exhaustive":
            return self.solver.decode(qubo, self.solver.exhaustive(qubo).assignment)
        if method == "anneal":
            return self.solver.decode(qubo, self.solver.anneal(qubo, self.params).assignment)

        raise ValueError(f"unknown method {method!r}")

    def roundtrip(self, path: Union[str, Path]) -> Report:
        return self.solver.roundtrip(lower_to_qip(parse_file(path)), self.config)
