"""
A module that imports constants for use in the compiler.

The `constant` module holds the default encoding threshold, propagation cap,
solver guards, annealing schedule and file suffixes used throughout the
package, so every pass and the command-line interface share one set of values.
"""


from flatzinc_qubo.constant import constant
