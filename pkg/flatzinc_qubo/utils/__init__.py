"""
Shared helpers: the exception hierarchy with its error codes, the Diagnostic
record returned by the validators, and exact rational helpers built on
`fractions.Fraction`.
"""


from .errors import (
    ConfigError,
    Diagnostic,
    EncodingError,
    FlatZincQuboError,
    FznNameError,
    FznSubsetError,
    FznSyntaxError,
    GuardExceeded,
    Inconsistent,
    ModelError,
    QuboFormatError,
    SubstitutionError
)
from .rational import as_rational, common_denominator, format_rational, parse_rational
