"""
Error types for Dedekind Symbols
Every domain failure derives from DedekindError so front ends can map it in one place
"""


class DedekindError(ValueError):
    """Root of all input and domain errors"""


class ConfigError(DedekindError):
    """Environment configuration could not be parsed"""


class MatrixFormatError(DedekindError):
    """Matrix text is not of the form 'a,b,c,d' or 'a,b,c,d;e'"""


class ArgumentError(DedekindError):
    """An argument is outside the domain of an operation"""


class MembershipError(DedekindError):
    """A matrix is not an element of the requested group"""


class AlphabetError(DedekindError):
    """A word uses letters outside the preset alphabet"""


class PresetError(DedekindError):
    """A preset file is malformed or fails its relation checks"""


class SearchBudgetExceeded(DedekindError):
    """The word search ran out of nodes before reaching the identity"""


class ConvergenceError(DedekindError):
    """A q-series needs more terms than the configured budget"""
