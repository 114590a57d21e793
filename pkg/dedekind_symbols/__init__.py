"""
Dedekind Symbols - exact modular Dedekind symbols and their verification

Exact-arithmetic library with a command line and HTTP front end for:
- Classical Dedekind sums and the eta multiplier on SL(2,Z)
- Modular Dedekind symbols for Gamma_0(N) and the moonshine groups Gamma_0(N)+
- Word problems over the shipped generator presets
- Higher-order symbols modulo Z and their theta companions
- q-series numerics checking every exact value against its analytic definition
"""

__version__ = "1.0.0"
__author__ = "Dedekind Symbols Team"
