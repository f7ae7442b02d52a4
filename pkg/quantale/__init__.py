"""
Quantale contract, law verification and finite table-defined carriers
"""

from .core import Quantale, oplus, residuals, check_mix, find_mix_violation
from .laws import EXHAUSTIVE, LAWS, SAMPLED, LawChecker, LawResult, LawReport, verify_laws, replay_counterexample
from .finite import (
    FiniteQuantale,
    BUILTIN_NAMES,
    load_finite_quantale,
    load_finite_quantale_file,
    builtin,
    builtin_path,
)
from .report import ReportGenerator

__all__ = [
    'Quantale',
    'oplus',
    'residuals',
    'check_mix',
    'find_mix_violation',
    'EXHAUSTIVE',
    'LAWS',
    'SAMPLED',
    'LawChecker',
    'LawResult',
    'LawReport',
    'verify_laws',
    'replay_counterexample',
    'FiniteQuantale',
    'BUILTIN_NAMES',
    'load_finite_quantale',
    'load_finite_quantale_file',
    'builtin',
    'builtin_path',
    'ReportGenerator',
]
