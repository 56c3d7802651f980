"""Extensions of the p-adic valuation to number fields via residual polynomials."""

from .engine import AnalysisReport, FactorAnalysis, Status, Verdict, VerdictKind, analyze, analyze_factor, dedekind_divides_index
from .errors import InternalError, ParseError, PreconditionError, ValextError
from .intpoly import INFINITY, IntPoly
from .parse import parse_poly

__all__ = [
    'AnalysisReport', 'FactorAnalysis', 'Status', 'Verdict', 'VerdictKind',
    'analyze', 'analyze_factor', 'dedekind_divides_index',
    'InternalError', 'ParseError', 'PreconditionError', 'ValextError',
    'INFINITY', 'IntPoly', 'parse_poly',
]

__version__ = '0.1.0'
