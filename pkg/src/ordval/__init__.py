"""Exact computations with ordered abelian groups and ordered Hahn series fields."""
from ._errors import NotInGroupError, OrdvalError, ParseError, PreconditionError
from .numeric import QuadExt
from .groups import (
    FinalSegment, FiniteLex, GroupElement, HullElement, OmegaLex, OmegaPlusOneLex, Q, TOP, Z,
    loc, loc_at_least,
)
from .series import DeclaredRealClosed, PlainRationals, QuadraticExt, Series
from .dsl import format_group, parse_element, parse_field, parse_group_expr, parse_series_expr

__version__ = "0.1.0"
