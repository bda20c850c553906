"""Prioritized assumption-based argumentation: semantics, translations, checks."""
from .deduction import EMPTY, FULL, ClosureMode, closure, derives, supports
from .defeat import DefeatKind, attacks, d_defeats, set_defeats
from .framework import (OMEGA, Conj, Framework, GuardrailError, Neg, Rule, Valued,
                        is_flat, is_total_order, make_framework, validate)
from .preference import Lifting, lifted_less, lifted_less_conj, min_values, minbar_values
from .semantics import Context, SemanticsKind, enumerate_extensions, solve
from .syntax import ParseError, parse, serialize
from .translate import (PreconditionError, conjunction_closure, single_contrary_reduction,
                        translate_d2f_minbar, translate_d2f_total, translate_r2d)

__version__ = "0.1.0"
