"""Pen-and-paper-inverse modular division and its applications.

Computes ``(u / v) mod beta**s`` least-significant digit first, with
sequential, carry-save and alternated-carry parallel variants, plus exact
division, dmod, multiplication, Hensel codes and periods of rationals.
"""

from .applications import (
    DmodResult,
    HenselCode,
    HenselStream,
    PeriodResult,
    dmod,
    exact_div,
    hensel_code,
    multiplicative_order,
    par_mul,
    rational_period,
)
from .digits import (
    DigitVec,
    beta_complement_digit,
    digit_count,
    digit_mod_inverse,
    from_decimal_string,
    strip_beta_power,
    to_decimal_string,
    truncate_mod_power,
)
from .engine import ParallelMachine, ParTrace, Update, pardo_execute
from .errors import (
    InexactDivisionError,
    InvariantViolation,
    NotInvertibleError,
    PPIError,
    PreconditionError,
    ResourceLimitError,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .par_division import par_modiv, par_ppi_v1, par_ppi_v2
from .seq_division import ModDivProblem, PpiCarry, ppi_sequential, preprocess_numerator, seq_modiv

__version__ = "0.1.0"
