"""The Pascal adic transformation and its two-symbol subshift."""

from .errors import PascalAdicError
from .path import Path, adic_inverse_step, adic_step, kink_power, swap_symbols
from .words import basic_word, forward_code

__all__ = [
    "PascalAdicError",
    "Path",
    "adic_step",
    "adic_inverse_step",
    "kink_power",
    "swap_symbols",
    "basic_word",
    "forward_code",
]

__version__ = "0.1.0"
