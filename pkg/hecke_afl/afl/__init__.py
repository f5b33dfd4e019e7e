from .checks import afl_check, commutativity_report, coprimality_check, fl_check, injectivity_check, kernel_check
from .report import VerificationCase, VerificationReport, jsonable

__all__ = [
    "VerificationCase",
    "VerificationReport",
    "afl_check",
    "commutativity_report",
    "coprimality_check",
    "fl_check",
    "injectivity_check",
    "jsonable",
    "kernel_check",
]
