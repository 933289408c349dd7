"""Annotation literal helpers shared by the instance modules."""

import re
from fractions import Fraction
from typing import Sequence

from ..utils.constants import ERROR_ANNOTATION_PARSE, ERROR_ANNOTATION_PARSE_SUGGESTION
from ..utils.error_handler import AnnotationParseError

_INTEGER = re.compile(r"[+-]?\d+")
_FRACTION = re.compile(r"([+-]?\d+)\s*/\s*(\d+)")
_DECIMAL = re.compile(r"[+-]?(\d+\.\d*|\.\d+)")
IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def annotation_error(text: str, instance: str, reason: str) -> AnnotationParseError:
    return AnnotationParseError(
        ERROR_ANNOTATION_PARSE.format(text=text, name=instance, reason=reason),
        "annotation_parse_error", ERROR_ANNOTATION_PARSE_SUGGESTION,
    )


def parse_integer(text: str, instance: str, minimum: int = None) -> int:
    stripped = text.strip()
    if not _INTEGER.fullmatch(stripped):
        raise annotation_error(text, instance, "expected an integer")
    value = int(stripped)
    if minimum is not None and value < minimum:
        raise annotation_error(text, instance, f"value below {minimum}")
    return value


def parse_fraction(text: str, instance: str) -> Fraction:
    """Integers, `p/q` and decimals, all read exactly."""
    stripped = text.strip()
    match = _FRACTION.fullmatch(stripped)
    if match:
        denominator = int(match.group(2))
        if denominator == 0:
            raise annotation_error(text, instance, "zero denominator")
        return Fraction(int(match.group(1)), denominator)
    if _INTEGER.fullmatch(stripped) or _DECIMAL.fullmatch(stripped):
        return Fraction(stripped)
    raise annotation_error(text, instance, "expected an integer, fraction p/q or decimal")


def render_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def check_variable(name: str, variables: Sequence[str], text: str, instance: str) -> str:
    if name not in variables:
        raise annotation_error(text, instance, f"variable '{name}' is not declared")
    return name
