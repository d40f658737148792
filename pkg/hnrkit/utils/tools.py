# -*- coding:utf-8 -*-

"""
Tools Bag.

Date:   2026/10/19
"""

import uuid
import decimal
import datetime

from hnrkit.const import SIGNIFICANT_DIGITS
from hnrkit.error import DomainError


def get_datetime_str(fmt="%Y-%m-%d %H:%M:%S"):
    """Get date time string, year + month + day + hour + minute + second.

    Args:
        fmt: Date format, default is `%Y-%m-%d %H:%M:%S`.

    Returns:
        str_dt: Date time string.
    """
    today = datetime.datetime.today()
    str_dt = today.strftime(fmt)
    return str_dt


def get_uuid1():
    """Generate a UUID based on the host ID and current time

    Returns:
        s: UUID1 string.
    """
    uid1 = uuid.uuid1()
    s = str(uid1)
    return s


def float_to_str(f, p=SIGNIFICANT_DIGITS):
    """Convert the given float to a string with `p` significant digits, locale independent.

    Args:
        f: Float params.
        p: Significant digits, default is 12.

    Returns:
        s: String format data, e.g. `1.57079632679` / `-3.2e-09`.
    """
    if type(f) == str:
        f = float(f)
    f = float(f)
    if f != f:
        return "nan"
    if f in (float("inf"), float("-inf")):
        return "inf" if f > 0 else "-inf"
    s = "{:.{p}g}".format(f, p=p)
    if s == "-0":
        s = "0"
    return s


def exact_float_str(f):
    """Shortest string that reads back to exactly `f`."""
    return repr(float(f))


def parse_range(text):
    """Parse an inclusive grid `LO:HI:STEP`.

    Args:
        text: Range text, e.g. `1.1:10:0.1`.

    Returns:
        values: Grid values, rounded to the decimal places of the inputs so that `0.1` steps stay exact.

    Raises:
        DomainError: Malformed text, non-positive step or HI < LO.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError("range must be LO:HI:STEP, got {!r}".format(text))
    try:
        lo, hi, step = (decimal.Decimal(p.strip()) for p in parts)
    except decimal.InvalidOperation:
        raise DomainError("range must be numeric, got {!r}".format(text))
    if step <= 0:
        raise DomainError("range step must be positive, got {}".format(step))
    if hi < lo:
        raise DomainError("range HI must be >= LO, got {!r}".format(text))
    values = []
    v = lo
    while v <= hi:
        values.append(float(v))
        v += step
    return values


def parse_interval(text):
    """Parse `LO:HI` into a float pair with LO < HI."""
    parts = text.split(":")
    if len(parts) != 2:
        raise DomainError("interval must be LO:HI, got {!r}".format(text))
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise DomainError("interval must be numeric, got {!r}".format(text))
    if not lo < hi:
        raise DomainError("interval needs LO < HI, got {!r}".format(text))
    return lo, hi
