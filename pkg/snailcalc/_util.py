"""
snailcalc's internal utilities. Not part of the public API.
"""
import json
import logging
import os
from collections import namedtuple
from fractions import Fraction

from dotenv import load_dotenv
from marshmallow import ValidationError, fields

from .errors import InvalidSetting


#: Largest integer that survives a round trip through an IEEE double.
MAX_SAFE_INTEGER = 2 ** 53 - 1


class Settings(namedtuple('Settings', ['svg_scale', 'svg_margin', 'log_level', 'fuel_factor'])):
    """
    Runtime settings, read from the environment.

    :ivar float svg_scale: SVG user units per axis unit. ``SNAILCALC_SVG_SCALE``.
    :ivar float svg_margin: Blank border around drawings, in axis units. ``SNAILCALC_SVG_MARGIN``.
    :ivar log_level: Logging level name for the command line. ``SNAILCALC_LOG_LEVEL``.
    :ivar int fuel_factor: Multiplier of the rewriting fuel bound. ``SNAILCALC_FUEL_FACTOR``.
    """


DEFAULT_SETTINGS = Settings(svg_scale=40.0, svg_margin=1.0, log_level='WARNING', fuel_factor=64)


def _setting(env, name, convert, default, valid=lambda value: True):
    key = 'SNAILCALC_' + name
    raw = env.get(key)
    if raw is None:
        return default
    try:
        value = convert(raw)
    except ValueError:
        value = None
    if value is None or not valid(value):
        raise InvalidSetting('{}={!r}'.format(key, raw))
    return value


def _level_name(raw):
    name = raw.strip().upper()
    return name if isinstance(logging.getLevelName(name), int) else None


def load_settings(dotenv=True):
    """
    Build :class:`Settings` from environment variables, after loading a ``.env`` file if present.

    :raises InvalidSetting: If a variable does not parse, or is out of range.
    """
    if dotenv:
        load_dotenv()
    env = os.environ
    positive = lambda value: value > 0  # noqa: E731
    return Settings(
        svg_scale=_setting(env, 'SVG_SCALE', float, DEFAULT_SETTINGS.svg_scale, positive),
        svg_margin=_setting(env, 'SVG_MARGIN', float, DEFAULT_SETTINGS.svg_margin, lambda value: value >= 0),
        log_level=_setting(env, 'LOG_LEVEL', _level_name, DEFAULT_SETTINGS.log_level),
        fuel_factor=_setting(env, 'FUEL_FACTOR', int, DEFAULT_SETTINGS.fuel_factor, positive),
    )


def safe_int(value):
    if abs(value) > MAX_SAFE_INTEGER:
        return str(value)
    return value


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def parse_rational(value):
    if isinstance(value, bool):
        raise ValueError('Not a rational: {!r}'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError('Not a rational: {!r}'.format(value))


class SafeInteger(fields.Field):
    """
    Integer field that serializes to a decimal string beyond the 53-bit safe range.
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return safe_int(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            if isinstance(value, bool):
                raise ValueError
            return int(value)
        except (TypeError, ValueError):
            raise ValidationError('Not an integer.')


class Rational(fields.Field):
    """
    Exact rational field. Serialized as ``"num/den"``, or ``"num"`` when integral.
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_rational(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_rational(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValidationError('Not a rational number.')


def dumps(js):
    """
    Deterministic JSON text.
    """
    return json.dumps(js, sort_keys=True)
