# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

# utils

import json
from fractions import Fraction

from cylspec.algebra import Polynomial, RationalFunction
from cylspec.errors import ArgumentError


def int_range_to_list(values, unique=True):
    """``"1,3-5"`` or ``["1", "3-5"]`` to ``[1, 3, 4, 5]``, keeping the given order.

    Step sizes of a circulant are ordered (part i gets cylinder i), so unlike
    a plain range expansion nothing is sorted.
    """
    result = []
    if not values:
        return result
    if isinstance(values, str):
        values = values.split(",")
    for part in values:
        part = str(part).strip()
        if not part:
            continue
        try:
            if "-" in part:
                a, b = part.split("-")
                result.extend(range(int(a), int(b) + 1))
            else:
                result.append(int(part))
        except ValueError:
            raise ArgumentError("'%s' is not an integer or an integer range a-b" % part)
    if unique and len(set(result)) != len(result):
        raise ArgumentError("'%s' lists a value twice" % ",".join(str(v) for v in result))
    return result


def parse_label(value):
    """One leaf label: a number, a polynomial string such as ``x-2``, or ``{"coeffs": ...}``."""
    if isinstance(value, dict):
        return RationalFunction.from_json(value)
    if isinstance(value, (int, float)):
        return RationalFunction.of(Fraction(value).limit_denominator())
    if isinstance(value, list):
        return RationalFunction.of(Polynomial([Fraction(c) for c in value]))
    text = str(value).replace(" ", "")
    try:
        if text.startswith("x"):
            return RationalFunction.of(Polynomial.x() + Fraction(text[1:] or "0"))
        return RationalFunction.of(Fraction(text))
    except ValueError:
        raise ArgumentError("'label' value %r is invalid. Valid values are numbers, 'x+c' or coefficient lists" % value)


def parse_labels(text):
    """A JSON list of leaf labels, or ``uniform:<label>:<count>``."""
    if isinstance(text, str) and text.startswith("uniform:"):
        try:
            _, label, count = text.split(":")
            count = int(count)
        except ValueError:
            raise ArgumentError("'labels' value %r is invalid. Valid form is uniform:<label>:<count>" % text)
        return [parse_label(label)] * count
    if isinstance(text, str):
        try:
            text = json.loads(text)
        except ValueError as exc:
            raise ArgumentError("'labels' is not valid JSON: %s" % exc)
    if not isinstance(text, list):
        raise ArgumentError("'labels' must be a JSON list")
    return [parse_label(v) for v in text]


def load_json(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise ArgumentError("cannot read %s: %s" % (path, exc.strerror))
    except ValueError as exc:
        raise ArgumentError("%s is not valid JSON: %s" % (path, exc))
