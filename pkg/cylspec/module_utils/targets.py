# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Resolve what a command works on: a named family or a decomposition plus cylinders."""

import os
from dataclasses import dataclass

from cylspec.cylinder import Cylinder, coherent, validate_bsymmetric
from cylspec.errors import ArgumentError, ValidationError
from cylspec.families import FAMILIES, family_by_name
from cylspec.graph import decomposition_from_json
from cylspec.module_utils.utils import int_range_to_list, load_json


TARGET_ARGUMENT_SPEC = dict(
    target=dict(
        type="list",
        positional=True,
        nargs="*",
        help="'family <name>' with name one of %s" % ", ".join(FAMILIES),
    ),
    decomp=dict(type="path", input=True, help="decomposition JSON file"),
    cyls=dict(type="str", input=True, help="cylinder JSON file or comma separated built-in names"),
    n=dict(type="int", help="circulant order for the gi and petersen families"),
    ks=dict(type="str", help="step sizes, e.g. 1,2 or 1-3"),
    h=dict(type="int", help="tree height for the symmetric families"),
)


@dataclass(frozen=True, eq=False)
class Target:
    label: str
    decomposition: object
    cylinders: object
    family: object = None


def load_cylinders(value):
    """Cylinders from a JSON file or from a list of built-in names; every violation is reported."""
    if os.path.exists(value):
        data = load_json(value)
        entries = data.get("cylinders") if isinstance(data, dict) else None
        if not isinstance(entries, list):
            raise ArgumentError("'cylinders' document %s is invalid: expected a 'cylinders' list" % value)
    else:
        entries = [name.strip() for name in value.split(",") if name.strip()]
    cylinders = [Cylinder.from_json(e) for e in entries]
    violations = []
    for c in cylinders:
        violation = validate_bsymmetric(c)
        if violation is not None:
            violations.append(dict(violation.to_json(), cylinder=c.name))
    if violations:
        first = violations[0]
        raise ValidationError(
            "cylinder %s: %s" % (first["cylinder"], first["message"]),
            identity=first["identity"],
            violations=violations,
        )
    return coherent(cylinders)


def resolve_target(params, seed=0):
    words = params.get("target") or []
    if words:
        if words[0] != "family" or len(words) != 2:
            raise ArgumentError("'target' value %r is invalid. Valid form is 'family <name>'" % " ".join(words))
        ks = int_range_to_list(params.get("ks")) or None
        spec = family_by_name(words[1], n=params.get("n"), ks=ks, h=params.get("h"))
        return Target(spec.name, spec.decomposition, spec.cylinders, spec)
    if params.get("decomp") and params.get("cyls"):
        d = decomposition_from_json(load_json(params["decomp"]), seed)
        return Target(os.path.basename(params["decomp"]), d, load_cylinders(params["cyls"]))
    raise ArgumentError("nothing to work on: give 'family <name>' or both --decomp and --cyls")
