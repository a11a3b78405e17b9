# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

DOCUMENTATION = """
command: family
short_description: Generate a named construct family.
description:
  - Emits the family description (decomposition, cylinder names, step sizes) together with the
    DOT text of the assembled construct.
  - C(coxeter) is the Coxeter graph on 28 vertices. C(gi) is the GI-graph with circulant order
    C(n) and step sizes C(ks). C(petersen) is the generalized Petersen graph GP(C(n), k) with
    k the first entry of C(ks). C(sym-unrooted) and C(sym-rooted) are the symmetric tree
    families of height C(h).
version_added: 1.0.0
options:
  name:
    description:
      - Family name.
    required: true
    choices: [coxeter, gi, petersen, sym-unrooted, sym-rooted]
    type: str
  n:
    description:
      - Circulant order for C(gi) and C(petersen).
    type: int
  ks:
    description:
      - Step sizes, comma separated, ranges allowed (C(1-3)).
    type: str
  h:
    description:
      - Tree height for the symmetric families. 2^(h+2)+1 (unrooted) or 3*2^h+1 (rooted) must be prime.
    type: int
    default: 2
  profile:
    description:
      - Add the per-j factor grouping and the count of eigenvalues outside the Ramanujan interval.
    type: bool
    default: false
"""

EXAMPLES = r"""
cylspec family coxeter
cylspec family gi --n 5 --ks 1,2
cylspec family sym-unrooted --h 2 --profile
cylspec family sym-rooted --h 2 --format dot --out rooted-h2.dot
"""

RETURN = """
family:
  description: Family description with the decomposition and the cylinder names.
  returned: success
  type: dict
ks:
  description: Step size of the circulant part that receives cylinder i.
  returned: success
  type: list
  sample: [1, 5, 3, 2, 4, 6]
vertices:
  description: Vertex count of the construct.
  returned: success
  type: int
girth:
  description: Girth of the construct, null for forests.
  returned: success
  type: int
connected:
  description: Whether the construct is connected.
  returned: success
  type: bool
dot:
  description: DOT text of the construct.
  returned: success
  type: str
profile:
  description: Groups of equal per-j factors, their spread and the uniform term comparison.
  returned: when profile is set
  type: dict
outliers:
  description: Per-j number of eigenvalues outside the Ramanujan interval.
  returned: when profile is set and the construct is regular
  type: dict
"""

import math

from cylspec.errors import CylspecError
from cylspec.families import FAMILIES, factor_profile, family_by_name, ramanujan_outliers
from cylspec.graph import girth
from cylspec.module_utils.common import COMMON_ARGUMENT_SPEC, CommandModule
from cylspec.module_utils.utils import int_range_to_list


def main(argv=None):
    """main entry point for command execution"""
    argument_spec = dict(COMMON_ARGUMENT_SPEC)
    argument_spec.update(
        name=dict(type="str", positional=True, required=True, choices=list(FAMILIES)),
        n=dict(type="int"),
        ks=dict(type="str"),
        h=dict(type="int", default=2),
        profile=dict(type="bool", default=False),
    )
    module = CommandModule("family", argument_spec, argv, description="generate a named family")
    params = module.params
    try:
        spec = family_by_name(params["name"], n=params["n"], ks=int_range_to_list(params["ks"]) or None, h=params["h"])
        construct = spec.assemble()
    except CylspecError as exc:
        module.fail_json(msg=str(exc))
    graph = construct.graph
    g = girth(graph)
    result = {
        "family": spec.to_json(),
        "ks": spec.ks,
        "vertices": construct.vertex_count,
        "edges": graph.m,
        "girth": None if math.isinf(g) else g,
        "connected": graph.is_connected(),
        "dot": construct.to_dot(),
    }
    if params["profile"]:
        result["profile"] = factor_profile(spec)
        if graph.regular_degree is not None:
            result["outliers"] = ramanujan_outliers(spec)
    module.exit_json(**result)
