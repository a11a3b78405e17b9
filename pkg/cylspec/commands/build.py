# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

DOCUMENTATION = """
command: build
short_description: Assemble a cylindrical construct and write its adjacency, DOT and vertex manifest.
description:
  - Assembles the construct of a commutative decomposition and a coherent list of cylinders,
    either from a named family or from a decomposition file plus cylinders.
  - Cylinders are validated before assembly; every violated identity is reported and the
    command exits with code 2.
version_added: 1.0.0
options:
  target:
    description:
      - C(family <name>) to build a named family. See the C(family) command for the names.
    type: list
  decomp:
    description:
      - Decomposition JSON, either C({"n": ..., "parts": [[[u, v], ...], ...]}) or
        C({"circulant": {"n": ..., "ks": [...]}}).
    type: path
  cyls:
    description:
      - Cylinder JSON file with a C(cylinders) list, or comma separated built-in names
        such as C(path:3) or C(treeR:2:5).
    type: str
  outdir:
    description:
      - Directory receiving C(adjacency.json), C(construct.dot) and C(manifest.json).
    type: path
  format:
    description:
      - Output format of the result printed on stdout.
    default: json
    choices: [json, dot, text]
    env: CYLSPEC_FORMAT
"""

EXAMPLES = r"""
# 28-vertex Coxeter graph as DOT
cylspec build family coxeter --format dot

# a decomposition file with built-in cylinders
cylspec build --decomp d.json --cyls path:1,path:1 --outdir out/

# an invalid cylinder file exits with rc 2
cylspec build --decomp d.json --cyls broken.json
# {
#     "failed": true,
#     "msg": "cylinder broken: Ebb not symmetric",
#     "violations": [{"cylinder": "broken", "identity": "Ebb = Ebb*", "message": "Ebb not symmetric"}]
# }
"""

RETURN = """
vertices:
  description: Vertex count of the construct.
  returned: success
  type: int
  sample: 28
edges:
  description: Edge count of the construct.
  returned: success
  type: int
construct:
  description: Adjacency as an edge list plus a degree histogram.
  returned: success
  type: dict
manifest:
  description: One row per vertex telling whether it is a base or an inner vertex and where it came from.
  returned: success
  type: list
dot:
  description: DOT text of the construct.
  returned: success
  type: str
files:
  description: Paths written under C(outdir).
  returned: when outdir is given
  type: list
violations:
  description: Every failed cylinder identity.
  returned: when a cylinder is not bsymmetric
  type: list
"""

import json
import math
import os

from cylspec.construct import assemble
from cylspec.errors import CylspecError, ValidationError
from cylspec.graph import girth
from cylspec.module_utils.common import COMMON_ARGUMENT_SPEC, CommandModule
from cylspec.module_utils.targets import TARGET_ARGUMENT_SPEC, resolve_target


def _finite(value):
    return None if math.isinf(value) else value


def write_files(construct, outdir):
    os.makedirs(outdir, exist_ok=True)
    files = {
        "adjacency.json": json.dumps(construct.to_json(), sort_keys=True, indent=2) + "\n",
        "construct.dot": construct.to_dot(),
        "manifest.json": json.dumps(construct.manifest_json(), sort_keys=True, indent=2) + "\n",
    }
    written = []
    for name, text in files.items():
        path = os.path.join(outdir, name)
        with open(path, "w") as handle:
            handle.write(text)
        written.append(path)
    return written


def main(argv=None):
    """main entry point for command execution"""
    argument_spec = dict(COMMON_ARGUMENT_SPEC)
    argument_spec.update(TARGET_ARGUMENT_SPEC)
    argument_spec.update(outdir=dict(type="path"))
    module = CommandModule("build", argument_spec, argv, description="assemble a construct")
    params = module.params
    try:
        target = resolve_target(params, module.config.seed)
        construct = assemble(target.decomposition, target.cylinders)
    except ValidationError as exc:
        module.fail_json(msg=str(exc), identity=exc.identity, violations=exc.violations)
    except CylspecError as exc:
        module.fail_json(msg=str(exc))
    graph = construct.graph
    result = {
        "target": target.label,
        "vertices": construct.vertex_count,
        "edges": graph.m,
        "connected": graph.is_connected(),
        "girth": _finite(girth(graph)),
        "construct": construct.to_json(),
        "manifest": construct.manifest(),
        "dot": construct.to_dot(),
    }
    if params["outdir"]:
        result["files"] = write_files(construct, params["outdir"])
    module.exit_json(**result)
