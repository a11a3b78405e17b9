# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

DOCUMENTATION = """
command: spectrum
short_description: Characteristic polynomial of a construct, checked against the exact oracle.
description:
  - Runs the best applicable regime (C(no_inner), C(regular) or C(general)) for the construct and
    compares the result with the characteristic polynomial of the assembled adjacency matrix,
    computed exactly by modular reduction and Chinese remaindering.
  - Exits with code 1 when the two polynomials differ or when a float regime cannot round its
    product to integers within C(tol).
  - With C(oracle_only) the exact characteristic polynomial of a graph file is printed and
    nothing else is run.
version_added: 1.0.0
options:
  target:
    description:
      - C(family <name>); see the C(family) command.
    type: list
  decomp:
    description:
      - Decomposition JSON file.
    type: path
  cyls:
    description:
      - Cylinder JSON file or comma separated built-in names.
    type: str
  oracle_only:
    description:
      - Graph JSON file (C({"n": ..., "edges": [...]})) whose exact characteristic polynomial is wanted.
    type: path
  regime:
    description:
      - Force one regime instead of the best applicable one.
    choices: [no_inner, regular, general, tensor]
    type: str
  factored:
    description:
      - Add the per-j factorization in readable form.
    type: bool
    default: false
  tol:
    description:
      - Largest distance to the nearest integers accepted when rounding a float product.
    type: float
    default: 1e-6
    env: CYLSPEC_TOL
  root_tol:
    description:
      - Width of the isolating intervals when real roots are listed.
    type: float
    default: 1e-10
    env: CYLSPEC_ROOT_TOL
  jobs:
    description:
      - Worker threads for per-j factors, sample points and primes.
    type: int
    default: 1
    env: CYLSPEC_JOBS
"""

EXAMPLES = r"""
# 130-vertex rooted family, a Ramanujan graph
cylspec spectrum family sym-rooted --h 2

# the Petersen graph through the K_2-cylinders
cylspec spectrum family gi --n 5 --ks 1,2

# only the exact characteristic polynomial of a graph file
cylspec spectrum --oracle-only graph.json

# per-j factors as text
cylspec spectrum family coxeter --factored --format text
"""

RETURN = """
regime:
  description: The regime that produced the theorem side.
  returned: unless oracle_only
  type: str
  sample: no_inner
prefactor:
  description: Inner-vertex factors with their exponents.
  returned: unless oracle_only
  type: list
factors:
  description: Per-j factors as coefficient lists, ascending powers.
  returned: for the float regimes
  type: list
product:
  description: Theorem-side characteristic polynomial.
  returned: unless oracle_only
  type: dict
oracle:
  description: Exact characteristic polynomial of the assembled adjacency matrix.
  returned: always
  type: dict
match:
  description: Whether both sides agree coefficient by coefficient.
  returned: unless oracle_only
  type: bool
is_ramanujan:
  description: Ramanujan check of the construct.
  returned: when the construct is connected and regular
  type: bool
factored_text:
  description: Readable per-j factorization.
  returned: when factored is set
  type: list
"""

from cylspec.algebra import charpoly_exact, real_roots
from cylspec.errors import CylspecError, PrecisionError
from cylspec.families import ramanujan_check
from cylspec.graph import Graph
from cylspec.module_utils.common import COMMON_ARGUMENT_SPEC, RC_MISMATCH, RC_OK, CommandModule
from cylspec.module_utils.targets import TARGET_ARGUMENT_SPEC, resolve_target
from cylspec.module_utils.utils import load_json
from cylspec.spectra import EXACT_ROOT_DEGREE, REGIMES, compare_with_oracle


def oracle_only(module, path):
    graph = Graph.from_json(load_json(path))
    poly = charpoly_exact(graph.adj, module.config.jobs)
    result = {"vertices": graph.n, "degree": poly.degree, "oracle": poly.to_json(), "oracle_text": str(poly)}
    if poly.degree <= EXACT_ROOT_DEGREE:
        roots = real_roots(poly, module.config.root_tol)
        result["roots"] = [{"value": r, "multiplicity": m} for r, m in roots]
    return result


def report_result(report, factored_text):
    factored = report.factored
    result = {
        "regime": report.regime,
        "vertices": report.construct.vertex_count,
        "product": report.theorem_poly.to_json(),
        "oracle": report.oracle_poly.to_json(),
        "match": report.match,
        "max_coeff_diff": str(report.max_coeff_diff),
        "eig_max_diff": report.eig_max_diff,
        "prefactor": [],
        "factors": [],
    }
    if factored is not None:
        data = factored.to_json()
        result.update(prefactor=data["prefactor"], factors=data["factors"], residual=factored.residual, dps=factored.dps)
        if factored_text:
            result["factored_text"] = factored.render().splitlines()
    return result


def main(argv=None):
    """main entry point for command execution"""
    argument_spec = dict(COMMON_ARGUMENT_SPEC)
    argument_spec.update(TARGET_ARGUMENT_SPEC)
    argument_spec.update(
        oracle_only=dict(type="path", input=True),
        regime=dict(type="str", choices=list(REGIMES)),
        factored=dict(type="bool", default=False),
    )
    module = CommandModule("spectrum", argument_spec, argv, description="spectrum of a construct")
    params, config = module.params, module.config
    if params["oracle_only"]:
        try:
            result = oracle_only(module, params["oracle_only"])
        except CylspecError as exc:
            module.fail_json(msg=str(exc))
        module.exit_json(**result)
    try:
        target = resolve_target(params, config.seed)
    except CylspecError as exc:
        module.fail_json(msg=str(exc))
    try:
        report = compare_with_oracle(
            target.decomposition,
            target.cylinders,
            tol=config.tol,
            jobs=config.jobs,
            regime=params["regime"],
            root_tol=config.root_tol,
        )
    except PrecisionError as exc:
        module.fail_json(msg=str(exc), rc=RC_MISMATCH, residual=exc.residual, match=False)
    except CylspecError as exc:
        module.fail_json(msg=str(exc))
    result = report_result(report, params["factored"])
    result["target"] = target.label
    graph = report.construct.graph
    d = graph.regular_degree
    if d is not None and d > 0 and graph.is_connected():
        ramanujan = ramanujan_check(graph, d)
        result.update(is_ramanujan=ramanujan.is_ramanujan, ramanujan=ramanujan.to_json())
    if not report.match:
        module.warn("theorem side and oracle differ by %s" % report.max_coeff_diff)
    module.exit_json(rc=RC_OK if report.match else RC_MISMATCH, **result)
