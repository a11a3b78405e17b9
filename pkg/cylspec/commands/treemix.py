# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

DOCUMENTATION = """
command: treemix
short_description: Mix leaf labels up a complete 3-regular tree.
description:
  - Propagates rational-function leaf labels to the root (rooted shape) or to the two centers
    (unrooted shape) and prints the product of every level together with the final polynomial.
  - With C(oracle) and leaf labels of the form C(x - c), the polynomial is also compared with the
    exact characteristic polynomial of the tree adjacency plus C(diag(c)) on the leaves.
version_added: 1.0.0
options:
  shape:
    description:
      - Tree shape.
    choices: [rooted, unrooted]
    default: rooted
    type: str
  height:
    description:
      - Tree height, at least 1.
    required: true
    type: int
  labels:
    description:
      - JSON list with one label per leaf. A label is a number, a string C(x-2), an ascending
        coefficient list, or a C({"num": ..., "den": ...}) rational function.
        C(uniform:<label>:<count>) repeats one label.
    required: true
    type: str
  oracle:
    description:
      - Compare with the exact characteristic polynomial of the shifted tree.
    type: bool
    default: false
"""

EXAMPLES = r"""
# all leaves shifted by 2: the uniform term of the rooted family with h = 2
cylspec treemix --shape rooted --height 2 --labels uniform:x-2:6 --oracle

cylspec treemix --shape unrooted --height 1 --labels '["x-1", "x", "x+1", "x-1/2"]'
"""

RETURN = """
per_level:
  description: Product of the labels of each level, root level first.
  returned: success
  type: list
polynomial:
  description: Characteristic polynomial produced by the mixing.
  returned: success
  type: dict
polynomial_text:
  description: The same polynomial, readable.
  returned: success
  type: str
match:
  description: Whether the mixing polynomial equals the exact characteristic polynomial.
  returned: when oracle is set
  type: bool
"""

from cylspec.algebra import charpoly_rational
from cylspec.errors import ArgumentError, CylspecError
from cylspec.module_utils.common import COMMON_ARGUMENT_SPEC, RC_MISMATCH, RC_OK, CommandModule
from cylspec.module_utils.utils import parse_labels
from cylspec.treemix import SHAPES, mixing_charpoly, shifted_tree_matrix, tree_mix


def leaf_shifts(labels):
    """c for every label x - c; ArgumentError for anything else."""
    shifts = []
    for label in labels:
        num = label.num
        if not label.is_polynomial or num.degree != 1 or num.leading != 1:
            raise ArgumentError("oracle comparison needs leaf labels of the form x - c, got %s" % label)
        shifts.append(-num.coeffs[0] if num.coeffs else 0)
    return shifts


def main(argv=None):
    """main entry point for command execution"""
    argument_spec = dict(COMMON_ARGUMENT_SPEC)
    argument_spec.update(
        shape=dict(type="str", default="rooted", choices=list(SHAPES)),
        height=dict(type="int", required=True),
        labels=dict(type="str", required=True),
        oracle=dict(type="bool", default=False),
    )
    module = CommandModule("treemix", argument_spec, argv, description="tree mixing")
    params = module.params
    shape, h = params["shape"], params["height"]
    try:
        labels = parse_labels(params["labels"])
        _, mixed = tree_mix(shape, h, labels)
        poly = mixing_charpoly(shape, h, labels)
        oracle = None
        if params["oracle"]:
            oracle = charpoly_rational(shifted_tree_matrix(shape, h, leaf_shifts(labels)))
    except CylspecError as exc:
        module.fail_json(msg=str(exc))
    result = {
        "shape": shape,
        "height": h,
        "per_level": [r.to_json() for r in mixed.per_level],
        "per_level_text": [str(r) for r in mixed.per_level],
        "polynomial": poly.to_json(),
        "polynomial_text": str(poly),
    }
    rc = RC_OK
    if oracle is not None:
        result.update(oracle=oracle.to_json(), match=oracle == poly)
        rc = RC_OK if oracle == poly else RC_MISMATCH
    module.exit_json(rc=rc, **result)
