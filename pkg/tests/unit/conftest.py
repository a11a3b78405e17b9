# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import io
import json
import os

import pytest

from cylspec.algebra import Polynomial
from cylspec.cli import run


FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture
def x():
    return Polynomial.x()


@pytest.fixture
def cylspec_cli(monkeypatch):
    """Run the command line in-process; returns (rc, parsed JSON or raw text)."""
    for var in ("CYLSPEC_TOL", "CYLSPEC_ROOT_TOL", "CYLSPEC_JOBS", "CYLSPEC_SEED", "CYLSPEC_FORMAT"):
        monkeypatch.delenv(var, raising=False)

    def invoke(*argv, raw=False):
        out = io.StringIO()
        rc = run([str(a) for a in argv], out)
        text = out.getvalue()
        return rc, (text if raw else json.loads(text))

    return invoke
