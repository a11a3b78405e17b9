# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import numpy as np
import pytest

from cylspec.checks import (
    CHECKS,
    CheckContext,
    coxeter_expected,
    random_graph,
    random_instance,
    run_checks,
    rooted_h2_expected,
)


QUICK = ["p_n suite", "bsymmetry", "inner vertex spectrum", "i-graph closed form"]


def test_registry():
    names = [name for name, _, _ in CHECKS]
    assert len(names) == len(set(names)) == 10
    assert {name for name, slow, _ in CHECKS if slow} == {"238-vertex golden", "130-vertex golden"}


def test_golden_degrees():
    assert coxeter_expected().degree == 28
    assert rooted_h2_expected().degree == 130


def test_quick_checks_pass():
    results = run_checks(CheckContext(), QUICK)
    assert [r.name for r in results] == ["i-graph closed form", "p_n suite", "bsymmetry", "inner vertex spectrum"]
    assert all(r.ok for r in results), [r.to_json() for r in results if not r.ok]


def test_perturbation_is_noticed():
    ctx = CheckContext(perturb=True)
    results = run_checks(ctx, ["coxeter golden", "p_n suite", "i-graph closed form"])
    assert not any(r.ok for r in results)


def test_quick_run_skips_slow_checks():
    assert not CheckContext().quick
    assert run_checks(CheckContext(quick=True), ["130-vertex golden"]) == []
    results = run_checks(CheckContext(quick=True), ["regime consistency"])
    assert results[0].detail.startswith("12 instances")


def test_random_instances_are_seeded():
    a = random_instance(CheckContext(seed=5).rng(6))
    b = random_instance(CheckContext(seed=5).rng(6))
    assert a[2] == b[2]
    assert a[0].parent == b[0].parent


@pytest.mark.parametrize("n", [2, 5, 7])
def test_random_graph_has_no_isolated_vertex(n):
    g = random_graph(np.random.default_rng(n), n)
    assert g.n == n
    assert min(g.degrees) > 0
