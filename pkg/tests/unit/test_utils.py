# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import json
from fractions import Fraction

import pytest
import yaml

from conftest import fixture_path

from cylspec.algebra import Polynomial, RationalFunction
from cylspec.errors import ArgumentError, ValidationError
from cylspec.module_utils.common import (
    COMMON_ARGUMENT_SPEC,
    CommandModule,
    ModuleExit,
    RunConfig,
    render,
)
from cylspec.module_utils.parallel import parallel_map
from cylspec.module_utils.targets import load_cylinders, resolve_target
from cylspec.module_utils.utils import int_range_to_list, load_json, parse_label, parse_labels


def test_int_range_to_list():
    assert int_range_to_list("1,3-5") == [1, 3, 4, 5]
    assert int_range_to_list("5,1") == [5, 1]
    assert int_range_to_list(["2", "4-5"]) == [2, 4, 5]
    assert int_range_to_list(None) == []
    assert int_range_to_list("1,1", unique=False) == [1, 1]
    with pytest.raises(ArgumentError):
        int_range_to_list("1,2-3,3")
    with pytest.raises(ArgumentError):
        int_range_to_list("a")


def test_parse_label(x):
    assert parse_label("x-2") == RationalFunction.of(x - 2)
    assert parse_label("x + 1/2") == RationalFunction.of(x + Fraction(1, 2))
    assert parse_label("x") == RationalFunction.of(x)
    assert parse_label(3) == RationalFunction.of(3)
    assert parse_label("3/2") == RationalFunction.of(Fraction(3, 2))
    assert parse_label([1, 0, 1]) == RationalFunction.of(x**2 + 1)
    rf = RationalFunction(Polynomial.one(), x)
    assert parse_label(rf.to_json()) == rf
    with pytest.raises(ArgumentError):
        parse_label("y-2")


def test_parse_labels(x):
    assert parse_labels("uniform:x-2:3") == [RationalFunction.of(x - 2)] * 3
    assert parse_labels('["x", 2]') == [RationalFunction.of(x), RationalFunction.of(2)]
    with pytest.raises(ArgumentError):
        parse_labels("uniform:x")
    with pytest.raises(ArgumentError):
        parse_labels("[x")
    with pytest.raises(ArgumentError):
        parse_labels('{"a": 1}')


def test_load_json(tmp_path):
    assert load_json(fixture_path("d.json"))["circulant"]["n"] == 5
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(ArgumentError):
        load_json(str(broken))
    with pytest.raises(ArgumentError):
        load_json(str(tmp_path / "missing.json"))


def test_parallel_map_keeps_order():
    assert parallel_map(abs, [-3, 2, -1], jobs=1) == [3, 2, 1]
    assert parallel_map(abs, [-3, 2, -1], jobs=2) == [3, 2, 1]


def test_command_module_defaults():
    module = CommandModule("scratch", COMMON_ARGUMENT_SPEC, [])
    assert module.params["tol"] == 1e-6
    assert module.config.jobs == 1
    assert module.config.format == "json"


def test_command_module_env_fallback(monkeypatch):
    monkeypatch.setenv("CYLSPEC_TOL", "0.5")
    monkeypatch.setenv("CYLSPEC_JOBS", "3")
    module = CommandModule("scratch", COMMON_ARGUMENT_SPEC, ["--tol", "0.25"])
    assert module.params["tol"] == 0.25
    assert module.params["jobs"] == 3


def test_command_module_rejects_bad_env(monkeypatch):
    monkeypatch.setenv("CYLSPEC_FORMAT", "xml")
    with pytest.raises(ArgumentError, match="CYLSPEC_FORMAT"):
        CommandModule("scratch", COMMON_ARGUMENT_SPEC, [])
    monkeypatch.setenv("CYLSPEC_FORMAT", "json")
    monkeypatch.setenv("CYLSPEC_JOBS", "many")
    with pytest.raises(ArgumentError):
        CommandModule("scratch", COMMON_ARGUMENT_SPEC, [])


def test_exit_and_fail_json(monkeypatch):
    monkeypatch.delenv("CYLSPEC_FORMAT", raising=False)
    module = CommandModule("scratch", COMMON_ARGUMENT_SPEC, [])
    module.warn("careful")
    with pytest.raises(ModuleExit) as info:
        module.exit_json(rc=1, value=3)
    assert info.value.rc == 1
    assert info.value.result["value"] == 3
    assert info.value.result["schema"] == "cylspec/1"
    assert info.value.result["warnings"] == ["careful"]
    with pytest.raises(ModuleExit) as info:
        module.fail_json(msg="bad input")
    assert info.value.rc == 2
    assert info.value.result["failed"] is True


def test_run_config_validation():
    with pytest.raises(ArgumentError):
        RunConfig(command="scratch", jobs=0)
    with pytest.raises(ArgumentError):
        RunConfig(command="scratch", tol=0)
    with pytest.raises(ArgumentError):
        RunConfig(command="scratch", format="xml")


def test_render():
    result = {"b": 1, "a": [1, 2], "dot": "graph {}"}
    assert json.loads(render(result)) == result
    assert render(result, "json").index('"a"') < render(result, "json").index('"b"')
    assert yaml.safe_load(render(result, "text")) == result
    assert render(result, "dot") == "graph {}"
    assert json.loads(render({"a": 1}, "dot")) == {"a": 1}


def test_load_cylinders_collects_every_violation():
    with pytest.raises(ValidationError) as info:
        load_cylinders(fixture_path("c_invalid.json"))
    assert [v["identity"] for v in info.value.violations] == ["Ebb = Ebb*", "B = B*"]
    assert [v["cylinder"] for v in info.value.violations] == ["broken", "loop"]
    assert [c.name for c in load_cylinders("path:0, path:2")] == ["path:0", "path:2"]


def test_resolve_target():
    target = resolve_target({"target": ["family", "gi"], "n": 5, "ks": "1,2"})
    assert target.label == "gi"
    assert target.decomposition.n == 5
    target = resolve_target({"decomp": fixture_path("d.json"), "cyls": "pi:0,pi:1"})
    assert target.label == "d.json"
    assert target.family is None
    with pytest.raises(ArgumentError):
        resolve_target({"target": ["graph", "gi"]})
    with pytest.raises(ArgumentError):
        resolve_target({"decomp": fixture_path("d.json")})
