# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Shared plumbing for the subcommands.

Every subcommand declares an ``argument_spec`` dict; :class:`CommandModule`
turns it into an argparse parser, fills unset options from their environment
fallback and finally renders the result dict through ``exit_json`` or
``fail_json``.
"""

import argparse
import json
import os
from dataclasses import dataclass

import yaml

from cylspec import SCHEMA, __version__
from cylspec.display import Display
from cylspec.errors import ArgumentError


display = Display(__name__)

FORMATS = ("json", "dot", "text")

RC_OK = 0
RC_MISMATCH = 1
RC_INPUT_ERROR = 2

COMMON_ARGUMENT_SPEC = dict(
    tol=dict(type="float", default=1e-6, env="CYLSPEC_TOL"),
    root_tol=dict(type="float", default=1e-10, env="CYLSPEC_ROOT_TOL"),
    jobs=dict(type="int", default=1, env="CYLSPEC_JOBS"),
    seed=dict(type="int", default=42, env="CYLSPEC_SEED"),
    format=dict(type="str", default="json", choices=list(FORMATS), env="CYLSPEC_FORMAT"),
    out=dict(type="path"),
)

_TYPES = {"str": str, "int": int, "float": float, "path": str}


class ModuleExit(Exception):
    """Raised by ``exit_json``/``fail_json``; carries the result and the exit code."""

    def __init__(self, result, rc, config=None):
        super().__init__(result.get("msg", ""))
        self.result = result
        self.rc = rc
        self.config = config


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple = ()
    out: str = None
    tol: float = 1e-6
    root_tol: float = 1e-10
    jobs: int = 1
    seed: int = 42
    format: str = "json"

    def __post_init__(self):
        if not self.tol > 0:
            raise ArgumentError("'tol' value %r is invalid. Valid values are numbers > 0" % (self.tol,))
        if not self.root_tol > 0:
            raise ArgumentError("'root_tol' value %r is invalid. Valid values are numbers > 0" % (self.root_tol,))
        if self.jobs < 1:
            raise ArgumentError("'jobs' value %r is invalid. Valid values are integers >= 1" % (self.jobs,))
        if self.format not in FORMATS:
            raise ArgumentError(
                "'format' value %r is invalid. Valid values are %s" % (self.format, ", ".join(FORMATS))
            )


def _flag(name):
    return "--" + name.replace("_", "-")


def _convert(name, spec, value):
    kind = spec.get("type", "str")
    if value is None:
        return None
    if kind == "bool":
        if isinstance(value, bool):
            return value
        lowered = str(value).lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ArgumentError("'%s' value %r is invalid. Valid values are booleans" % (name, value))
    if kind == "list":
        if isinstance(value, list):
            return value
        return [v for v in str(value).split(",") if v]
    try:
        return _TYPES[kind](value)
    except ValueError:
        raise ArgumentError("'%s' value %r is invalid. Valid values are of type %s" % (name, value, kind))


class CommandModule:
    """Argument handling and result rendering for one subcommand."""

    def __init__(self, name, argument_spec, argv=None, description=None):
        self.name = name
        self.argument_spec = dict(argument_spec)
        self.warnings = []
        self._parser = self._build_parser(description)
        namespace = self._parser.parse_args(list(argv or []))
        self.params = self._resolve(vars(namespace))
        self.config = self._run_config()

    def _build_parser(self, description):
        parser = argparse.ArgumentParser(prog="cylspec %s" % self.name, description=description)
        for name, spec in self.argument_spec.items():
            kind = spec.get("type", "str")
            kwargs = {"help": spec.get("help")}
            if spec.get("positional"):
                kwargs["nargs"] = spec.get("nargs", "?")
                parser.add_argument(name, **kwargs)
                continue
            flags = [_flag(name)] + [_flag(a) for a in spec.get("aliases", [])]
            if kind == "bool" and "env" not in spec:
                kwargs["action"] = "store_true"
                kwargs["default"] = None
            else:
                kwargs["default"] = None
                if spec.get("choices"):
                    kwargs["choices"] = spec["choices"]
            parser.add_argument(*flags, dest=name, **kwargs)
        return parser

    def _resolve(self, raw):
        params = {}
        for name, spec in self.argument_spec.items():
            value = raw.get(name)
            source = "argument"
            if value is None and spec.get("env") and os.environ.get(spec["env"]) is not None:
                value, source = os.environ[spec["env"]], "environment %s" % spec["env"]
            if value is None:
                value, source = spec.get("default"), "default"
            value = _convert(name, spec, value)
            if spec.get("required") and value in (None, [], ""):
                raise ArgumentError("missing required argument: %s" % name)
            choices = spec.get("choices")
            if choices and value is not None and value not in choices:
                raise ArgumentError(
                    "'%s' value %r from %s is invalid. Valid values are %s" % (name, value, source, ", ".join(choices))
                )
            params[name] = value
        display.vvv("%s parameters: %s", self.name, params)
        return params

    def _run_config(self):
        p = self.params
        inputs = tuple(v for k, v in p.items() if self.argument_spec[k].get("input") and v)
        return RunConfig(
            command=self.name,
            inputs=inputs,
            out=p.get("out"),
            tol=p.get("tol", 1e-6),
            root_tol=p.get("root_tol", 1e-10),
            jobs=p.get("jobs", 1),
            seed=p.get("seed", 42),
            format=p.get("format", "json"),
        )

    def warn(self, msg):
        display.warning(msg)
        self.warnings.append(msg)

    def exit_json(self, rc=RC_OK, **result):
        result.setdefault("schema", SCHEMA)
        result.setdefault("version", __version__)
        if self.warnings:
            result["warnings"] = list(self.warnings)
        raise ModuleExit(result, rc, self.config)

    def fail_json(self, msg, rc=RC_INPUT_ERROR, **result):
        result.update(failed=True, msg=msg)
        self.exit_json(rc=rc, **result)


def render(result, fmt="json"):
    """Text form of a result dict; ``dot`` prints the ``dot`` entry when there is one."""
    if fmt == "dot" and result.get("dot"):
        return result["dot"]
    if fmt == "text":
        return yaml.safe_dump(result, sort_keys=True, default_flow_style=False)
    return json.dumps(result, sort_keys=True, indent=2) + "\n"


def write_output(text, path=None, stream=None):
    if path:
        with open(path, "w") as handle:
            handle.write(text)
        return
    stream.write(text)
