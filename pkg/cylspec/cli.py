# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""``cylspec`` command line: ``cylspec [-v...] <command> [options]``."""

import re
import sys

from cylspec import SCHEMA, __version__
from cylspec.commands import COMMANDS
from cylspec.display import configure
from cylspec.errors import CylspecError
from cylspec.module_utils.common import RC_INPUT_ERROR, RC_OK, ModuleExit, render, write_output


USAGE = """usage: cylspec [-v...] {%s} [options]

Build cylindrical constructs, compute their spectra and check them against
the exact characteristic polynomial. Run 'cylspec <command> --help' for the
options of one command.
""" % ",".join(COMMANDS)

_VERBOSE = re.compile(r"^-v+$")


def split_verbosity(argv):
    """Remove every -v, -vv, ... and --verbose token; return (verbosity, remaining)."""
    verbosity, rest = 0, []
    for token in argv:
        if _VERBOSE.match(token):
            verbosity += len(token) - 1
        elif token == "--verbose":
            verbosity += 1
        else:
            rest.append(token)
    return verbosity, rest


def run(argv, stdout):
    verbosity, args = split_verbosity(argv)
    configure(verbosity)
    if not args or args[0] in ("-h", "--help"):
        stdout.write(USAGE)
        return RC_OK if args else RC_INPUT_ERROR
    if args[0] == "--version":
        stdout.write("cylspec %s (%s)\n" % (__version__, SCHEMA))
        return RC_OK
    command, rest = args[0], args[1:]
    if command not in COMMANDS:
        write_output(
            render({"failed": True, "msg": "unknown command %r. Valid commands are %s" % (command, ", ".join(COMMANDS))}),
            stream=stdout,
        )
        return RC_INPUT_ERROR
    try:
        COMMANDS[command].main(rest)
    except ModuleExit as done:
        config = done.config
        fmt = config.format if config is not None else "json"
        out = config.out if config is not None and not done.result.get("failed") else None
        write_output(render(done.result, fmt), path=out, stream=stdout)
        return done.rc
    except CylspecError as exc:
        write_output(render({"failed": True, "msg": str(exc), "schema": SCHEMA}), stream=stdout)
        return RC_INPUT_ERROR
    except SystemExit as exc:
        # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else RC_INPUT_ERROR
    return RC_OK


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
