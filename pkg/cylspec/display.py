# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Verbosity-tiered logging front end.

Modules hold a ``display = Display()`` and call ``display.v(...)``,
``display.vv(...)`` or ``display.vvv(...)``; the command line decides how much
of it reaches the terminal through :func:`configure`.
"""

import logging


LOGGER_NAME = "cylspec"
_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_state = {"verbosity": 0}


def configure(verbosity=0, stream=None):
    """Attach a stderr handler to the package logger and set the tier."""
    _state["verbosity"] = max(0, int(verbosity))
    logger = logging.getLogger(LOGGER_NAME)
    if not any(getattr(h, "_cylspec", False) for h in logger.handlers):
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._cylspec = True
        logger.addHandler(handler)
    if _state["verbosity"] >= 2:
        logger.setLevel(logging.DEBUG)
    elif _state["verbosity"] == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.WARNING)


class Display:
    def __init__(self, name=None):
        self._logger = logging.getLogger(name or LOGGER_NAME)

    @property
    def verbosity(self):
        return _state["verbosity"]

    def display(self, msg, *args):
        self._logger.info(msg, *args)

    def v(self, msg, *args):
        self._logger.info(msg, *args)

    def vv(self, msg, *args):
        self._logger.debug(msg, *args)

    def vvv(self, msg, *args):
        if _state["verbosity"] >= 3:
            self._logger.debug(msg, *args)

    def warning(self, msg, *args):
        self._logger.warning(msg, *args)

    def error(self, msg, *args):
        self._logger.error(msg, *args)
