# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Exception hierarchy shared by the engines and the command layer."""


class CylspecError(Exception):
    """Base class for every error raised by cylspec."""


class DimensionError(CylspecError):
    pass


class ArgumentError(CylspecError, ValueError):
    pass


class ValidationError(CylspecError):
    """A structural identity does not hold.

    ``identity`` names the failed identity so callers can report it verbatim;
    ``violations`` optionally lists every failure found.
    """

    def __init__(self, msg, identity=None, violations=None):
        super().__init__(msg)
        self.identity = identity
        self.violations = list(violations or [])


class DegeneracyError(CylspecError):
    pass


class RegimeError(CylspecError):
    pass


class PrecisionError(CylspecError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


class SamplingError(CylspecError):
    pass


class DegenerateLabelError(CylspecError):
    pass


class ConsistencyError(CylspecError):
    pass


class UnsupportedHeightError(CylspecError):
    pass


class ConstructionError(CylspecError):
    pass
