# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Spectra of cylindrical graph constructs."""

__version__ = "1.0.0"

# Tag carried by every JSON document the package reads or writes.
SCHEMA = "cylspec/1"
