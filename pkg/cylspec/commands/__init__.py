# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from cylspec.commands import build, family, spectrum, treemix, verify_all


COMMANDS = {
    "build": build,
    "spectrum": spectrum,
    "family": family,
    "treemix": treemix,
    "verify-all": verify_all,
}
