# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

# bounded worker pool

from concurrent.futures import ThreadPoolExecutor


def parallel_map(fn, items, jobs=1):
    """``[fn(item) for item in items]``, spread over at most ``jobs`` threads, order preserved."""
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))
