"""F4 orbit, stabilizer and fiber computations in characteristic 2."""

import json

from ._core import (  # noqa: F401
    BudgetExceeded,
    __version__,
    b_orbit,
    bfs_orbit,
    data_checksum,
    fiber,
    find_rs,
    orbit_stabilizer_fit,
    orbit_table,
    roots,
    counts_sum_to_q48,
    u_stabilizer_count,
    weyl_census,
)
from ._core import _verify_json


def verify(sections=(), rep=None, budget=2**28, threads=1, oracle=False):
    """Run verification sections and return the report as a dict."""
    return json.loads(_verify_json(list(sections), rep, budget, threads, oracle))
