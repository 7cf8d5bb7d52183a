"""Wang tiles, Mealy automata and their semigroups.

Tile sets and automata are passed in their text formats. Functions that
produce reports return decoded JSON.
"""

import json

from . import _core
from ._core import (
    CapExceeded,
    Error,
    ParseError,
    PreconditionError,
    act,
    digest,
    dstate,
    equal,
    nw_conflict,
    reduce,
    render_svg as _render_svg,
    run_cli,
)

__all__ = [
    "CapExceeded",
    "Error",
    "ParseError",
    "PreconditionError",
    "act",
    "digest",
    "dstate",
    "enumerate",
    "equal",
    "finiteness_bound",
    "find_torus_tiling",
    "least_untileable_n",
    "nw_conflict",
    "order_search",
    "reduce",
    "render_svg",
    "run_cli",
    "semidecide",
    "tile_rectangle",
    "verify_claim",
    "verify_lemma1",
]


def _decoded(fn):
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


tile_rectangle = _decoded(_core.tile_rectangle)
find_torus_tiling = _decoded(_core.find_torus_tiling)
least_untileable_n = _decoded(_core.least_untileable_n)
enumerate = _decoded(_core.enumerate)
order_search = _decoded(_core.order_search)
verify_lemma1 = _decoded(_core.verify_lemma1)
verify_claim = _decoded(_core.verify_claim)
semidecide = _decoded(_core.semidecide)


def finiteness_bound(alphabet_size, n):
    return int(_core.finiteness_bound(alphabet_size, n))


def render_svg(tiles, tiling):
    if not isinstance(tiling, str):
        tiling = json.dumps(tiling)
    return _render_svg(tiles, tiling)
