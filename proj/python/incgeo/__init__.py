"""Python face of the exact incidence-geometry toolkit.

The compiled core exchanges JSON strings; these wrappers convert to and
from plain Python structures. Exact rationals appear as "num/den" strings.
"""

import json
from fractions import Fraction

try:
    from . import _incgeo
except ImportError:  # build-tree layout: extension next to the package dir
    import _incgeo

__all__ = [
    "matrix_rank_info",
    "con_of",
    "rs_exact",
    "incidence_stats",
    "biclique_sample",
    "gen_lattice",
    "verify_lattice",
    "gen_grid",
    "reduce",
    "protocol",
    "run_acceptance",
    "matrix_json",
    "fraction",
]

DEFAULT_SEED = 0x1CE05EED


def fraction(s):
    """Parse an exact "num/den" string into a Fraction."""
    return Fraction(s)


def matrix_json(rows):
    """Serialize a list-of-lists (ints, Fractions, or "num/den" strings)."""
    entries = [[str(v) for v in row] for row in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return json.dumps({"rows": n, "cols": m, "entries": entries})


def matrix_rank_info(rows):
    return json.loads(_incgeo.matrix_rank_info(matrix_json(rows)))


def con_of(rows):
    return json.loads(_incgeo.con_of(matrix_json(rows)))


def rs_exact(config):
    return json.loads(_incgeo.rs_exact(json.dumps(config)))


def incidence_stats(config):
    out = json.loads(_incgeo.incidence_stats(json.dumps(config)))
    out["density"] = fraction(out["density"])
    return out


def biclique_sample(config, trials=100, seed=DEFAULT_SEED):
    return json.loads(_incgeo.biclique_sample(json.dumps(config), trials, seed))


def gen_lattice(d):
    return json.loads(_incgeo.gen_lattice(d))


def verify_lattice(d, flats=100, seed=DEFAULT_SEED):
    return json.loads(_incgeo.verify_lattice(d, flats, seed))


def gen_grid(a, b):
    out = json.loads(_incgeo.gen_grid(a, b))
    out["delta"] = fraction(out["delta"])
    out["zero_rectangle_density"] = fraction(out["zero_rectangle_density"])
    return out


def reduce(rows):
    return json.loads(_incgeo.reduce(matrix_json(rows)))


def protocol(rows):
    return json.loads(_incgeo.protocol(matrix_json(rows)))


def run_acceptance(scope="all", max_d=17):
    return [
        {"criterion": cid, "name": name, "passed": passed, "detail": detail}
        for cid, name, passed, detail in _incgeo.run_acceptance(scope, max_d)
    ]
