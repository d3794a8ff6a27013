"""Exact geometry of compactifications of the affine plane.

Thin wrapper over the _semideg extension: operations take surface-file text
and return the same JSON documents as the command-line tool (as strings; the
*_dict helpers parse them).
"""

import json as _json

try:
    from ._semideg import *  # noqa: F401,F403  (installed layout)
    from . import _semideg as _ext
except ImportError:  # build-tree layout: extension directly on sys.path
    from _semideg import *  # noqa: F401,F403
    import _semideg as _ext


def classify_dict(surface):
    return _json.loads(_ext.classify(surface))


def keyforms_dict(surface):
    return _json.loads(_ext.keyforms(surface))


def delta_dict(surface, expr):
    return _json.loads(_ext.delta(surface, expr))


def basis_dict(surface, d):
    return _json.loads(_ext.basis(surface, d))


def enriques_dict(surface, d):
    return _json.loads(_ext.enriques(surface, d))


def zariski_bpf_dict(surface, d):
    return _json.loads(_ext.zariski_bpf(surface, d))


def zariski_member_dict(surface, d, bound):
    return _json.loads(_ext.zariski_member(surface, d, bound))


def tropical_dict(surface, box, d=None):
    return _json.loads(_ext.tropical(surface, box, d))


def compare_equisingular_dict(a, b, box):
    return _json.loads(_ext.compare_equisingular(a, b, box))
