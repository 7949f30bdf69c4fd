"""Exact computer algebra for linearity defect, Koszul filtrations, and stretched rings.

Thin wrapper over the C++ core: every function returns the parsed JSON report
that the `lindel` command-line tool would print.
"""

import json

try:
    from . import _lindel as _core
except ImportError:  # in-tree builds put the extension on sys.path directly
    import _lindel as _core

__version__ = _core.__version__

BudgetError = _core.BudgetError
UnsupportedError = _core.UnsupportedError
PreconditionError = _core.PreconditionError


def parse_ring(text):
    """Parse a ring presentation and return its normalized form."""
    return _core.parse_ring(text)


def _wrap(fn, *args, **kwargs):
    return json.loads(fn(*args, **kwargs))


def analyze(ring, **kw):
    return _wrap(_core.analyze, ring, **kw)


def koszul(ring, bound=5, **kw):
    return _wrap(_core.koszul, ring, bound, **kw)


def lind(ring, module="k", bound=5, **kw):
    return _wrap(_core.lind, ring, module, bound, **kw)


def golod(ring, bound=5, dbound=8, **kw):
    return _wrap(_core.golod, ring, bound, dbound, **kw)


def betti(ring, bound=5, dbound=8, **kw):
    return _wrap(_core.betti, ring, bound, dbound, **kw)


def filtration_verify(ring, filtration, strong=False, sbound=0, **kw):
    return _wrap(_core.filtration_verify, ring, filtration, strong, sbound, **kw)


def filtration_lift(ring, element, filtration, **kw):
    return _wrap(_core.filtration_lift, ring, element, filtration, **kw)


def stretched_classify(ring, **kw):
    return _wrap(_core.stretched_classify, ring, **kw)


def stretched_qn(ring, **kw):
    return _wrap(_core.stretched_qn, ring, **kw)


def stretched_ev(h, tau, s, **kw):
    return _wrap(_core.stretched_ev, h, tau, s, **kw)


def semigroup(generators, **kw):
    return _wrap(_core.semigroup, list(generators), **kw)


def sweep_ev(hmax=4, smax=3, bound=4, **kw):
    return _wrap(_core.sweep_ev, hmax, smax, bound, **kw)


def repro(seed=0):
    return _wrap(_core.repro, seed)
