"""Named curves shared by the test modules, built from the packaged corpus."""
import random
from fractions import Fraction
from functools import lru_cache

from dualscope.cli import packaged_corpus
from dualscope.ratcurves import ParamCurve, dualize, validate_proper


@lru_cache(maxsize=None)
def records() -> dict:
    return {r.name: r for r in packaged_corpus()}


def record(name):
    return records()[name]


@lru_cache(maxsize=None)
def primal(name) -> ParamCurve:
    return record(name).primal()


@lru_cache(maxsize=None)
def dual_of(name) -> ParamCurve:
    """The parametrization of C* for a corpus curve."""
    r = record(name)
    return r.param if r.role == "dual" else dualize(r.param)


def parametrized() -> list:
    return [r.name for r in packaged_corpus() if r.param is not None]


def curve(*rows) -> ParamCurve:
    return ParamCurve.from_coeffs(rows)


NODAL_CUBIC = ("nodal-cubic",)
QUINTIC = "generic-nodal-quintic"
OCTIC = "maximal-cuspidal-octic"
Q_ROWS = [[1, -2, 0, 3, 1, 1], [2, 1, -1, 0, -3, 1], [0, 3, 1, -2, 1]]


def random_proper(rng: random.Random, n: int, cusp: bool = False) -> ParamCurve:
    """A random proper non-degenerate curve of degree n with integer coefficients in [-5, 5].

    With cusp=True the linear coefficients vanish, forcing a singular branch at t = 0
    (ignored for conics, which would all factor through t^2).
    """
    cusp = cusp and n >= 3
    while True:
        rows = []
        for _ in range(3):
            row = [rng.randint(-5, 5) for _ in range(n + 1)]
            if cusp:
                row[1] = 0
            rows.append(row)
        rows[rng.randrange(3)][n] = rng.choice([-3, -2, -1, 1, 2, 3])
        try:
            C = ParamCurve.from_coeffs(rows)
        except ValueError:
            continue
        if C.n != n or C.is_degenerate():
            continue
        if validate_proper(C) == 1:
            return C


def frac(x):
    return Fraction(x)


@lru_cache(maxsize=None)
def judgments(name) -> tuple:
    """Both judgments of a corpus record, computed once per session."""
    return record(name).classify()
