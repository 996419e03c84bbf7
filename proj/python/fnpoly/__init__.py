"""Exact Fuss-Narayana polynomials, adapted noncrossing pair partitions and
moments of products of rectangular Gaussian matrices."""

from fractions import Fraction

from ._core import (
    BudgetExceeded,
    IntegralityError,
    arch_diagram_svg,
    binomial,
    brute_force_pk,
    closed_form_pk,
    count_adapted,
    enumerate_adapted,
    format_poly,
    fuss_catalan,
    fuss_narayana_poly,
    gfn_number,
    lagrange_coefficient,
    phi,
    profile_histogram,
    quadrature_moments,
    run_mc,
    solve_functional_equation,
    vandermonde_check,
    verify,
)
from . import _core

__version__ = "0.1.0"


def _exact(values):
    return [str(Fraction(v)) for v in values]


def psi_moments(ts, max_order):
    """m_1..m_K of the free multiplicative convolution of MP laws with shapes ts."""
    return _core._psi_moments(_exact(ts), max_order)


def s_transform_check(ts, max_order=6):
    return _core._s_transform_check(_exact(ts), max_order)


__all__ = [name for name in dir() if not name.startswith("_")]
