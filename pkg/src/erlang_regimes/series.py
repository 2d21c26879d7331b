"""Expansion of ``varphi(v; x) = exp(v^2/2 - x (e^{-v/sqrt x} + v/sqrt x - 1))`` in ``x^{-1/2}``.

With ``t = x^{-1/2}`` the exponent is ``E(t) = sum_{k>=1} e_k(v) t^k`` where
``e_k(v) = (-1)^{k-1} v^{k+2} / (k+2)!``; the coefficients ``a_n`` of
``exp(E)`` follow from ``n a_n = sum_{k=1}^{n} k e_k a_{n-k}``. All
arithmetic is exact (:class:`fractions.Fraction`), polynomials are stored as
coefficient lists indexed by the power of ``v``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

K_MAX = 12


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


def _poly_eval(p, v):
    acc = 0.0
    for c in reversed(p):
        acc = acc * v + c
    return acc


@dataclass(frozen=True)
class SeriesCoefficients:
    order: int
    polys: tuple  # a_0..a_order, exact rational coefficient lists

    def float_polys(self):
        return [[float(c) for c in p] for p in self.polys]

    def evaluate(self, v, x, k=None):
        """Truncated sum ``sum_{i<=k} a_i(v) x^{-i/2}``."""
        k = self.order if k is None else k
        if k > self.order:
            raise DomainError(f"only {self.order} orders were generated, asked for {k}")
        t = 1.0 / math.sqrt(x)
        acc = 0.0
        for p in reversed(self.float_polys()[: k + 1]):
            acc = acc * t + _poly_eval(p, v)
        return acc


def varphi_series(k):
    """Exact coefficient polynomials ``a_0..a_k`` (``a_i`` has degree ``3i``)."""
    if int(k) != k or k < 0:
        raise DomainError(f"series order must be a non-negative integer, got {k!r}")
    if k > K_MAX:
        raise DomainError(f"series order {k} exceeds K_MAX = {K_MAX}")
    k = int(k)
    # e[j] is the exponent's coefficient of t^j, a polynomial in v
    e = [None]
    for j in range(1, k + 1):
        poly = [Fraction(0)] * (j + 3)
        poly[j + 2] = Fraction((-1) ** (j - 1), math.factorial(j + 2))
        e.append(poly)
    a = [[Fraction(1)]]
    for n in range(1, k + 1):
        acc = [Fraction(0)]
        for j in range(1, n + 1):
            acc = _poly_add(acc, [j * c for c in _poly_mul(e[j], a[n - j])])
        a.append([c / n for c in acc])
    return SeriesCoefficients(k, tuple(tuple(p) for p in a))


def _exponent(v, x):
    """``v^2/2 - x (e^{-w} - 1 + w)`` with ``w = v/sqrt(x)``, without cancellation."""
    w = v / math.sqrt(x)
    if abs(w) > 0.5:
        return 0.5 * v * v - x * (math.expm1(-w) + w)
    # -x * sum_{i>=3} (-w)^i / i!
    term = -w * w * w / 6.0
    total = 0.0
    i = 3
    while True:
        total += term
        if abs(term) <= 1e-18 * abs(total):
            break
        i += 1
        term *= -w / i
    return -x * total


def varphi_eval(v, x):
    """Direct evaluation of ``varphi(v; x)`` for ``x > 0``."""
    v = float(v)
    x = float(x)
    if not x > 0:
        raise DomainError(f"x must be positive, got {x!r}")
    return math.exp(_exponent(v, x))
