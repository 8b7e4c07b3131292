"""Monic polynomials with exact rational coefficients and real-root isolation."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError

ROOT_TOLERANCE = 1e-13


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients from the leading term down; the leading one is always 1."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("polynomial must be monic")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> Polynomial:
        return cls(tuple(_frac(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        # Exact for int / Fraction arguments; float arguments evaluate in floats.
        acc = 0 if not isinstance(x, float) else 0.0
        for c in self.coeffs:
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def exact_at(self, x: float | Fraction | int) -> Fraction:
        return self(_frac(x))

    def derivative_coeffs(self) -> tuple[Fraction, ...]:
        d = self.degree
        return tuple(c * (d - i) for i, c in enumerate(self.coeffs[:-1]))

    def integer_coeffs(self) -> tuple[int, ...] | None:
        if all(c.denominator == 1 for c in self.coeffs):
            return tuple(int(c) for c in self.coeffs)
        return None

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for i, c in enumerate(self.coeffs):
            p = d - i
            if c == 0:
                continue
            mag = abs(c)
            num = "" if mag == 1 and p > 0 else str(mag)
            var = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, num + var))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {t}" for s, t in terms[1:])


def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        f = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def sturm_chain(p: Polynomial) -> list[list[Fraction]]:
    chain = [list(p.coeffs), list(p.derivative_coeffs())]
    while len(chain[-1]) > 1:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    changes, prev = 0, 0
    for q in chain:
        v = _eval(q, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def count_roots(p: Polynomial, a, b, chain=None) -> int:
    """Distinct real roots in ``(a, b]``; requires ``p(a) != 0``."""
    chain = chain or sturm_chain(p)
    return _sign_changes(chain, _frac(a)) - _sign_changes(chain, _frac(b))


def _nonroot_above(p: Polynomial, x: float, toward: float) -> float:
    x = math.nextafter(x, toward)
    while p.exact_at(x) == 0:
        x = math.nextafter(x, toward)
    return x


def largest_real_root(
    p: Polynomial,
    bracket: tuple[float, float],
    tol: float = ROOT_TOLERANCE,
    polish_steps: int = 2,
) -> float:
    """Largest real root of ``p`` inside ``[lo, hi]``.

    Scans unit cells downward from ``hi``; each cell is tested with an exact
    Sturm count, the top cell holding a root is bisected (exact sign and count
    evaluation at every midpoint) to width ``tol``, then Newton-polished.
    Roots of even multiplicity are found as well, since the count does not
    rely on a sign change.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo <= hi:
        raise PreconditionError(f"empty bracket [{lo}, {hi}]", "bracket")
    if p.degree == 0:
        raise PreconditionError("constant polynomial has no roots", "no_root")
    if p.exact_at(hi) == 0:
        return hi
    chain = sturm_chain(p)
    b = hi
    while b > lo:
        a = max(lo, b - 1.0)
        if p.exact_at(a) == 0:
            above = _nonroot_above(p, a, b)
            if above < b and count_roots(p, above, b, chain) >= 1:
                return _isolate(p, chain, above, b, tol, polish_steps)
            return a
        if count_roots(p, a, b, chain) >= 1:
            return _isolate(p, chain, a, b, tol, polish_steps)
        b = a
    raise PreconditionError(f"no real root of {p} in [{lo}, {hi}]", "no_root")


def _isolate(p: Polynomial, chain, a: float, b: float, tol: float, polish_steps: int) -> float:
    # Invariant: p(a) != 0, p(b) != 0 and (a, b] holds the largest root.
    while b - a > tol:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        if p.exact_at(m) == 0:
            above = _nonroot_above(p, m, b)
            if above >= b or count_roots(p, above, b, chain) == 0:
                return m
            a = above
        elif count_roots(p, m, b, chain) >= 1:
            a = m
        else:
            b = m
    x = 0.5 * (a + b)
    dcoeffs = p.derivative_coeffs()
    for _ in range(polish_steps):
        fx = p.exact_at(x)
        dfx = _eval(dcoeffs, _frac(x))
        if fx == 0 or dfx == 0:
            break
        y = x - float(fx / dfx)
        # Keep the polished value inside the isolating cell.
        if not a - tol <= y <= b + tol or abs(p.exact_at(y)) > abs(fx):
            break
        x = y
    return x
