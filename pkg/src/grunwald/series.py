"""Truncated power-series arithmetic over exact rationals or floats.

A series here is a finite Taylor expansion c0 + c1*z + ... + cL*z^L.
When every input scalar is rational (int or fractions.Fraction) the
arithmetic stays exact, which makes "is this coefficient zero?" a
decidable question; any float input demotes the computation to ordinary
floating point, where a relative threshold decides zeroness instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

# Threshold under which a float coefficient counts as an exact zero,
# relative to max(1, |c0|).
FLOAT_ZERO_TOL = 1e-10

# Slack for the zero-sum consistency check on float generator coefficients.
CONSISTENCY_TOL = 1e-12


class InconsistentGeneratorError(ValueError):
    """Generator coefficients do not sum to zero, so the scaled symbol
    W(exp(-z)) exp(r z) / z^alpha has no power-series expansion."""


def _is_exact(value) -> bool:
    return isinstance(value, Rational)


def _normalize(coeffs):
    """Return (tuple, rational_flag) with a homogeneous scalar kind."""
    values = tuple(coeffs)
    if not values:
        raise ValueError("a series needs at least the constant coefficient")
    if all(_is_exact(c) for c in values):
        return tuple(Fraction(c) for c in values), True
    return tuple(float(c) for c in values), False


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_L of a power series truncated at order L."""

    coeffs: tuple
    rational: bool

    @classmethod
    def from_coefficients(cls, coeffs) -> "TruncatedSeries":
        values, rational = _normalize(coeffs)
        return cls(values, rational)

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int):
        return self.coeffs[index]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_float(self) -> "TruncatedSeries":
        if not self.rational:
            return self
        return TruncatedSeries(tuple(float(c) for c in self.coeffs), False)

    def coefficient_is_zero(self, index: int) -> bool:
        """Zero test honouring the scalar kind (exact vs thresholded)."""
        value = self.coeffs[index]
        if self.rational:
            return value == 0
        scale = max(1.0, abs(float(self.coeffs[0])))
        return abs(value) < FLOAT_ZERO_TOL * scale

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self) -> str:
        kind = "rational" if self.rational else "float"
        return f"TruncatedSeries({list(self.coeffs)!r}, kind={kind})"


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.truncation_order != b.truncation_order:
        raise ValueError(
            "truncation orders differ: "
            f"{a.truncation_order} vs {b.truncation_order}"
        )


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum. Requires identical truncation order and kind."""
    _check_orders(a, b)
    if a.rational != b.rational:
        raise ValueError("cannot add series of different scalar kinds")
    return TruncatedSeries(
        tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.rational
    )


def scale(a: TruncatedSeries, factor) -> TruncatedSeries:
    """Multiply every coefficient by a scalar."""
    if a.rational and _is_exact(factor):
        return TruncatedSeries(
            tuple(Fraction(factor) * c for c in a.coeffs), True
        )
    factor = float(factor)
    return TruncatedSeries(
        tuple(factor * float(c) for c in a.coeffs), False
    )


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order.

    Mixed scalar kinds are allowed and demote the result to floats.
    """
    _check_orders(a, b)
    if a.rational != b.rational:
        a, b = a.to_float(), b.to_float()
    length = len(a.coeffs)
    zero = Fraction(0) if a.rational else 0.0
    out = [zero] * length
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(length - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(tuple(out), a.rational)


def exp_scaled(factor, truncation_order: int) -> TruncatedSeries:
    """Expansion of exp(factor * z): coefficients factor^l / l!."""
    if truncation_order < 0:
        raise ValueError("truncation order must be nonnegative")
    if _is_exact(factor):
        c = Fraction(factor)
        coeffs = tuple(
            c**l / math.factorial(l) for l in range(truncation_order + 1)
        )
        return TruncatedSeries(coeffs, True)
    c = float(factor)
    coeffs = tuple(
        c**l / math.factorial(l) for l in range(truncation_order + 1)
    )
    return TruncatedSeries(coeffs, False)


def pow_real(a: TruncatedSeries, alpha) -> TruncatedSeries:
    """Raise a series with positive constant term to a real power.

    Uses the power recurrence derived from b' a = alpha b a' (b = a^alpha):

        m * b_m * a_0 = sum_{k=1}^{m} (k*(alpha+1) - m) * a_k * b_{m-k}

    seeded with b_0 = a_0^alpha. The result stays rational when the
    inputs are rational and a_0^alpha is itself rational (integer alpha,
    or a_0 == 1); otherwise it falls back to floats.
    """
    a0 = a.coeffs[0]
    if not a0 > 0:
        raise ValueError(
            f"pow_real needs a positive constant term, got {a0}"
        )
    exact_alpha = _is_exact(alpha)
    use_exact = a.rational and exact_alpha
    if use_exact:
        frac_alpha = Fraction(alpha)
        if frac_alpha.denominator == 1:
            b0 = Fraction(a0) ** int(frac_alpha)
        elif a0 == 1:
            b0 = Fraction(1)
        else:
            use_exact = False
    if use_exact:
        coeffs_a = a.coeffs
        alpha_val = frac_alpha
    else:
        coeffs_a = tuple(float(c) for c in a.coeffs)
        alpha_val = float(alpha)
        b0 = float(coeffs_a[0]) ** alpha_val
    out = [b0]
    a0_val = coeffs_a[0]
    for m in range(1, len(coeffs_a)):
        acc = b0 - b0  # zero of the right scalar kind
        for k in range(1, m + 1):
            ak = coeffs_a[k]
            if ak == 0:
                continue
            acc += (k * (alpha_val + 1) - m) * ak * out[m - k]
        out.append(acc / (m * a0_val))
    return TruncatedSeries(tuple(out), use_exact)


def normalized_symbol(beta, shift, alpha, truncation_order: int) -> TruncatedSeries:
    """Expansion of G(z) = W(exp(-z)) * exp(shift*z) / z^alpha through z^L,
    where W(y) = (sum_k beta_k y^k)^alpha.

    The z^0 term of sum_k beta_k exp(-k z) equals sum_k beta_k, which must
    vanish; it is cancelled symbolically (never subtracted numerically),
    so no fractional power of z ever appears: the quotient by z^alpha is
    realized as [P(exp(-z))/z]^alpha.

    Coefficient l of the result is the error-expansion coefficient a_l(shift).
    """
    if truncation_order < 1:
        raise ValueError("truncation order must be at least 1")
    betas, rational = _normalize(beta)
    exact = rational and _is_exact(shift) and _is_exact(alpha)
    if not exact:
        betas = tuple(float(b) for b in betas)
    total = sum(betas)
    if exact:
        if total != 0:
            raise InconsistentGeneratorError(
                "generator coefficients must sum to zero for a consistent "
                f"approximation; got sum {total}"
            )
    else:
        scale_b = max(1.0, max(abs(float(b)) for b in betas))
        if abs(float(total)) > CONSISTENCY_TOL * scale_b:
            raise InconsistentGeneratorError(
                "generator coefficients must sum to zero for a consistent "
                f"approximation; got sum {float(total):.3e}"
            )
    # Coefficient l of P(exp(-z))/z, with the vanishing z^0 term dropped:
    # q_l = sum_k beta_k * (-k)^(l+1) / (l+1)!
    L = truncation_order
    q = []
    for l in range(L + 1):
        fact = math.factorial(l + 1)
        if exact:
            acc = Fraction(0)
            for k, b in enumerate(betas):
                acc += b * Fraction((-k) ** (l + 1), fact)
        else:
            acc = 0.0
            for k, b in enumerate(betas):
                acc += b * ((-k) ** (l + 1) / fact)
        q.append(acc)
    inner = TruncatedSeries.from_coefficients(q)
    powered = pow_real(inner, alpha if exact else float(alpha))
    return mul(powered, exp_scaled(shift if exact else float(shift), L))
