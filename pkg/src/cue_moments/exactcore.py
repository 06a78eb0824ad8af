"""Exact arithmetic substrate: rationals, truncated power series, dense polynomials.

Every scalar in this package is an exact rational.  We use the standard
library ``fractions.Fraction``, which already guarantees the canonical form
we rely on (reduced, positive denominator), so equality is structural and
no rounding can ever occur.  Floating point is banned from this module;
decimal rendering is a display concern of the CLI.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

Rational = Fraction


def rat(value) -> Fraction:
    """Parse an exact rational from an int, Fraction, or a "p/q" string."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Serialize a rational as "p/q", or just "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _coerce_coeff(c):
    # ints are lifted to Fraction; floats are rejected outright; anything else
    # (Fraction, or a ring element such as the affine scalars used by the
    # Painleve solver) passes through untouched.
    if isinstance(c, bool):
        raise TypeError("bool is not a series coefficient")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed in exact series")
    return c


class PowerSeries:
    """Truncated power series with exact coefficients.

    ``coeffs[j]`` is the coefficient of x**j for j = 0..order.  Terms beyond
    x**order are *unknown*, not zero: binary operations truncate the result
    to the smaller operand order, so a result never claims more precision
    than its inputs support.  This explicit bookkeeping is what lets the
    ODE-residual checks downstream distinguish "verified zero" from
    "unknown".

    Coefficients are Fractions in normal use; any commutative ring element
    supporting +, -, * (and / by Fraction for integrate) works.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable):
        tup = tuple(_coerce_coeff(c) for c in coeffs)
        if not tup:
            raise ValueError("a power series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tup)
        object.__setattr__(self, "order", len(tup) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        return cls([c] + [Fraction(0)] * order)

    @classmethod
    def monomial(cls, c, power: int, order: int) -> "PowerSeries":
        """c * x**power as a series of the given order (power <= order)."""
        if power > order:
            raise ValueError("monomial power exceeds requested order")
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[power] = c
        return cls(coeffs)

    # -- basic access ------------------------------------------------------

    def coeff(self, j: int):
        if j < 0 or j > self.order:
            raise ValueError(f"coefficient x^{j} is beyond truncation order {self.order}")
        return self.coeffs[j]

    def constant_term(self):
        return self.coeffs[0]

    def truncate(self, new_order: int) -> "PowerSeries":
        if new_order > self.order:
            raise ValueError("cannot extend a truncated series without new information")
        return PowerSeries(self.coeffs[: new_order + 1])

    def _zero_elem(self):
        return self.coeffs[0] * 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return PowerSeries([self.coeffs[j] + other.coeffs[j] for j in range(m + 1)])

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return PowerSeries([self.coeffs[j] - other.coeffs[j] for j in range(m + 1)])

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            m = min(self.order, other.order)
            zero = self._zero_elem()
            out = []
            for j in range(m + 1):
                acc = zero
                for i in range(j + 1):
                    acc = acc + self.coeffs[i] * other.coeffs[j - i]
                out.append(acc)
            return PowerSeries(out)
        other = _coerce_coeff(other)
        return PowerSeries([c * other for c in self.coeffs])

    def __rmul__(self, other):
        other = _coerce_coeff(other)
        return PowerSeries([other * c for c in self.coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers must be non-negative integers")
        result = PowerSeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    # -- calculus ----------------------------------------------------------

    def derive(self) -> "PowerSeries":
        """Termwise derivative; the order drops by one.

        A series of order 0 carries no information about its derivative, so
        differentiating it is an error rather than a fake zero.
        """
        if self.order == 0:
            raise ValueError("cannot differentiate a series known only to order 0")
        return PowerSeries([j * self.coeffs[j] for j in range(1, self.order + 1)])

    def integrate(self) -> "PowerSeries":
        """Antiderivative with zero constant term; the order rises by one."""
        zero = self._zero_elem()
        return PowerSeries([zero] + [self.coeffs[j] / Fraction(j + 1) for j in range(self.order + 1)])

    def shift(self, power: int) -> "PowerSeries":
        """Multiply by x**power; known terms shift up, so the order rises."""
        if power < 0:
            raise ValueError("shift power must be non-negative")
        zero = self._zero_elem()
        return PowerSeries([zero] * power + list(self.coeffs))

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [rat_str(c) for c in self.coeffs]}


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series with zero constant term.

    Solved coefficient by coefficient from (exp a)' = a' * exp a, which keeps
    everything in the rational field.
    """
    if a.coeffs[0] != 0:
        raise ValueError("exp requires zero constant term")
    n = a.order
    out = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += i * a.coeffs[i] * out[m - i]
        out[m] = acc / m
    return PowerSeries(out)


def series_log(a: PowerSeries) -> tuple[PowerSeries, Fraction]:
    """log of a unit series, split as (log(a / a0), a0).

    The returned series has zero constant term; the separated unit a0 is
    reported alongside so no logarithm of a bare rational is ever needed.
    """
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ValueError("log of non-unit series")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = Fraction(m) * a.coeffs[m]
        for i in range(1, m):
            acc -= i * out[i] * a.coeffs[m - i]
        out[m] = acc / m / a0
    return PowerSeries(out), a0


def series_div(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """num / den for a unit denominator, truncated to the smaller order."""
    d0 = den.coeffs[0]
    if d0 == 0:
        raise ValueError("division by a non-unit series")
    m = min(num.order, den.order)
    out = []
    for j in range(m + 1):
        acc = num.coeffs[j]
        for i in range(j):
            acc = acc - out[i] * den.coeffs[j - i]
        out.append(acc / d0)
    return PowerSeries(out)


def series_det(matrix: Sequence[Sequence[PowerSeries]]) -> PowerSeries:
    """Determinant of a square matrix of truncated series.

    Small matrices (n <= 6) use the Leibniz cofactor sum, which is valid over
    the truncated ring regardless of zero divisors.  Larger matrices use
    fraction-free Bareiss elimination; its divisions are exact provided the
    pivots are units (nonzero constant term), which we check and report.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    if n == 1:
        return matrix[0][0]
    if n <= 6:
        return _det_leibniz(matrix)
    return _det_bareiss(matrix)


def _det_leibniz(matrix) -> PowerSeries:
    n = len(matrix)
    order = min(e.order for row in matrix for e in row)
    total = PowerSeries.zero(order)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = matrix[0][perm[0]]
        for i in range(1, n):
            term = term * matrix[i][perm[i]]
        total = total + term if sign > 0 else total - term
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det_bareiss(matrix) -> PowerSeries:
    n = len(matrix)
    order = min(e.order for row in matrix for e in row)
    m = [[e.truncate(order) for e in row] for row in matrix]
    sign = 1
    prev = PowerSeries.one(order)
    for r in range(n - 1):
        pivot_row = next(
            (i for i in range(r, n) if m[i][r].coeffs[0] != 0),
            None,
        )
        if pivot_row is None:
            raise ValueError(
                "Bareiss elimination hit a non-unit pivot column; "
                "use the cofactor expansion for this matrix"
            )
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
            sign = -sign
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                m[i][j] = series_div(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev)
        prev = m[r][r]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


class DensePolynomial:
    """Polynomial with exact rational coefficients, lowest degree first.

    Unlike PowerSeries, all omitted coefficients really are zero; trailing
    zeros are stripped so the leading coefficient is nonzero unless the
    polynomial is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        tup = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        for c in tup:
            if not isinstance(c, Fraction):
                raise TypeError("polynomial coefficients must be exact rationals")
        while len(tup) > 1 and tup[-1] == 0:
            tup.pop()
        if not tup:
            tup = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(tup))

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1]

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j] if j <= self.degree else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial(
            [self.coefficient(j) + other.coefficient(j) for j in range(n)]
        )

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return DensePolynomial(out)
        other = rat(other)
        return DensePolynomial([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DensePolynomial({list(self.coeffs)!r})"


def poly_interpolate(points: Sequence[tuple]) -> DensePolynomial:
    """The unique polynomial of degree < len(points) through the given points.

    Newton's divided-difference form, evaluated exactly.  Repeated abscissae
    are rejected.
    """
    xs = [rat(x) for x, _ in points]
    ys = [rat(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    result = DensePolynomial([0])
    nodal = DensePolynomial([1])
    for x, y in zip(xs, ys):
        denom = nodal(x)
        c = (y - result(x)) / denom
        result = result + nodal * c
        nodal = nodal * DensePolynomial([-x, Fraction(1)])
    return result
