"""Exact polynomial / power-series algebra for the class generating function.

Builds the denominator polynomial family S, assembles the almost
tridiagonal linear system for the component series F_1..F_h, solves it
order by order over the integers, and expands the single-variable
generating function whose n-th coefficient counts the class paths of
semilength n.  A closed-form expression for each F_i doubles as an
independent cross-check of the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import UnsupportedParams
from .paths import ClassParams


def _binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 outside the classical triangle."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


class IntPolynomial:
    """Dense integer-coefficient polynomial in one variable.

    ``coeffs[i]`` is the coefficient of x^i; normalized form has no
    trailing zeros and the zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):  # noqa: ANN001 - accepts any int iterable
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def monomial(power: int, coeff: int = 1) -> "IntPolynomial":
        return IntPolynomial([0] * power + [coeff])

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial()

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial([1])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(n)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            self.coefficient(i) - other.coefficient(i) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):  # noqa: ANN001 - polynomial or int
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        """JSON form: decimal-string coefficients, constant term first."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data: list[str]) -> "IntPolynomial":
        return IntPolynomial(int(c) for c in data)


class TruncatedSeries:
    """Exact power series truncated at a fixed order.

    ``coeffs`` always holds order+1 integers; arithmetic never looks past
    the truncation order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):  # noqa: ANN001
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def coefficient(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, (self.coeffs[i] + other.coeffs[i] for i in range(order + 1))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, (self.coeffs[i] - other.coeffs[i] for i in range(order + 1))
        )

    def mul_poly(self, poly: IntPolynomial) -> "TruncatedSeries":
        out = [0] * (self.order + 1)
        for j, b in enumerate(poly.coeffs):
            if b:
                for n in range(j, self.order + 1):
                    out[n] += b * self.coeffs[n - j]
        return TruncatedSeries(self.order, out)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def to_json(self) -> list[str]:
        """JSON form: decimal-string coefficients, constant term first."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data: list[str]) -> "TruncatedSeries":
        return TruncatedSeries(len(data) - 1, (int(c) for c in data))


@dataclass
class PolySystem:
    """The h x h polynomial system A F = b for the component series."""

    matrix: list[list[IntPolynomial]]
    rhs: list[IntPolynomial]


def build_S(h: int, k: int) -> IntPolynomial:
    """Denominator-family polynomial for height bound h and run bound k.

    Heights 1..3 use the explicitly listed polynomials; from h = 4 on the
    binomial double-sum formula applies (it reproduces the h = 3 case but
    not the h = 2 one, so the listed value wins there).
    """
    if h < 1 or k < 2:
        raise ValueError("need h >= 1 and k >= 2")
    if h == 1:
        return IntPolynomial([-1, 1])
    if h == 2:
        return IntPolynomial([-1, 2]) + IntPolynomial.monomial(k, -1)
    if h == 3:
        return IntPolynomial([1, -3, 1]) + IntPolynomial.monomial(k + 1, 1)
    terms: dict[int, int] = {}
    base = comb(h + 1, 2)
    for j in range(h // 2 + 1 + (h % 2)):  # j = 0 .. floor((h+1)/2)
        terms[j] = terms.get(j, 0) + (-1) ** (base - j) * _binom(h - j + 1, j)
    for j in range(1, h // 2 + 1):
        terms[k + j] = terms.get(k + j, 0) + (-1) ** (base - j + 1) * _binom(
            h - j - 1, j - 1
        )
    out = [0] * (max(terms) + 1)
    for power, c in terms.items():
        out[power] = c
    return IntPolynomial(out)


def _require_supported(params: ClassParams) -> None:
    if not params.eco_supported:
        raise UnsupportedParams(
            f"(h={params.h}, k={params.k}) is outside the supported range: "
            "need k=2 with h>=3, or k>=3 with h>=4"
        )


def build_system(params: ClassParams) -> PolySystem:
    """Assemble the polynomial system whose solution is (F_1, ..., F_h).

    Row structure (1-based): F_1 = 1; interior band rows
    x F_{i-1} - F_i + F_{i+1} = 0; row h-2 carries an extra -x^{k-1} F_h;
    row h-1 reads x F_{h-2} - F_{h-1} + (1 + x^{k-1}) F_h = 0; the last row
    is x F_{h-1} + (-1 + x + x^2 (1 + x + ... + x^{k-3})) F_h = 0.
    At x = 0 the matrix is upper triangular with diagonal (1, -1, ..., -1).
    """
    _require_supported(params)
    h, k = params.h, params.k
    zero = IntPolynomial.zero()
    x = IntPolynomial.monomial(1)
    matrix = [[zero for _ in range(h)] for _ in range(h)]
    rhs = [zero for _ in range(h)]

    matrix[0][0] = IntPolynomial.one()
    rhs[0] = IntPolynomial.one()
    for r in range(1, h - 2):
        matrix[r][r - 1] = x
        matrix[r][r] = IntPolynomial([-1])
        matrix[r][r + 1] = IntPolynomial.one()
        if r == h - 3:
            matrix[r][h - 1] = IntPolynomial.monomial(k - 1, -1)
    matrix[h - 2][h - 3] = x
    matrix[h - 2][h - 2] = IntPolynomial([-1])
    matrix[h - 2][h - 1] = IntPolynomial.one() + IntPolynomial.monomial(k - 1)
    matrix[h - 1][h - 2] = x
    # geometric block 1 + x + ... + x^{k-3}; empty when k = 2
    geom = IntPolynomial([1] * (k - 2))
    matrix[h - 1][h - 1] = IntPolynomial([-1, 1]) + IntPolynomial.monomial(2) * geom
    return PolySystem(matrix, rhs)


def solve_series(params: ClassParams, order: int) -> list[TruncatedSeries]:
    """Unique power-series solution of the system, order by order.

    Splitting A = A0 + (higher powers of x), each coefficient vector is
    obtained by back substitution against the triangular constant matrix
    A0, whose diagonal entries are all +-1; everything stays integral.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    system = build_system(params)
    h = params.h
    A = system.matrix
    maxdeg = max(entry.degree for row in A for entry in row)
    cols: list[list[int]] = []
    for n in range(order + 1):
        rhs = [system.rhs[i].coefficient(n) for i in range(h)]
        for m in range(1, min(n, maxdeg) + 1):
            prev = cols[n - m]
            for i in range(h):
                for j in range(h):
                    a = A[i][j].coefficient(m)
                    if a:
                        rhs[i] -= a * prev[j]
        vec = [0] * h
        for i in range(h - 1, -1, -1):
            s = rhs[i]
            for j in range(i + 1, h):
                a0 = A[i][j].coefficient(0)
                if a0:
                    s -= a0 * vec[j]
            diag = A[i][i].coefficient(0)
            vec[i] = s if diag == 1 else -s
        cols.append(vec)
    return [
        TruncatedSeries(order, (cols[n][i] for n in range(order + 1)))
        for i in range(h)
    ]


def system_residuals(params: ClassParams, order: int) -> list[TruncatedSeries]:
    """A F - b for the order-by-order solution; every entry must vanish."""
    system = build_system(params)
    F = solve_series(params, order)
    out = []
    for i in range(params.h):
        acc = TruncatedSeries(order)
        for j in range(params.h):
            acc = acc + F[j].mul_poly(system.matrix[i][j])
        acc = acc - TruncatedSeries(order, system.rhs[i].coeffs)
        out.append(acc)
    return out


def closed_form_F(params: ClassParams, i: int, order: int) -> TruncatedSeries:
    """Series expansion of the closed-form expression for F_i.

    F_i = sign * x^{i-1} * S(h+1-i, k) / S(h, k), with sign
    (-1)^binom((h mod 2) + i + 3, 2).  The denominator has constant term
    +-1, so exact long division yields integer coefficients.
    """
    _require_supported(params)
    if not 1 <= i <= params.h:
        raise ValueError(f"i must be in 1..{params.h}")
    h, k = params.h, params.k
    sign = (-1) ** comb((h % 2) + i + 3, 2)
    num = IntPolynomial.monomial(i - 1, sign) * build_S(h + 1 - i, k)
    den = build_S(h, k)
    d0 = den.coefficient(0)
    coeffs = [0] * (order + 1)
    for n in range(order + 1):
        s = num.coefficient(n)
        for m in range(1, min(n, den.degree) + 1):
            s -= den.coefficient(m) * coeffs[n - m]
        coeffs[n] = s if d0 == 1 else -s
    return TruncatedSeries(order, coeffs)


def f_series(params: ClassParams, order: int) -> TruncatedSeries:
    """Counting series of the class: coefficient n is the count at semilength n.

    f = F_1 + ... + F_h + (x + x^2 + ... + x^{k-2}) F_h; the prefactor is
    the zero polynomial when k = 2.
    """
    F = solve_series(params, order)
    acc = TruncatedSeries(order)
    for s in F:
        acc = acc + s
    prefactor = IntPolynomial([0] + [1] * (params.k - 2))
    return acc + F[-1].mul_poly(prefactor)
