"""Bases for the weight-2k spaces of modular and cusp forms, plus the exact
linear algebra used to certify them and to express forms in coordinates.

Three families are built:

* ``new-m``      -- G_{2k} together with two-factor products G_u * G_v,
                    the factor weights stepping by 4 through the parity
                    class of 2k,
* ``new-s``      -- the same products, each corrected by an exact rational
                    multiple of G_{2k} so the constant term cancels,
* ``classical``  -- the monomials G_4^alpha * G_6^beta.

Certification never touches floating point: a family is confirmed as a
basis when its element count equals the space's dimension and the leading
square matrix of q-coefficients has nonzero exact determinant.  A form in
the weight-2k space vanishing in its first dim-many coefficients is zero,
so that pairing is non-degenerate and the determinant test is sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .arith import bernoulli, dimension_data
from .eisenstein import eisenstein, eisenstein_product
from .qseries import QSeries

__all__ = [
    "BasisKind",
    "Single",
    "Product",
    "CuspCombo",
    "Monomial",
    "BasisElement",
    "Basis",
    "RatMatrix",
    "SpanError",
    "VerificationReport",
    "default_precision",
    "new_basis_descriptors",
    "new_basis",
    "cusp_correction",
    "cusp_basis",
    "classical_exponents",
    "classical_basis",
    "basis_for",
    "coefficient_matrix",
    "verify_report",
    "verify_basis",
    "express",
]


class BasisKind(str, Enum):
    NEW_M = "new-m"
    NEW_S = "new-s"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class Single:
    """The Eisenstein series G_weight on its own."""

    weight: int

    def label(self) -> str:
        return f"G_{self.weight}"


@dataclass(frozen=True)
class Product:
    """The product G_u * G_v."""

    u: int
    v: int

    def label(self) -> str:
        return f"G_{self.u}*G_{self.v}"


@dataclass(frozen=True)
class CuspCombo:
    """G_u * G_v + c * G_{u+v}, with c the exact Bernoulli-ratio correction
    that kills the constant term.  c is stored signed; rendering shows
    "- |c|" when c is negative."""

    u: int
    v: int
    c: Fraction

    def label(self) -> str:
        tail = f"G_{self.u + self.v}"
        if self.c < 0:
            return f"G_{self.u}*G_{self.v} - {-self.c}*{tail}"
        return f"G_{self.u}*G_{self.v} + {self.c}*{tail}"


@dataclass(frozen=True)
class Monomial:
    """The classical monomial G_4^alpha * G_6^beta."""

    alpha: int
    beta: int

    def label(self) -> str:
        parts = []
        if self.alpha:
            parts.append("G_4" if self.alpha == 1 else f"G_4^{self.alpha}")
        if self.beta:
            parts.append("G_6" if self.beta == 1 else f"G_6^{self.beta}")
        return "*".join(parts)


Descriptor = Single | Product | CuspCombo | Monomial


@dataclass(frozen=True)
class BasisElement:
    descriptor: Descriptor
    series: QSeries


@dataclass(frozen=True)
class Basis:
    weight: int
    kind: BasisKind
    precision: int
    elements: tuple[BasisElement, ...]

    def labels(self) -> list[str]:
        return [el.descriptor.label() for el in self.elements]


def default_precision(weight: int) -> int:
    """Construction precision covering the solve-plus-verification windows
    used by express(), with margin."""
    return max(dimension_data(weight).dim_cusp + 10, 16)


def new_basis_descriptors(weight: int) -> list[Descriptor]:
    """G_{2k} first, then the product pairs in increasing first-factor order.

    The factor weights run (4i, 2k-4i) when 2k = 0 mod 4 and
    (4i+2, 2k-4i-2) when 2k = 2 mod 4, for i = 1..dim_cusp; both factors
    always land at weight >= 4.
    """
    dims = dimension_data(weight)
    descriptors: list[Descriptor] = [Single(weight)]
    for i in range(1, dims.dim_cusp + 1):
        u = 4 * i if weight % 4 == 0 else 4 * i + 2
        descriptors.append(Product(u, weight - u))
    return descriptors


def _realize(descriptor: Descriptor, precision: int) -> QSeries:
    if isinstance(descriptor, Single):
        return eisenstein(descriptor.weight, precision)
    if isinstance(descriptor, Product):
        return eisenstein_product(descriptor.u, descriptor.v, precision)
    if isinstance(descriptor, CuspCombo):
        product = eisenstein_product(descriptor.u, descriptor.v, precision)
        correction = descriptor.c * eisenstein(descriptor.u + descriptor.v, precision)
        return product + correction
    if isinstance(descriptor, Monomial):
        series = None
        for base_weight, exponent in ((4, descriptor.alpha), (6, descriptor.beta)):
            if exponent == 0:
                continue
            factor = eisenstein(base_weight, precision) ** exponent
            series = factor if series is None else series * factor
        if series is None:
            raise ValueError("monomial must have at least one factor")
        return series
    raise TypeError(f"unknown descriptor {descriptor!r}")


def new_basis(weight: int, precision: int | None = None) -> Basis:
    """The G_{2k}-plus-products basis for the full weight-2k space."""
    if precision is None:
        precision = default_precision(weight)
    elements = tuple(
        BasisElement(d, _realize(d, precision)) for d in new_basis_descriptors(weight)
    )
    return Basis(weight, BasisKind.NEW_M, precision, elements)


def cusp_correction(u: int, v: int) -> Fraction:
    """The coefficient c making G_u * G_v + c * G_{u+v} a cusp form:
    (B_u / u) * (B_v / v) * (k / B_{u+v}) where u + v = 2k."""
    weight = u + v
    return (bernoulli(u) / u) * (bernoulli(v) / v) * (Fraction(weight, 2) / bernoulli(weight))


def cusp_basis(weight: int, precision: int | None = None) -> Basis:
    """The corrected-product basis for the weight-2k cusp forms.

    Every element's constant term is checked to vanish exactly during
    construction; a nonzero value would be an arithmetic bug, not bad input.
    """
    dims = dimension_data(weight)
    if precision is None:
        precision = default_precision(weight)
    elif precision < dims.dim_cusp + 2:
        raise ValueError(
            f"precision {precision} too small for weight {weight}: need >= {dims.dim_cusp + 2}"
        )
    elements = []
    for descriptor in new_basis_descriptors(weight)[1:]:
        assert isinstance(descriptor, Product)
        combo = CuspCombo(descriptor.u, descriptor.v, cusp_correction(descriptor.u, descriptor.v))
        series = _realize(combo, precision)
        if series.coefficient(0) != 0:
            raise ArithmeticError(
                f"constant term failed to cancel for {combo.label()}: {series.coefficient(0)}"
            )
        elements.append(BasisElement(combo, series))
    return Basis(weight, BasisKind.NEW_S, precision, tuple(elements))


def classical_exponents(weight: int) -> list[tuple[int, int]]:
    """All (alpha, beta) with 4*alpha + 6*beta = weight, in increasing beta
    order, i.e. decreasing G_4 exponent."""
    dims = dimension_data(weight)
    pairs = []
    for beta in range(weight // 6 + 1):
        remainder = weight - 6 * beta
        if remainder >= 0 and remainder % 4 == 0:
            pairs.append((remainder // 4, beta))
    if len(pairs) != dims.dim_modular:
        raise ArithmeticError(
            f"exponent enumeration for weight {weight} found {len(pairs)} monomials, "
            f"expected {dims.dim_modular}"
        )
    return pairs


def classical_basis(weight: int, precision: int | None = None) -> Basis:
    """The monomial basis G_4^alpha * G_6^beta for the full weight-2k space."""
    if precision is None:
        precision = default_precision(weight)
    elements = tuple(
        BasisElement(Monomial(alpha, beta), _realize(Monomial(alpha, beta), precision))
        for alpha, beta in classical_exponents(weight)
    )
    return Basis(weight, BasisKind.CLASSICAL, precision, elements)


def basis_for(weight: int, kind: BasisKind | str, precision: int | None = None) -> Basis:
    kind = BasisKind(kind)
    if kind is BasisKind.NEW_M:
        return new_basis(weight, precision)
    if kind is BasisKind.NEW_S:
        return cusp_basis(weight, precision)
    return classical_basis(weight, precision)


class RatMatrix:
    """Dense matrix of exact rationals with determinant and linear solve."""

    def __init__(self, rows):
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        entries = []
        for row in rows:
            if len(row) != width:
                raise ValueError("matrix rows must all have the same length")
            checked = []
            for x in row:
                if isinstance(x, float):
                    raise TypeError("float entries are not allowed; use Fraction or int")
                checked.append(Fraction(x))
            entries.append(checked)
        self._rows = entries

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row_list(self) -> list[list[Fraction]]:
        return [row[:] for row in self._rows]

    def determinant(self) -> Fraction:
        """Exact determinant.

        Denominators are cleared row by row, then Bareiss fraction-free
        elimination runs over plain integers (every division below is
        exact); the row scalings divide back out at the end.
        """
        n = self.rows
        if n != self.cols:
            raise ValueError(f"determinant needs a square matrix, got {n}x{self.cols}")
        scale = 1
        m = []
        for row in self._rows:
            den = lcm(*(x.denominator for x in row))
            scale *= den
            m.append([int(x * den) for x in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], scale)

    def solve(self, rhs) -> list[Fraction]:
        """Solve self * x = rhs exactly by Gaussian elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError(f"solve needs a square matrix, got {n}x{self.cols}")
        if len(rhs) != n:
            raise ValueError(f"right-hand side length {len(rhs)} does not match {n} rows")
        a = [row[:] + [Fraction(b)] for row, b in zip(self._rows, rhs)]
        for k in range(n):
            pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
            if pivot_row is None:
                raise ValueError("matrix is singular")
            a[k], a[pivot_row] = a[pivot_row], a[k]
            pivot = a[k][k]
            for i in range(k + 1, n):
                factor = a[i][k] / pivot
                if factor:
                    for j in range(k, n + 1):
                        a[i][j] -= factor * a[k][j]
        x = [Fraction(0)] * n
        for k in range(n - 1, -1, -1):
            acc = a[k][n] - sum(a[k][j] * x[j] for j in range(k + 1, n))
            x[k] = acc / a[k][k]
        return x


def coefficient_matrix(basis: Basis, n: int) -> RatMatrix:
    """Matrix whose row i holds coefficients a_0..a_{n-1} of element i."""
    if n < 1:
        raise ValueError(f"need at least one coefficient column, got {n}")
    if not basis.elements:
        raise ValueError("basis has no elements")
    shallow = min(el.series.precision for el in basis.elements)
    if n > shallow:
        raise ValueError(f"requested {n} coefficients but an element only has {shallow}")
    return RatMatrix([[el.series.coefficient(j) for j in range(n)] for el in basis.elements])


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the exact basis certification for one weight and kind.

    ``determinant`` is None only for the vacuous empty cusp basis.
    ``constant_terms_vanish`` is None for the full-space kinds, where no
    vanishing is expected.
    """

    weight: int
    kind: BasisKind
    element_count: int
    expected_count: int
    determinant: Fraction | None
    constant_terms_vanish: bool | None

    @property
    def counts_match(self) -> bool:
        return self.element_count == self.expected_count

    @property
    def confirmed(self) -> bool:
        if not self.counts_match:
            return False
        if self.determinant is not None and self.determinant == 0:
            return False
        return self.constant_terms_vanish in (None, True)


def verify_report(basis: Basis) -> VerificationReport:
    """Certify an already-built basis.

    Full-space kinds: determinant of the leading square matrix of
    coefficients a_0..a_{n-1}.  Cusp kind: every constant term must vanish
    exactly, and the square matrix of coefficients a_1..a_n must be
    non-singular.
    """
    dims = dimension_data(basis.weight)
    count = len(basis.elements)
    if basis.kind is BasisKind.NEW_S:
        expected = dims.dim_cusp
        vanish = all(el.series.coefficient(0) == 0 for el in basis.elements)
        det = None
        if count:
            inner = RatMatrix(
                [[el.series.coefficient(j) for j in range(1, count + 1)] for el in basis.elements]
            )
            det = inner.determinant()
        return VerificationReport(basis.weight, basis.kind, count, expected, det, vanish)
    expected = dims.dim_modular
    det = coefficient_matrix(basis, count).determinant() if count else None
    return VerificationReport(basis.weight, basis.kind, count, expected, det, None)


def verify_basis(weight: int, kind: BasisKind | str, precision: int | None = None) -> VerificationReport:
    return verify_report(basis_for(weight, kind, precision))


class SpanError(ValueError):
    """The target series is not an exact combination of the basis elements."""

    def __init__(self, index: int, expected: Fraction, actual: Fraction):
        self.index = index
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"residual at coefficient index {index}: target has {expected}, "
            f"reconstruction gives {actual}"
        )


def express(target: QSeries, basis: Basis) -> list[Fraction]:
    """Coordinates of `target` in `basis`, certified by over-verification.

    The square system on the first dim-many coefficients (shifted past the
    constant term for the cusp kind) is solved exactly, then the
    reconstruction is compared against every remaining available
    coefficient.  Any mismatch raises SpanError carrying the first bad
    index: the input is not in the span, i.e. not a modular form of this
    weight.
    """
    if target.weight != basis.weight:
        raise ValueError(
            f"target weight {target.weight} does not match basis weight {basis.weight}"
        )
    dims = dimension_data(basis.weight)
    window = 2 * dims.dim_modular + 8
    if target.precision < window:
        raise ValueError(
            f"target precision {target.precision} too small: need >= {window} "
            f"coefficients to solve and then verify"
        )
    count = len(basis.elements)
    if count:
        element_precision = min(el.series.precision for el in basis.elements)
        if element_precision < window:
            raise ValueError(
                f"basis precision {element_precision} too small for expression: "
                f"rebuild with precision >= {window}"
            )
        solve_indices = (
            range(1, count + 1) if basis.kind is BasisKind.NEW_S else range(count)
        )
        matrix = RatMatrix(
            [[el.series.coefficient(j) for el in basis.elements] for j in solve_indices]
        )
        coords = matrix.solve([target.coefficient(j) for j in solve_indices])
        limit = min(target.precision, element_precision)
    else:
        coords = []
        limit = target.precision
    for j in range(limit):
        reconstructed = sum(
            (c * el.series.coefficient(j) for c, el in zip(coords, basis.elements)),
            Fraction(0),
        )
        if reconstructed != target.coefficient(j):
            raise SpanError(j, target.coefficient(j), reconstructed)
    return coords
