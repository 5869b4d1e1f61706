"""Generic exact linear algebra used as independent oracles.

Nothing in here knows the closed forms: `lu_generic` runs Doolittle
elimination over the fraction field and must rediscover the guessed factors,
`product_check` multiplies L by U entry-by-entry (off-band zeros included),
and two determinant routes (`det_cofactor` via the continuant recurrence,
`det_bareiss` via fraction-free dense elimination) must agree with the
closed form.  The two determinant oracles deliberately have uncorrelated
failure modes: one exploits the band structure, the other ignores it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lehmer import BandedFactors, TriMatrix
from .poly import ONE, RAT_ONE, RAT_ZERO, ZERO, Poly2, RatFunc, exact_div, ratfunc_eq


class ZeroPivotError(ArithmeticError):
    """A pivot vanished where the elimination cannot continue."""


@dataclass(frozen=True)
class DenseMatrix:
    """Plain n x n grid of rational functions."""

    n: int
    entries: tuple[tuple[RatFunc, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix dimension must be positive")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError("entries must form an n x n grid")

    @classmethod
    def from_tri(cls, m: TriMatrix) -> "DenseMatrix":
        rows = tuple(tuple(RatFunc(m.entry(i, j)) for j in range(m.n))
                     for i in range(m.n))
        return cls(m.n, rows)

    @classmethod
    def from_poly_rows(cls, rows) -> "DenseMatrix":
        grid = tuple(tuple(RatFunc(e) for e in row) for row in rows)
        return cls(len(grid), grid)

    def matmul(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = RAT_ZERO
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return DenseMatrix(n, tuple(rows))


def dense_lower(f: BandedFactors) -> DenseMatrix:
    """L as a dense matrix: unit diagonal plus the subdiagonal band."""
    n = f.n
    rows = [[RAT_ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = RAT_ONE
    for i in range(n - 1):
        rows[i + 1][i] = f.l_sub[i]
    return DenseMatrix(n, tuple(tuple(r) for r in rows))


def dense_upper(f: BandedFactors) -> DenseMatrix:
    """U as a dense matrix: diagonal plus the superdiagonal band."""
    n = f.n
    rows = [[RAT_ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = f.u_diag[i]
    for i in range(n - 1):
        rows[i][i + 1] = RatFunc(f.u_super[i])
    return DenseMatrix(n, tuple(tuple(r) for r in rows))


def lu_generic(m: TriMatrix) -> BandedFactors:
    """Doolittle elimination over the fraction field, band-aware.

    For tridiagonal input L gets a single subdiagonal and U keeps the input's
    superdiagonal, so one division and one update per row suffice.  Requires
    every pivot (each leading principal minor ratio) to be nonzero.
    """
    n = m.n
    u_diag: list[RatFunc] = [RatFunc(m.diag[0])]
    l_sub: list[RatFunc] = []
    for j in range(1, n):
        pivot = u_diag[j - 1]
        if pivot.is_zero:
            raise ZeroPivotError(f"zero pivot at elimination step {j}")
        mult = RatFunc(m.subdiag[j - 1]) / pivot
        l_sub.append(mult)
        u_diag.append(RatFunc(m.diag[j]) - mult * m.superdiag[j - 1])
    return BandedFactors(n=n, u_diag=tuple(u_diag),
                         u_super=tuple(m.superdiag), l_sub=tuple(l_sub))


@dataclass(frozen=True)
class ProductCheckResult:
    """Outcome of an exact L*U == M comparison; falsy when some entry differs,
    with the first failing 0-based (i, j) attached."""

    ok: bool
    mismatch: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def product_check(f: BandedFactors, m: TriMatrix) -> ProductCheckResult:
    """Exact entry-by-entry test that L*U equals m, off-band zeros included."""
    if f.n != m.n:
        raise ValueError("dimension mismatch")
    product = dense_lower(f).matmul(dense_upper(f))
    target = DenseMatrix.from_tri(m)
    for i in range(m.n):
        for j in range(m.n):
            if not ratfunc_eq(product.entries[i][j], target.entries[i][j]):
                return ProductCheckResult(False, (i, j))
    return ProductCheckResult(True)


def det_cofactor(m: TriMatrix) -> Poly2:
    """Determinant by the continuant recurrence on leading principal minors:
    D_j = d_j D_{j-1} - sub_{j-1} super_{j-1} D_{j-2}.  No fractions arise."""
    prev2 = ONE
    prev1 = m.diag[0]
    for j in range(1, m.n):
        cur = m.diag[j] * prev1 - m.subdiag[j - 1] * m.superdiag[j - 1] * prev2
        prev2, prev1 = prev1, cur
    return prev1


def det_bareiss(m: DenseMatrix) -> Poly2:
    """Determinant by fraction-free elimination; every division is exact.

    Input entries must be polynomials (denominator literally 1).  A zero
    pivot triggers a row-swap search (sign flip); a fully zero pivot column
    means the determinant is zero.  Blind to any band structure on purpose.
    """
    for row in m.entries:
        for e in row:
            if e.den != ONE:
                raise ValueError("entries must be polynomials (denominator 1)")
    n = m.n
    a = [[e.num for e in row] for row in m.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            for r in range(k + 1, n):
                if not a[r][k].is_zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = ZERO
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]
