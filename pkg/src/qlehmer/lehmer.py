"""The Lehmer tridiagonal matrix family and its closed-form LU data.

M(n) has unit diagonal and the half-power monomial v * u**(i-1) (that is,
z**(1/2) * q**((i-1)/2)) in position (i, i+1) and (i+1, i), 1-based i.  The
whole story is carried by the lambda polynomials

    lam(j) = sum over 0 <= k <= j/2 of  [j-k k]_q * (-1)^k * q^(k(k-1)) * z^k,

which satisfy lam(j) = lam(j-1) - z q^(j-2) lam(j-2) with lam(0) = lam(1) = 1.
The U pivots are the ratios lam(j)/lam(j-1), the determinant telescopes to
lam(n), and at q = 1, z = -1 the family collapses to Fibonacci numbers.

`lambda_sum` (closed sum, via the product-form binomials) and `lambda_rec`
(three-term recursion) are two independent constructions; tests require them
to agree term for term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import ONE, Poly2, RatFunc, q_pow, z_pow
from .qcomb import gauss_product


@dataclass(frozen=True)
class TriMatrix:
    """Tridiagonal matrix stored as bands of polynomials.

    `superdiag[i]` is the (i+1, i+2) entry and `subdiag[i]` the (i+2, i+1)
    entry, 0-based lists for 1-based matrix positions.
    """

    n: int
    diag: tuple[Poly2, ...]
    superdiag: tuple[Poly2, ...]
    subdiag: tuple[Poly2, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix dimension must be positive")
        if len(self.diag) != self.n:
            raise ValueError("diagonal band must have n entries")
        if len(self.superdiag) != self.n - 1 or len(self.subdiag) != self.n - 1:
            raise ValueError("off-diagonal bands must have n-1 entries")

    def entry(self, i: int, j: int) -> Poly2:
        """Entry at 0-based (i, j), zero off the three bands."""
        if i == j:
            return self.diag[i]
        if j == i + 1:
            return self.superdiag[i]
        if i == j + 1:
            return self.subdiag[j]
        return Poly2.constant(0)


@dataclass(frozen=True)
class BandedFactors:
    """LU factors of a tridiagonal matrix: L unit lower bidiagonal, U upper
    bidiagonal.  `u_diag[j]` is U_{j+1,j+1}, `u_super[j]` is U_{j+1,j+2},
    `l_sub[j]` is L_{j+2,j+1}; the L diagonal is implicitly all ones.
    """

    n: int
    u_diag: tuple[RatFunc, ...]
    u_super: tuple[Poly2, ...]
    l_sub: tuple[RatFunc, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("factor dimension must be positive")
        if len(self.u_diag) != self.n:
            raise ValueError("U diagonal must have n entries")
        if len(self.u_super) != self.n - 1 or len(self.l_sub) != self.n - 1:
            raise ValueError("off-diagonal bands must have n-1 entries")


@dataclass(frozen=True)
class LambdaFamily:
    """The table lam(0..j_max), built by the three-term recursion."""

    values: tuple[Poly2, ...]

    def __getitem__(self, j: int) -> Poly2:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


def lambda_sum(j: int) -> Poly2:
    """lam(j) from the closed sum, one Gaussian-binomial term per z-power."""
    if j < 0:
        raise ValueError("index must be nonnegative")
    total = Poly2.constant(0)
    for k in range(j // 2 + 1):
        sign = -1 if k % 2 else 1
        total = total + sign * gauss_product(j - k, k) * q_pow(k * (k - 1)) * z_pow(k)
    return total


def lambda_rec(j_max: int) -> LambdaFamily:
    """The table lam(0..j_max) via lam(j) = lam(j-1) - z q^(j-2) lam(j-2).

    The recursion only applies from j = 2 on (q^(j-2) would be a negative
    power at j = 1); lam(0) = lam(1) = 1 are the base cases.
    """
    if j_max < 0:
        raise ValueError("index must be nonnegative")
    values = [ONE, ONE]
    for j in range(2, j_max + 1):
        values.append(values[j - 1] - z_pow(1) * q_pow(j - 2) * values[j - 2])
    return LambdaFamily(tuple(values[: j_max + 1]))


def band_monomial(i: int) -> Poly2:
    """The off-diagonal entry v * u**(i-1) at 1-based band position i."""
    return Poly2.monomial(1, i - 1, 1)


def lehmer_matrix(n: int) -> TriMatrix:
    """The n x n Lehmer matrix: unit diagonal, bands v * u**(i-1)."""
    if n < 1:
        raise ValueError("matrix dimension must be positive")
    band = tuple(band_monomial(i) for i in range(1, n))
    return TriMatrix(n=n, diag=(ONE,) * n, superdiag=band, subdiag=band)


def closed_factors(n: int) -> BandedFactors:
    """The closed-form LU factors of the Lehmer matrix.

    U_{j,j} = lam(j)/lam(j-1), U_{j,j+1} = v u^(j-1),
    L_{j+1,j} = v u^(j-1) lam(j-1)/lam(j); all other off-band entries zero.
    """
    if n < 1:
        raise ValueError("factor dimension must be positive")
    lam = lambda_rec(n)
    u_diag = tuple(RatFunc(lam[j], lam[j - 1]) for j in range(1, n + 1))
    u_super = tuple(band_monomial(j) for j in range(1, n))
    l_sub = tuple(RatFunc(band_monomial(j) * lam[j - 1], lam[j]) for j in range(1, n))
    return BandedFactors(n=n, u_diag=u_diag, u_super=u_super, l_sub=l_sub)


def det_closed(n: int) -> Poly2:
    """det M(n) in closed form: the U pivots telescope to lam(n)/lam(0)."""
    if n < 1:
        raise ValueError("matrix dimension must be positive")
    return lambda_rec(n)[n]
