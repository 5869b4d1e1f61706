"""The infinite-size limit of the Lehmer determinant, and its two checks.

As n grows, det M(n) stabilizes coefficient-wise to the q-series

    sum over k >= 0 of  (-1)^k q^(k(k-1)) z^k / (q;q)_k,

represented here as a `Series2`: a z-polynomial truncated at degree K whose
coefficients are q-polynomials truncated at degree D.  `stabilization_check`
measures, for one z-power at a time, through which q-degree the finite
determinant already agrees with the limit; the certified empirical answer is
exactly n - 2k (brute-forced over 1 <= k <= 4, 2k <= n <= 20 before being
frozen into the tests, see scripts/stabilization_scan.py).

At q = 1 the pivot ratios become the generating functions of Dyck paths of
bounded height: the series expansion of lam(h)/lam(h+1) in z counts paths of
half-length m whose height never exceeds h.  Convention pinned empirically
against the exhaustive DP oracle (`dyck_count`): height is the maximum level
reached, z marks half-length (number of up-steps), and the h-bounded count
pairs with the ratio lam(h)/lam(h+1), validated at h = 0 (empty path only)
and h = 1 (a single zigzag path per length) before being frozen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lehmer import lambda_rec
from .poly import ONE, Poly2, eval_u1, to_text
from .qcomb import gauss_product, poch_qq


@dataclass(frozen=True)
class Series2:
    """Formal power series in z to degree z_trunc, each coefficient a
    q-polynomial to degree q_trunc.  Stored in the half-power carrier, so a
    coefficient's u-exponents are even and its v-exponents zero."""

    z_trunc: int
    q_trunc: int
    coeffs: tuple[Poly2, ...]

    def __post_init__(self):
        if self.z_trunc < 0 or self.q_trunc < 0:
            raise ValueError("truncation orders must be nonnegative")
        if len(self.coeffs) != self.z_trunc + 1:
            raise ValueError("need one coefficient per z-power, 0..z_trunc")
        for c in self.coeffs:
            if c.deg_v() > 0:
                raise ValueError("coefficients must be polynomials in q alone")
            if not c.has_even_exponents():
                raise ValueError("coefficients must have even u-exponents")
            if c.deg_u() > 2 * self.q_trunc:
                raise ValueError("coefficient exceeds the q-truncation order")

    def __str__(self) -> str:
        return "\n".join(f"z^{k}: {to_text(c)}" for k, c in enumerate(self.coeffs))


def _q_coeff_list(p: Poly2, upto: int) -> list[int]:
    """Dense coefficient list [q^0 .. q^upto] of a pure q-polynomial."""
    out = [0] * (upto + 1)
    for (eu, ev), c in p.iter_terms():
        if ev:
            raise ValueError("not a polynomial in q alone")
        if eu % 2:
            raise ValueError(f"odd u-exponent {eu}")
        if eu // 2 <= upto:
            out[eu // 2] = c
    return out


def _q_poly(coeffs: list[int]) -> Poly2:
    return Poly2({(2 * d, 0): c for d, c in enumerate(coeffs)})


def invert_poch(k: int, trunc: int) -> Poly2:
    """Power-series inverse of (q;q)_k truncated at q-degree `trunc`.

    Computed by the linear recurrence for reciprocals of a unit-constant
    series, then certified on the spot: the product with (q;q)_k must be 1
    modulo q^(trunc+1).
    """
    if k < 0 or trunc < 0:
        raise ValueError("arguments must be nonnegative")
    p = poch_qq(k)
    pc = _q_coeff_list(p, min(p.deg_u() // 2, trunc))
    inv = [0] * (trunc + 1)
    inv[0] = 1
    for d in range(1, trunc + 1):
        acc = 0
        for i in range(1, min(d, len(pc) - 1) + 1):
            acc += pc[i] * inv[d - i]
        inv[d] = -acc
    result = _q_poly(inv)
    check = result * p
    residue = Poly2({e: c for e, c in check.iter_terms() if e[0] <= 2 * trunc})
    if residue != ONE:
        raise ArithmeticError(f"series inversion failed certification for k={k}")
    return result


def limit_det(z_trunc: int, q_trunc: int) -> Series2:
    """The limit determinant truncated at (z_trunc, q_trunc):
    coefficient of z^k is (-1)^k q^(k(k-1)) / (q;q)_k."""
    if z_trunc < 0 or q_trunc < 0:
        raise ValueError("truncation orders must be nonnegative")
    coeffs = []
    for k in range(z_trunc + 1):
        shift = k * (k - 1)
        if shift > q_trunc:
            coeffs.append(Poly2.constant(0))
            continue
        body = invert_poch(k, q_trunc - shift)
        signed = body if k % 2 == 0 else -body
        coeffs.append(Poly2.monomial(1, 2 * shift, 0) * signed)
    return Series2(z_trunc=z_trunc, q_trunc=q_trunc, coeffs=tuple(coeffs))


def series_from_poly(p: Poly2, z_trunc: int, q_trunc: int) -> Series2:
    """Truncate an even-exponent polynomial (e.g. a finite determinant) into
    the Series2 carrier at (z_trunc, q_trunc)."""
    buckets: list[dict] = [dict() for _ in range(z_trunc + 1)]
    for (eu, ev), c in p.iter_terms():
        if eu % 2 or ev % 2:
            raise ValueError(f"odd exponent ({eu}, {ev}): not a (q, z) polynomial")
        if ev // 2 <= z_trunc and eu // 2 <= q_trunc:
            buckets[ev // 2][(eu, 0)] = c
    return Series2(z_trunc=z_trunc, q_trunc=q_trunc,
                   coeffs=tuple(Poly2(b) for b in buckets))


def stabilization_check(n: int, k: int) -> int | None:
    """Largest d such that the z^k coefficient of det M(n) agrees with the
    limit coefficient modulo q^(d+1).

    Both coefficients carry the same (-1)^k q^(k(k-1)) prefactor, so the
    comparison strips it: Gaussian binomial [n-k k] against the series
    1/(q;q)_k.  For k = 0 the two sides are identically 1 and no finite
    largest d exists; None encodes that exact agreement.
    """
    if k < 0:
        raise ValueError("z-power must be nonnegative")
    if 2 * k > n:
        raise ValueError(f"z^{k} is absent from the order-{n} determinant")
    if k == 0:
        return None
    finite = gauss_product(n - k, k)
    cap = max(finite.deg_u() // 2 + 2, 4)
    while True:
        diff = finite - invert_poch(k, cap)
        if not diff.is_zero:
            first = min(eu for eu, _ in diff.terms) // 2
            return first - 1
        cap *= 2


def dyck_count(m: int, h: int) -> int:
    """Dyck paths of half-length m whose height never exceeds h, counted by
    exhaustive dynamic programming over (step, current height).

    This is the oracle side of the generating-function check, so it stays
    deliberately free of any series machinery.
    """
    if m < 0 or h < 0:
        raise ValueError("arguments must be nonnegative")
    ways = [0] * (h + 1)
    ways[0] = 1
    for _ in range(2 * m):
        nxt = [0] * (h + 1)
        for y, w in enumerate(ways):
            if not w:
                continue
            if y + 1 <= h:
                nxt[y + 1] += w
            if y - 1 >= 0:
                nxt[y - 1] += w
        ways = nxt
    return ways[0]


def _z_coeff_list(p: Poly2, upto: int) -> list[int]:
    """Dense z-coefficient list of a polynomial in v alone (even exponents)."""
    out = [0] * (upto + 1)
    for (eu, ev), c in p.iter_terms():
        if eu:
            raise ValueError("not a polynomial in z alone")
        if ev % 2:
            raise ValueError(f"odd v-exponent {ev}")
        if ev // 2 <= upto:
            out[ev // 2] = c
    return out


def dyck_gf_check(h: int, m_max: int) -> bool:
    """True iff the z-expansion of lam(h)/lam(h+1) at q = 1 matches the DP
    path counts dyck_count(m, h) for every half-length m <= m_max."""
    if h < 0 or m_max < 0:
        raise ValueError("arguments must be nonnegative")
    lam = lambda_rec(h + 1)
    num = _z_coeff_list(eval_u1(lam[h]), m_max)
    den = _z_coeff_list(eval_u1(lam[h + 1]), m_max)
    # Series division: the denominator has constant term 1.
    expansion = [0] * (m_max + 1)
    for m in range(m_max + 1):
        acc = num[m]
        for i in range(1, m + 1):
            acc -= den[i] * expansion[m - i]
        expansion[m] = acc
    return all(expansion[m] == dyck_count(m, h) for m in range(m_max + 1))
