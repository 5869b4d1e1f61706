"""Exact sparse arithmetic in the ring Z[u, v], plus its fraction field.

The two formal variables are half powers: u**2 stands for q and v**2 for z.
Working in (u, v) makes every entry of the Lehmer matrix an honest monomial
(z**(1/2) * q**((i-1)/2) becomes v * u**(i-1)), so no fractional exponents
ever appear.  Values that live in the plain (q, z) world are exactly the
polynomials whose u- and v-exponents are all even; `as_qz` converts them.

A polynomial is a map from exponent pairs (eu, ev) to nonzero int
coefficients.  Python ints are arbitrary precision, so coefficient growth in
determinant elimination is harmless.  The zero polynomial is the empty map.
The term order used everywhere (printing, leading terms, exact division) is
graded lexicographic on (eu + ev, eu, ev).

`RatFunc` is the quotient-field layer: a num/den pair of polynomials with
den != 0.  It never reduces by GCD; equality is cross-multiplication, which
is all the LU verification needs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


Exponents = tuple[int, int]


class ExactDivisionError(ArithmeticError):
    """Raised when exact_div is asked for a quotient that does not exist."""


def _order_key(e: Exponents) -> tuple[int, int, int]:
    return (e[0] + e[1], e[0], e[1])


class Poly2:
    """Sparse bivariate polynomial over Z in canonical form.

    Canonical means: no zero coefficients are stored and each exponent pair
    appears once.  Instances are immutable by convention; every operation
    returns a fresh value.  Equality is term-map identity.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        canon: dict[Exponents, int] = {}
        if terms:
            for (eu, ev), c in terms.items():
                if eu < 0 or ev < 0:
                    raise ValueError(f"negative exponent ({eu}, {ev})")
                if c != 0:
                    canon[(eu, ev)] = c
        self._terms = canon

    @classmethod
    def _raw(cls, canon: dict[Exponents, int]) -> "Poly2":
        # Internal fast path: caller guarantees canonical form.
        p = cls.__new__(cls)
        p._terms = canon
        return p

    @classmethod
    def constant(cls, c: int) -> "Poly2":
        return cls._raw({(0, 0): c}) if c else cls._raw({})

    @classmethod
    def monomial(cls, c: int, eu: int, ev: int) -> "Poly2":
        if eu < 0 or ev < 0:
            raise ValueError(f"negative exponent ({eu}, {ev})")
        return cls._raw({(eu, ev): c}) if c else cls._raw({})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def terms(self) -> dict[Exponents, int]:
        """A copy of the term map (the instance itself stays immutable)."""
        return dict(self._terms)

    def iter_terms(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def leading(self) -> tuple[Exponents, int]:
        """Leading (exponents, coefficient) under the graded-lex order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_order_key)
        return e, self._terms[e]

    def deg_u(self) -> int:
        """Max u-exponent, -1 for the zero polynomial."""
        return max((e[0] for e in self._terms), default=-1)

    def deg_v(self) -> int:
        """Max v-exponent, -1 for the zero polynomial."""
        return max((e[1] for e in self._terms), default=-1)

    def has_even_exponents(self) -> bool:
        return all(eu % 2 == 0 and ev % 2 == 0 for eu, ev in self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Poly2 | int") -> "Poly2":
        other = _coerce(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Poly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Poly2 | int") -> "Poly2":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Poly2 | int") -> "Poly2":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Poly2 | int") -> "Poly2":
        other = _coerce(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly2._raw({})
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, int] = {}
        get = out.get
        for (au, av), ac in a.items():
            for (bu, bv), bc in b.items():
                e = (au + bu, av + bv)
                s = get(e, 0) + ac * bc
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly2._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly2":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Poly2({to_text(self)!r})"


def _coerce(x: "Poly2 | int") -> Poly2:
    if isinstance(x, Poly2):
        return x
    if isinstance(x, int):
        return Poly2.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


ZERO = Poly2._raw({})
ONE = Poly2._raw({(0, 0): 1})
U = Poly2._raw({(1, 0): 1})
V = Poly2._raw({(0, 1): 1})


def q_pow(k: int) -> Poly2:
    """q**k as an element of Z[u, v], i.e. u**(2k)."""
    return Poly2.monomial(1, 2 * k, 0)


def z_pow(k: int) -> Poly2:
    """z**k as an element of Z[u, v], i.e. v**(2k)."""
    return Poly2.monomial(1, 0, 2 * k)


def add(a: Poly2, b: Poly2) -> Poly2:
    """Term-wise sum in canonical form."""
    return a + b


def mul(a: Poly2, b: Poly2) -> Poly2:
    """Distributive product in canonical form; exact integer coefficients."""
    return a * b


def exact_div(a: Poly2, b: Poly2) -> Poly2:
    """Quotient c with c*b == a, when b divides a exactly in Z[u, v].

    Runs long division by the leading term of b under the graded-lex order.
    When b | a, every reduction step follows the cofactor's leading term, so
    the loop terminates with remainder zero.  Any stuck step (monomial or
    integer coefficient not divisible, or nonzero remainder with a smaller
    leading monomial) proves non-divisibility and raises.
    """
    if b.is_zero:
        raise ExactDivisionError("division by the zero polynomial")
    if a.is_zero:
        return ZERO
    (bu, bv), bc = b.leading()
    b_terms = list(b._terms.items())
    rem = dict(a._terms)
    quot: dict[Exponents, int] = {}
    while rem:
        e = max(rem, key=_order_key)
        eu, ev = e[0] - bu, e[1] - bv
        if eu < 0 or ev < 0:
            raise ExactDivisionError(f"leading monomial {e} not divisible")
        c, r = divmod(rem[e], bc)
        if r:
            raise ExactDivisionError(f"coefficient {rem[e]} not divisible by {bc}")
        quot[(eu, ev)] = c
        for (tu, tv), tc in b_terms:
            k = (eu + tu, ev + tv)
            s = rem.get(k, 0) - c * tc
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return Poly2._raw(quot)


def eval_u1(a: Poly2) -> Poly2:
    """Substitute u := 1 (hence q = 1); the result lives in Z[v]."""
    out: dict[Exponents, int] = {}
    for (_, ev), c in a._terms.items():
        e = (0, ev)
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return Poly2._raw(out)


def as_qz(a: Poly2) -> Poly2:
    """Relabel even exponents (eu, ev) -> (eu/2, ev/2), read as (q, z) degrees.

    The result reuses the Poly2 carrier but its exponent slots now mean
    q-degree and z-degree.  An odd exponent means a half power survived where
    it must have cancelled, and is reported as an error.
    """
    out: dict[Exponents, int] = {}
    for (eu, ev), c in a._terms.items():
        if eu % 2 or ev % 2:
            raise ValueError(f"odd exponent ({eu}, {ev}): not a (q, z) polynomial")
        out[(eu // 2, ev // 2)] = c
    return Poly2._raw(out)


def eval_qz(a: Poly2, q_val: int, z_val: int) -> int:
    """Evaluate an even-exponent polynomial at integer q and z values."""
    total = 0
    for (eu, ev), c in a._terms.items():
        if eu % 2 or ev % 2:
            raise ValueError(f"odd exponent ({eu}, {ev}): not a (q, z) polynomial")
        total += c * q_val ** (eu // 2) * z_val ** (ev // 2)
    return total


# -- fraction field ----------------------------------------------------------


class RatFunc:
    """Quotient num/den of two polynomials, den != 0.

    Carries no GCD reduction; equality is cross-multiplication, so 2/2 == 1/1
    as values even though the stored pairs differ.  The only normalization is
    that a zero numerator snaps the denominator to 1, which keeps zero tests
    and short-circuits cheap.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly2 | int, den: Poly2 | int = ONE):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            den = ONE
        self.num = num
        self.den = den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RatFunc | Poly2 | int") -> "RatFunc":
        other = _coerce_rat(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc | Poly2 | int") -> "RatFunc":
        return self + (-_coerce_rat(other))

    def __rsub__(self, other: "RatFunc | Poly2 | int") -> "RatFunc":
        return _coerce_rat(other) + (-self)

    def __mul__(self, other: "RatFunc | Poly2 | int") -> "RatFunc":
        other = _coerce_rat(other)
        if self.is_zero or other.is_zero:
            return RAT_ZERO
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc | Poly2 | int") -> "RatFunc":
        other = _coerce_rat(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        if self.is_zero:
            return RAT_ZERO
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Poly2, int)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return ratfunc_eq(self, other)

    def __str__(self) -> str:
        if self.den == ONE:
            return to_text(self.num)
        return f"({to_text(self.num)})/({to_text(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self!s})"


def _coerce_rat(x: "RatFunc | Poly2 | int") -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(_coerce(x))


RAT_ZERO = RatFunc(ZERO)
RAT_ONE = RatFunc(ONE)


def ratfunc_eq(a: RatFunc, b: RatFunc) -> bool:
    """True iff a.num * b.den == b.num * a.den exactly."""
    return a.num * b.den == b.num * a.den


# -- canonical text and JSON forms -------------------------------------------


def _render(items: Iterable[tuple[list[tuple[str, int]], int]]) -> str:
    parts: list[str] = []
    for factors, coeff in items:
        body = "*".join(name if e == 1 else f"{name}^{e}"
                        for name, e in factors if e)
        mag = abs(coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not parts:
            parts.append(text if coeff > 0 else f"-{text}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {text}")
    return " ".join(parts)


def to_text(p: Poly2) -> str:
    """Canonical text form: graded-lex order, (q, z) view when exponents allow.

    Examples: `1 - z - q*z` in the (q, z) view, `v*u^2` in the (u, v) view.
    """
    if p.is_zero:
        return "0"
    terms = p.sorted_terms()
    if p.has_even_exponents():
        return _render(([("q", eu // 2), ("z", ev // 2)], c) for (eu, ev), c in terms)
    return _render(([("v", ev), ("u", eu)], c) for (eu, ev), c in terms)


def to_json_obj(p: Poly2) -> dict:
    """JSON form: `vars` marker plus [z_exp, q_exp, coeff] triples.

    Even-exponent polynomials serialize in the (q, z) view; anything with a
    half power keeps raw (u, v) exponents under the "uv" marker.
    """
    terms = p.sorted_terms()
    if p.has_even_exponents():
        return {"vars": "qz",
                "terms": [[ev // 2, eu // 2, str(c)] for (eu, ev), c in terms]}
    return {"vars": "uv",
            "terms": [[ev, eu, str(c)] for (eu, ev), c in terms]}


def from_json_obj(obj: Mapping) -> Poly2:
    """Rebuild a polynomial from its JSON form (inverse of to_json_obj)."""
    variables = obj["vars"]
    if variables not in ("qz", "uv"):
        raise ValueError(f"unknown variable marker {variables!r}")
    scale = 2 if variables == "qz" else 1
    out: dict[Exponents, int] = {}
    for second, first, coeff in obj["terms"]:
        e = (scale * first, scale * second)
        if e in out:
            raise ValueError(f"duplicate exponent pair {e}")
        out[e] = int(coeff)
    return Poly2(out)


def ratfunc_to_json_obj(r: RatFunc) -> dict:
    return {"num": to_json_obj(r.num), "den": to_json_obj(r.den)}


def ratfunc_from_json_obj(obj: Mapping) -> RatFunc:
    return RatFunc(from_json_obj(obj["num"]), from_json_obj(obj["den"]))
