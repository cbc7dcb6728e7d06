"""Iwahori-Hecke algebra of the extended affine Weyl group.

Scalars are exact integer Laurent polynomials in v with q = v^2.  The
conventions, fixed here and referred to by every downstream module:

* quadratic relation (T_s - q)(T_s + 1) = 0, so T_s^{-1} = q^{-1} T_s +
  (q^{-1} - 1);
* T_omega acts by support translation for the length-zero generator;
* theta(lambda) is the Bernstein element normalised so that for dominant
  lambda it equals v^{-length(t_lambda)} T_{t_lambda}; the central
  function z_mu is the orbit sum of theta over the Weyl orbit of the
  minuscule coweight;
* the bar involution sends v to v^{-1} and T_w to the inverse of
  T_{w^{-1}};
* multiplicity polynomials m_w are *defined* as the coefficients of z_mu
  in the signed Kazhdan-Lusztig basis
      C_w = sum_{x <= w} (-1)^{l(w)-l(x)} v^{l(w)-2l(x)} P_{x,w}(v^{-2}) T_x,
  the basis in which they come out as nonnegative-integer combinations of
  fixed v-powers and are conserved under the boundary embedding with zero
  normalisation shift.
"""

from __future__ import annotations

from functools import lru_cache

from .admissible import DoubleCoset, ParahoricType, admissible_set, weyl_orbit
from .affine_weyl import (
    ExtendedAffineWeylElement,
    SimilitudeCoweight,
    bruhat_leq,
    identity,
    is_dominant,
    length,
    lower_bruhat_interval,
    minuscule_coweight,
    omega_power,
    reduced_word,
    root_datum,
    translation,
)

__all__ = [
    "LaurentPolynomial",
    "HeckeElement",
    "LP_ZERO",
    "LP_ONE",
    "v_power",
    "t_element",
    "t_mul",
    "t_inv",
    "theta",
    "z_mu",
    "bar",
    "kl_polynomial",
    "kl_mu",
    "c_element",
    "c_prime_element",
    "multiplicities",
]


class LaurentPolynomial:
    """Integer Laurent polynomial in v; immutable by convention, no zero terms stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    def scale(self, n: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e: n * c for e, c in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by v^k."""
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPolynomial":
        """v -> v^{-1}."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()})

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def eval_sqrt(self, q):
        """Value at v = sqrt(q) as a pair (a, b) meaning a + b*sqrt(q); exact."""
        from fractions import Fraction

        a = Fraction(0)
        b = Fraction(0)
        for e, c in self.coeffs.items():
            if e % 2 == 0:
                a += c * Fraction(q) ** (e // 2)
            else:
                b += c * Fraction(q) ** ((e - 1) // 2)
        return a, b

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.text_form()!r})"

    def text_form(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                mono = f"{head}v^{e}" if e != 1 else f"{head}v"
            parts.append(("-" if c < 0 else "+", mono))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text

    def __str__(self) -> str:
        return self.text_form()


LP_ZERO = LaurentPolynomial()
LP_ONE = LaurentPolynomial({0: 1})
LP_Q = LaurentPolynomial({2: 1})
LP_QINV = LaurentPolynomial({-2: 1})
LP_QM1 = LaurentPolynomial({2: 1, 0: -1})        # q - 1
LP_QINV_M1 = LaurentPolynomial({-2: 1, 0: -1})   # q^{-1} - 1


def v_power(k: int) -> LaurentPolynomial:
    return LaurentPolynomial({k: 1})


class HeckeElement:
    """Finite sum of T_x with Laurent-polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {x: c for x, c in (terms or {}).items()
                      if isinstance(c, LaurentPolynomial) and not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, x: ExtendedAffineWeylElement) -> LaurentPolynomial:
        return self.terms.get(x, LP_ZERO)

    def support(self):
        return sorted(self.terms, key=ExtendedAffineWeylElement.sort_key)

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, LP_ZERO) + c
        return HeckeElement(out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentPolynomial({0: -1}))

    def scale(self, p: LaurentPolynomial) -> "HeckeElement":
        return HeckeElement({x: c * p for x, c in self.terms.items()})

    def __repr__(self) -> str:
        rows = ", ".join(f"{x.text_form()}: {c.text_form()}"
                         for x, c in sorted(self.terms.items(),
                                            key=lambda t: t[0].sort_key()))
        return f"HeckeElement({{{rows}}})"


def t_element(x: ExtendedAffineWeylElement) -> HeckeElement:
    return HeckeElement({x: LP_ONE})


def _simple_mul(g: int, i: int, h: HeckeElement) -> HeckeElement:
    """T_{s_i} * h by the quadratic relation."""
    s = root_datum(g).simple_affine_reflections[i]
    out: dict = {}

    def bump(x, c):
        out[x] = out.get(x, LP_ZERO) + c

    for w, c in h.terms.items():
        sw = s * w
        if length(sw) > length(w):
            bump(sw, c)
        else:
            bump(w, c * LP_QM1)
            bump(sw, c * LP_Q)
    return HeckeElement(out)


def _omega_shift(g: int, n: int, h: HeckeElement) -> HeckeElement:
    om = omega_power(g, n)
    return HeckeElement({om * w: c for w, c in h.terms.items()})


def t_mul(x: ExtendedAffineWeylElement, h: HeckeElement,
          prefer_high: bool = False) -> HeckeElement:
    """Left multiplication T_x * h along a reduced word of x."""
    word, om = reduced_word(x, prefer_high)
    out = _omega_shift(x.g, om.omega_exponent(), h)
    for i in reversed(word):
        out = _simple_mul(x.g, i, out)
    return out


def mul(h1: HeckeElement, h2: HeckeElement, prefer_high: bool = False) -> HeckeElement:
    out = HeckeElement()
    for x, c in h1.terms.items():
        out = out + t_mul(x, h2, prefer_high).scale(c)
    return out


def _simple_inv_mul(g: int, i: int, h: HeckeElement) -> HeckeElement:
    """T_{s_i}^{-1} * h = q^{-1} T_{s_i} h + (q^{-1} - 1) h."""
    return _simple_mul(g, i, h).scale(LP_QINV) + h.scale(LP_QINV_M1)


def t_inv(w: ExtendedAffineWeylElement, prefer_high: bool = False) -> HeckeElement:
    """T_w^{-1}; t_mul(w, t_inv(w)) is T_id."""
    word, om = reduced_word(w, prefer_high)
    out = t_element(identity(w.g))
    for i in word:
        out = _simple_inv_mul(w.g, i, out)
    return _omega_shift(w.g, -om.omega_exponent(), out)


def _dominant_decomposition(lam: SimilitudeCoweight, extra: int = 0):
    """lam = lam1 - lam2 with both dominant; extra > 0 picks a larger decomposition."""
    g = lam.g
    delta = SimilitudeCoweight(tuple(range(2 * g - 1, -1, -1)), max(2 * g - 1, 0))
    e = lam.entries
    need = max([0] + [e[i + 1] - e[i] for i in range(len(e) - 1)]) + extra
    lam2 = SimilitudeCoweight(tuple(need * d for d in delta.entries),
                              need * delta.similitude)
    return lam + lam2, lam2


def theta(lam: SimilitudeCoweight, extra: int = 0, prefer_high: bool = False) -> HeckeElement:
    """Bernstein element theta_lambda = v^{l(t_l2)-l(t_l1)} T_{t_l1} T_{t_l2}^{-1}.

    Independent of the choice of dominant decomposition lambda = l1 - l2;
    the regression suite compares distinct decompositions (extra > 0).
    """
    lam1, lam2 = _dominant_decomposition(lam, extra)
    assert is_dominant(lam1) and is_dominant(lam2)
    t1, t2 = translation(lam1), translation(lam2)
    shift = length(t2) - length(t1)
    if length(t2) == 0:
        out = t_element(t1)
    else:
        out = t_mul(t1, t_inv(t2, prefer_high), prefer_high)
    return out.scale(v_power(shift))


@lru_cache(maxsize=None)
def _z_mu_cached(g: int, mu: SimilitudeCoweight, prefer_high: bool, extra: int) -> HeckeElement:
    out = HeckeElement()
    for lam in sorted(weyl_orbit(mu), key=SimilitudeCoweight.sort_key):
        out = out + theta(lam, extra, prefer_high)
    support = set(out.terms)
    assert support <= admissible_set(g, mu), "Bernstein function escapes the admissible set"
    return out


def z_mu(g: int, mu: SimilitudeCoweight | None = None,
         prefer_high: bool = False, extra: int = 0) -> HeckeElement:
    """Central Bernstein function attached to the (default minuscule) coweight."""
    if mu is None:
        mu = minuscule_coweight(g)
    return _z_mu_cached(g, mu, prefer_high, extra)


def bar(h: HeckeElement) -> HeckeElement:
    """Bar involution: v -> v^{-1}, T_w -> T_{w^{-1}}^{-1}."""
    out = HeckeElement()
    for x, c in h.terms.items():
        out = out + t_inv(x.inverse()).scale(c.bar())
    return out


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig polynomials

def _first_left_descent(w: ExtendedAffineWeylElement) -> int:
    rd = root_datum(w.g)
    lw = length(w)
    for i, s in enumerate(rd.simple_affine_reflections):
        if length(s * w) < lw:
            return i
    raise AssertionError(f"no descent for {w}")


@lru_cache(maxsize=None)
def kl_polynomial(x: ExtendedAffineWeylElement,
                  w: ExtendedAffineWeylElement) -> LaurentPolynomial:
    """P_{x,w} as a polynomial in q = v^2 (stored with even v-exponents).

    Standard recursion on a left descent of w; zero when x is not below w.
    The R-polynomial inversion oracle in krstrata.oracles recomputes these
    independently for the cross-check suite.
    """
    if x == w:
        return LP_ONE
    if not bruhat_leq(x, w):
        return LP_ZERO
    g = w.g
    rd = root_datum(g)
    i = _first_left_descent(w)
    s = rd.simple_affine_reflections[i]
    sw = s * w
    sx = s * x
    c = 1 if length(sx) < length(x) else 0
    out = kl_polynomial(sx, sw).shift(2 * (1 - c)) + kl_polynomial(x, sw).shift(2 * c)
    for z in lower_bruhat_interval(sw):
        if z == sw or length(s * z) >= length(z) or not bruhat_leq(x, z):
            continue
        m = kl_mu(z, sw)
        if m:
            out = out - kl_polynomial(x, z).shift(length(w) - length(z)).scale(m)
    if not out.is_zero():
        assert out.max_exp() <= length(w) - length(x) - 1, (x, w, out)
    return out


def kl_mu(z: ExtendedAffineWeylElement, w: ExtendedAffineWeylElement) -> int:
    """Coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w}."""
    return kl_polynomial(z, w).coeff(length(w) - length(z) - 1)


def c_element(w: ExtendedAffineWeylElement) -> HeckeElement:
    """Signed KL basis element C_w (the basis used for multiplicities)."""
    lw = length(w)
    terms = {}
    for x in lower_bruhat_interval(w):
        p = kl_polynomial(x, w)
        sign = -1 if (lw - length(x)) % 2 else 1
        terms[x] = p.bar().shift(lw - 2 * length(x)).scale(sign)
    return HeckeElement(terms)


def c_prime_element(w: ExtendedAffineWeylElement) -> HeckeElement:
    """Self-dual KL basis element C'_w = v^{-l(w)} sum P_{x,w} T_x."""
    lw = length(w)
    return HeckeElement({x: kl_polynomial(x, w).shift(-lw)
                         for x in lower_bruhat_interval(w)})


def multiplicities(g: int, mu: SimilitudeCoweight | None = None,
                   prefer_high: bool = False, extra: int = 0):
    """Coefficients of z_mu in the signed KL basis, keyed by Iwahori double cosets.

    This is the package's realisation of the Jordan-Holder multiplicity
    polynomials; Tate twists act on them by even v-power shifts.  Only the
    Iwahori case is computed (parahoric KL theory is out of scope).
    """
    par = ParahoricType.iwahori(g)
    rem = z_mu(g, mu, prefer_high, extra)
    out = {}
    while not rem.is_zero():
        x = max(rem.terms, key=lambda y: (length(y), y.sort_key()))
        m = rem.terms[x].shift(length(x))
        out[DoubleCoset(x, par)] = m
        rem = rem - c_element(x).scale(m)
    return out
