"""Extended affine Weyl group of the symplectic similitude group GSp_2g.

Elements are pairs (translation coweight, finite symplectic Weyl element)
composed by the semidirect-product rule.  Coordinates follow the
antidiagonal symplectic form: basis vector i pairs with 2g+1-i, so a
similitude coweight is an integer vector (a_1, ..., a_2g) with
a_i + a_{2g+1-i} equal to a constant c, the similitude.

Conventions fixed here once for the whole package:

* positive roots are the functionals a_i - a_j for i < j, one per class
  under (i, j) ~ (2g+1-j, 2g+1-i); there are g^2 of them (type C_g);
* simple reflections s_1, ..., s_g are the finite ones (s_g the long-root
  reflection), s_0 the affine reflection through the highest-root wall;
* the length-zero subgroup Omega is infinite cyclic, generated by
  omega = t_mu * sigma, where mu = (1,..,1,0,..,0; 1) is the minuscule
  similitude coweight and sigma the half-swap permutation.  The Omega
  exponent of an element equals the similitude of its translation part.

Length is computed by the closed positive-root counting formula for
t_lambda * w; `krstrata.oracles.bfs_length` provides the independent
word-length check used by the test suite and the selftest command.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "SimilitudeCoweight",
    "FiniteSymplecticWeylElement",
    "ExtendedAffineWeylElement",
    "RootDatum",
    "DimensionMismatch",
    "MalformedCoweight",
    "root_datum",
    "compose",
    "length",
    "bruhat_leq",
    "reduced_word",
    "translation",
    "identity",
    "omega_power",
    "minuscule_coweight",
    "word_to_element",
    "lower_bruhat_interval",
    "is_dominant",
]


class DimensionMismatch(ValueError):
    """Operands live over different g."""


class MalformedCoweight(ValueError):
    """Integer vector violating the similitude pairing condition."""


@dataclass(frozen=True)
class SimilitudeCoweight:
    """Integer vector of length 2g with a_i + a_{2g+1-i} = similitude."""

    entries: tuple[int, ...]
    similitude: int

    def __post_init__(self):
        n = len(self.entries)
        if n % 2 != 0:
            raise MalformedCoweight(f"odd length {n}")
        for i in range(n):
            if self.entries[i] + self.entries[n - 1 - i] != self.similitude:
                raise MalformedCoweight(
                    f"entries {self.entries} do not pair to similitude {self.similitude}"
                )

    @property
    def g(self) -> int:
        return len(self.entries) // 2

    def __add__(self, other: "SimilitudeCoweight") -> "SimilitudeCoweight":
        if self.g != other.g:
            raise DimensionMismatch(f"g={self.g} vs g={other.g}")
        return SimilitudeCoweight(
            tuple(a + b for a, b in zip(self.entries, other.entries)),
            self.similitude + other.similitude,
        )

    def __neg__(self) -> "SimilitudeCoweight":
        return SimilitudeCoweight(tuple(-a for a in self.entries), -self.similitude)

    def sort_key(self):
        return (self.similitude, self.entries)


def zero_coweight(g: int) -> SimilitudeCoweight:
    return SimilitudeCoweight((0,) * (2 * g), 0)


def minuscule_coweight(g: int) -> SimilitudeCoweight:
    """The dominant minuscule coweight (1,..,1,0,..,0; 1)."""
    return SimilitudeCoweight((1,) * g + (0,) * g, 1)


def is_dominant(cw: SimilitudeCoweight) -> bool:
    """Dominance = full 2g-vector weakly decreasing (values >= 0 on all positive roots)."""
    e = cw.entries
    return all(e[i] >= e[i + 1] for i in range(len(e) - 1))


@dataclass(frozen=True)
class FiniteSymplecticWeylElement:
    """Permutation of {1,..,2g} with perm(2g+1-i) = 2g+1-perm(i).

    One-line notation: perm[i-1] is the image of i.
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.perm}")
        for i in range(1, n + 1):
            if self.perm[n - i] != n + 1 - self.perm[i - 1]:
                raise ValueError(f"not symplectic: {self.perm}")

    @property
    def g(self) -> int:
        return len(self.perm) // 2

    def __mul__(self, other: "FiniteSymplecticWeylElement") -> "FiniteSymplecticWeylElement":
        p, q = self.perm, other.perm
        return FiniteSymplecticWeylElement(tuple(p[q[i] - 1] for i in range(len(p))))

    def inverse(self) -> "FiniteSymplecticWeylElement":
        inv = [0] * len(self.perm)
        for i, pi in enumerate(self.perm, start=1):
            inv[pi - 1] = i
        return FiniteSymplecticWeylElement(tuple(inv))

    def act(self, cw: SimilitudeCoweight) -> SimilitudeCoweight:
        """(sigma . a)_{sigma(i)} = a_i; preserves the similitude."""
        out = [0] * len(self.perm)
        for i, pi in enumerate(self.perm):
            out[pi - 1] = cw.entries[i]
        return SimilitudeCoweight(tuple(out), cw.similitude)

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm, start=1))


def finite_identity(g: int) -> FiniteSymplecticWeylElement:
    return FiniteSymplecticWeylElement(tuple(range(1, 2 * g + 1)))


@dataclass(frozen=True)
class ExtendedAffineWeylElement:
    """Pair (translation, finite part); x acts on coweights by a -> finite(a) + translation."""

    translation: SimilitudeCoweight
    finite: FiniteSymplecticWeylElement

    def __post_init__(self):
        if self.translation.g != self.finite.g:
            raise DimensionMismatch(
                f"coweight g={self.translation.g} vs permutation g={self.finite.g}"
            )

    @property
    def g(self) -> int:
        return self.translation.g

    def __mul__(self, other: "ExtendedAffineWeylElement") -> "ExtendedAffineWeylElement":
        return compose(self, other)

    def inverse(self) -> "ExtendedAffineWeylElement":
        w_inv = self.finite.inverse()
        return ExtendedAffineWeylElement(-w_inv.act(self.translation), w_inv)

    def is_identity(self) -> bool:
        return self.finite.is_identity() and self.translation == zero_coweight(self.g)

    def omega_exponent(self) -> int:
        """Exponent n with self in W_aff * omega^n; equals the translation similitude."""
        return self.translation.similitude

    def sort_key(self):
        return (self.translation.similitude, length(self), self.translation.entries,
                self.finite.perm)

    def text_form(self) -> str:
        """Canonical text form t[a_1,..,a_2g;c]*[one-line perm], used in all JSON output."""
        lam = ",".join(str(a) for a in self.translation.entries)
        sig = ",".join(str(p) for p in self.finite.perm)
        return f"t[{lam};{self.translation.similitude}]·[{sig}]"

    def __str__(self) -> str:
        return self.text_form()


def identity(g: int) -> ExtendedAffineWeylElement:
    return ExtendedAffineWeylElement(zero_coweight(g), finite_identity(g))


def compose(x: ExtendedAffineWeylElement, y: ExtendedAffineWeylElement) -> ExtendedAffineWeylElement:
    """(l1, w1) * (l2, w2) = (l1 + w1.l2, w1 w2)."""
    if x.g != y.g:
        raise DimensionMismatch(f"g={x.g} vs g={y.g}")
    return ExtendedAffineWeylElement(
        x.translation + x.finite.act(y.translation), x.finite * y.finite
    )


def translation(cw: SimilitudeCoweight) -> ExtendedAffineWeylElement:
    """The translation element t_lambda = (lambda, id)."""
    return ExtendedAffineWeylElement(cw, finite_identity(cw.g))


# ---------------------------------------------------------------------------
# root datum


@dataclass(frozen=True)
class RootDatum:
    """Positive roots and distinguished elements of the ambient group at rank g.

    A positive root is stored as a canonical pair (i, j), i < j, meaning the
    functional a_i - a_j on similitude coweights; the class of (i, j) and
    (2g+1-j, 2g+1-i) is represented by the lexicographically smaller pair.
    """

    g: int
    positive_roots: tuple[tuple[int, int], ...]
    simple_affine_reflections: tuple[ExtendedAffineWeylElement, ...]
    omega: ExtendedAffineWeylElement
    mu: SimilitudeCoweight


def _canonical_root(i: int, j: int, g: int) -> tuple[int, int]:
    n = 2 * g
    a, b = n + 1 - j, n + 1 - i
    return min((i, j), (a, b))


@lru_cache(maxsize=None)
def root_datum(g: int) -> RootDatum:
    n = 2 * g
    roots = sorted({_canonical_root(i, j, g) for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)})
    assert len(roots) == g * g, (g, roots)

    simples = []
    if g >= 1:
        # s_0 = t_{theta_vee} * s_theta, theta the highest root a_1 - a_2g
        theta_vee = SimilitudeCoweight((1,) + (0,) * (n - 2) + (-1,), 0)
        p = list(range(1, n + 1))
        p[0], p[n - 1] = p[n - 1], p[0]
        s0 = ExtendedAffineWeylElement(theta_vee, FiniteSymplecticWeylElement(tuple(p)))
        simples.append(s0)
        for i in range(1, g):
            p = list(range(1, n + 1))
            p[i - 1], p[i] = p[i], p[i - 1]
            p[n - i - 1], p[n - i] = p[n - i], p[n - i - 1]
            simples.append(ExtendedAffineWeylElement(
                zero_coweight(g), FiniteSymplecticWeylElement(tuple(p))))
        p = list(range(1, n + 1))
        p[g - 1], p[g] = p[g], p[g - 1]
        simples.append(ExtendedAffineWeylElement(
            zero_coweight(g), FiniteSymplecticWeylElement(tuple(p))))

    half_swap = FiniteSymplecticWeylElement(
        tuple(range(g + 1, n + 1)) + tuple(range(1, g + 1)))
    omega = ExtendedAffineWeylElement(minuscule_coweight(g), half_swap)
    assert _root_count_length(omega, tuple(roots)) == 0, omega

    return RootDatum(g, tuple(roots), tuple(simples), omega, minuscule_coweight(g))


def _root_count_length(x: ExtendedAffineWeylElement, roots) -> int:
    """Iwahori-Matsumoto count over positive roots for x = t_lambda * w."""
    lam = x.translation.entries
    w_inv = x.finite.inverse().perm
    total = 0
    for (i, j) in roots:
        val = lam[i - 1] - lam[j - 1]
        if w_inv[i - 1] < w_inv[j - 1]:  # w^{-1}(root) still positive
            total += abs(val)
        else:
            total += abs(val - 1)
    return total


@lru_cache(maxsize=None)
def length(x: ExtendedAffineWeylElement) -> int:
    return _root_count_length(x, root_datum(x.g).positive_roots)


def omega_power(g: int, n: int) -> ExtendedAffineWeylElement:
    om = root_datum(g).omega
    out = identity(g)
    step = om if n >= 0 else om.inverse()
    for _ in range(abs(n)):
        out = out * step
    return out


def left_descents(x: ExtendedAffineWeylElement):
    """Indices i with length(s_i * x) < length(x)."""
    rd = root_datum(x.g)
    lx = length(x)
    for i, s in enumerate(rd.simple_affine_reflections):
        if length(s * x) < lx:
            yield i


def reduced_word(x: ExtendedAffineWeylElement, prefer_high: bool = False
                 ) -> tuple[tuple[int, ...], ExtendedAffineWeylElement]:
    """A reduced word (i_1,..,i_l) and Omega part q with x = s_{i_1}..s_{i_l} * q.

    prefer_high flips the descent scan order; used by the dual-path
    regression checks to exercise independent reduced words.
    """
    g = x.g
    rd = root_datum(g)
    n = x.omega_exponent()
    y = x * omega_power(g, -n)
    word = []
    indices = range(g, -1, -1) if prefer_high else range(g + 1)
    while True:
        ly = length(y)
        if ly == 0:
            assert y.is_identity(), y
            break
        for i in indices:
            s = rd.simple_affine_reflections[i]
            if length(s * y) == ly - 1:
                word.append(i)
                y = s * y
                break
        else:  # pragma: no cover - would indicate a broken length formula
            raise AssertionError(f"no descent found for {y}")
    return tuple(word), omega_power(g, n)


def word_to_element(g: int, word, omega_exp: int = 0) -> ExtendedAffineWeylElement:
    rd = root_datum(g)
    out = identity(g)
    for i in word:
        out = out * rd.simple_affine_reflections[i]
    return out * omega_power(g, omega_exp)


@lru_cache(maxsize=None)
def _bruhat_leq_aff(x: ExtendedAffineWeylElement, w: ExtendedAffineWeylElement) -> bool:
    # both arguments in W_aff (Omega exponent 0)
    lx, lw = length(x), length(w)
    if lx > lw:
        return False
    if x == w:
        return True
    if lw == 0:
        return False
    rd = root_datum(x.g)
    for i, s in enumerate(rd.simple_affine_reflections):
        sw = s * w
        if length(sw) == lw - 1:
            sx = s * x
            if length(sx) < lx:
                return _bruhat_leq_aff(sx, sw)
            return _bruhat_leq_aff(x, sw)
    raise AssertionError(f"no descent for {w}")  # pragma: no cover


def bruhat_leq(x: ExtendedAffineWeylElement, w: ExtendedAffineWeylElement) -> bool:
    """Bruhat order on the extended group: comparable only within one Omega coset."""
    if x.g != w.g:
        raise DimensionMismatch(f"g={x.g} vs g={w.g}")
    n = x.omega_exponent()
    if n != w.omega_exponent():
        return False
    g = x.g
    om = omega_power(g, -n)
    return _bruhat_leq_aff(x * om, w * om)


@lru_cache(maxsize=None)
def lower_bruhat_interval(w: ExtendedAffineWeylElement) -> frozenset:
    """All x <= w: products of subwords of one reduced word of w (times the Omega part)."""
    word, om = reduced_word(w)
    rd = root_datum(w.g)
    below = {identity(w.g)}
    for i in word:
        s = rd.simple_affine_reflections[i]
        below |= {y * s for y in below}
    return frozenset(y * om for y in below)
