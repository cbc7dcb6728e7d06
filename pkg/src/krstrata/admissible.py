"""mu-admissible sets and parahoric double quotients.

The admissible set Adm(g) consists of all elements below some translation
t_lambda, lambda in the finite Weyl orbit of the minuscule coweight, in
Bruhat order.  Enumeration goes by breadth-first descent through covers
(single-letter deletions from a reduced word); the test suite re-derives
the same sets by filtering a whole length ball through the subword oracle.

Double cosets under the vectorial Weyl group of a parahoric type carry the
induced length and order via their minimal-length representatives; the
minimum is found by exhaustive minimisation over the (small) parahoric
subgroup and its uniqueness asserted at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .affine_weyl import (
    ExtendedAffineWeylElement,
    SimilitudeCoweight,
    bruhat_leq,
    identity,
    is_dominant,
    length,
    minuscule_coweight,
    reduced_word,
    root_datum,
    translation,
    word_to_element,
)

__all__ = [
    "ParahoricType",
    "DoubleCoset",
    "weyl_orbit",
    "admissible_set",
    "covers",
    "project_double_coset",
    "admissible_image",
]


@dataclass(frozen=True)
class ParahoricType:
    """Subset d_1 < .. < d_s of {1,..,g} recording the lattice-chain steps.

    d = (1,..,g) is the Iwahori case.  The empty type is allowed for rank 0
    and for hyperspecial induced types at the boundary, where the chain
    image degenerates to the standard lattice alone.
    """

    g: int
    d: tuple[int, ...]

    def __post_init__(self):
        if list(self.d) != sorted(set(self.d)):
            raise ValueError(f"not strictly increasing: {self.d}")
        if self.d and (self.d[0] < 1 or self.d[-1] > self.g):
            raise ValueError(f"entries of {self.d} out of range 1..{self.g}")

    @classmethod
    def iwahori(cls, g: int) -> "ParahoricType":
        return cls(g, tuple(range(1, g + 1)))

    @property
    def is_iwahori(self) -> bool:
        return self.d == tuple(range(1, self.g + 1))

    def levi_generator_indices(self) -> tuple[int, ...]:
        """Finite simple reflections generating the vectorial Weyl group."""
        return tuple(i for i in range(1, self.g + 1) if i not in self.d)


@lru_cache(maxsize=None)
def _levi_subgroup(par: ParahoricType) -> frozenset:
    """All elements of the vectorial Weyl group W^vec of the parahoric type."""
    rd = root_datum(par.g)
    gens = [rd.simple_affine_reflections[i] for i in par.levi_generator_indices()]
    group = {identity(par.g)}
    frontier = list(group)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = x * s
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


@dataclass(frozen=True)
class DoubleCoset:
    """A W^vec double coset, identified by its unique minimal-length representative.

    Construct through project_double_coset; the induced length is
    length(min_rep) and the induced order compares minimal representatives.
    """

    min_rep: ExtendedAffineWeylElement
    parahoric: ParahoricType

    @property
    def length(self) -> int:
        return length(self.min_rep)

    def leq(self, other: "DoubleCoset") -> bool:
        if self.parahoric != other.parahoric:
            raise ValueError("cosets for different parahoric types")
        return bruhat_leq(self.min_rep, other.min_rep)

    def sort_key(self):
        return self.min_rep.sort_key()

    def text_form(self) -> str:
        return self.min_rep.text_form()

    def __str__(self) -> str:
        return self.text_form()


def weyl_orbit(mu: SimilitudeCoweight) -> frozenset:
    """Orbit of a dominant coweight under the finite symplectic Weyl group."""
    if not is_dominant(mu):
        raise ValueError(f"{mu} is not dominant; normalize first")
    rd = root_datum(mu.g)
    finite = [s.finite for s in rd.simple_affine_reflections[1:]]
    orbit = {mu}
    frontier = [mu]
    while frontier:
        lam = frontier.pop()
        for w in finite:
            nu = w.act(lam)
            if nu not in orbit:
                orbit.add(nu)
                frontier.append(nu)
    return frozenset(orbit)


def covers(x: ExtendedAffineWeylElement):
    """Elements covered by x: single-letter deletions that drop the length by one."""
    word, om = reduced_word(x)
    n = om.omega_exponent()
    seen = set()
    for j in range(len(word)):
        y = word_to_element(x.g, word[:j] + word[j + 1:], n)
        if length(y) == len(word) - 1 and y not in seen:
            seen.add(y)
            yield y


@lru_cache(maxsize=None)
def admissible_set(g: int, mu: SimilitudeCoweight | None = None) -> frozenset:
    """All elements below t_lambda for lambda in the Weyl orbit of mu (default minuscule)."""
    if mu is None:
        mu = minuscule_coweight(g)
    maximal = [translation(lam) for lam in weyl_orbit(mu)]
    out = set(maximal)
    frontier = list(maximal)
    while frontier:
        x = frontier.pop()
        for y in covers(x):
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def project_double_coset(x: ExtendedAffineWeylElement, par: ParahoricType) -> DoubleCoset:
    """Double coset of x with its minimal-length representative.

    Exhaustive search over W^vec * x * W^vec; the uniqueness of the
    length minimum is asserted (it is the canonical representative).
    """
    if x.g != par.g:
        raise ValueError(f"element over g={x.g}, parahoric over g={par.g}")
    if par.is_iwahori:
        return DoubleCoset(x, par)
    levi = _levi_subgroup(par)
    orbit = {u * x * v for u in levi for v in levi}
    lmin = min(length(y) for y in orbit)
    mins = [y for y in orbit if length(y) == lmin]
    assert len(mins) == 1, f"non-unique minimal representative in coset of {x}"
    return DoubleCoset(mins[0], par)


@lru_cache(maxsize=None)
def admissible_image(par: ParahoricType) -> tuple[DoubleCoset, ...]:
    """Image of the admissible set in the double quotient, canonically ordered."""
    image = {project_double_coset(x, par) for x in admissible_set(par.g)}
    return tuple(sorted(image, key=DoubleCoset.sort_key))
