"""Standard isotropic subspaces, boundary flags, and the embedding of admissible sets.

Only one standard representative per dimension is materialised: the span
of the leading basis vectors x_1, .., x_k.  Its symplectic complement
quotient is identified with the middle coordinate block, so the boundary
group of rank g' = g - k embeds by

    coweights:    lambda' -> (c', .., c' [k], lambda', 0, .., 0 [k])
    finite parts: middle-block extension of the permutation.

This fixes the group embedding once for the whole package; the length
identity length(phi(w')) - length(w') = d(g) - d(g') and preservation of
admissibility are enforced by the test suite rather than by reproducing
any particular conjugating element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .admissible import DoubleCoset, ParahoricType, admissible_image, project_double_coset
from .affine_weyl import (
    ExtendedAffineWeylElement,
    FiniteSymplecticWeylElement,
    SimilitudeCoweight,
    root_datum,
)

__all__ = [
    "IsotropicLabel",
    "IsotropicFlag",
    "ParabolicData",
    "relative_dimension",
    "induced_parahoric",
    "embed_element",
    "phi",
    "incidence",
    "enumerate_flags",
    "parabolic_data",
]


def relative_dimension(g: int) -> int:
    """d = g(g+1)/2, the relative dimension of the rank-g moduli problem."""
    return g * (g + 1) // 2


@dataclass(frozen=True)
class IsotropicLabel:
    """The standard isotropic subspace spanned by x_1,..,x_k; k=0 is the open stratum."""

    g: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.g:
            raise ValueError(f"k={self.k} out of range 0..{self.g}")

    @property
    def rank(self) -> int:
        """Rank of the symplectic quotient V'perp / V'."""
        return self.g - self.k


@dataclass(frozen=True)
class IsotropicFlag:
    """Strictly increasing dimension sequence (delta_r < .. < delta_0)."""

    dims: tuple[int, ...]

    def __post_init__(self):
        if not self.dims:
            raise ValueError("empty flag")
        if list(self.dims) != sorted(set(self.dims)) or self.dims[0] < 1:
            raise ValueError(f"not strictly increasing positive: {self.dims}")

    @property
    def r(self) -> int:
        """The number of strict steps below the top subspace."""
        return len(self.dims) - 1

    @property
    def sign(self) -> int:
        return -1 if self.r % 2 else 1

    @property
    def top_dim(self) -> int:
        return self.dims[-1]


def induced_parahoric(label: IsotropicLabel, par: ParahoricType) -> ParahoricType:
    """Parahoric type of the boundary stratum: chain image in the middle block.

    Chain steps at or below k become degenerate and are discarded; an
    Iwahori type stays Iwahori, while other types may lose all steps
    (hyperspecial boundary level).
    """
    if label.g != par.g:
        raise ValueError(f"label over g={label.g}, parahoric over g={par.g}")
    return ParahoricType(label.rank, tuple(d - label.k for d in par.d if d > label.k))


def embed_element(label: IsotropicLabel, x: ExtendedAffineWeylElement) -> ExtendedAffineWeylElement:
    """Group embedding of the rank-(g-k) extended affine Weyl group at this boundary."""
    g, k = label.g, label.k
    if x.g != label.rank:
        raise ValueError(f"element over g={x.g}, expected g={label.rank}")
    c = x.translation.similitude
    entries = (c,) * k + x.translation.entries + (0,) * k
    perm = (tuple(range(1, k + 1))
            + tuple(k + p for p in x.finite.perm)
            + tuple(range(2 * g - k + 1, 2 * g + 1)))
    return ExtendedAffineWeylElement(
        SimilitudeCoweight(entries, c), FiniteSymplecticWeylElement(perm))


def phi(label: IsotropicLabel, w: DoubleCoset,
        ambient: ParahoricType | None = None) -> DoubleCoset:
    """Image of a boundary admissible double coset inside the ambient quotient.

    `ambient` defaults to the Iwahori type (the only one whose induced
    boundary type is again Iwahori); for other ambient types it must be
    supplied and satisfy induced_parahoric(label, ambient) == w.parahoric.
    """
    if ambient is None:
        ambient = ParahoricType.iwahori(label.g)
    if induced_parahoric(label, ambient) != w.parahoric:
        raise ValueError(
            f"{w.parahoric} is not the induced type of {ambient} at k={label.k}")
    if w not in admissible_image(w.parahoric):
        raise ValueError(f"{w} is not an admissible double coset")
    return project_double_coset(embed_element(label, w.min_rep), ambient)


def incidence(w: DoubleCoset, label: IsotropicLabel) -> DoubleCoset | None:
    """The unique boundary coset w' with phi(w') = w, if any.

    Realises the compactified stratification: the closure of the stratum
    of w meets the boundary stratum of V' exactly in the stratum of w'.
    """
    if label.g != w.parahoric.g:
        raise ValueError(f"label over g={label.g}, coset over g={w.parahoric.g}")
    if w not in admissible_image(w.parahoric):
        raise ValueError(f"{w} is not an admissible double coset")
    if label.k == 0:
        return w
    par_b = induced_parahoric(label, w.parahoric)
    hits = [c for c in admissible_image(par_b) if phi(label, c, w.parahoric) == w]
    assert len(hits) <= 1, f"phi not injective at {label}"
    return hits[0] if hits else None


def enumerate_flags(label: IsotropicLabel) -> tuple[IsotropicFlag, ...]:
    """Standard flags with top subspace of dimension k: 2^(k-1) dimension sequences."""
    k = label.k
    if k == 0:
        return ()
    flags = []
    for mask in range(1 << (k - 1)):
        below = tuple(d for d in range(1, k) if mask >> (d - 1) & 1)
        flags.append(IsotropicFlag(below + (k,)))
    return tuple(sorted(flags, key=lambda f: (len(f.dims), f.dims)))


@dataclass(frozen=True)
class ParabolicData:
    """Standard parabolic attached to an isotropic flag.

    levi_blocks lists ("gl", size) blocks from the smallest subspace up,
    then the ("gsp", rank) middle block; nilpotent_roots are the positive
    root classes outside the Levi (the weights of Lie N).  The discrete
    linear group on the GL factor is carried as block sizes only.
    """

    flag: IsotropicFlag
    g: int
    levi_blocks: tuple[tuple[str, int], ...]
    nilpotent_roots: tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def parabolic_data(flag: IsotropicFlag, g: int) -> ParabolicData:
    if flag.top_dim > g:
        raise ValueError(f"flag {flag.dims} does not fit in rank {g}")
    dims = flag.dims
    blocks = [("gl", dims[0])]
    blocks += [("gl", dims[i + 1] - dims[i]) for i in range(len(dims) - 1)]
    blocks.append(("gsp", g - dims[-1]))
    gl_total = sum(s for kind, s in blocks if kind == "gl")
    assert 2 * gl_total + 2 * (g - dims[-1]) == 2 * g

    # block boundaries inside 1..2g: the flag, its symplectic mirrors, and 2g
    cuts = sorted(set(dims) | {2 * g - d for d in dims} | {2 * g})

    def block_of(i: int) -> int:
        for b, c in enumerate(cuts):
            if i <= c:
                return b
        raise AssertionError(i)

    nilpotent = tuple(sorted(
        (i, j) for (i, j) in root_datum(g).positive_roots if block_of(i) != block_of(j)))
    return ParabolicData(flag, g, tuple(blocks), nilpotent)
