"""Finite groups of unimodular integer matrices acting on a lattice.

Group elements are the matrices themselves (acting on the right on row
vectors), so the action is faithful by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GroupTooLarge, NotUnimodular
from .lattice import (
    IntMatrix,
    Sublattice,
    kernel_lattice,
    rational_matrix,
    smith_normal_form,
)

DEFAULT_CLOSURE_CAP = 10_000


class GroupAction:
    """A fully enumerated finite subgroup of GL_n(Z).

    `elements` is the complete, canonically sorted element list (identity
    included); `generator_indices` point at the elements that were given
    as generators.
    """

    __slots__ = ("rank", "elements", "generator_indices", "_index", "_fixed")

    def __init__(self, rank, elements, generator_indices):
        self.rank = rank
        self.elements = tuple(elements)
        self.generator_indices = tuple(generator_indices)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._fixed = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> tuple[IntMatrix, ...]:
        return tuple(self.elements[i] for i in self.generator_indices)

    @property
    def identity_index(self) -> int:
        return self._index[IntMatrix.identity(self.rank)]

    def index_of(self, g: IntMatrix) -> int:
        return self._index[g]

    def __eq__(self, other):
        if not isinstance(other, GroupAction):
            return NotImplemented
        return (self.rank, self.elements) == (other.rank, other.elements)

    def __hash__(self):
        return hash((self.rank, self.elements))

    def __repr__(self):
        return f"GroupAction(rank={self.rank}, order={self.order})"


def close_group(generators, cap: int = DEFAULT_CLOSURE_CAP,
                rank: int | None = None) -> GroupAction:
    """Multiplication closure of the given generators.

    Raises NotUnimodular for a generator with det outside {1, -1} and
    GroupTooLarge when the closure exceeds `cap` elements (the group is
    then almost certainly infinite).  An empty generator list needs an
    explicit `rank` and yields the trivial group.
    """
    gens = list(generators)
    if gens:
        rank = gens[0].nrows
    elif rank is None:
        raise ValueError("rank is required when no generators are given")
    identity = IntMatrix.identity(rank)
    for g in gens:
        if g.nrows != rank or g.ncols != rank:
            raise NotUnimodular("generators must be square of equal size")
        if g.det() not in (1, -1):
            raise NotUnimodular(f"generator determinant {g.det()} is not +-1")
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m * g
                if p not in seen:
                    seen.add(p)
                    if len(seen) > cap:
                        raise GroupTooLarge(
                            f"closure exceeded {cap} elements; group is "
                            "probably infinite"
                        )
                    nxt.append(p)
        frontier = nxt
    elements = sorted(seen, key=lambda g: g.entries)
    index = {g: i for i, g in enumerate(elements)}
    gen_indices = []
    for g in gens:
        i = index[g]
        if i not in gen_indices:
            gen_indices.append(i)
    return GroupAction(rank, elements, gen_indices)


def orbit(action: GroupAction, point) -> frozenset:
    """The set of images of `point` under every group element."""
    start = tuple(Fraction(x) for x in point)
    return frozenset(g.apply(start) for g in action.elements)


def fixed_sublattice(action: GroupAction) -> Sublattice:
    """The saturated sublattice of vectors fixed by the whole group."""
    if action._fixed is None:
        gens = action.generators
        if not gens:
            action._fixed = Sublattice.full(action.rank)
        else:
            identity = IntMatrix.identity(action.rank)
            stacked = IntMatrix.hstack([g - identity for g in gens])
            action._fixed = kernel_lattice(stacked)
    return action._fixed


@dataclass(frozen=True)
class ProjectionPair:
    """The averaging projection onto the fixed subspace and its complement.

    Both matrices are exact rational, act on the right, and satisfy
    fixed_projection + moving_projection = identity.
    """

    fixed_projection: tuple[tuple[Fraction, ...], ...]
    moving_projection: tuple[tuple[Fraction, ...], ...]


def reynolds(action: GroupAction) -> ProjectionPair:
    """Group average rho = |G|^-1 * sum(g) and its complement 1 - rho."""
    n = action.rank
    order = action.order
    rho = rational_matrix(
        [
            [
                Fraction(sum(g.entries[i][j] for g in action.elements), order)
                for j in range(n)
            ]
            for i in range(n)
        ]
    )
    pi = tuple(
        tuple(Fraction(int(i == j)) - rho[i][j] for j in range(n))
        for i in range(n)
    )
    return ProjectionPair(rho, pi)


@dataclass(frozen=True)
class EffectiveQuotient:
    """The quotient of the lattice by its fixed sublattice, with the
    induced action and a chosen splitting.

    `projection` maps ambient row vectors onto quotient coordinates;
    `section` maps quotient coordinates back into the ambient lattice
    along the chosen complement, so section * projection is the identity
    on the quotient.
    """

    fixed: Sublattice
    quotient_rank: int
    projection: IntMatrix
    section: IntMatrix
    section_lattice: Sublattice
    induced: GroupAction


def effective_quotient(action: GroupAction) -> EffectiveQuotient:
    """Split the lattice as fixed part plus complement and restrict the
    action to the (effective) quotient."""
    n = action.rank
    fixed = fixed_sublattice(action)
    f = fixed.rank
    if f == 0:
        eye = IntMatrix.identity(n)
        return EffectiveQuotient(fixed, n, eye, eye, Sublattice.full(n), action)
    if f == n:
        trivial = close_group([], rank=0)
        return EffectiveQuotient(
            fixed,
            0,
            IntMatrix([()] * n, ncols=0),
            IntMatrix([], ncols=n),
            Sublattice(n),
            trivial,
        )
    basis_matrix = IntMatrix(fixed.basis, ncols=n)
    u, d, v = smith_normal_form(basis_matrix)
    if any(d.entries[i][i] != 1 for i in range(f)):
        raise AssertionError("fixed sublattice must be saturated")
    w = v.inverse_unimodular()
    # first f rows of w span the fixed sublattice; the rest are a complement
    q = n - f
    section = IntMatrix(w.entries[f:], ncols=n)
    projection = IntMatrix([row[f:] for row in v.entries], ncols=q)
    images = [section * g * projection for g in action.generators]
    induced = close_group(images, cap=action.order, rank=q)
    if fixed_sublattice(induced).rank != 0:
        raise AssertionError("induced quotient action must be effective")
    return EffectiveQuotient(
        fixed, q, projection, section, Sublattice(n, section.entries), induced
    )


def induced_matrix(eq: EffectiveQuotient, g: IntMatrix) -> IntMatrix:
    """The matrix of g on the quotient coordinates."""
    return eq.section * g * eq.projection


__all__ = [
    "GroupAction",
    "ProjectionPair",
    "EffectiveQuotient",
    "DEFAULT_CLOSURE_CAP",
    "close_group",
    "orbit",
    "fixed_sublattice",
    "reynolds",
    "effective_quotient",
    "induced_matrix",
]
