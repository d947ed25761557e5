"""Surface signatures, Novikov bookkeeping, and the 3-fold L-class check.

The pipeline: a du Val surface with trivial canonical class and q = 0 has
signature -16 + sum(d_i) over its basket; a 3-fold covered by a product
F x E of such a surface (or a curve/point) with a torus has its L-class
and Hodge L-class derived along two independent routes, which must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .ade import Basket, DynkinGraph, cartan_matrix, form_signature, standard_dynkin_graph
from .homology import (
    CoveringMap,
    FormalClass,
    Generator,
    SpaceLabel,
    fundamental_class,
    hodge_class_tree,
    l_class_surface,
    product_class,
    product_generator,
    product_space,
    pushforward,
)

# Hodge numbers shared by all smooth K3 surfaces.
K3_H20 = 1
K3_H11 = 20

# A du Val K3 carries at most 19 exceptional curves in total.
EXCEPTIONAL_CURVE_BOUND = 19


class BoundViolation(ValueError):
    """A basket exceeds the exceptional-curve bound for K3 surfaces."""


class BasketPointCountMismatch(ValueError):
    """The declared singular-point count disagrees with the basket."""


def signature_from_hodge(h20: int, h11: int) -> int:
    """Signature of a compact Kähler surface from its Hodge numbers:
    b2+ = 2*h^{2,0} + 1 against b2- = h^{1,1} - 1."""
    return 2 * h20 - h11 + 2


def smooth_k3_signature() -> int:
    """Signature of a smooth K3 surface, derived from its Hodge numbers."""
    return signature_from_hodge(K3_H20, K3_H11)


def sigma_k3(b: Basket, q: int = 0) -> int:
    """Signature of a du Val surface with trivial canonical class.

    For q = 0 (a K3) the crepant resolution contributes -16 and every
    exceptional curve raises the signature by one; for q > 0 the surface
    is nonsingular with signature 0.
    """
    if q not in (0, 1, 2):
        raise ValueError(f"surface irregularity must be 0, 1 or 2, got {q}")
    if q > 0:
        if b.entries:
            raise ValueError("a trivial-canonical surface with q > 0 is nonsingular")
        return 0
    if b.total_d > EXCEPTIONAL_CURVE_BOUND:
        raise BoundViolation(
            f"basket has {b.total_d} exceptional curves, "
            f"bound is {EXCEPTIONAL_CURVE_BOUND}"
        )
    return smooth_k3_signature() + b.total_d


@dataclass(frozen=True)
class SurfaceModel:
    """A normal projective surface with trivial canonical class."""

    basket: Basket = Basket()
    q: int = 0

    def __post_init__(self) -> None:
        if self.q not in (0, 1, 2):
            raise ValueError(f"surface irregularity must be 0, 1 or 2, got {self.q}")
        if self.q > 0 and self.basket.entries:
            raise ValueError("a trivial-canonical surface with q > 0 is nonsingular")

    @property
    def sigma(self) -> int:
        return sigma_k3(self.basket, self.q)


@dataclass(frozen=True)
class KawamataDiagram:
    """A 3-fold X split by a finite cover F x E -> X over its Albanese torus.

    q is the irregularity of X; the fiber is a surface for q = 1, a curve
    for q = 2 and a point for q = 3 (the latter two carry no data).
    """

    q: int
    cover_degree: int
    fiber: SurfaceModel | None = None

    def __post_init__(self) -> None:
        if self.q not in (1, 2, 3):
            raise ValueError(f"3-fold irregularity must be 1, 2 or 3, got {self.q}")
        if self.cover_degree < 1:
            raise ValueError(f"cover degree must be >= 1, got {self.cover_degree}")
        if self.q == 1 and self.fiber is None:
            raise ValueError("q = 1 requires a surface fiber")
        if self.q > 1 and self.fiber is not None:
            raise ValueError(f"q = {self.q} has a {self.fiber_kind} fiber, not a surface")

    @property
    def fiber_kind(self) -> str:
        return {1: "surface", 2: "curve", 3: "point"}[self.q]


@dataclass(frozen=True)
class NovikovDecomposition:
    """Signature bookkeeping for the crepant resolution of a K3 surface.

    Cutting the resolution into exceptional tubes and their complement is
    additive; coning off the boundary links contributes suspensions, whose
    signatures vanish.
    """

    sigma_resolution: int
    tube_signatures: tuple[int, ...]
    sigma_complement: int
    cone_signatures: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sigma_complement + sum(self.tube_signatures) != self.sigma_resolution:
            raise ValueError("tube and complement signatures are not additive")
        if any(self.cone_signatures):
            raise ValueError("suspension signatures must vanish")

    @property
    def sigma_surface(self) -> int:
        """Signature of the singular surface: complement plus cones."""
        return self.sigma_complement + sum(self.cone_signatures)


def novikov_assembly(b: Basket) -> NovikovDecomposition:
    """Decompose the K3 resolution signature along a basket.

    Each tube signature is computed from the negated Cartan matrix of its
    type via the exact form-signature routine, not read off the rank.
    """
    if b.total_d > EXCEPTIONAL_CURVE_BOUND:
        raise BoundViolation(
            f"basket has {b.total_d} exceptional curves, "
            f"bound is {EXCEPTIONAL_CURVE_BOUND}"
        )
    tubes = tuple(form_signature(-cartan_matrix(t)).sigma for t in b)
    sigma_res = smooth_k3_signature()
    return NovikovDecomposition(
        sigma_resolution=sigma_res,
        tube_signatures=tubes,
        sigma_complement=sigma_res - sum(tubes),
        cone_signatures=(0,) * len(b),
    )


def surface_space(name: str = "F") -> SpaceLabel:
    return SpaceLabel(name, 4)


def t1_surface(
    basket: Basket, m: int, surface: SpaceLabel | None = None
) -> FormalClass:
    """Hodge L-class of a du Val K3 surface with m singular points.

    Replays the scissor computation: the resolution contributes
    (m - 16)[pt] + [F], and each exceptional tree of d_i curves is traded
    for its degree-0 Hodge class -(d_i - 1)[pt].  The result must agree
    with the topological L-class sigma·[pt] + [F].
    """
    if m != len(basket):
        raise BasketPointCountMismatch(
            f"basket has {len(basket)} entries but m = {m} points were declared"
        )
    if surface is None:
        surface = surface_space()
    traded = sum(
        (hodge_class_tree(t.components)[1] for t in basket), Fraction(0)
    )
    return FormalClass(
        {
            Generator("pt", 0, surface): m + smooth_k3_signature() - traded,
            Generator(f"[{surface.name}]", 4, surface): 1,
        }
    )


def _fiber_dimensions(q: int) -> tuple[int, int]:
    # (dim F, dim E); E is the covering torus over the Albanese variety
    return {1: (4, 2), 2: (2, 4), 3: (0, 6)}[q]


def kawamata_cover(k: KawamataDiagram) -> tuple[SpaceLabel, SpaceLabel, CoveringMap]:
    """Spaces and the covering map p: F x E -> X of a Kawamata diagram.

    Pushforward sends the product fundamental class to degree·[X] and the
    point-times-torus class to the named generator p_*[pt_F×E]; the
    transfer table is the unique one compatible with p_* p_! = degree.
    """
    return _cover_for(k.q, k.cover_degree)


@lru_cache(maxsize=None)
def _cover_for(q: int, d: int) -> tuple[SpaceLabel, SpaceLabel, CoveringMap]:
    # covering scenarios are immutable values determined by (q, degree)
    fdim, edim = _fiber_dimensions(q)
    f_space = SpaceLabel("F", fdim)
    e_space = SpaceLabel("E", edim)
    x_space = SpaceLabel("X", 6)

    fund_f = Generator(f"[{f_space.name}]", fdim, f_space)
    fund_e = Generator(f"[{e_space.name}]", edim, e_space)
    fund_fe = product_generator(fund_f, fund_e)
    fund_x = Generator(f"[{x_space.name}]", 6, x_space)

    push = {fund_fe: FormalClass({fund_x: d})}
    pull = {fund_x: FormalClass({fund_fe: 1})}
    if q == 1:
        pt_f = Generator("pt", 0, f_space)
        pt_e_gen = product_generator(pt_f, fund_e)
        mid = Generator("p_*[pt_F×E]", edim, x_space)
        push[pt_e_gen] = FormalClass({mid: 1})
        pull[mid] = FormalClass({pt_e_gen: d})

    cover = CoveringMap(
        source=product_space(f_space, e_space),
        target=x_space,
        degree=d,
        pushforward_table=push,
        transfer_table=pull,
    )
    return f_space, e_space, cover


def threefold_lclass(k: KawamataDiagram) -> FormalClass:
    """L-class of the covered 3-fold.

    For q = 1 this is sigma(F)/degree times the pushed-down point-times-
    torus class plus [X]; for q = 2, 3 only the fundamental class remains.
    """
    x_space = SpaceLabel("X", 6)
    fund_x = Generator(f"[{x_space.name}]", 6, x_space)
    if k.q != 1:
        return FormalClass({fund_x: 1})
    sigma = k.fiber.sigma
    mid = Generator("p_*[pt_F×E]", 2, x_space)
    return FormalClass({mid: Fraction(sigma, k.cover_degree), fund_x: 1})


@dataclass(frozen=True, eq=False)
class BsyReport:
    """Both derivations of the 3-fold class and their comparison."""

    diagram: KawamataDiagram
    fiber_sigma: int
    hodge_route: FormalClass
    topological_route: FormalClass
    expected: FormalClass

    @property
    def passed(self) -> bool:
        return self.hodge_route == self.topological_route == self.expected

    def lines(self) -> list[str]:
        k = self.diagram
        fiber = k.fiber_kind
        if k.q == 1:
            fiber += f" with basket {k.fiber.basket.tokens()}, q(F)={k.fiber.q}"
        return [
            f"q(X) = {k.q}, cover degree {k.cover_degree}, fiber: {fiber}",
            f"sigma(fiber) = {self.fiber_sigma}",
            f"Hodge route:       T(X) = {self.hodge_route}",
            f"topological route: L(X) = {self.topological_route}",
            f"verdict: {'PASS' if self.passed else 'FAIL'}",
        ]


def bsy_check(k: KawamataDiagram) -> BsyReport:
    """Derive the 3-fold class along the Hodge and topological routes.

    Topological: multiply surface and torus L-classes, push forward, and
    divide by the covering degree.  Hodge: same shape, but the surface
    class is rebuilt from the scissor computation.  Both must equal the
    closed-form class term for term.
    """
    f_space, e_space, cover = kawamata_cover(k)
    d = k.cover_degree

    if k.q == 1:
        fiber = k.fiber
        sigma_f = fiber.sigma
        l_fiber = l_class_surface(sigma_f, f_space)
        if fiber.q == 0:
            t_fiber = t1_surface(fiber.basket, len(fiber.basket), f_space)
        else:
            t_fiber = fundamental_class(f_space)  # nonsingular, sigma = 0
    else:
        sigma_f = 0
        l_fiber = fundamental_class(f_space)
        t_fiber = fundamental_class(f_space)

    # the torus factor is smooth with zero signature in every dimension
    l_torus = fundamental_class(e_space)
    t_torus = l_torus

    topological = pushforward(cover, product_class(l_fiber, l_torus)).scale(
        Fraction(1, d)
    )
    hodge = pushforward(cover, product_class(t_fiber, t_torus)).scale(Fraction(1, d))

    return BsyReport(
        diagram=k,
        fiber_sigma=sigma_f,
        hodge_route=hodge,
        topological_route=topological,
        expected=threefold_lclass(k),
    )


def rational_homology_manifold_check(
    b: Basket, graphs: Iterable[DynkinGraph] | None = None
) -> bool:
    """True iff every exceptional configuration is a tree of rational
    curves, so the singular surface is a rational homology manifold.

    ADE dual graphs always are; an explicit graph list can be supplied to
    exercise the tree test itself.
    """
    if graphs is None:
        graphs = (standard_dynkin_graph(t) for t in b)
    return all(g.is_tree() for g in graphs)
