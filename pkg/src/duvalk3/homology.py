"""A formal graded homology-class calculus over exact rationals.

Classes are rational linear combinations of named generators attached to a
labeled space.  Covering maps carry explicit pushforward and transfer
tables; products, pushforwards and transfers are their bilinear/linear
extensions.  Nothing is computed from chain complexes: the generators and
their images are declared per scenario.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

Scalar = Union[int, Fraction]


class DimensionMismatch(ValueError):
    """A class or generator does not fit the dimension of its space."""


class UnknownGenerator(KeyError):
    """A covering map table has no entry for a generator."""


@dataclass(frozen=True, order=True)
class SpaceLabel:
    """A named space of even real dimension."""

    name: str
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 0 or self.dim % 2:
            raise ValueError(f"space dimension must be even >= 0, got {self.dim}")


@dataclass(frozen=True, order=True)
class Generator:
    """A named homology generator of even degree on a space."""

    label: str
    degree: int
    space: SpaceLabel

    def __post_init__(self) -> None:
        if self.degree < 0 or self.degree % 2:
            raise ValueError(f"degree must be even >= 0, got {self.degree}")
        if self.degree > self.space.dim:
            raise DimensionMismatch(
                f"degree {self.degree} exceeds dim of {self.space.name}"
            )


class FormalClass:
    """A rational linear combination of generators on one common space.

    Instances are immutable values: arithmetic returns new objects, zero
    coefficients are never stored, and equality is exact and term-wise.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Generator, Scalar] = ()) -> None:
        clean: dict[Generator, Fraction] = {}
        space = None
        for gen, coeff in dict(terms).items():
            c = coeff if type(coeff) is Fraction else Fraction(coeff)
            if not c:
                continue
            if space is None:
                space = gen.space
            elif gen.space != space:
                raise ValueError(
                    f"mixed spaces {space.name} and {gen.space.name} in one class"
                )
            clean[gen] = c
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def zero(cls) -> "FormalClass":
        return cls()

    @property
    def space(self) -> SpaceLabel | None:
        """The common space, or None for the zero class."""
        for gen in self._terms:
            return gen.space
        return None

    def coefficient(self, gen: Generator) -> Fraction:
        return self._terms.get(gen, Fraction(0))

    def items(self) -> list[tuple[Generator, Fraction]]:
        """Terms in deterministic (degree, label) order."""
        return sorted(self._terms.items(), key=lambda t: (t[0].degree, t[0].label))

    def degree_part(self, degree: int) -> "FormalClass":
        return FormalClass(
            {g: c for g, c in self._terms.items() if g.degree == degree}
        )

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "FormalClass") -> "FormalClass":
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc.get(g, Fraction(0)) + c
        return FormalClass(acc)

    def __sub__(self, other: "FormalClass") -> "FormalClass":
        return self + (-other)

    def __neg__(self) -> "FormalClass":
        return FormalClass({g: -c for g, c in self._terms.items()})

    def scale(self, factor: Scalar) -> "FormalClass":
        f = factor if type(factor) is Fraction else Fraction(factor)
        return FormalClass({g: f * c for g, c in self._terms.items()})

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalClass):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for gen, coeff in self.items():
            if coeff == 1:
                parts.append(gen.label)
            elif coeff == -1:
                parts.append(f"-{gen.label}")
            else:
                parts.append(f"{coeff}·{gen.label}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"FormalClass({self})"


def fundamental_class(space: SpaceLabel) -> FormalClass:
    """The class 1·[space] in top degree."""
    return FormalClass({Generator(f"[{space.name}]", space.dim, space): 1})


def l_class_surface(sigma: Scalar, surface: SpaceLabel) -> FormalClass:
    """The L-class sigma·[pt] + [F] of a 4-dimensional rational homology
    manifold with signature sigma."""
    if surface.dim != 4:
        raise DimensionMismatch(
            f"l_class_surface needs a 4-dimensional space, got dim {surface.dim}"
        )
    return FormalClass(
        {
            Generator("pt", 0, surface): Fraction(sigma),
            Generator(f"[{surface.name}]", 4, surface): 1,
        }
    )


def product_space(a: SpaceLabel, b: SpaceLabel) -> SpaceLabel:
    return SpaceLabel(f"{a.name}×{b.name}", a.dim + b.dim)


def product_generator(g: Generator, h: Generator) -> Generator:
    return Generator(
        f"{g.label}×{h.label}",
        g.degree + h.degree,
        product_space(g.space, h.space),
    )


def product_class(cf: FormalClass, ce: FormalClass) -> FormalClass:
    """Bilinear exterior product; degrees add, labels concatenate."""
    acc: dict[Generator, Fraction] = {}
    for g, cg in cf.items():
        for h, ch in ce.items():
            gen = product_generator(g, h)
            acc[gen] = acc.get(gen, Fraction(0)) + cg * ch
    return FormalClass(acc)


@dataclass(frozen=True, eq=False)
class CoveringMap:
    """A finite covering with declared pushforward and transfer tables.

    The tables must compose correctly: pushing forward the transfer of any
    tabulated generator multiplies it by the covering degree.  This is
    checked at construction.
    """

    source: SpaceLabel
    target: SpaceLabel
    degree: int
    pushforward_table: Mapping[Generator, FormalClass] = field(default_factory=dict)
    transfer_table: Mapping[Generator, FormalClass] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"covering degree must be >= 1, got {self.degree}")
        if self.source.dim != self.target.dim:
            raise DimensionMismatch("a covering map preserves dimension")
        for gen, image in self.pushforward_table.items():
            self._check_entry(gen, image, self.source, self.target)
        for gen, image in self.transfer_table.items():
            self._check_entry(gen, image, self.target, self.source)
            if pushforward(self, image) != self.degree * FormalClass({gen: 1}):
                raise ValueError(
                    f"transfer table violates p_* p_! = {self.degree}·id at {gen.label}"
                )

    @staticmethod
    def _check_entry(
        gen: Generator, image: FormalClass, dom: SpaceLabel, cod: SpaceLabel
    ) -> None:
        if gen.space != dom:
            raise ValueError(f"table key {gen.label} not on {dom.name}")
        if not image.is_zero and image.space != cod:
            raise ValueError(f"table image of {gen.label} not on {cod.name}")
        for g, _ in image.items():
            if g.degree != gen.degree:
                raise DimensionMismatch(
                    f"table image of {gen.label} is not degree-preserving"
                )


def _apply_table(
    table: Mapping[Generator, FormalClass], c: FormalClass, what: str
) -> FormalClass:
    acc = FormalClass.zero()
    for gen, coeff in c.items():
        if gen not in table:
            raise UnknownGenerator(f"no {what} entry for {gen.label}")
        acc = acc + coeff * table[gen]
    return acc


def pushforward(p: CoveringMap, c: FormalClass) -> FormalClass:
    """Linear extension of the pushforward table."""
    if not c.is_zero and c.space != p.source:
        raise ValueError(f"class lives on {c.space.name}, not on {p.source.name}")
    return _apply_table(p.pushforward_table, c, "pushforward")


def transfer(p: CoveringMap, c: FormalClass) -> FormalClass:
    """Linear extension of the transfer table (the wrong-way map)."""
    if not c.is_zero and c.space != p.target:
        raise ValueError(f"class lives on {c.space.name}, not on {p.target.name}")
    return _apply_table(p.transfer_table, c, "transfer")


@lru_cache(maxsize=None)
def hodge_class_tree(n: int) -> tuple[FormalClass, Fraction]:
    """Hodge L-class of a tree of n rational curves, with its degree-0 part.

    The class is the sum of the component fundamental classes minus (n-1)
    points; the degree-0 coefficient -(n-1) is returned alongside.
    Cached: the result is an immutable value depending only on n.
    """
    if n < 1:
        raise ValueError(f"a tree has at least one component, got n={n}")
    tree = SpaceLabel(f"tree{n}", 2)
    terms: dict[Generator, Scalar] = {
        Generator(f"[P1_{i}]", 2, tree): 1 for i in range(1, n + 1)
    }
    terms[Generator("pt", 0, tree)] = -(n - 1)
    return FormalClass(terms), Fraction(-(n - 1))
