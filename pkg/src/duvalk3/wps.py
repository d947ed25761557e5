"""Singularity baskets of general weighted-projective K3 hypersurfaces.

A general member of degree d in P(a0,a1,a2,a3) that passes the
well-formedness and quasismoothness filters acquires cyclic quotient
singularities from the ambient space only: isolated points at coordinate
vertices and finitely many points along singular coordinate edges.  This
module computes those local types and converts them to a du Val basket.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .ade import ADEType, Basket


class NotDuVal(ValueError):
    """The family is not a K3 surface with canonical singularities."""


class NoLinkingMonomial(ValueError):
    """A vertex has no linking monomial; the input is not quasismooth."""


@dataclass(frozen=True)
class Weights:
    """A normalized (ascending) quadruple of positive weights."""

    a: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.a) != 4:
            raise ValueError("exactly four weights required")
        if any(x < 1 for x in self.a):
            raise ValueError(f"weights must be positive, got {self.a}")
        object.__setattr__(self, "a", tuple(sorted(self.a)))

    def __iter__(self):
        return iter(self.a)

    def __str__(self) -> str:
        return "P({},{},{},{})".format(*self.a)


@dataclass(frozen=True)
class HypersurfaceFamily:
    """A general hypersurface of the given degree in P(weights)."""

    weights: Weights
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")

    @property
    def is_canonical_trivial(self) -> bool:
        """K3 degree condition d = a0+a1+a2+a3."""
        return self.degree == sum(self.weights.a)

    @classmethod
    def k3(cls, weights: Weights) -> "HypersurfaceFamily":
        return cls(weights, sum(weights.a))

    def __str__(self) -> str:
        return f"F_{self.degree} ⊂ {self.weights}"


@dataclass(frozen=True)
class CyclicQuotient:
    """An isolated cyclic quotient point of local type 1/r(b1, b2)."""

    r: int
    b: tuple[int, int]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"quotient order must be >= 2, got {self.r}")
        b = tuple(x % self.r for x in self.b)
        for x in b:
            if gcd(x, self.r) != 1:
                raise ValueError(
                    f"1/{self.r}{b} is not isolated: gcd({x},{self.r}) > 1"
                )
        object.__setattr__(self, "b", b)

    @property
    def is_du_val(self) -> bool:
        return (self.b[0] + self.b[1]) % self.r == 0

    def to_ade(self) -> ADEType:
        """The resolution type A_{r-1}; raises NotDuVal otherwise."""
        if not self.is_du_val:
            raise NotDuVal(f"quotient 1/{self.r}{self.b} is not du Val")
        return ADEType("A", self.r - 1)

    def __str__(self) -> str:
        return f"1/{self.r}({self.b[0]},{self.b[1]})"


def well_formed(w: Weights) -> bool:
    """True iff every three of the four weights are coprime."""
    return all(reduce(gcd, t) == 1 for t in itertools.combinations(w.a, 3))


def _reachable_mask(weights: tuple[int, ...], d: int) -> int:
    """Bitmask of degrees <= d representable by nonnegative combinations."""
    m = 1
    limit = (1 << (d + 1)) - 1
    for w in weights:
        while True:
            nm = m | ((m << w) & limit)
            if nm == m:
                break
            m = nm
    return m


def _reaches(weights: tuple[int, ...], d: int) -> bool:
    return d >= 0 and bool(_reachable_mask(weights, d) >> d & 1)


def quasismooth(f: HypersurfaceFamily) -> bool:
    """General-member validity test for the singularity recipe.

    Two requirements on the monomials of degree d:

    * for every nonempty coordinate subset I, either some monomial is
      supported on I alone, or monomials (monomial in I)*x_e exist for at
      least |I| distinct outside variables x_e (so the general member is
      quasismooth along the corresponding stratum);
    * every coordinate edge with non-coprime weights carries a monomial,
      so the general member meets singular edges in finitely many points
      and its singularities stay isolated.
    """
    a = f.weights.a
    d = f.degree
    if d in a:
        return True  # linear cone: the general member is a coordinate graph
    for i, j in itertools.combinations(range(4), 2):
        if gcd(a[i], a[j]) > 1 and not _reaches((a[i], a[j]), d):
            return False
    for k in range(1, 5):
        for subset in itertools.combinations(range(4), k):
            mask = _reachable_mask(tuple(a[i] for i in subset), d)
            if mask >> d & 1:
                continue
            outside = [e for e in range(4) if e not in subset]
            linked = sum(
                1 for e in outside if d >= a[e] and mask >> (d - a[e]) & 1
            )
            if linked < k:
                return False
    return True


def vertex_singularities(f: HypersurfaceFamily) -> list[CyclicQuotient]:
    """Quotient points at coordinate vertices lying on the general member.

    The vertex P_i lies on the member iff a_i does not divide d.  A linking
    index l with a_i | d - a_l then exists by quasismoothness, and the
    transversal quotient has type 1/a_i(a_j, a_k) for the two remaining
    coordinates.  Any admissible l gives the same type.
    """
    a = f.weights.a
    d = f.degree
    out: list[CyclicQuotient] = []
    for i in range(4):
        if d % a[i] == 0:
            continue
        links = [l for l in range(4) if l != i and (d - a[l]) % a[i] == 0]
        if not links:
            raise NoLinkingMonomial(
                f"vertex {i} of {f}: no l with {a[i]} | d - a_l"
            )
        j, k = (t for t in range(4) if t not in (i, links[0]))
        try:
            out.append(CyclicQuotient(a[i], (a[j] % a[i], a[k] % a[i])))
        except ValueError as exc:
            raise NotDuVal(f"vertex {i} of {f}: {exc}") from exc
    return out


def edge_singularities(
    f: HypersurfaceFamily,
) -> list[tuple[CyclicQuotient, int]]:
    """Quotient points along singular coordinate edges, with multiplicities.

    An edge with h = gcd(a_i, a_j) > 1 meets the general member in
    (number of monomials in x_i, x_j of degree d) - 1 points, each of
    type 1/h(a_k, a_l) for the complementary coordinates.
    """
    a = f.weights.a
    d = f.degree
    out: list[tuple[CyclicQuotient, int]] = []
    for i, j in itertools.combinations(range(4), 2):
        h = gcd(a[i], a[j])
        if h <= 1:
            continue
        solutions = sum(
            1 for q in range(d // a[j] + 1) if (d - q * a[j]) % a[i] == 0
        )
        n = solutions - 1
        if n > 0:
            k, l = (t for t in range(4) if t not in (i, j))
            try:
                out.append((CyclicQuotient(h, (a[k] % h, a[l] % h)), n))
            except ValueError as exc:
                raise NotDuVal(f"edge ({i},{j}) of {f}: {exc}") from exc
    return out


def basket(f: HypersurfaceFamily) -> Basket:
    """The du Val basket of the general member.

    Raises NotDuVal if any quotient is not of type A_{r-1}; for
    canonical-trivial families passing the filters this cannot happen.
    """
    entries: list[ADEType] = []
    for q in vertex_singularities(f):
        entries.append(q.to_ade())
    for q, mult in edge_singularities(f):
        entries.extend([q.to_ade()] * mult)
    return Basket(tuple(entries))
