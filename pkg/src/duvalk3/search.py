"""Exhaustive enumeration of du Val baskets and weighted K3 hypersurfaces.

Hypersurface families are enumerated over normalized weight quadruples with
the canonical-triviality constraint d = a0+a1+a2+a3, filtered through the
well-formedness and quasismoothness tests.  The enumeration is
deterministic: workers split on the leading weight and results are merged
in canonical order, so output never depends on the worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .ade import ADEType, Basket
from .catalog import CatalogRow
from .threefolds import EXCEPTIONAL_CURVE_BOUND, BoundViolation, sigma_k3
from .wps import HypersurfaceFamily, Weights, basket, quasismooth, well_formed

DEFAULT_MAX_WEIGHT = 40
STABILIZE_STEP = 10


def _all_types(max_rank: int) -> list[ADEType]:
    types = [ADEType("A", r) for r in range(1, max_rank + 1)]
    types += [ADEType("D", r) for r in range(4, max_rank + 1)]
    types += [ADEType("E", r) for r in (6, 7, 8) if r <= max_rank]
    return sorted(types)


def enumerate_baskets(max_total_d: int) -> list[tuple[Basket, int]]:
    """All du Val baskets with at most max_total_d exceptional curves.

    Multisets are emitted in canonical (lexicographic) order together with
    their K3 signatures.
    """
    if max_total_d < 0:
        raise ValueError(f"max_total_d must be >= 0, got {max_total_d}")
    if max_total_d > EXCEPTIONAL_CURVE_BOUND:
        raise BoundViolation(
            f"K3 baskets carry at most {EXCEPTIONAL_CURVE_BOUND} curves"
        )
    types = _all_types(max_total_d)
    out: list[tuple[Basket, int]] = []

    def extend(start: int, chosen: list[ADEType], left: int) -> None:
        b = Basket(tuple(chosen))
        out.append((b, sigma_k3(b)))
        for i in range(start, len(types)):
            if types[i].components <= left:
                chosen.append(types[i])
                extend(i, chosen, left - types[i].components)
                chosen.pop()

    extend(0, [], max_total_d)
    return out


@dataclass(frozen=True)
class K3Family:
    """An enumerated hypersurface family with its basket and signature."""

    family: HypersurfaceFamily
    basket: Basket
    sigma: int

    def to_row(self) -> CatalogRow:
        f = self.family
        return CatalogRow(
            name=str(f),
            weights=f.weights.a,
            degrees=(f.degree,),
            basket=self.basket,
            sigma=self.sigma,
        )


def _families_with_leading(args: tuple[int, int]) -> list[K3Family]:
    """All passing families with the given smallest weight (worker unit)."""
    a0, max_weight = args
    out: list[K3Family] = []
    for a1 in range(a0, max_weight + 1):
        for a2 in range(a1, max_weight + 1):
            for a3 in range(a2, max_weight + 1):
                w = Weights((a0, a1, a2, a3))
                if not well_formed(w):
                    continue
                f = HypersurfaceFamily.k3(w)
                if not quasismooth(f):
                    continue
                b = basket(f)
                out.append(K3Family(f, b, sigma_k3(b)))
    return out


def enumerate_k3_hypersurfaces(
    max_weight: int, jobs: int = 1
) -> list[K3Family]:
    """All weighted K3 hypersurface families with weights <= max_weight.

    Weight quadruples are normalized ascending, so each family appears
    once up to permutation.  Results are sorted by weights.
    """
    if max_weight < 1:
        raise ValueError(f"max_weight must be >= 1, got {max_weight}")
    units = [(a0, max_weight) for a0 in range(1, max_weight + 1)]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(_families_with_leading, units)
    else:
        chunks = [_families_with_leading(u) for u in units]
    families = [fam for chunk in chunks for fam in chunk]
    families.sort(key=lambda fam: fam.family.weights.a)
    return families


def find_signature(
    target: int, max_weight: int, jobs: int = 1
) -> list[K3Family]:
    """Families whose general member realizes the target signature."""
    return [
        fam
        for fam in enumerate_k3_hypersurfaces(max_weight, jobs)
        if fam.sigma == target
    ]


def stabilized_enumeration(
    start: int = DEFAULT_MAX_WEIGHT, step: int = STABILIZE_STEP, jobs: int = 1
) -> tuple[list[K3Family], int]:
    """Raise the weight bound until the family count stops changing.

    The bound is increased in fixed steps until two consecutive raises
    leave the count unchanged; returns the final families and bound.
    """
    families = enumerate_k3_hypersurfaces(start, jobs)
    bound = start
    unchanged = 0
    while unchanged < 2:
        bound += step
        more = enumerate_k3_hypersurfaces(bound, jobs)
        unchanged = unchanged + 1 if len(more) == len(families) else 0
        families = more
    return families, bound
