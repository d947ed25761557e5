"""Dynkin graphs, Cartan matrices, plumbing forms, and exact form signatures.

Everything here is integer or rational arithmetic; no floating point is used
anywhere, so signatures of degenerate forms come out exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

# Construction cap for Cartan matrices / standard graphs.  The geometric
# applications live entirely below rank 19, so this is pure headroom.
RANK_CAP = 64

_KINDS = ("A", "D", "E")
_TOKEN_RE = re.compile(r"^(\d*)\s*([ADE])_?(\d+)$")


@dataclass(frozen=True, order=True)
class ADEType:
    """A simply laced Dynkin type; ``rank`` counts its exceptional curves."""

    kind: str
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown Dynkin kind {self.kind!r}")
        if not 1 <= self.rank <= RANK_CAP:
            raise ValueError(f"rank {self.rank} outside [1, {RANK_CAP}]")
        if self.kind == "D" and self.rank < 4:
            raise ValueError(f"D_{self.rank} is not simply laced (need rank >= 4)")
        if self.kind == "E" and self.rank not in (6, 7, 8):
            raise ValueError(f"E_{self.rank} does not exist (rank must be 6, 7 or 8)")

    @property
    def components(self) -> int:
        """Number of irreducible curves in the minimal resolution."""
        return self.rank

    def __str__(self) -> str:
        return f"{self.kind}_{self.rank}"

    @classmethod
    def parse(cls, token: str) -> "ADEType":
        """Parse a single type token such as ``A_2`` or ``D4``."""
        m = _TOKEN_RE.match(token.strip())
        if not m or m.group(1):
            raise ValueError(f"bad ADE type token {token!r}")
        return cls(m.group(2), int(m.group(3)))


@dataclass(frozen=True)
class Basket:
    """A multiset of du Val singularity types carried by a surface."""

    entries: tuple[ADEType, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @property
    def total_d(self) -> int:
        """Total number of exceptional curves, the sum over all entries."""
        return sum(t.components for t in self.entries)

    def counts(self) -> list[tuple[ADEType, int]]:
        """Entries grouped as (type, multiplicity) in canonical order."""
        out: list[tuple[ADEType, int]] = []
        for t in self.entries:
            if out and out[-1][0] == t:
                out[-1] = (t, out[-1][1] + 1)
            else:
                out.append((t, 1))
        return out

    def tokens(self) -> str:
        """Multiplicity-prefixed tokens, e.g. ``3A_2 A_4``; ``-`` if empty."""
        if not self.entries:
            return "-"
        return " ".join(
            (f"{n}{t}" if n > 1 else str(t)) for t, n in self.counts()
        )

    @classmethod
    def parse(cls, text: str) -> "Basket":
        """Parse multiplicity-prefixed tokens (``4A_1 A_2``); ``-`` is empty."""
        text = text.replace(",", " ").strip()
        if text in ("", "-"):
            return cls()
        entries: list[ADEType] = []
        for token in text.split():
            m = _TOKEN_RE.match(token)
            if not m:
                raise ValueError(f"bad basket token {token!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            if mult < 1:
                raise ValueError(f"bad multiplicity in token {token!r}")
            entries.extend([ADEType(m.group(2), int(m.group(3)))] * mult)
        return cls(tuple(entries))

    def __iter__(self) -> Iterator[ADEType]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class DynkinGraph:
    """A simple graph with an Euler weight per vertex (default -2).

    Vertices are ``0 .. len(euler_weights)-1``.  ADE dual graphs are trees,
    but arbitrary simple graphs are accepted for general plumbing.
    """

    euler_weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        n = len(self.euler_weights)
        seen = set()
        norm = []
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for {n} vertices")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n_vertices(self) -> int:
        return len(self.euler_weights)

    def is_tree(self) -> bool:
        """True iff the graph is connected and acyclic (rational H^1 = 0)."""
        n = self.n_vertices
        if n == 0:
            return False
        if len(self.edges) != n - 1:
            return False
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n


def standard_dynkin_graph(t: ADEType, euler_weight: int = -2) -> DynkinGraph:
    """The standard tree of the given type, all vertices equally weighted."""
    n = t.rank
    if t.kind == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif t.kind == "D":
        # path 0..n-3 with two extra leaves hanging off vertex n-3
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
    else:
        # path 0..n-2 with the branch vertex attached at the third node
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((2, n - 1))
    return DynkinGraph((euler_weight,) * n, tuple(edges))


@dataclass(frozen=True)
class SymIntForm:
    """A symmetric integer bilinear form, stored as a full square matrix."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> "SymIntForm":
        vals = tuple(values)
        n = len(vals)
        return cls(tuple(
            tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)
        ))

    def __neg__(self) -> "SymIntForm":
        return SymIntForm(tuple(tuple(-x for x in row) for row in self.entries))

    def direct_sum(self, other: "SymIntForm") -> "SymIntForm":
        """Block sum q ⊕ q'."""
        n, m = self.dim, other.dim
        rows = []
        for i in range(n):
            rows.append(tuple(self.entries[i]) + (0,) * m)
        for i in range(m):
            rows.append((0,) * n + tuple(other.entries[i]))
        return SymIntForm(tuple(rows))


@dataclass(frozen=True)
class FormSignature:
    """Inertia counts of a symmetric form; ``sigma`` is the Novikov signature."""

    positives: int
    negatives: int
    zeros: int

    @property
    def dim(self) -> int:
        return self.positives + self.negatives + self.zeros

    @property
    def sigma(self) -> int:
        return self.positives - self.negatives


def cartan_matrix(t: ADEType) -> SymIntForm:
    """The Cartan matrix: 2 on the diagonal, -1 across each tree edge."""
    g = standard_dynkin_graph(t)
    n = g.n_vertices
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
    for i, j in g.edges:
        m[i][j] = m[j][i] = -1
    return SymIntForm(tuple(tuple(row) for row in m))


def plumbing_form(g: DynkinGraph) -> SymIntForm:
    """Intersection form of the plumbed 4-manifold: weights on the diagonal,
    +1 across each edge."""
    n = g.n_vertices
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = g.euler_weights[i]
    for i, j in g.edges:
        m[i][j] = m[j][i] = 1
    return SymIntForm(tuple(tuple(row) for row in m))


def form_signature(q: SymIntForm) -> FormSignature:
    """Exact inertia of a symmetric integer form.

    Congruence diagonalization over rationals with symmetric pivoting;
    when the remaining block has an all-zero diagonal but a nonzero
    off-diagonal entry, a hyperbolic 2x2 block is split off, contributing
    one positive and one negative eigenvalue.
    """
    n = q.dim
    a = [[Fraction(x) for x in row] for row in q.entries]
    pos = neg = zer = 0

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    i = 0
    while i < n:
        # prefer a nonzero diagonal pivot
        k = next((k for k in range(i, n) if a[k][k] != 0), None)
        if k is not None:
            if k != i:
                swap(i, k)
            d = a[i][i]
            for r in range(i + 1, n):
                f = a[r][i] / d
                if f:
                    for c in range(i, n):
                        a[r][c] -= f * a[i][c]
            for r in range(i + 1, n):  # symmetric column clearing
                f = a[i][r] / d
                if f:
                    for c in range(i, n):
                        a[c][r] -= f * a[c][i]
            if d > 0:
                pos += 1
            else:
                neg += 1
            i += 1
            continue
        # all-zero diagonal: find an off-diagonal entry
        off = next(
            ((r, s) for r in range(i, n) for s in range(r + 1, n) if a[r][s] != 0),
            None,
        )
        if off is None:
            zer += n - i
            break
        r, s = off
        if r != i:
            swap(i, r)
        if s != i + 1:
            swap(i + 1, s)
        e = a[i][i + 1]
        for t in range(i + 2, n):
            f0 = a[t][i + 1] / e
            f1 = a[t][i] / e
            if f0 or f1:
                for c in range(i, n):
                    a[t][c] -= f0 * a[i][c] + f1 * a[i + 1][c]
        for t in range(i + 2, n):  # symmetric column clearing
            f0 = a[i + 1][t] / e
            f1 = a[i][t] / e
            if f0 or f1:
                for c in range(i, n):
                    a[c][t] -= f0 * a[c][i] + f1 * a[c][i + 1]
        pos += 1
        neg += 1
        i += 2
    return FormSignature(pos, neg, zer)


def is_negative_definite(q: SymIntForm) -> bool:
    """True iff every eigenvalue is negative."""
    return form_signature(q) == FormSignature(0, q.dim, 0)
