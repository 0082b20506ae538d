"""Finite simplicial complexes and exact reduced homology.

Faces are handled internally as vertex bitmasks (vertex ``v`` is bit
``v - 1``).  Ranks are exact: fraction-free elimination over Q and modular
elimination over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import EmptyComplex, GhostVertex, NotPrime, VertexOutOfRange
from .hilbert import HilbertNumerator, strip_zeros


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic`` 0 is Q, otherwise F_p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and (p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1))):
            raise NotPrime(f"{p} is not a prime")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> Field:
        """``q`` or ``p:<prime>``."""
        t = text.strip().lower()
        if t in ("q", "0"):
            return cls(0)
        if t.startswith("p:"):
            try:
                return cls(int(t[2:]))
            except ValueError:
                raise NotPrime(f"bad prime in field {text!r}") from None
        raise ValueError(f"field must be 'q' or 'p:<prime>', got {text!r}")


Q = Field(0)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask(f) for f in self.facets)

    def faces(self) -> list[tuple[int, ...]]:
        """All faces including the empty one, by dimension then lexicographically."""
        masks = all_faces(self.facet_masks)
        return sorted((_verts(m) for m in masks), key=lambda f: (len(f), f))

    def f_vector(self) -> tuple[int, ...]:
        """``(f_-1, f_0, ..., f_dim)``."""
        return f_vector_of(self.facet_masks)

    def h_vector(self) -> HilbertNumerator:
        return h_vector(self)

    def __str__(self) -> str:
        body = ",".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"n={self.n_vertices} facets={body}"


def complex_from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    if n < 1:
        raise ValueError("the vertex count must be positive")
    sets = [frozenset(f) for f in facets]
    if not sets:
        raise EmptyComplex("a complex needs at least one facet")
    for s in sets:
        for v in s:
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"vertex {v} outside 1..{n}")
    uniq = set(sets)
    maximal = [s for s in uniq if not any(s < t for t in uniq)]
    used = set().union(*maximal)
    ghosts = sorted(set(range(1, n + 1)) - used)
    if ghosts:
        raise GhostVertex(f"vertices {ghosts} lie in no facet")
    ordered = sorted((tuple(sorted(s)) for s in maximal), key=lambda f: (len(f), f))
    return SimplicialComplex(n, tuple(ordered))


def parse_complex(text: str) -> SimplicialComplex:
    """Parse ``n=<int>`` followed by one facet per line; ``#`` starts a comment."""
    n = None
    facets = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            key, sep, val = line.partition("=")
            if not sep or key.strip() != "n":
                raise ValueError(f"first line must be 'n=<int>', got {line!r}")
            n = int(val)
            continue
        facets.append([int(tok) for tok in line.split()])
    if n is None:
        raise ValueError("missing 'n=<int>' header")
    return complex_from_facets(n, facets)


def all_faces(facet_masks: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for f in facet_masks:
        if f in out:
            continue
        out.update(_submasks(f))
    return out


def f_vector_of(facet_masks: Iterable[int]) -> tuple[int, ...]:
    faces = all_faces(facet_masks)
    top = max(_popcount(m) for m in faces)
    counts = [0] * (top + 1)
    for m in faces:
        counts[_popcount(m)] += 1
    return tuple(counts)


def h_vector(c: SimplicialComplex) -> HilbertNumerator:
    """``h(λ) = Σ f_(i-1) λ^i (1-λ)^(d-i)`` with ``d = dim + 1``."""
    f = c.f_vector()
    d = c.dim + 1
    h = [
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    ]
    return HilbertNumerator(strip_zeros(h), d)


def link_masks(facet_masks: Sequence[int], face: int) -> list[int]:
    """Facets of the link of ``face``; ``[0]`` when ``face`` is a facet."""
    return [f & ~face for f in facet_masks if f & face == face]


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    M = [[x % p for x in row] for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        pr = [(x * inv) % p for x in M[r]]
        M[r] = pr
        for i in range(r + 1, len(M)):
            fac = M[i][c]
            if fac:
                M[i] = [(a - fac * b) % p for a, b in zip(M[i], pr)]
        r += 1
        if r == len(M):
            break
    return r


def rank_fraction_free(rows: list[list[int]]) -> int:
    """Rank over Q by Bareiss elimination; every division is exact."""
    M = [list(row) for row in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            row = M[i]
            top = M[r]
            for j in range(c + 1, ncols):
                row[j] = (pv * row[j] - a * top[j]) // prev
            row[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def matrix_rank(rows: list[list[int]], field: Field = Q) -> int:
    if field.characteristic == 0:
        return rank_fraction_free(rows)
    return rank_mod_p(rows, field.characteristic)


def boundary_matrix(lower: Sequence[int], upper: Sequence[int]) -> list[list[int]]:
    """Matrix of the boundary map from ``upper`` faces to ``lower`` faces
    (rows indexed by ``lower``)."""
    index = {m: i for i, m in enumerate(lower)}
    M = [[0] * len(upper) for _ in lower]
    for j, face in enumerate(upper):
        sign = 1
        rest = face
        while rest:
            bit = rest & -rest
            M[index[face ^ bit]][j] = sign
            sign = -sign
            rest ^= bit
    return M


def reduced_betti(facet_masks: Sequence[int], field: Field = Q) -> list[int]:
    """``[β̃_-1, ..., β̃_dim]`` of the complex generated by ``facet_masks``."""
    faces = all_faces(facet_masks)
    top = max(_popcount(m) for m in faces)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for m in faces:
        by_size[_popcount(m)].append(m)
    for group in by_size:
        group.sort()
    # ranks[k] = rank of the map from size-k faces to size-(k-1) faces
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = matrix_rank(boundary_matrix(by_size[k - 1], by_size[k]), field)
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def homology_ranks(c: SimplicialComplex, field: Field = Q) -> list[int]:
    """Reduced Betti numbers ``β̃_-1 .. β̃_dim`` of ``c`` over ``field``."""
    return reduced_betti(c.facet_masks, field)
