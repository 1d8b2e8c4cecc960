"""Simplicial complexes, graphs and their face-ideal data.

Vertices are the integers ``1..r``. A complex is stored by its facets, kept
as a canonically sorted antichain so that equal complexes compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence


class ComplexError(ValueError):
    """Invalid complex, graph or exponent vector.

    ``pointer`` is a JSON pointer into the input document when known.
    """

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(message)
        self.pointer = pointer


def face_mask(face: Iterable[int]) -> int:
    m = 0
    for i in face:
        m |= 1 << (i - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    num_vertices: int
    facets: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        """Krull dimension ``d`` of the face ring: the largest facet size."""
        return max(len(f) for f in self.facets)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(face_mask(f) for f in self.facets)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.num_vertices + 1))

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def faces(self) -> set[int]:
        """All faces as bitmasks, the empty face included."""
        out: set[int] = set()
        for fm in self.facet_masks:
            sub = fm
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return out

    def is_face(self, support: Iterable[int]) -> bool:
        m = face_mask(support)
        return any(m & fm == m for fm in self.facet_masks)

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "facets": [list(f) for f in self.facets]}


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FaceIdealSet:
    """Primary components ``P_F = (x_i : i not in F)``, one per facet."""

    prime_components: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.prime_components)

    def masks(self) -> tuple[int, ...]:
        return tuple(face_mask(p) for p in self.prime_components)


def build_complex(r: int, facets: Sequence[Iterable[int]]) -> SimplicialComplex:
    """Validate and reduce a facet list to its maximal faces."""
    if not isinstance(r, int) or r < 1:
        raise ComplexError(f"number of vertices must be a positive integer, got {r!r}", "/vertices")
    if not facets:
        raise ComplexError("facet list is empty", "/facets")
    sets = []
    for idx, f in enumerate(facets):
        s = frozenset(f)
        if not s:
            raise ComplexError(f"facet {idx} is empty", f"/facets/{idx}")
        for i in s:
            if not isinstance(i, int) or not 1 <= i <= r:
                raise ComplexError(f"vertex {i!r} in facet {idx} is outside 1..{r}", f"/facets/{idx}")
        sets.append(s)
    maximal = {s for s in sets if not any(s < t for t in sets)}
    covered = frozenset().union(*maximal)
    missing = sorted(set(range(1, r + 1)) - covered)
    if missing:
        raise ComplexError(f"vertex {missing[0]} is not covered by any facet", "/facets")
    ordered = sorted(tuple(sorted(s)) for s in maximal)
    return SimplicialComplex(r, tuple(ordered))


def build_graph(n: int, edges: Sequence[Sequence[int]]) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise ComplexError(f"number of vertices must be a positive integer, got {n!r}", "/vertices")
    seen: set[tuple[int, int]] = set()
    for idx, e in enumerate(edges):
        if len(e) != 2:
            raise ComplexError(f"edge {idx} must have two endpoints", f"/edges/{idx}")
        a, b = e
        if a == b:
            raise ComplexError(f"edge {idx} is a loop at vertex {a}", f"/edges/{idx}")
        for x in (a, b):
            if not isinstance(x, int) or not 1 <= x <= n:
                raise ComplexError(f"vertex {x!r} in edge {idx} is outside 1..{n}", f"/edges/{idx}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ComplexError(f"edge {idx} duplicates {key}", f"/edges/{idx}")
        seen.add(key)
    used = {x for e in seen for x in e}
    missing = sorted(set(range(1, n + 1)) - used)
    if missing:
        raise ComplexError(f"vertex {missing[0]} lies on no edge", "/edges")
    return Graph(n, tuple(sorted(seen)))


def minimal_vertex_covers(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-minimal vertex covers, by exhaustive bitmask search."""
    edge_masks = [face_mask(e) for e in g.edges]

    def covers(m: int) -> bool:
        return all(m & em for em in edge_masks)

    out = []
    for m in range(1 << g.num_vertices):
        # covering is monotone, so minimality only needs single-vertex removals
        if covers(m) and not any(covers(m & ~(1 << i)) for i in range(g.num_vertices) if m >> i & 1):
            out.append(vertices_of(m))
    return sorted(out, key=lambda c: (len(c), c))


def edge_ideal_complex(g: Graph) -> SimplicialComplex:
    """Complex whose face ideal is the edge ideal; facets are maximal independent sets."""
    full = set(range(1, g.num_vertices + 1))
    facets = [tuple(sorted(full - set(c))) for c in minimal_vertex_covers(g)]
    return build_complex(g.num_vertices, facets)


FAMILY_PARAMS = {
    "path": ("r",),
    "cycle": ("n",),
    "complete_graph": ("r",),
    "complete_bipartite": ("alpha", "beta"),
    "simplex": ("r",),
}

_MINIMUMS = {"path": 3, "cycle": 3, "complete_graph": 2, "complete_bipartite": 1, "simplex": 1}


def complete_graph(r: int) -> Graph:
    return build_graph(r, list(combinations(range(1, r + 1), 2)))


def complete_bipartite_graph(alpha: int, beta: int) -> Graph:
    xs = range(1, alpha + 1)
    ys = range(alpha + 1, alpha + beta + 1)
    return build_graph(alpha + beta, [(x, y) for x in xs for y in ys])


def named_family(kind: str, *params: int) -> SimplicialComplex:
    """Named complexes: path, cycle, complete_graph, complete_bipartite, simplex.

    ``complete_graph`` and ``complete_bipartite`` are the edge-ideal complexes
    of those graphs; in the bipartite case vertices ``1..alpha`` form one side.
    """
    if kind not in FAMILY_PARAMS:
        raise ComplexError(f"unknown family {kind!r}")
    names = FAMILY_PARAMS[kind]
    if len(params) != len(names):
        raise ComplexError(f"family {kind} takes {len(names)} parameter(s): {', '.join(names)}")
    for name, p in zip(names, params):
        if not isinstance(p, int) or p < _MINIMUMS[kind]:
            raise ComplexError(f"{kind} parameter {name} must be an integer >= {_MINIMUMS[kind]}, got {p!r}")
    if kind == "path":
        (r,) = params
        return build_complex(r, [(i, i + 1) for i in range(1, r)])
    if kind == "cycle":
        (n,) = params
        return build_complex(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])
    if kind == "complete_graph":
        return edge_ideal_complex(complete_graph(params[0]))
    if kind == "complete_bipartite":
        return edge_ideal_complex(complete_bipartite_graph(*params))
    (r,) = params
    return build_complex(r, [tuple(range(1, r + 1))])


def face_ideal_decomposition(c: SimplicialComplex) -> FaceIdealSet:
    full = set(c.vertices)
    return FaceIdealSet(tuple(tuple(sorted(full - set(f))) for f in c.facets))


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_{d-1})``; ``f_{i-1}`` counts faces with i vertices."""
    counts = [0] * (c.dimension + 1)
    for m in c.faces():
        counts[bin(m).count("1")] += 1
    return tuple(counts)


@dataclass(frozen=True)
class HVector:
    h: tuple[int, ...]
    degree: int
    # the degree is a reduction number only for Cohen-Macaulay face rings
    note: str = "valid-under-CM-assumption"


def h_vector(c: SimplicialComplex) -> HVector:
    """Numerator of the Hilbert series over ``(1-z)^d``.

    Computed as ``sum_i f_{i-1} z^i (1-z)^(d-i)``, trailing zeros trimmed.
    """
    d = c.dimension
    f = f_vector(c)
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        for j in range(d - i + 1):
            h[i + j] += fi * comb(d - i, j) * (-1) ** j
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return HVector(tuple(h), len(h) - 1)


@dataclass(frozen=True)
class ShellingResult:
    status: str  # "yes" | "no" | "undecided"
    order: Optional[tuple[tuple[int, ...], ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "yes"


def _attaches(fj: int, earlier: Iterable[int]) -> bool:
    size = bin(fj).count("1")
    meets = [fi & fj for fi in earlier]
    ridges = [m for m in meets if bin(m).count("1") == size - 1]
    return all(any(m & r == m for r in ridges) for m in meets)


def is_shellable(c: SimplicialComplex, max_facets: int = 12) -> ShellingResult:
    """Search for a (nonpure) shelling order, lexicographically least by facet index.

    Facet ``F_j`` may follow ``F_1..F_{j-1}`` when every ``F_i & F_j`` lies in
    some ``F_k & F_j`` of size ``|F_j| - 1``. Whether a facet attaches depends
    only on the set of earlier facets, so dead sets are memoised.
    """
    masks = c.facet_masks
    n = len(masks)
    if n > max_facets:
        return ShellingResult("undecided", reason=f"{n} facets exceeds the search cap of {max_facets}")
    full = (1 << n) - 1
    dead: set[int] = set()

    def extend(used: int, order: list[int]) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        earlier = [masks[i] for i in order]
        for j in range(n):
            if used >> j & 1:
                continue
            if order and not _attaches(masks[j], earlier):
                continue
            order.append(j)
            if extend(used | 1 << j, order):
                return True
            order.pop()
        dead.add(used)
        return False

    order: list[int] = []
    if extend(0, order):
        return ShellingResult("yes", tuple(c.facets[i] for i in order))
    return ShellingResult("no", reason="no facet order satisfies the shelling condition")


def verify_shelling(c: SimplicialComplex, order: Sequence[Sequence[int]]) -> bool:
    """Check a shelling order by building each intersection subcomplex explicitly."""
    if sorted(tuple(sorted(f)) for f in order) != sorted(c.facets):
        return False
    for j in range(1, len(order)):
        fj = frozenset(order[j])
        earlier = [frozenset(f) for f in order[:j]]
        sub = {
            frozenset(s)
            for size in range(len(fj) + 1)
            for s in combinations(sorted(fj), size)
            if any(frozenset(s) <= e for e in earlier)
        }
        maximal = [s for s in sub if not any(s < t for t in sub)]
        if not maximal or any(len(s) != len(fj) - 1 for s in maximal):
            return False
    return True
