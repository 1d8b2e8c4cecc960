"""Shared complexes and generators for the test-suite."""

from hkface import build_complex, named_family


def random_complex(rng, max_vertices=6, max_facets=5):
    r = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, r)
        facets.append(rng.sample(range(1, r + 1), size))
    covered = {i for f in facets for i in f}
    for i in range(1, r + 1):
        if i not in covered:
            rng.choice(facets).append(i)
    return build_complex(r, facets)


COUNTEREXAMPLE = (4, [[1, 2], [2, 3], [3, 4], [2, 4]])
EDGE_IDEAL_EXAMPLE = (4, [[2, 3, 4], [1, 2]])


def counterexample():
    return build_complex(*COUNTEREXAMPLE)


def edge_ideal_example():
    """Face ring K[x1..x4]/((x1) & (x3,x4)): a triangle 234 with a pendant edge 12."""
    return build_complex(*EDGE_IDEAL_EXAMPLE)


def reference_complexes():
    out = {"counterexample": counterexample(), "edge_ideal_example": edge_ideal_example()}
    for r in range(3, 9):
        out[f"path:{r}"] = named_family("path", r)
        out[f"cycle:{r}"] = named_family("cycle", r)
    for r in range(2, 7):
        out[f"complete:{r}"] = named_family("complete_graph", r)
    for b in range(1, 5):
        for a in range(1, b + 1):
            out[f"bipartite:{a},{b}"] = named_family("complete_bipartite", a, b)
    return out
