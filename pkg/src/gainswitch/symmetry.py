"""Graph automorphisms acting on gain graphs and switching classes.

The action relabels gains along an automorphism of the underlying graph:
``act(f, g)`` has gain(u, v) equal to g's gain(f(u), f(v)).  It descends to
switching classes, and two gain graphs on the same underlying graph are
switching isomorphic exactly when their classes lie in the same orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLargeError, ValidationError
from .gaincore import GainGraph, SimpleGraph, SwitchingFunction, build_gain_graph
from .switching import (
    basis_gain_profile,
    canonical_basis,
    switching_equivalent,
)

__all__ = [
    "VertexPermutation",
    "AutGroup",
    "automorphisms",
    "gain_automorphisms",
    "mixed_aut_decomposition",
    "act",
    "switching_isomorphic",
    "orbit_of_class",
    "underlying_isomorphism",
]

DEFAULT_AUT_CAP = 10
DEFAULT_ORBIT_EDGE_CAP = 32


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection of 1..n; ``image[v - 1]`` is the image of vertex v."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValidationError("image is not a permutation of 1..n")

    def __call__(self, v: int) -> int:
        return self.image[v - 1]

    @property
    def n(self) -> int:
        return len(self.image)

    @staticmethod
    def identity(n: int) -> "VertexPermutation":
        return VertexPermutation(tuple(range(1, n + 1)))

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """The permutation v -> self(other(v))."""
        if other.n != self.n:
            raise ValidationError("permutations act on different vertex sets")
        return VertexPermutation(tuple(self.image[w - 1] for w in other.image))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for v, w in enumerate(self.image, start=1):
            inv[w - 1] = v
        return VertexPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.image, start=1))


@dataclass(frozen=True)
class AutGroup:
    """An automorphism group given by its explicit element list (desk scale)."""

    n: int
    elements: tuple[VertexPermutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, f: VertexPermutation) -> bool:
        return f in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def automorphisms(g: SimpleGraph, max_vertices: int = DEFAULT_AUT_CAP) -> AutGroup:
    """All automorphisms of a simple graph, by backtracking with degree pruning."""
    if g.n > max_vertices:
        raise InstanceTooLargeError(
            f"automorphism search capped at {max_vertices} vertices, graph has {g.n}"
        )
    n = g.n
    degrees = [g.degree(v) for v in range(1, n + 1)]
    found: list[VertexPermutation] = []
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def rec(v: int) -> None:
        if v > n:
            found.append(VertexPermutation(tuple(image[1:])))
            return
        for w in range(1, n + 1):
            if used[w] or degrees[w - 1] != degrees[v - 1]:
                continue
            if any(g.has_edge(u, v) != g.has_edge(image[u], w) for u in range(1, v)):
                continue
            image[v] = w
            used[w] = True
            rec(v + 1)
            used[w] = False
            image[v] = 0

    rec(1)
    found.sort(key=lambda f: f.image)
    return AutGroup(n, tuple(found))


def _preserves_gains(f: VertexPermutation, g: GainGraph) -> bool:
    return all(g.gain(f(u), f(v)) == g.gain(u, v) for u, v in g.graph.edges)


def gain_automorphisms(g: GainGraph, max_vertices: int = DEFAULT_AUT_CAP) -> AutGroup:
    """The subgroup of graph automorphisms that preserve every gain exactly."""
    aut = automorphisms(g.graph, max_vertices)
    kept = tuple(f for f in aut.elements if _preserves_gains(f, g))
    return AutGroup(aut.n, kept)


def mixed_aut_decomposition(g: GainGraph, max_vertices: int = DEFAULT_AUT_CAP):
    """Automorphism groups of a mixed graph, its directed part, and its undirected part.

    Returns ``(aut_underlying, aut_directed, aut_undirected)`` where the
    directed part keeps the edges with gain != 1 (with their gains) and the
    undirected part keeps the gain-1 edges as a plain graph.  The gain
    automorphisms of g equal the intersection of the first two groups and
    also the intersection of the last two; both identities are verified here.
    """
    if not g.mixed_mode:
        raise ValidationError("the decomposition is defined for mixed graphs")
    n = g.graph.n
    directed = [(u, v, gain) for (u, v), gain in zip(g.graph.edges, g.gains) if not gain.is_one()]
    undirected = [(u, v) for (u, v), gain in zip(g.graph.edges, g.gains) if gain.is_one()]
    aut_g = automorphisms(g.graph, max_vertices)
    aut_s = gain_automorphisms(
        build_gain_graph(n, g.group, directed, mixed_mode=True), max_vertices
    )
    aut_u = automorphisms(SimpleGraph(n, undirected), max_vertices)
    aut_mixed = {f.image for f in gain_automorphisms(g, max_vertices)}
    inter_gs = {f.image for f in aut_g} & {f.image for f in aut_s}
    inter_su = {f.image for f in aut_s} & {f.image for f in aut_u}
    if aut_mixed != inter_gs or aut_mixed != inter_su:
        raise AssertionError("internal error: automorphism intersection identities failed")
    return aut_g, aut_s, aut_u


def act(f: VertexPermutation, g: GainGraph) -> GainGraph:
    """Relabel gains along an automorphism: the result's gain(u, v) is g's gain(f(u), f(v)).

    ``f`` must be an automorphism of the underlying graph; anything else is
    rejected rather than producing a graph with silently moved edges.
    """
    if f.n != g.graph.n:
        raise ValidationError("permutation acts on a different vertex set")
    gains = []
    for u, v in g.graph.edges:
        if not g.graph.has_edge(f(u), f(v)):
            raise ValidationError("permutation is not an automorphism of the underlying graph")
        gains.append(g.gain(f(u), f(v)))
    return GainGraph(g.graph, g.group, tuple(gains), mixed_mode=g.mixed_mode)


def switching_isomorphic(a: GainGraph, b: GainGraph, max_vertices: int = DEFAULT_AUT_CAP):
    """Search for (f, theta) with ``apply_switching(act(f, a), theta) == b``.

    The underlying graphs must coincide (relabel beforehand if they are
    merely isomorphic).  Returns None when no automorphism works; switching
    isomorphic graphs are exactly those whose classes share an orbit.
    """
    if a.graph != b.graph or a.group != b.group:
        raise ValidationError("inputs do not share an underlying graph")
    forest, _ = canonical_basis(a.graph)
    for f in automorphisms(a.graph, max_vertices):
        theta = switching_equivalent(act(f, a), b, forest=forest)
        if theta:
            return f, theta
    return None


def orbit_of_class(
    g: GainGraph,
    max_vertices: int = DEFAULT_AUT_CAP,
    max_edges: int = DEFAULT_ORBIT_EDGE_CAP,
):
    """Representatives of the orbit of [g] under the automorphism action.

    One gain graph per distinct switching class reachable as act(f, g),
    keyed by basis gain profile and sorted by it for determinism.
    """
    if g.graph.m > max_edges:
        raise InstanceTooLargeError(
            f"orbit computation capped at {max_edges} edges, graph has {g.graph.m}"
        )
    _, basis = canonical_basis(g.graph)
    reps: dict[tuple[int, ...], GainGraph] = {}
    for f in automorphisms(g.graph, max_vertices):
        moved = act(f, g)
        key = tuple(x.exp for x in basis_gain_profile(moved, basis))
        if key not in reps:
            reps[key] = moved
    return [reps[key] for key in sorted(reps)]


def underlying_isomorphism(a: SimpleGraph, b: SimpleGraph, max_vertices: int = DEFAULT_AUT_CAP):
    """An isomorphism from a onto b as a VertexPermutation, or None.

    Backtracking on vertices of a with degree pruning; intended for the CLI
    so that gain graphs given with different labelings can be aligned before
    the switching-isomorphism search.
    """
    if a.n != b.n or a.m != b.m:
        return None
    if a.n > max_vertices:
        raise InstanceTooLargeError(
            f"isomorphism search capped at {max_vertices} vertices, graph has {a.n}"
        )
    n = a.n
    deg_a = sorted(a.degree(v) for v in range(1, n + 1))
    deg_b = sorted(b.degree(v) for v in range(1, n + 1))
    if deg_a != deg_b:
        return None
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def rec(v: int):
        if v > n:
            return VertexPermutation(tuple(image[1:]))
        for w in range(1, n + 1):
            if used[w] or a.degree(v) != b.degree(w):
                continue
            if any(a.has_edge(u, v) != b.has_edge(image[u], w) for u in range(1, v)):
                continue
            image[v] = w
            used[w] = True
            hit = rec(v + 1)
            if hit is not None:
                return hit
            used[w] = False
            image[v] = 0
        return None

    return rec(1)
