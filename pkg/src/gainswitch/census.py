"""Counting and sizing switching-equivalence classes of mixed graphs.

A mixed orientation assigns each edge a gain from {1, i, -i}; two
orientations are equivalent exactly when they agree on a fundamental cycle
basis, so the brute-force census keys the 3^m assignments by their basis
gain profile.  Closed forms cover cycles (the alpha vectors), graphs whose
blocks are tractable (class sizes multiply over blocks), and 2-connected
plane graphs (sums over gamma matrices attached to the inner faces).

All counts are exact Python integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import InstanceTooLargeError, ValidationError
from .gaincore import GainExponent, GainGraph, GainGroup, SimpleGraph
from .switching import basis_gain_profile, canonical_basis, cycle_gain

__all__ = [
    "ClassCountVector",
    "Census",
    "Block",
    "FaceStructure",
    "GammaMatrix",
    "alpha_vector",
    "alpha_closed_form",
    "cycle_class_size",
    "class_count_bounds",
    "mixed_basis_profile",
    "brute_force_census",
    "cut_edge_lower_bound",
    "block_decompose",
    "induced_gain_graph",
    "class_size_by_blocks",
    "is_cactus",
    "parse_face_structure",
    "face_gains",
    "enumerate_gamma",
    "plane_class_size",
    "plane_class_count",
]

DEFAULT_CENSUS_CAP = 16
DEFAULT_FACE_CAP = 12

# Position of each k = 4 exponent inside an alpha vector (1, -1, i, -i).
_ALPHA_POSITION = {0: 0, 2: 1, 1: 2, 3: 3}


@dataclass(frozen=True)
class ClassCountVector:
    """Counts of length-n words over {1, i, -i} with product 1, -1, i, -i."""

    n: int
    one: int
    minus_one: int
    i: int
    minus_i: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.one, self.minus_one, self.i, self.minus_i)

    def component(self, x: GainExponent) -> int:
        if x.group.order != 4:
            raise ValidationError("alpha components are indexed by the k = 4 group")
        return self.as_tuple()[_ALPHA_POSITION[x.exp]]


@lru_cache(maxsize=None)
def alpha_vector(n: int) -> ClassCountVector:
    """Alpha vector by the one-step recurrence from (1, 0, 0, 0) at n = 0.

    Appending one edge gain from {1, i, -i} to a word multiplies its product
    by that gain, which mixes the four counts linearly; iterating the mixing
    matrix n times counts all 3^n words by their product.
    """
    if n < 0:
        raise ValidationError("word length must be nonnegative")
    a1, am1, ai, ami = 1, 0, 0, 0
    for _ in range(n):
        a1, am1, ai, ami = (
            a1 + ai + ami,
            am1 + ai + ami,
            a1 + am1 + ai,
            a1 + am1 + ami,
        )
    return ClassCountVector(n, a1, am1, ai, ami)


def alpha_closed_form(n: int) -> ClassCountVector:
    """Alpha vector in closed form, split on the parity of n."""
    if n < 0:
        raise ValidationError("word length must be nonnegative")
    if n == 0:
        return ClassCountVector(0, 1, 0, 0, 0)
    p = 3**n
    if n % 2 == 1:
        return ClassCountVector(n, (p + 1) // 4, (p - 3) // 4, (p + 1) // 4, (p + 1) // 4)
    return ClassCountVector(n, (p + 3) // 4, (p - 1) // 4, (p - 1) // 4, (p - 1) // 4)


def cycle_class_size(n: int, zeta: GainExponent) -> int:
    """Size of the switching class of a mixed n-cycle with cycle gain zeta."""
    if n < 3:
        raise ValidationError(f"cycles need at least 3 vertices, got {n}")
    return alpha_closed_form(n).component(zeta)


def _cycle_edge_ids(g: SimpleGraph, cycle: tuple[int, ...]) -> list[int]:
    closed = list(cycle) + [cycle[0]]
    return [g.edge_id(a, b) for a, b in zip(closed, closed[1:])]


def class_count_bounds(g: SimpleGraph) -> tuple[int, int, bool]:
    """Bounds on the number of classes, plus a tightness certificate.

    Returns ``(3^(m-n+c), 4^(m-n+c), upper_tight)`` where ``upper_tight`` is
    True when every fundamental cycle of the default basis has at least two
    edges private to it; in that case the upper bound is attained.
    """
    _, basis = canonical_basis(g)
    r = len(basis)
    use = [0] * g.m
    per_cycle = []
    for cyc in basis.cycles:
        ids = _cycle_edge_ids(g, cyc)
        for e in ids:
            use[e] += 1
        per_cycle.append(ids)
    tight = all(sum(1 for e in ids if use[e] == 1) >= 2 for ids in per_cycle)
    return 3**r, 4**r, tight


def mixed_basis_profile(g: GainGraph) -> tuple[int, ...]:
    """Gain exponents of g over the canonical fundamental basis of its graph."""
    _, basis = canonical_basis(g.graph)
    return tuple(x.exp for x in basis_gain_profile(g, basis))


@dataclass(frozen=True)
class Census:
    """Exhaustive class census of the mixed orientations of one graph.

    ``classes`` pairs each basis gain profile (exponents mod 4, ordered by
    chord edge id) with the number of orientations carrying it; profiles are
    sorted.  ``chords`` records which edge ids the profile positions refer to.
    """

    total: int
    classes: tuple[tuple[tuple[int, ...], int], ...]
    chords: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @cached_property
    def _by_profile(self) -> dict[tuple[int, ...], int]:
        return {profile: size for profile, size in self.classes}

    def size_of(self, profile: tuple[int, ...]) -> int:
        try:
            return self._by_profile[tuple(profile)]
        except KeyError:
            raise ValidationError(f"profile {profile} is not attained by any orientation") from None


def brute_force_census(g: SimpleGraph, max_edges: int = DEFAULT_CENSUS_CAP) -> Census:
    """Enumerate all 3^m mixed orientations and bucket them by basis profile.

    The assignment space is scanned in contiguous index chunks (mixed-radix
    digits over {1, i, -i} per edge) and per-chunk counts merge by addition,
    so the result is independent of the chunking.
    """
    if g.m > max_edges:
        raise InstanceTooLargeError(f"census capped at {max_edges} edges, graph has {g.m}")
    _, basis = canonical_basis(g)
    arcs_per_cycle = []
    for cyc in basis.cycles:
        closed = list(cyc) + [cyc[0]]
        arcs = [(g.edge_id(a, b), 1 if a < b else -1) for a, b in zip(closed, closed[1:])]
        arcs_per_cycle.append(arcs)
    total = 3**g.m
    pow3 = [3**e for e in range(g.m + 1)]
    exp_fwd = np.array([0, 1, 3], dtype=np.int64)
    exp_rev = np.array([0, 3, 1], dtype=np.int64)
    counts: dict[int, int] = {}
    chunk = 1 << 20
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        key = np.zeros(stop - start, dtype=np.int64)
        for j, arcs in enumerate(arcs_per_cycle):
            acc = np.zeros(stop - start, dtype=np.int64)
            for e, sign in arcs:
                digit = (idx // pow3[e]) % 3
                acc += (exp_fwd if sign > 0 else exp_rev)[digit]
            key += (acc % 4) << (2 * j)
        uniq, cnt = np.unique(key, return_counts=True)
        for u, c in zip(uniq.tolist(), cnt.tolist()):
            counts[u] = counts.get(u, 0) + c
    r = len(arcs_per_cycle)
    classes = tuple(
        (tuple((packed >> (2 * j)) & 3 for j in range(r)), size)
        for packed, size in sorted(counts.items())
    )
    return Census(total=total, classes=classes, chords=basis.chords)


@dataclass(frozen=True)
class Block:
    """A biconnected block, relabeled to local vertices 1..size.

    ``vertices[i - 1]`` is the original label of local vertex i; local labels
    follow the sorted order of the originals, so canonical edge orientations
    agree between the block and its host graph.
    """

    graph: SimpleGraph
    vertices: tuple[int, ...]


def block_decompose(g: SimpleGraph) -> list[Block]:
    """Biconnected blocks (cut edges appear as single-edge blocks).

    Standard low-link search with an edge stack; blocks are returned sorted
    by their smallest original vertex, then by edge lists.
    """
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    timer = 1
    edge_stack: list[int] = []
    raw_blocks: list[list[int]] = []

    def dfs(u: int, parent_edge: int) -> None:
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        for w in g.neighbors(u):
            e = g.edge_id(u, w)
            if e == parent_edge:
                continue
            if disc[w] == 0:
                edge_stack.append(e)
                dfs(w, e)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = []
                    while True:
                        x = edge_stack.pop()
                        block.append(x)
                        if x == e:
                            break
                    raw_blocks.append(block)
            elif disc[w] < disc[u]:
                edge_stack.append(e)
                low[u] = min(low[u], disc[w])

    for s in range(1, g.n + 1):
        if disc[s] == 0:
            dfs(s, -1)

    blocks = []
    for edge_ids in raw_blocks:
        edges = [g.edges[e] for e in edge_ids]
        verts = tuple(sorted({v for e in edges for v in e}))
        local = {v: i + 1 for i, v in enumerate(verts)}
        local_edges = [(local[u], local[v]) for u, v in edges]
        blocks.append(Block(SimpleGraph(len(verts), local_edges), verts))
    blocks.sort(key=lambda b: (b.vertices[0], b.vertices, b.graph.edges))
    return blocks


def induced_gain_graph(g: GainGraph, block: Block) -> GainGraph:
    """The gain graph g restricted to one of its blocks, on local labels."""
    gains = []
    for a, b in block.graph.edges:
        u, v = block.vertices[a - 1], block.vertices[b - 1]
        gains.append(g.gain(u, v))  # a < b implies u < v: orientations agree
    return GainGraph(block.graph, g.group, tuple(gains), mixed_mode=g.mixed_mode)


def cut_edge_lower_bound(g: SimpleGraph) -> int:
    """3 to the number of cut edges: a lower bound on any class size.

    Gains on cut edges never affect cycle gains, so each of their 3^s mixed
    assignments stays inside the same class.
    """
    s = sum(1 for b in block_decompose(g) if b.graph.m == 1)
    return 3**s


def is_cactus(g: SimpleGraph) -> bool:
    """True when every block is a single edge or a cycle."""
    return all(b.graph.m == 1 or b.graph.m == b.graph.n for b in block_decompose(g))


def _block_cycle_sequence(block: Block) -> tuple[int, ...]:
    """The cycle through a cycle block, in original labels, starting anywhere."""
    start = 1
    seq = [start]
    prev, cur = 0, start
    while True:
        nxt = [w for w in block.graph.neighbors(cur) if w != prev]
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        seq.append(cur)
    return tuple(block.vertices[v - 1] for v in seq)


def class_size_by_blocks(g: GainGraph, max_edges: int = DEFAULT_CENSUS_CAP) -> int:
    """Class size as a product over blocks.

    Cut edges contribute 3, cycle blocks contribute the alpha component of
    their cycle gain, and any other block contributes the size of its own
    class in the block's brute-force census.  The input must be mixed.
    """
    if not g.mixed_mode:
        raise ValidationError("block class sizes apply to mixed graphs")
    size = 1
    for block in block_decompose(g.graph):
        if block.graph.m == 1:
            size *= 3
        elif block.graph.m == block.graph.n:
            seq = _block_cycle_sequence(block)
            size *= alpha_closed_form(len(seq)).component(cycle_gain(g, seq))
        else:
            sub = induced_gain_graph(g, block)
            census = brute_force_census(block.graph, max_edges)
            size *= census.size_of(mixed_basis_profile(sub))
    return size


@dataclass(frozen=True)
class FaceStructure:
    """Validated inner faces of a 2-connected plane graph.

    ``arcs[p - 1]`` maps each edge id of face p to its directed traversal
    (a, b); shared edges are guaranteed to be traversed oppositely by their
    two faces.  ``cells`` partitions the edge ids: cell (p, q) with p <= q
    holds the edges shared by faces p and q (only on face p when p = q).
    """

    graph: SimpleGraph
    faces: tuple[tuple[int, ...], ...]
    arcs: tuple[tuple[tuple[int, int, int], ...], ...]  # per face: (edge_id, a, b)
    cells: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    @property
    def k(self) -> int:
        return len(self.faces)

    @cached_property
    def _cell_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return {pq: edges for pq, edges in self.cells}

    @cached_property
    def _arc_maps(self) -> tuple[dict[int, tuple[int, int]], ...]:
        return tuple({e: (a, b) for e, a, b in face} for face in self.arcs)

    def nonempty_cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(pq for pq, _ in self.cells)

    def n_pq(self, p: int, q: int) -> int:
        key = (p, q) if p <= q else (q, p)
        return len(self._cell_map.get(key, ()))

    def cell_edges(self, p: int, q: int) -> tuple[int, ...]:
        key = (p, q) if p <= q else (q, p)
        return self._cell_map.get(key, ())


def face_gains(g: GainGraph, fs: FaceStructure) -> tuple[GainExponent, ...]:
    """Gain of each face cycle, traversed in its stated (clockwise) order."""
    return tuple(cycle_gain(g, face) for face in fs.faces)


def _oriented_gain_exp(g: GainGraph, a: int, b: int) -> int:
    return g.gain(a, b).exp


def parse_face_structure(g: GainGraph, faces) -> FaceStructure:
    """Validate user-supplied inner faces against the graph and its gains.

    Checks: the underlying graph is 2-connected; exactly m - n + 1 faces;
    every face is a simple cycle; every edge lies on one or two faces, and
    edges on two faces are traversed in opposite directions (clockwise
    consistency).  On top of the structural checks, the symmetric-difference
    gain law is asserted for every adjacent face pair whose oriented
    difference forms a single closed cycle.
    """
    graph = g.graph
    blocks = block_decompose(graph)
    covered = {v for b in blocks for v in b.vertices}
    if graph.n < 3 or len(blocks) != 1 or len(covered) != graph.n:
        raise ValidationError("face structures require a 2-connected graph")
    faces = tuple(tuple(face) for face in faces)
    expected = graph.m - graph.n + 1
    if len(faces) != expected:
        raise ValidationError(f"expected {expected} inner faces, got {len(faces)}")

    arcs = []
    edge_faces: dict[int, list[int]] = {}
    for p, face in enumerate(faces, start=1):
        if len(face) < 3:
            raise ValidationError(f"face {p} has fewer than 3 vertices")
        if len(set(face)) != len(face):
            raise ValidationError(f"face {p} repeats a vertex")
        closed = list(face) + [face[0]]
        face_arcs = []
        for a, b in zip(closed, closed[1:]):
            e = graph.edge_id(a, b)  # raises if not an edge
            face_arcs.append((e, a, b))
            edge_faces.setdefault(e, []).append(p)
        arcs.append(tuple(face_arcs))

    for e in range(graph.m):
        owners = edge_faces.get(e, [])
        if not 1 <= len(owners) <= 2:
            raise ValidationError(
                f"edge {graph.edges[e]} lies on {len(owners)} faces; every edge needs 1 or 2"
            )

    arc_maps = [{e: (a, b) for e, a, b in face} for face in arcs]
    cells_map: dict[tuple[int, int], list[int]] = {}
    for e, owners in edge_faces.items():
        if len(owners) == 2:
            p, q = owners
            if arc_maps[p - 1][e] != arc_maps[q - 1][e][::-1]:
                raise ValidationError(
                    f"faces {p} and {q} traverse edge {graph.edges[e]} in the same "
                    "direction; inner faces must all be clockwise"
                )
            key = (p, q) if p <= q else (q, p)
        else:
            key = (owners[0], owners[0])
        cells_map.setdefault(key, []).append(e)
    cells = tuple((pq, tuple(sorted(es))) for pq, es in sorted(cells_map.items()))

    fs = FaceStructure(graph=graph, faces=faces, arcs=tuple(arcs), cells=cells)
    _assert_symmetric_difference_law(g, fs)
    return fs


def _assert_symmetric_difference_law(g: GainGraph, fs: FaceStructure) -> None:
    """Check zeta(C_p delta C_q) = zeta(C_p) * zeta(C_q) on concrete gains.

    Applied whenever the private arcs of an adjacent face pair, each side
    keeping its own face's direction, close up into a single directed cycle.
    """
    k = g.group.order
    y = face_gains(g, fs)
    for p, q in itertools.combinations(range(1, fs.k + 1), 2):
        if fs.n_pq(p, q) == 0:
            continue
        shared = set(fs.cell_edges(p, q))
        arcs = [
            (a, b)
            for face_idx in (p, q)
            for e, a, b in fs.arcs[face_idx - 1]
            if e not in shared
        ]
        nxt = {}
        ok = True
        for a, b in arcs:
            if a in nxt:
                ok = False
                break
            nxt[a] = b
        if not ok or len(nxt) != len(arcs) or not arcs:
            continue
        start = arcs[0][0]
        exp, cur, steps = 0, start, 0
        while True:
            if cur not in nxt:
                ok = False
                break
            new = nxt[cur]
            exp = (exp + _oriented_gain_exp(g, cur, new)) % k
            cur = new
            steps += 1
            if cur == start:
                break
        if not ok or steps != len(arcs):
            continue
        if exp != (y[p - 1].exp + y[q - 1].exp) % k:
            raise ValidationError(
                f"faces {p} and {q} violate the symmetric-difference gain law"
            )


@dataclass(frozen=True)
class GammaMatrix:
    """A Hermitian k x k gain assignment to the face-pair cells.

    ``entries[p - 1][q - 1]`` is the gain x_pq (None where the cell is
    empty); x_qp is always the conjugate of x_pq and every row multiplies to
    the prescribed face gain.
    """

    entries: tuple[tuple[GainExponent | None, ...], ...]

    def entry(self, p: int, q: int) -> GainExponent | None:
        return self.entries[p - 1][q - 1]


def _gamma_search(fs: FaceStructure, y, first_only: bool):
    group = y[0].group
    if group.order != 4:
        raise ValidationError("gamma matrices are defined over the k = 4 group")
    if len(y) != fs.k:
        raise ValidationError(f"expected {fs.k} face gains, got {len(y)}")
    k = fs.k
    row_cells: list[list[tuple[int, int]]] = [[] for _ in range(k + 1)]
    for p, q in fs.nonempty_cells():
        row_cells[p].append((p, q))
    allowed = {}
    for p, q in fs.nonempty_cells():
        allowed[(p, q)] = (0, 1, 3) if fs.n_pq(p, q) == 1 else (0, 1, 2, 3)

    assigned: dict[tuple[int, int], int] = {}
    found: list[GammaMatrix] = []

    def build() -> GammaMatrix:
        rows = []
        for p in range(1, k + 1):
            row = []
            for q in range(1, k + 1):
                if fs.n_pq(p, q) == 0:
                    row.append(None)
                else:
                    x = assigned[(p, q) if p <= q else (q, p)]
                    row.append(GainExponent(group, x if p <= q else (-x) % 4))
            rows.append(tuple(row))
        return GammaMatrix(tuple(rows))

    def rec(p: int) -> bool:
        if p > k:
            found.append(build())
            return first_only
        base = 0
        for q in range(1, p):
            if fs.n_pq(q, p) > 0:
                base -= assigned[(q, p)]  # row p sees the conjugate of x_qp
        cells = row_cells[p]
        for combo in itertools.product(*(allowed[c] for c in cells)):
            if (base + sum(combo)) % 4 != y[p - 1].exp:
                continue
            for c, x in zip(cells, combo):
                assigned[c] = x
            stop = rec(p + 1)
            for c in cells:
                del assigned[c]
            if stop:
                return True
        return False

    rec(1)
    return found


def enumerate_gamma(fs: FaceStructure, y) -> list[GammaMatrix]:
    """All gamma matrices for the given face-gain vector y.

    Cell values obey the edge-count conditions (a single shared edge cannot
    carry -1), rows multiply to y_p, and the matrix is Hermitian by
    construction.  Deterministic order: rows filled top down, cell values
    tried in increasing exponent order.
    """
    return _gamma_search(fs, tuple(y), first_only=False)


def plane_class_size(g: GainGraph, fs: FaceStructure) -> int:
    """Class size of a mixed orientation of a 2-connected plane graph.

    Sums, over every gamma matrix for the face-gain vector of g, the product
    of alpha components alpha_{x_pq}(n_pq) across the nonempty cells.
    """
    if not g.mixed_mode:
        raise ValidationError("plane class sizes apply to mixed graphs")
    y = face_gains(g, fs)
    total = 0
    for mat in enumerate_gamma(fs, y):
        prod = 1
        for p, q in fs.nonempty_cells():
            prod *= alpha_closed_form(fs.n_pq(p, q)).component(mat.entry(p, q))
        total += prod
    return total


def plane_class_count(g: SimpleGraph, fs: FaceStructure, max_faces: int = DEFAULT_FACE_CAP) -> int:
    """Number of classes of a 2-connected plane graph.

    Counts the face-gain vectors y in {1, -1, i, -i}^k that admit at least
    one gamma matrix; each achievable y corresponds to exactly one class.
    """
    if fs.graph != g:
        raise ValidationError("face structure belongs to a different graph")
    if fs.k > max_faces:
        raise InstanceTooLargeError(f"class counting capped at {max_faces} faces, got {fs.k}")
    group = GainGroup(4)
    count = 0
    for combo in itertools.product(range(4), repeat=fs.k):
        y = tuple(GainExponent(group, t) for t in combo)
        if _gamma_search(fs, y, first_only=True):
            count += 1
    return count
