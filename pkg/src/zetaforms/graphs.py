"""The pair graph, its automorphisms, and the group correspondence.

Hyperplane forms in the symmetric coordinates are sums s_i + s_j or
differences s_0 - s_i, one per 2-subset of eight labels.  Joining two
subsets when they share a label gives a 28-vertex, 12-regular graph whose
automorphism group is the full S_8.  The linear symmetry group of the
family lands inside it as the stabilizer of the label carried by s_0,
and the one extra non-positive symmetry fills in the missing factor of 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import group
from .params import (
    DIFF_FORM_INDICES,
    ParamVec8,
    form_coefficients,
    to_symmetric,
    vertex_table,
)

__all__ = [
    "PairGraph",
    "StabilizerReport",
    "build_G8",
    "pair_graph",
    "verify_table",
    "automorphism_order",
    "stabilizer_check",
    "adjacency_text",
]


@dataclass(frozen=True)
class PairGraph:
    """Undirected graph on the 2-subsets of {0, ..., n-1}.

    ``masks[i]`` is the neighbor set of vertex i as a bitmask over vertex
    indices; two subsets are adjacent when they share exactly one label.
    """

    n_labels: int
    vertices: tuple
    masks: tuple

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def degrees(self) -> tuple:
        return tuple(m.bit_count() for m in self.masks)

    def index(self, pair) -> int:
        return self.vertices.index(tuple(sorted(pair)))

    def adjacent(self, pair_a, pair_b) -> bool:
        i, j = self.index(pair_a), self.index(pair_b)
        return bool(self.masks[i] >> j & 1)


def pair_graph(n_labels: int) -> PairGraph:
    """Build the shared-label graph on 2-subsets of an n-element set."""
    if n_labels < 2:
        raise ValueError("need at least two labels")
    verts = tuple(combinations(range(n_labels), 2))
    masks = []
    for a in verts:
        m = 0
        sa = set(a)
        for j, b in enumerate(verts):
            if len(sa | set(b)) == 3:
                m |= 1 << j
        masks.append(m)
    return PairGraph(n_labels=n_labels, vertices=verts, masks=tuple(masks))


def build_G8() -> PairGraph:
    """The 28-vertex graph of the eight-label family."""
    return pair_graph(8)


def verify_table() -> bool:
    """Check all 28 symbolic form identities behind the vertex labels.

    Every hyperplane form must equal s_a + s_b (vertex {a, b} with a,
    b >= 1) or s_0 - s_b (vertex {0, b}) as a linear form in the eight
    parameters.  The check evaluates both sides on the standard basis
    vectors in doubled coordinates, so it is exact integer arithmetic.
    """
    table = vertex_table()
    if sorted(table.values()) != sorted(combinations(range(8), 2)):
        return False
    basis = [ParamVec8.from_seq([1 if j == k else 0 for j in range(8)])
             for k in range(8)]
    two_s = [to_symmetric(e).twoS for e in basis]
    for idx, (u, v) in table.items():
        coeffs = form_coefficients(idx)
        for k in range(8):
            lhs2 = 2 * sum(c * e for c, e in zip(coeffs, basis[k]))
            if u == 0:
                rhs2 = two_s[k][0] - two_s[k][v]
            else:
                rhs2 = two_s[k][u] + two_s[k][v]
            if lhs2 != rhs2:
                return False
    return True


def automorphism_order(g: PairGraph) -> int:
    """Exact order of Aut(g) by backtracking over vertex images.

    Candidates are pruned by degree and by adjacency against everything
    already mapped, which keeps the search tiny at this size.
    """
    n = g.n_vertices
    masks = g.masks
    degs = g.degrees()
    used = [False] * n
    img = [0] * n
    count = 0

    def extend(k: int, image_mask: int) -> None:
        nonlocal count
        if k == n:
            count += 1
            return
        low = masks[k] & ((1 << k) - 1)
        required = 0
        rem = low
        while rem:
            j = rem & -rem
            required |= 1 << img[j.bit_length() - 1]
            rem ^= j
        for c in range(n):
            if used[c] or degs[c] != degs[k]:
                continue
            if masks[c] & image_mask != required:
                continue
            used[c] = True
            img[k] = c
            extend(k + 1, image_mask | (1 << c))
            used[c] = False

    extend(0, 0)
    return count


def _is_graph_automorphism(g: PairGraph, vperm) -> bool:
    n = g.n_vertices
    for i in range(n):
        m = 0
        rem = g.masks[i]
        while rem:
            j = rem & -rem
            m |= 1 << vperm[j.bit_length() - 1]
            rem ^= j
        if m != g.masks[vperm[i]]:
            return False
    return True


def _vertex_perm_from_labels(g: PairGraph, label_perm) -> tuple:
    lookup = {v: i for i, v in enumerate(g.vertices)}
    return tuple(lookup[tuple(sorted((label_perm[a], label_perm[b])))]
                 for a, b in g.vertices)


def extra_vertex_perm(g: PairGraph) -> tuple:
    """Vertex action of the extra automorphism, read off from its
    permutation of the 29 forms restricted to the 28 labelled ones."""
    perm29, _signs = group.form_permutation(group.extra_automorphism())
    table = vertex_table()
    vp = [None] * g.n_vertices
    for idx, (u, v) in table.items():
        tgt = perm29[idx - 1] + 1
        if tgt == 29:
            raise ValueError("a labelled form maps onto the exceptional one")
        vp[g.index((u, v))] = g.index(table[tgt])
    return tuple(vp)


@dataclass
class StabilizerReport:
    ok: bool
    image_order: int
    extended_order: int
    fixes_marked_class: bool
    induces_full_s7: bool
    all_adjacency_preserving: bool
    all_positive: bool
    extra_not_positive: bool

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "imageOrder": self.image_order,
            "extendedOrder": self.extended_order,
            "fixesMarkedClass": self.fixes_marked_class,
            "inducesFullS7": self.induces_full_s7,
            "adjacencyPreserving": self.all_adjacency_preserving,
            "allPositive": self.all_positive,
            "extraNotPositive": self.extra_not_positive,
        }


def stabilizer_check() -> StabilizerReport:
    """Match the linear symmetry group against the graph's automorphisms.

    The group's coordinate permutations act on 2-subsets of labels; the
    image must preserve adjacency, have order 5040, fix setwise the seven
    vertices whose subset contains label 0 while permuting them as a full
    S_7, and grow to order 40320 once the extra automorphism (which acts
    as the label transposition 0 <-> 1 and is not positive) is added.
    """
    g = build_G8()
    elements = group.full_group()
    images = set()
    restricted = set()
    all_adj = True
    fixes = True
    diff_verts = {g.index((0, j)) for j in range(1, 8)}
    for el in elements:
        lp = group.perm_rep(el)
        vp = _vertex_perm_from_labels(g, lp)
        images.add(vp)
        if not _is_graph_automorphism(g, vp):
            all_adj = False
        if {vp[i] for i in diff_verts} != diff_verts:
            fixes = False
        restricted.add(tuple(lp[1:]))
    image_order = len(images)
    induces_s7 = len(restricted) == 5040

    extra_vp = extra_vertex_perm(g)
    gen_vps = [_vertex_perm_from_labels(g, group.perm_rep(el))
               for el in group.generators()]
    extended = _perm_closure_order(gen_vps + [extra_vp])

    all_positive = all(group.is_positive(el) for el in elements)
    extra_not_positive = not group.is_positive(group.extra_automorphism())

    ok = (image_order == 5040 and extended == 40320 and fixes
          and induces_s7 and all_adj and all_positive and extra_not_positive)
    return StabilizerReport(ok=ok, image_order=image_order,
                            extended_order=extended,
                            fixes_marked_class=fixes,
                            induces_full_s7=induces_s7,
                            all_adjacency_preserving=all_adj,
                            all_positive=all_positive,
                            extra_not_positive=extra_not_positive)


def _perm_closure_order(perms) -> int:
    gens = list(perms)
    seen = set(gens)
    queue = list(gens)
    base = gens[0]
    n = len(base)
    idgen = tuple(range(n))
    if idgen not in seen:
        seen.add(idgen)
        queue.append(idgen)
    while queue:
        p = queue.pop()
        for q in gens:
            comp = tuple(p[q[i]] for i in range(n))
            if comp not in seen:
                seen.add(comp)
                queue.append(comp)
    return len(seen)


def adjacency_text(g: PairGraph) -> str:
    """Plain adjacency list, one vertex per line, labels as digit pairs."""
    lines = []
    for i, v in enumerate(g.vertices):
        name = "%d%d" % v
        nbrs = []
        rem = g.masks[i]
        while rem:
            j = rem & -rem
            nbrs.append("%d%d" % g.vertices[j.bit_length() - 1])
            rem ^= j
        lines.append("%s: %s" % (name, " ".join(nbrs)))
    return "\n".join(lines) + "\n"
