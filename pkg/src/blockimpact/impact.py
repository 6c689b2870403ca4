"""Subtree sizes on the block forest and per-vertex impact values.

The impact of a vertex is how many vertices end up outside the largest
surviving connected component of its own component once the vertex is
removed; it is 0 exactly for non-articulation vertices. Removing v splits
its component into one piece per child block of v's square node, plus the
piece "above" v through its parent; every piece size falls out of the square
counts stored on the rooted forest, so after one subtree-size sweep the
impact of all vertices is a single further pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .forest import BlockForest, build_forest_and_labeling
from .graph import CcLabeling, Graph


@dataclass(frozen=True, slots=True)
class SqSizes:
    """Per-node count of squares in each node's rooted subtree (the node
    itself included when it is a square)."""

    values: list[int]


def compute_sq_sizes(bf: BlockForest) -> SqSizes:
    """Bottom-up square counts for every node, under ``bf``'s rooting.

    Fresh forests are accumulated directly in round-creation order, which is
    already a children-before-parents order of the trees; re-rooted forests
    get an explicit-stack traversal instead.
    """
    if bf.construction_ordered:
        return SqSizes(_sizes_from_construction_order(bf))
    return SqSizes(_sizes_by_traversal(bf))


def _sizes_from_construction_order(bf: BlockForest) -> list[int]:
    n = bf.n_squares
    sq = [1] * n + [0] * bf.num_rounds
    flat = bf.member_flat
    start = bf.member_indptr
    parent = bf.parent
    for r in range(bf.num_rounds):
        node = n + r
        p = parent[node]  # pop vertex; -1 only at tree roots
        total = 0
        for i in range(start[r], start[r + 1]):
            x = flat[i]
            if x != p:
                total += sq[x]
        sq[node] = total
        if p >= 0:
            sq[p] += total
    return sq


def _sizes_by_traversal(bf: BlockForest) -> list[int]:
    # Preorder via explicit stack, then accumulate in reverse: every child is
    # folded into its parent only after its own subtree is complete.
    n = bf.n_squares
    parent = bf.parent
    sq = [0] * bf.num_nodes
    order: list[int] = []
    for root in bf.roots:
        stack = [root]
        while stack:
            x = stack.pop()
            order.append(x)
            px = parent[x]
            for y in bf.neighbors(x):
                if y != px:
                    stack.append(y)
    for x in reversed(order):
        if x < n:
            sq[x] += 1
        p = parent[x]
        if p >= 0:
            sq[p] += sq[x]
    return sq


def compute_impact(bf: BlockForest, sizes: SqSizes, cc: CcLabeling, v: int) -> int:
    """Impact of one vertex (any square, articulation point or not).

    The surviving pieces after deleting v are: for each child block of v, the
    squares of that block's subtree; plus everything in v's component that is
    not in v's subtree. The impact is the component size minus the largest
    piece minus one.
    """
    comp = cc.component_size[cc.component_id[v]]
    sq = sizes.values
    best = comp - sq[v]
    parent = bf.parent
    for node in bf.square_rounds(v):
        if parent[node] == v and sq[node] > best:
            best = sq[node]
    return comp - best - 1


def impact_vector(bf: BlockForest, sizes: SqSizes, cc: CcLabeling) -> list[int]:
    """Impacts of all vertices in one pass over the round nodes.

    Same arithmetic as :func:`compute_impact`; grouping rounds by their
    parent square avoids materializing per-square adjacency.
    """
    n = bf.n_squares
    sq = sizes.values
    parent = bf.parent
    child_max = [0] * n
    for node in range(n, bf.num_nodes):
        p = parent[node]
        if p >= 0:
            s = sq[node]
            if s > child_max[p]:
                child_max[p] = s
    comp_id = cc.component_id
    comp_size = cc.component_size
    out = [0] * n
    for v in range(n):
        comp = comp_size[comp_id[v]]
        rest = comp - sq[v]
        cm = child_max[v]
        if rest > cm:
            cm = rest
        out[v] = comp - cm - 1
    return out


@dataclass(frozen=True, slots=True)
class VertexImpact:
    label: str
    impact: int
    is_articulation: bool
    component_id: int
    component_size: int


@dataclass(frozen=True, slots=True)
class ImpactReport:
    """Per-vertex impact records (column-oriented, indexed by internal vertex
    id) plus summary statistics."""

    labels: list[str]
    impact: list[int]
    is_articulation: list[bool]
    component_id: list[int]
    component_size: list[int]
    n: int
    m: int
    articulation_count: int
    max_impact: int
    max_impact_label: str | None

    @classmethod
    def from_columns(
        cls,
        labels: list[str],
        impact: list[int],
        is_articulation: list[bool],
        cc: CcLabeling,
        m: int,
    ) -> "ImpactReport":
        n = len(labels)
        comp_id = cc.component_id
        comp_size_col = [cc.component_size[c] for c in comp_id]
        max_impact = 0
        max_label: str | None = None
        for lab, imp in zip(labels, impact):
            if max_label is None or imp > max_impact or (imp == max_impact and lab < max_label):
                max_impact = imp
                max_label = lab
        return cls(
            labels=labels,
            impact=impact,
            is_articulation=is_articulation,
            component_id=list(comp_id),
            component_size=comp_size_col,
            n=n,
            m=m,
            articulation_count=sum(is_articulation),
            max_impact=max_impact if n else 0,
            max_impact_label=max_label,
        )

    def rows(self) -> Iterator[VertexImpact]:
        for i in range(self.n):
            yield VertexImpact(
                self.labels[i],
                self.impact[i],
                self.is_articulation[i],
                self.component_id[i],
                self.component_size[i],
            )


def compute_all_impacts(g: Graph) -> ImpactReport:
    """Full pipeline: components, block forest, subtree sizes, all impacts.

    The component labeling is picked up from the forest-building DFS itself
    (the labeling :func:`blockimpact.graph.connected_components` produces,
    minus the cost of a second traversal).
    """
    bf, cc = build_forest_and_labeling(g)
    sizes = compute_sq_sizes(bf)
    impacts = impact_vector(bf, sizes, cc)
    flags = [d >= 2 for d in bf.square_degrees()]
    return ImpactReport.from_columns(g.labels, impacts, flags, cc, g.m)
