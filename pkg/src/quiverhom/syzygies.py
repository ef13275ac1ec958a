"""Combinatorial syzygies of path ideals over monomial algebras.

For monomial A the right ideal generated by a nonzero path p is spanned
by the surviving right multiples of p, and its first syzygy is again a
direct sum of path ideals, indexed by the minimal annihilating paths of
p.  Iso-classes of these ideals are keyed canonically by the terminal
vertex together with the set of surviving multiplier paths, which makes
the syzygy operator a finite digraph: the syzygy graph.  Projective
dimensions, including certified infinite ones, are read off that graph.
"""

from __future__ import annotations

from collections import Counter

from .algebra import BoundQuiverAlgebra
from .quiver import Path


class PathIdealClass:
    """Canonical iso-class of a path ideal (or of a simple module)."""

    __slots__ = ("key", "representative", "simple_vertex", "dim",
                 "projective_flag", "node_id")

    def __init__(self, key, representative, simple_vertex, dim,
                 projective_flag):
        self.key = key
        self.representative = representative     # shortest realizing path
        self.simple_vertex = simple_vertex       # set when the class is S_v
        self.dim = dim
        self.projective_flag = projective_flag
        self.node_id = None                      # assigned by the graph

    @property
    def top_vertex(self):
        return self.key[0]

    def label(self) -> str:
        if self.simple_vertex is not None:
            return f"S({self.simple_vertex})"
        return f"<{self.representative!r}>"

    def __repr__(self):
        flag = " projective" if self.projective_flag else ""
        return f"Class({self.label()}, dim {self.dim}{flag})"


def multiplier_key(p: Path, A: BoundQuiverAlgebra):
    """Canonical class key of the ideal generated by a nonzero path."""
    A.require_monomial("path ideal classification")
    if not A.is_basis_path(p):
        if A.normal_form_path(p).is_zero:
            raise ValueError(f"path {p!r} is zero in the algebra")
        raise ValueError(f"path {p!r} is not reduced")  # monomial: basis only
    t = p.target
    survivors = tuple(r for r in A.basis_by_source[t]
                      if _concat_is_basis(A, p, r))
    return (t, frozenset(r.arrows for r in survivors)), survivors


def _concat_is_basis(A: BoundQuiverAlgebra, p: Path, r: Path) -> bool:
    if r.is_trivial:
        return True
    if p.is_trivial:
        return True
    word = Path(A.quiver, p.source, p.arrows + r.arrows)
    return not A.normal_form_path(word).is_zero


def min_annihilators(p: Path, A: BoundQuiverAlgebra) -> list[Path]:
    """Minimal annihilating paths of p: the first syzygy of the ideal
    generated by p is the direct sum of the ideals they generate.

    A path q qualifies when q is nonzero of length >= 1, p*q = 0, and
    p*q' != 0 for every proper prefix q' of q of length >= 1.  The result
    is pairwise prefix-incomparable, in deterministic order.
    """
    A.require_monomial("min_annihilators")
    if A.normal_form_path(p).is_zero:
        raise ValueError(f"path {p!r} is zero in the algebra")
    out = []
    frontier = []
    for a in A.quiver.arrows_from[p.target]:
        q = Path(A.quiver, a.source, (a.index,))
        if _concat_is_basis(A, p, q):
            frontier.append(q)
        else:
            out.append(q)
    while frontier:
        nxt = []
        for q in frontier:
            for a in A.quiver.arrows_from[q.target]:
                qa = Path(A.quiver, q.source, q.arrows + (a.index,))
                if not A.is_basis_path(qa):
                    continue  # qa = 0 in A: not an annihilator witness
                if _concat_is_basis(A, p, qa):
                    nxt.append(qa)
                else:
                    out.append(qa)
        frontier = nxt
    out.sort(key=A.path_key)
    return out


class SyzygyGraph:
    """The syzygy digraph on iso-classes of path ideals and simples."""

    def __init__(self, A: BoundQuiverAlgebra):
        self.algebra = A
        self.nodes: list[PathIdealClass] = []
        self._by_key: dict = {}
        self.edges: dict[int, Counter] = {}       # nonprojective successors
        self.full_syzygy: dict[int, Counter] = {}  # including projectives
        self.pd: dict[int, object] = {}
        self._build()

    # ------------------------------------------------------------------

    def class_of(self, p: Path) -> PathIdealClass:
        A = self.algebra
        nf = A.normal_form_path(p)
        if nf.is_zero:
            raise ValueError(f"path {p!r} is zero in the algebra")
        key, survivors = multiplier_key(p, A)
        node = self._by_key.get(key)
        if node is not None:
            return node
        # trivial paths can generate projective classes that are not
        # graph nodes; hand back a detached class
        projective = len(survivors) == len(A.basis_by_source[p.target])
        if not projective:
            raise RuntimeError(f"class of {p!r} missing from the graph (bug)")
        return PathIdealClass(key, p, None, len(survivors), True)

    def simple_node(self, vertex) -> PathIdealClass:
        t = self.algebra.quiver.trivial_path(vertex)
        key = (vertex, frozenset({t.arrows}))
        return self._by_key[key]

    def node(self, node_id: int) -> PathIdealClass:
        return self.nodes[node_id]

    def nonprojective_nodes(self) -> list[PathIdealClass]:
        return [n for n in self.nodes if not n.projective_flag]

    # ------------------------------------------------------------------

    def _intern(self, key, representative, simple_vertex, dim, projective):
        node = self._by_key.get(key)
        if node is not None:
            if representative is not None and (
                    node.representative is None
                    or self.algebra.path_key(representative)
                    < self.algebra.path_key(node.representative)):
                node.representative = representative
            if simple_vertex is not None:
                node.simple_vertex = simple_vertex
            return node
        node = PathIdealClass(key, representative, simple_vertex, dim,
                              projective)
        self._by_key[key] = node
        return node

    def _build(self):
        A = self.algebra
        A.require_monomial("the syzygy graph")
        q = A.quiver

        syzygy_paths: dict = {}
        for p in A.basis:
            if p.length < 1:
                continue
            key, survivors = multiplier_key(p, A)
            all_from_t = A.basis_by_source[p.target]
            node = self._intern(key, p, None, len(survivors),
                                len(survivors) == len(all_from_t))
            if key not in syzygy_paths:
                syzygy_paths[key] = min_annihilators(p, A)

        for v in q.vertices:
            t = q.trivial_path(v)
            key = (v, frozenset({t.arrows}))
            projective = len(A.basis_by_source[v]) == 1
            node = self._intern(key, None, v, 1, projective)
            if key not in syzygy_paths:
                syzygy_paths[key] = [
                    Path(q, v, (a.index,)) for a in q.arrows_from[v]]

        order = sorted(self._by_key,
                       key=lambda k: (q.vertex_index[k[0]],
                                      tuple(sorted(k[1]))))
        self.nodes = [self._by_key[k] for k in order]
        for i, node in enumerate(self.nodes):
            node.node_id = i

        for node in self.nodes:
            nid = node.node_id
            if node.projective_flag:
                self.edges[nid] = Counter()
                self.full_syzygy[nid] = Counter()
                continue
            full = Counter()
            for qpath in syzygy_paths[node.key]:
                key, _ = multiplier_key(qpath, A)
                full[self._by_key[key].node_id] += 1
            self.full_syzygy[nid] = full
            self.edges[nid] = Counter(
                {t: m for t, m in full.items()
                 if not self.nodes[t].projective_flag})

        self._compute_pd()

    def _compute_pd(self):
        """pd per node: 0 on projectives, 1 + max over successors, and a
        certified infinity on every node that reaches a cycle."""
        from .representations import INFINITE

        nonproj = [n.node_id for n in self.nodes if not n.projective_flag]
        reaches_cycle = set()
        # iterative DFS with an on-stack set
        color = {}
        for start in nonproj:
            if start in color:
                continue
            stack = [(start, iter(self.edges[start]))]
            color[start] = "gray"
            while stack:
                node, it = stack[-1]
                advanced = False
                for succ in it:
                    if color.get(succ) == "gray" or succ in reaches_cycle:
                        reaches_cycle.add(node)
                        continue
                    if succ not in color:
                        color[succ] = "gray"
                        stack.append((succ, iter(self.edges[succ])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    color[node] = "black"
                    if node in reaches_cycle:
                        continue
                    if any(s in reaches_cycle or color.get(s) == "gray"
                           for s in self.edges[node]):
                        reaches_cycle.add(node)

        # propagate: anything reaching the cycle set is infinite
        changed = True
        while changed:
            changed = False
            for node in nonproj:
                if node in reaches_cycle:
                    continue
                if any(s in reaches_cycle for s in self.edges[node]):
                    reaches_cycle.add(node)
                    changed = True

        for node in self.nodes:
            if node.projective_flag:
                self.pd[node.node_id] = 0
        remaining = [n for n in nonproj if n not in reaches_cycle]
        for n in reaches_cycle:
            self.pd[n] = INFINITE
        # remaining nodes form a DAG; longest-path recursion with memo
        memo = {}

        def depth(node):
            if node in memo:
                return memo[node]
            succs = [s for s in self.edges[node]]
            val = 1 + max((depth(s) for s in succs
                           if not self.nodes[s].projective_flag), default=0)
            memo[node] = val
            return val

        for n in sorted(remaining):
            self.pd[n] = depth(n)

    # ------------------------------------------------------------------

    def pd_of_class_multiset(self, counts: Counter):
        """pd of a direct sum of node classes (max, infinity-aware)."""
        from .representations import INFINITE
        best = 0
        for nid, mult in counts.items():
            if mult == 0:
                continue
            val = self.pd[nid]
            if val == INFINITE:
                return INFINITE
            best = max(best, val)
        return best

    def omega_multiset(self, counts: Counter) -> Counter:
        """One application of the syzygy operator on nonprojective
        class multisets."""
        out = Counter()
        for nid, mult in counts.items():
            if self.nodes[nid].projective_flag:
                continue
            for succ, m in self.edges[nid].items():
                out[succ] += mult * m
        return out


_GRAPH_CACHE_ATTR = "_syzygy_graph"


def build_syzygy_graph(A: BoundQuiverAlgebra) -> SyzygyGraph:
    """Construct (and cache) the syzygy graph of a monomial algebra."""
    graph = getattr(A, _GRAPH_CACHE_ATTR, None)
    if graph is None:
        graph = SyzygyGraph(A)
        setattr(A, _GRAPH_CACHE_ATTR, graph)
    return graph


def class_of(p: Path, A: BoundQuiverAlgebra) -> PathIdealClass:
    return build_syzygy_graph(A).class_of(p)
