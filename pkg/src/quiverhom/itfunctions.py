"""Igusa-Todorov functions on the free abelian group of module classes.

K0 is free on the iso-classes of nonprojective indecomposables; the
syzygy operator induces an endomorphism that kills projectives.  phi(M)
is the first level from which the rank of the iterated image of the
subgroup generated by M's summand classes stays constant; over a finite
class universe the rank sequence provably stabilizes within dim-many
steps (Fitting), so no iteration bound has to be guessed.  psi adds the
largest finite projective dimension among the summands at level phi.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import representations as reps
from .algebra import BoundQuiverAlgebra
from .expressions import ModuleExpr
from .linalg import int_mat_mul, int_rank
from .representations import INFINITE, UNKNOWN
from .syzygies import PathIdealClass, SyzygyGraph, build_syzygy_graph


class ExtendedComputationError(RuntimeError):
    """A syzygy of a non-combinatorial atom did not decompose into known
    classes, so the exact rank computation cannot proceed."""


# ----------------------------------------------------------------------
# class multisets of module expressions


def expr_class_counter(expr: ModuleExpr, A: BoundQuiverAlgebra) -> Counter:
    """Multiset of nonprojective class node ids of a module expression.

    Projective atoms contribute nothing.  Injective atoms are not
    combinatorial; use :func:`phi` / :func:`psi`, which route them through
    the representation engine.
    """
    graph = build_syzygy_graph(A)
    counts: Counter = Counter()
    for atom, mult in expr.atoms.items():
        kind = atom[0]
        if kind == "P":
            continue
        if kind == "S":
            node = graph.simple_node(atom[1])
        elif kind == "ideal":
            node = graph.class_of(atom[1])
        else:
            raise ValueError(
                "injective atoms have no combinatorial class; "
                "phi/psi handle them through representations")
        if node.projective_flag:
            continue
        counts[node.node_id] += mult
    return counts


def expr_of_classes(graph: SyzygyGraph, counts: Counter) -> ModuleExpr:
    """A module expression realizing a multiset of graph classes."""
    atoms: Counter = Counter()
    for nid, mult in sorted(counts.items()):
        if mult <= 0:
            continue
        node = graph.node(nid)
        if node.representative is not None:
            atoms[("ideal", node.representative)] += mult
        else:
            atoms[("S", node.simple_vertex)] += mult
    return ModuleExpr(atoms)


# ----------------------------------------------------------------------
# the induced endomorphism and rank stabilization


def _closure(graph: SyzygyGraph, seeds) -> list[int]:
    todo = sorted(set(seeds))
    seen = set(todo)
    order = []
    while todo:
        nid = todo.pop(0)
        order.append(nid)
        for succ in sorted(graph.edges[nid]):
            if succ not in seen:
                seen.add(succ)
                todo.append(succ)
    return order


def _omega_matrix(graph: SyzygyGraph, universe: list[int]):
    index = {nid: i for i, nid in enumerate(universe)}
    n = len(universe)
    B = [[0] * n for _ in range(n)]
    for col, nid in enumerate(universe):
        for succ, mult in graph.edges[nid].items():
            B[index[succ]][col] += mult
    return B


def _rank_sequence(B, E, steps: int) -> list[int]:
    ranks = [int_rank(E)]
    cur = E
    for _ in range(steps):
        cur = int_mat_mul(B, cur)
        ranks.append(int_rank(cur))
    return ranks


def phi_of_class_set(class_ids, A: BoundQuiverAlgebra) -> int:
    """phi of a direct sum of pairwise distinct graph classes."""
    graph = build_syzygy_graph(A)
    seeds = sorted({nid for nid in class_ids
                    if not graph.node(nid).projective_flag})
    if not seeds:
        return 0
    universe = _closure(graph, seeds)
    B = _omega_matrix(graph, universe)
    index = {nid: i for i, nid in enumerate(universe)}
    E = [[0] * len(seeds) for _ in universe]
    for j, nid in enumerate(seeds):
        E[index[nid]][j] = 1
    ranks = _rank_sequence(B, E, len(universe))
    limit = ranks[-1]
    return next(l for l, r in enumerate(ranks) if r == limit)


def psi_of_class_counter(counts: Counter, A: BoundQuiverAlgebra) -> int:
    graph = build_syzygy_graph(A)
    level = phi_of_class_set(counts.keys(), A)
    state = Counter({nid: m for nid, m in counts.items()
                     if not graph.node(nid).projective_flag and m})
    for _ in range(level):
        state = graph.omega_multiset(state)
    finite = [graph.pd[nid] for nid in state
              if graph.pd[nid] != INFINITE]
    return level + (max(finite) if finite else 0)


def phi(M: ModuleExpr, A: BoundQuiverAlgebra) -> int:
    """The Igusa-Todorov function phi of a module expression."""
    A.require_monomial("phi")
    if M.has_injective_atoms():
        return _extended_phi_psi(M, A)[0]
    return phi_of_class_set(expr_class_counter(M, A).keys(), A)


def psi(M: ModuleExpr, A: BoundQuiverAlgebra) -> int:
    """The Igusa-Todorov function psi of a module expression."""
    A.require_monomial("psi")
    if M.has_injective_atoms():
        return _extended_phi_psi(M, A)[1]
    return psi_of_class_counter(expr_class_counter(M, A), A)


def omega_bar_matrix(classes, A: BoundQuiverAlgebra):
    """Integer matrix of the induced syzygy endomorphism.

    ``classes`` is an iterable of graph classes (or node ids); the matrix
    is square over the closure of the input under the syzygy operator,
    input classes first.  Returns ``(matrix, ordered_classes)``.
    """
    graph = build_syzygy_graph(A)
    seeds = []
    for c in classes:
        nid = c.node_id if isinstance(c, PathIdealClass) else int(c)
        if nid is None:
            continue  # detached projective class: zero column anyway
        if nid not in seeds:
            seeds.append(nid)
    universe = seeds + [nid for nid in _closure(graph, seeds)
                        if nid not in seeds]
    return _omega_matrix(graph, universe), [graph.node(n) for n in universe]


def omega_invariant_bound(M: ModuleExpr, A: BoundQuiverAlgebra):
    """Certified upper bound for phi when the syzygy stays inside add M.

    Returns the number of distinct nonprojective classes of M when the
    class set of the first syzygy is contained in that of M, else None.
    """
    A.require_monomial("omega_invariant_bound")
    graph = build_syzygy_graph(A)
    seeds = set(expr_class_counter(M, A))
    image = set()
    for nid in seeds:
        image.update(graph.edges[nid])
    if image <= seeds:
        return len(seeds)
    return None


# ----------------------------------------------------------------------
# representation-assisted phi/psi (injective atoms)


def _extended_phi_psi(M: ModuleExpr, A: BoundQuiverAlgebra):
    graph = build_syzygy_graph(A)
    extras: list = []          # Representation per non-universe class
    extra_edges: list = []     # Counter over combined index per extra
    node_count = len(graph.nodes)

    def match_extra(rep) -> int:
        for i, known in enumerate(extras):
            if (known.dimension_vector() == rep.dimension_vector()
                    and reps.isomorphic(known, rep)):
                return i
        extras.append(rep)
        extra_edges.append(None)
        return len(extras) - 1

    def node_rep(nid):
        node = graph.node(nid)
        if node.representative is not None:
            return reps.ideal_module(A, node.representative)
        return reps.simple(A, node.simple_vertex)

    def classify_rep(rep) -> int | None:
        """Combined index of the class of an indecomposable rep, or None
        when projective."""
        if reps.projective_cover(rep).syzygy.total_dim == 0:
            return None
        dv = rep.dimension_vector()
        for node in graph.nodes:
            if node.projective_flag or node.dim != rep.total_dim:
                continue
            cand = node_rep(node.node_id)
            if cand.dimension_vector() == dv and reps.isomorphic(cand, rep):
                return node.node_id
        return node_count + match_extra(rep)

    seeds = []
    for atom, _ in M.sorted_atoms():
        kind = atom[0]
        if kind == "P":
            continue
        if kind == "S":
            node = graph.simple_node(atom[1])
            idx = None if node.projective_flag else node.node_id
        elif kind == "ideal":
            node = graph.class_of(atom[1])
            idx = None if node.projective_flag else node.node_id
        else:
            idx = classify_rep(reps.injective(A, atom[1]))
        if idx is not None and idx not in seeds:
            seeds.append(idx)
    if not seeds:
        return 0, 0

    def peel(rep) -> Counter:
        """Decompose into graph classes plus known extras."""
        counts: Counter = Counter()
        current = rep
        candidates = sorted(graph.nodes, key=lambda n: (-n.dim, n.node_id))
        while current.total_dim > 0:
            progressed = False
            for node in candidates:
                piece = node_rep(node.node_id)
                complement = reps.split_off_summand(piece, current)
                if complement is not None:
                    counts[node.node_id] += 1
                    current = complement
                    progressed = True
                    break
            if progressed:
                continue
            for i, known in enumerate(extras):
                complement = reps.split_off_summand(known, current)
                if complement is not None:
                    counts[node_count + i] += 1
                    current = complement
                    progressed = True
                    break
            if not progressed:
                raise ExtendedComputationError(
                    "a syzygy summand falls outside the known classes")
        return counts

    def edges_of(idx: int) -> Counter:
        if idx < node_count:
            return graph.edges[idx]
        i = idx - node_count
        if extra_edges[i] is None:
            syz = reps.projective_cover(extras[i]).syzygy
            extra_edges[i] = peel(syz) if syz.total_dim else Counter()
        return extra_edges[i]

    # closure over the combined index space (new extras may appear while
    # peeling, so iterate to a fixpoint)
    universe = []
    todo = list(seeds)
    seen = set(seeds)
    while todo:
        idx = todo.pop(0)
        universe.append(idx)
        for succ in sorted(edges_of(idx)):
            if succ not in seen:
                seen.add(succ)
                todo.append(succ)

    index = {idx: i for i, idx in enumerate(universe)}
    n = len(universe)
    B = [[0] * n for _ in range(n)]
    for col, idx in enumerate(universe):
        for succ, mult in edges_of(idx).items():
            B[index[succ]][col] += mult
    E = [[0] * len(seeds) for _ in range(n)]
    for j, idx in enumerate(seeds):
        E[index[idx]][j] = 1
    ranks = _rank_sequence(B, E, n)
    limit = ranks[-1]
    level = next(l for l, r in enumerate(ranks) if r == limit)

    state = Counter({idx: 1 for idx in seeds})
    for _ in range(level):
        nxt = Counter()
        for idx, mult in state.items():
            for succ, m in edges_of(idx).items():
                nxt[succ] += mult * m
        state = nxt
    finite = []
    cutoff = 2 * A.dim + 2
    for idx in state:
        if idx < node_count:
            val = graph.pd[idx]
        else:
            val = reps.pd_cutoff(extras[idx - node_count], A, cutoff)
        if val is UNKNOWN:
            raise ExtendedComputationError(
                "projective dimension of an extra class is undetermined")
        if val != INFINITE:
            finite.append(val)
    return level, level + (max(finite) if finite else 0)


# ----------------------------------------------------------------------
# dimension report


@dataclass(frozen=True)
class DimInterval:
    """A closed integer interval; ``hi`` may be INFINITE (certified) or
    UNKNOWN (no upper bound derived)."""

    lo: object = 0
    hi: object = UNKNOWN

    @property
    def exact(self) -> bool:
        return self.hi is not UNKNOWN and self.lo == self.hi

    @property
    def status(self) -> str:
        if self.exact:
            return "EXACT"
        if self.hi is UNKNOWN:
            return "UNKNOWN"
        return "INTERVAL"

    def meet(self, lo=None, hi=None) -> "DimInterval":
        new_lo = self.lo if lo is None else max(self.lo, lo)
        if hi is None:
            new_hi = self.hi
        elif self.hi is UNKNOWN:
            new_hi = hi
        else:
            new_hi = min(self.hi, hi)
        return DimInterval(new_lo, new_hi)

    def render(self) -> str:
        if self.exact:
            return "INF" if self.lo == INFINITE else str(self.lo)
        if self.hi is UNKNOWN:
            return f"UNKNOWN(>= {self.lo})"
        hi = "INF" if self.hi == INFINITE else str(self.hi)
        return f"[{self.lo}, {hi}]"


@dataclass
class DimReport:
    findim: DimInterval
    phidim: DimInterval
    psidim: DimInterval
    gldim: DimInterval
    provenance: list = field(default_factory=list)

    def check_invariants(self):
        for a, b in ((self.findim, self.phidim), (self.phidim, self.psidim)):
            assert a.lo <= b.lo, "lower bounds must be monotone"
            if a.hi is not UNKNOWN and b.hi is not UNKNOWN:
                assert a.hi <= b.hi, "upper bounds must be monotone"


def _gldim_interval(A: BoundQuiverAlgebra, cutoff: int) -> DimInterval:
    if A.monomial_flag:
        graph = build_syzygy_graph(A)
        values = [graph.pd[graph.simple_node(v).node_id]
                  for v in A.quiver.vertices]
        if any(v == INFINITE for v in values):
            return DimInterval(INFINITE, INFINITE)
        g = max(values, default=0)
        return DimInterval(g, g)
    lo = 0
    unknown = False
    for v in A.quiver.vertices:
        val = reps.pd_cutoff(reps.simple(A, v), A, cutoff)
        if val is UNKNOWN:
            unknown = True
        elif val == INFINITE:
            return DimInterval(INFINITE, INFINITE)
        else:
            lo = max(lo, val)
    return DimInterval(lo, UNKNOWN) if unknown else DimInterval(lo, lo)


def dim_report(A: BoundQuiverAlgebra, cutoff: int | None = None) -> DimReport:
    """Exact values or certified intervals for findim, phidim, psidim.

    Combines, in order: selfinjectivity, a certified Gorenstein
    parameter, finite global dimension, the monomial class-universe
    bounds, and a certified right injective dimension.  Every applied
    rule is recorded in the provenance list.
    """
    if cutoff is None:
        cutoff = 2 * A.dim + 2
    findim = DimInterval(0, UNKNOWN)
    phidim = DimInterval(0, UNKNOWN)
    psidim = DimInterval(0, UNKNOWN)
    prov = []

    profile = reps.gorenstein_profile(A, cutoff)
    semisimple = A.dim == len(A.quiver.vertices)

    if profile.selfinjective:
        findim = findim.meet(0, 0)
        phidim = phidim.meet(0, 0)
        psidim = psidim.meet(0, 0)
        prov.append("SELFINJECTIVE")

    if isinstance(profile.m, int) and not profile.selfinjective:
        m = profile.m
        findim = findim.meet(m, m)
        phidim = phidim.meet(m, m)
        psidim = psidim.meet(m, m)
        prov.append(f"GORENSTEIN({m})")

    gldim = _gldim_interval(A, cutoff)
    if profile.selfinjective:
        gldim = (DimInterval(0, 0) if semisimple
                 else DimInterval(INFINITE, INFINITE))
    if gldim.exact and gldim.lo != INFINITE:
        g = gldim.lo
        findim = findim.meet(g, g)
        phidim = phidim.meet(g, g)
        psidim = psidim.meet(g, g)
        prov.append(f"GLDIM({g})")

    if A.monomial_flag:
        graph = build_syzygy_graph(A)
        nonproj = [n.node_id for n in graph.nonprojective_nodes()]
        path_nodes = [n.node_id for n in graph.nodes
                      if n.representative is not None
                      and not n.projective_flag]
        phi_u = phi_of_class_set(nonproj, A)
        psi_u = psi_of_class_counter(Counter({n: 1 for n in nonproj}), A)
        phi_n = phi_of_class_set(path_nodes, A)
        psi_n = psi_of_class_counter(Counter({n: 1 for n in path_nodes}), A)
        cap = A.dim - len(A.quiver.vertices) + 2
        finite_pds = [graph.pd[n] for n in nonproj
                      if graph.pd[n] != INFINITE]
        phidim = phidim.meet(phi_u, min(phi_n + 2, cap))
        psidim = psidim.meet(psi_u, psi_n + 2)
        findim = findim.meet(max(finite_pds, default=0), None)
        prov.append("MONOMIAL_BOUND")
        prov.append("OBSERVED_LOWER")

    if isinstance(profile.id_right, int):
        n = profile.id_right
        findim = findim.meet(None, n)
        phidim = phidim.meet(None, n)
        psidim = psidim.meet(None, n)
        prov.append(f"ID_BOUND({n})")

    # cross-field consistency: findim <= phidim <= psidim, all <= gldim
    phidim = phidim.meet(findim.lo, psidim.hi)
    psidim = psidim.meet(phidim.lo, None)
    if psidim.hi is not UNKNOWN:
        findim = findim.meet(None, min(x for x in (findim.hi, phidim.hi,
                                                   psidim.hi)
                                       if x is not UNKNOWN))
        phidim = phidim.meet(None, psidim.hi)
    if gldim.exact and gldim.lo != INFINITE:
        pass  # already folded in
    elif not gldim.exact:
        gldim = gldim.meet(psidim.lo, None)

    report = DimReport(findim, phidim, psidim, gldim, prov)
    report.check_invariants()
    return report
