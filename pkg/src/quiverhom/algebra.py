"""Bound quiver algebras A = kQ/I via noncommutative rewriting.

Relations (rational combinations of parallel paths of length >= 2) are
oriented into rewriting rules by a degree-then-lex monomial order and
completed by overlap resolution, truncated at ``max_degree``.  Once every
path of some length N normalizes to zero, all remaining overlaps are
resolved outright (every lead has length <= N, so there are finitely
many), which makes normal forms canonical: the irreducible paths form a
basis of A.

Coefficients are exact rationals throughout.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .quiver import Path, Quiver

# abort knob for degenerate inputs that keep growing instead of reaching
# nilpotency; generous compared to any desk-scale algebra
_SCAN_GUARD = 200_000


class InconsistentRelationError(ValueError):
    """A relation mixes non-parallel paths or leaves the square radical."""


class NotFiniteDimensionalError(RuntimeError):
    """Nilpotency was not reached within max_degree: the input ideal is
    not admissible within the bound."""


class NotMonomialError(RuntimeError):
    """A monomial-only operation was invoked on a non-monomial algebra."""


class Relation:
    """A rational combination of parallel paths of length >= 2."""

    def __init__(self, terms):
        combined: dict[Path, Fraction] = {}
        for coeff, path in terms:
            c = Fraction(coeff)
            if c:
                combined[path] = combined.get(path, Fraction(0)) + c
        self.terms = [(c, p) for p, c in combined.items() if c]
        if not self.terms:
            raise InconsistentRelationError("relation reduces to zero")
        src = {p.source for _, p in self.terms}
        tgt = {p.target for _, p in self.terms}
        if len(src) != 1 or len(tgt) != 1:
            raise InconsistentRelationError(
                f"relation mixes non-parallel paths: {self.terms}")
        for _, p in self.terms:
            if p.length < 2:
                raise InconsistentRelationError(
                    f"term {p!r} has length {p.length} < 2; the ideal must "
                    "sit inside the square of the arrow ideal")

    def __repr__(self):
        return " + ".join(f"({c}) {p!r}" for c, p in self.terms)


class Element:
    """Finitely supported rational combination of paths of one algebra."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Path, Fraction] | None = None):
        self.terms = {p: Fraction(c) for p, c in (terms or {}).items() if c}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for p in sorted(self.terms, key=lambda q: q._key(), reverse=True):
            c = self.terms[p]
            parts.append(f"{c} {p!r}" if c != 1 else repr(p))
        return " + ".join(parts)


def _parallel_shift(word: Path, pos: int, lead_len: int, repl: Path) -> Path:
    """Replace ``word[pos : pos+lead_len]`` by the parallel path ``repl``."""
    arrows = word.arrows[:pos] + repl.arrows + word.arrows[pos + lead_len:]
    if not arrows:
        return Path(word.quiver, word.source, ())
    src = word.quiver.arrows[arrows[0]].source
    return Path(word.quiver, src, arrows)


class _RewriteSystem:
    """Mutable rule set plus completion machinery."""

    def __init__(self, quiver: Quiver, rank: dict[int, int]):
        self.quiver = quiver
        self.rank = rank  # arrow index -> position in the monomial order
        # lead arrows-tuple -> (lead Path, tail dict {Path: Fraction})
        self.rules: dict[tuple, tuple[Path, dict]] = {}
        self.lead_lengths: set[int] = set()
        self.pending: list[dict] = []
        self.pairs: list[tuple] = []  # heap of (degree, u_arrows, v_arrows, k)

    # ------------------------------------------------------------------
    # monomial order

    def key(self, path: Path):
        return (path.length, tuple(self.rank[i] for i in path.arrows),
                self.quiver.vertex_index[path.source])

    # ------------------------------------------------------------------
    # reduction

    def _find_redex(self, word: Path):
        arrows = word.arrows
        n = len(arrows)
        for pos in range(n):
            for L in sorted(self.lead_lengths):
                if pos + L > n:
                    break
                hit = self.rules.get(arrows[pos:pos + L])
                if hit is not None:
                    return pos, hit
        return None

    def reduce(self, terms: dict[Path, Fraction]) -> dict[Path, Fraction]:
        """Fully reduce a path combination; deterministic strategy."""
        work = {p: Fraction(c) for p, c in terms.items() if c}
        while True:
            redex = None
            for p in sorted(work, key=self.key, reverse=True):
                hit = self._find_redex(p)
                if hit is not None:
                    redex = (p, hit)
                    break
            if redex is None:
                return work
            word, (pos, (lead, tail)) = redex
            coeff = work.pop(word)
            for tpath, tcoeff in tail.items():
                new = _parallel_shift(word, pos, lead.length, tpath)
                acc = work.get(new, Fraction(0)) + coeff * tcoeff
                if acc:
                    work[new] = acc
                else:
                    work.pop(new, None)

    def reduce_path(self, path: Path) -> dict[Path, Fraction]:
        return self.reduce({path: Fraction(1)})

    # ------------------------------------------------------------------
    # completion

    def _orient(self, terms: dict) -> tuple[Path, dict]:
        lead = max(terms, key=self.key)
        clead = terms[lead]
        tail = {p: -c / clead for p, c in terms.items() if p is not lead}
        return lead, tail

    def _rule_element(self, lead: Path) -> dict:
        _, tail = self.rules[lead.arrows]
        el = {p: -c for p, c in tail.items()}
        el[lead] = Fraction(1)
        return el

    def _push_pairs(self, lead: Path):
        new_tail = self.rules[lead.arrows][1]
        for other_arrows, (other, other_tail) in list(self.rules.items()):
            if not new_tail and not other_tail:
                continue  # monomial overlaps always resolve
            for u, v in ((lead, other), (other, lead)):
                for k in range(1, min(u.length, v.length)):
                    if u.arrows[-k:] == v.arrows[:k]:
                        deg = u.length + v.length - k
                        heapq.heappush(
                            self.pairs,
                            (deg, u.arrows, v.arrows, k))

    def _insert(self, terms: dict):
        lead, tail = self._orient(terms)
        # evict rules whose lead became reducible by the new one
        for arrows in list(self.rules):
            if arrows == lead.arrows:
                continue
            if _contains(arrows, lead.arrows):
                old_lead = self.rules[arrows][0]
                el = self._rule_element(old_lead)
                del self.rules[arrows]
                self.pending.append(el)
        self.rules[lead.arrows] = (lead, tail)
        self.lead_lengths = {len(a) for a in self.rules}
        # keep tails reduced with respect to the enlarged system
        for arrows, (rlead, rtail) in list(self.rules.items()):
            if rtail:
                reduced = self.reduce(rtail)
                self.rules[arrows] = (rlead, reduced)
        self._push_pairs(lead)

    def _spoly(self, u_arrows, v_arrows, k) -> dict:
        info_u = self.rules.get(u_arrows)
        info_v = self.rules.get(v_arrows)
        if info_u is None or info_v is None:
            return {}
        u, tail_u = info_u
        v, tail_v = info_v
        if not tail_u and not tail_v:
            return {}
        suffix = v.suffix_from(k)
        prefix = u.prefix(u.length - k)
        left = {}
        for p, c in tail_u.items():
            q = p if suffix.is_trivial else Path(
                self.quiver, p.source, p.arrows + suffix.arrows)
            left[q] = left.get(q, Fraction(0)) + c
        for p, c in tail_v.items():
            q = p if prefix.is_trivial else Path(
                self.quiver, prefix.source, prefix.arrows + p.arrows)
            left[q] = left.get(q, Fraction(0)) - c
        return {p: c for p, c in left.items() if c}

    def complete(self, cap: int | None):
        """Resolve ambiguities; overlap words above ``cap`` are dropped
        (a later uncapped pass regenerates them)."""
        while self.pending or self.pairs:
            if self.pending:
                el = self.reduce(self.pending.pop())
                if el:
                    self._insert(el)
                continue
            deg, u_arrows, v_arrows, k = heapq.heappop(self.pairs)
            if cap is not None and deg > cap:
                continue
            delta = self.reduce(self._spoly(u_arrows, v_arrows, k))
            if delta:
                self.pending.append(delta)

    def regenerate_pairs(self):
        self.pairs = []
        done = set()
        for arrows in self.rules:
            lead = self.rules[arrows][0]
            if arrows not in done:
                self._push_pairs(lead)
                done.add(arrows)


def _contains(haystack: tuple, needle: tuple) -> bool:
    n, m = len(haystack), len(needle)
    if m > n:
        return False
    return any(haystack[i:i + m] == needle for i in range(n - m + 1))


class BoundQuiverAlgebra:
    """A finite-dimensional algebra kQ/I with a completed rewriting system.

    Construct through :func:`build_algebra`.
    """

    def __init__(self, quiver, system, basis, nilpotency_degree, order_names,
                 max_degree):
        self.quiver = quiver
        self._system = system
        self.basis = basis
        self.basis_set = set(basis)
        self.nilpotency_degree = nilpotency_degree
        self.arrow_order = order_names
        self.max_degree = max_degree
        self.dim = len(basis)
        self.monomial_flag = all(not tail for _, tail
                                 in system.rules.values())
        self.rules = {lead: Element(tail)
                      for lead, tail in system.rules.values()}
        self.basis_by_source = {v: [] for v in quiver.vertices}
        self.basis_by_pair = {}
        for p in basis:
            self.basis_by_source[p.source].append(p)
            self.basis_by_pair.setdefault((p.source, p.target), []).append(p)
        self.basis_index = {p: i for i, p in enumerate(basis)}
        self._opposite = None

    # ------------------------------------------------------------------

    def path_key(self, path: Path):
        return self._system.key(path)

    def normal_form_path(self, path: Path) -> Element:
        return Element(self._system.reduce_path(path))

    def normal_form(self, el: Element) -> Element:
        return Element(self._system.reduce(el.terms))

    def is_basis_path(self, path: Path) -> bool:
        return path in self.basis_set

    def path_nonzero(self, path: Path) -> bool:
        return not self.normal_form_path(path).is_zero

    def multiply(self, a: Element, b: Element) -> Element:
        terms: dict[Path, Fraction] = {}
        for p, cp in a.terms.items():
            for q, cq in b.terms.items():
                if p.target != q.source:
                    continue
                pq = (q if p.is_trivial else
                      p if q.is_trivial else
                      Path(self.quiver, p.source, p.arrows + q.arrows))
                terms[pq] = terms.get(pq, Fraction(0)) + cp * cq
        return Element(self._system.reduce(terms))

    def concat_nf(self, p: Path, q: Path) -> Element:
        """Normal form of the concatenation p*q (must be composable)."""
        if p.target != q.source:
            raise ValueError("paths not composable")
        if p.is_trivial:
            word = q
        elif q.is_trivial:
            word = p
        else:
            word = Path(self.quiver, p.source, p.arrows + q.arrows)
        return self.normal_form_path(word)

    def identity_element(self) -> Element:
        return Element({self.quiver.trivial_path(v): Fraction(1)
                        for v in self.quiver.vertices})

    def require_monomial(self, what: str = "this operation"):
        if not self.monomial_flag:
            raise NotMonomialError(
                f"{what} requires a monomial algebra")

    # ------------------------------------------------------------------

    def opposite(self) -> "BoundQuiverAlgebra":
        """The opposite algebra: arrows reversed, relation paths reversed."""
        if self._opposite is not None:
            return self._opposite
        opq = self.quiver.opposite()
        rels = []
        for lead_arrows, (lead_path, tail_terms) in self._system.rules.items():
            terms = [(Fraction(1), _reverse_path(lead_path, opq))]
            terms.extend((-c, _reverse_path(p, opq))
                         for p, c in tail_terms.items())
            rels.append(Relation(terms))
        opp = build_algebra(opq, rels, max_degree=self.max_degree,
                            arrow_order=self.arrow_order)
        opp._opposite = self
        self._opposite = opp
        return opp

    def __repr__(self):
        kind = "monomial " if self.monomial_flag else ""
        return (f"BoundQuiverAlgebra({kind}dim {self.dim}, "
                f"{len(self.quiver.vertices)} vertices, "
                f"nilpotency {self.nilpotency_degree})")


def _reverse_path(p: Path, opposite_quiver: Quiver) -> Path:
    if p.is_trivial:
        return opposite_quiver.trivial_path(p.source)
    return Path(opposite_quiver, p.target, tuple(reversed(p.arrows)))


def build_algebra(quiver: Quiver, relations, max_degree: int = 64,
                  arrow_order: list[str] | None = None) -> BoundQuiverAlgebra:
    """Build A = kQ/I from relations.

    ``arrow_order`` optionally lists all arrow names, overriding the
    declaration order used for the degree-lex monomial order.  Raises
    NotFiniteDimensionalError if no power of the arrow ideal vanishes
    within ``max_degree``.
    """
    if arrow_order is None:
        order_names = [a.name for a in quiver.arrows]
    else:
        order_names = list(arrow_order)
        if sorted(order_names) != sorted(a.name for a in quiver.arrows):
            raise ValueError("arrow_order must list every arrow exactly once")
    rank = {quiver.arrow_by_name[name].index: pos
            for pos, name in enumerate(order_names)}

    system = _RewriteSystem(quiver, rank)
    for rel in relations:
        if not isinstance(rel, Relation):
            rel = Relation(rel)
        system.pending.append({p: c for c, p in rel.terms})

    system.complete(cap=max_degree)
    nilp = _nilpotency_scan(system, quiver, max_degree)
    if 2 * nilp - 1 > max_degree:
        system.regenerate_pairs()
        system.complete(cap=None)
        nilp = _nilpotency_scan(system, quiver, nilp)

    basis = _enumerate_basis(system, quiver, nilp)
    algebra = BoundQuiverAlgebra(quiver, system, basis, nilp, order_names,
                                 max_degree)
    return algebra


def _nilpotency_scan(system, quiver, bound) -> int:
    """Least N <= bound with every length-N path reducing to zero."""
    frontier = [quiver.trivial_path(v) for v in quiver.vertices]
    seen = 0
    for degree in range(1, bound + 1):
        nxt = []
        for p in frontier:
            for a in quiver.arrows_from[p.target]:
                q = Path(quiver, p.source, p.arrows + (a.index,))
                seen += 1
                if seen > _SCAN_GUARD:
                    raise NotFiniteDimensionalError(
                        "path growth exceeds the scan guard; the ideal does "
                        "not look admissible within the degree bound")
                if system.reduce_path(q):
                    nxt.append(q)
        if not nxt:
            return degree
        frontier = nxt
    raise NotFiniteDimensionalError(
        f"paths of length {bound} still have nonzero normal forms; "
        "raise max_degree or fix the relations")


def _enumerate_basis(system, quiver, nilpotency) -> list[Path]:
    basis = [quiver.trivial_path(v) for v in quiver.vertices]
    level = basis[:]
    leads = set(system.rules)
    lead_lengths = sorted({len(a) for a in leads})
    for _ in range(1, nilpotency):
        nxt = []
        for p in level:
            for a in quiver.arrows_from[p.target]:
                arrows = p.arrows + (a.index,)
                # p is irreducible, so only suffixes ending at the new
                # arrow can match a lead
                reducible = any(
                    L <= len(arrows) and arrows[-L:] in leads
                    for L in lead_lengths)
                if not reducible:
                    nxt.append(Path(quiver, p.source, arrows))
        if not nxt:
            break
        basis.extend(nxt)
        level = nxt
    basis.sort(key=system.key)
    return basis
