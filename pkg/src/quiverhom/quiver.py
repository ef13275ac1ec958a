"""Quivers and paths.

A quiver is a finite directed multigraph with named arrows.  Paths compose
left to right: ``p * q`` means "first p, then q", and a path acts on the
right of a module.  All orderings are deterministic: vertices and arrows
keep their declaration order, paths are ordered degree first and then
lexicographically by arrow position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class IncomposableError(ValueError):
    """Raised when two paths do not concatenate (target != source)."""


class UnknownArrowError(ValueError):
    """Raised when a path expression names an arrow the quiver lacks."""


class PathSyntaxError(ValueError):
    """Raised when a path expression does not match the grammar."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: object
    target: object
    index: int

    def __repr__(self):
        return f"{self.name}: {self.source} -> {self.target}"


class Quiver:
    """Finite quiver with ordered vertices and named arrows.

    ``vertices`` is a sequence of distinct hashable ids; ``arrows`` a
    sequence of ``(name, source, target)`` triples with distinct names.
    """

    def __init__(self, vertices: Iterable, arrows: Iterable[tuple]):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrows = []
        for name, src, tgt in arrows:
            if src not in self.vertex_index or tgt not in self.vertex_index:
                raise ValueError(f"arrow {name}: undeclared vertex")
            self.arrows.append(Arrow(name, src, tgt, len(self.arrows)))
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        self.arrow_by_name = {a.name: a for a in self.arrows}
        self.arrows_from = {v: [a for a in self.arrows if a.source == v]
                            for v in self.vertices}
        self.arrows_to = {v: [a for a in self.arrows if a.target == v]
                          for v in self.vertices}

    def trivial_path(self, vertex) -> "Path":
        return Path(self, vertex, ())

    def path(self, *arrow_names: str) -> "Path":
        """Build the path traversing the named arrows in order."""
        idxs = []
        for name in arrow_names:
            arrow = self.arrow_by_name.get(name)
            if arrow is None:
                raise UnknownArrowError(f"unknown arrow {name!r}")
            idxs.append(arrow.index)
        if not idxs:
            raise PathSyntaxError("empty arrow list; use trivial_path")
        p = Path(self, self.arrows[idxs[0]].source, tuple(idxs))
        p._check_composable()
        return p

    def opposite(self) -> "Quiver":
        """Same vertices, every arrow reversed (names kept)."""
        return Quiver(self.vertices,
                      [(a.name, a.target, a.source) for a in self.arrows])

    def __repr__(self):
        return (f"Quiver({len(self.vertices)} vertices, "
                f"{len(self.arrows)} arrows)")


class Path:
    """A composable sequence of arrows, or a trivial path at a vertex.

    Immutable and hashable; equality looks only at the source vertex and
    the arrow index sequence, so paths of distinct quivers must not be
    mixed in one container.
    """

    __slots__ = ("quiver", "_vertex", "arrows")

    def __init__(self, quiver: Quiver, vertex, arrows: tuple):
        self.quiver = quiver
        self._vertex = vertex
        self.arrows = tuple(arrows)

    def _check_composable(self):
        q = self.quiver
        for a, b in zip(self.arrows, self.arrows[1:]):
            if q.arrows[a].target != q.arrows[b].source:
                raise IncomposableError(
                    f"{q.arrows[a].name} does not compose with {q.arrows[b].name}")

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def source(self):
        if self.arrows:
            return self.quiver.arrows[self.arrows[0]].source
        return self._vertex

    @property
    def target(self):
        if self.arrows:
            return self.quiver.arrows[self.arrows[-1]].target
        return self._vertex

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __mul__(self, other: "Path") -> "Path":
        return compose(self, other)

    def __eq__(self, other):
        return (isinstance(other, Path) and self.arrows == other.arrows
                and self.source == other.source)

    def __hash__(self):
        return hash((self._key(),))

    def _key(self):
        # degree first, then arrow indices; source index breaks length-0 ties
        return (len(self.arrows), self.arrows,
                self.quiver.vertex_index[self.source])

    def __lt__(self, other: "Path"):
        return self._key() < other._key()

    def prefix(self, k: int) -> "Path":
        """The initial subpath of length k."""
        if k == 0:
            return Path(self.quiver, self.source, ())
        return Path(self.quiver, self.source, self.arrows[:k])

    def suffix_from(self, k: int) -> "Path":
        """The final subpath starting after the first k arrows."""
        if k >= len(self.arrows):
            return Path(self.quiver, self.target, ())
        rest = self.arrows[k:]
        return Path(self.quiver, self.quiver.arrows[rest[0]].source, rest)

    def __repr__(self):
        if not self.arrows:
            return f"e({self.source})"
        return "*".join(self.quiver.arrows[i].name for i in self.arrows)


def compose(p: Path, q: Path) -> Path:
    """Concatenate two paths, first ``p`` then ``q``.

    Defined iff ``target(p) == source(q)``; raises IncomposableError
    otherwise.  Trivial paths are two-sided identities.
    """
    if p.quiver is not q.quiver:
        raise ValueError("paths live over different quivers")
    if p.target != q.source:
        raise IncomposableError(
            f"cannot compose {p!r} (target {p.target}) with {q!r} "
            f"(source {q.source})")
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    return Path(p.quiver, p.source, p.arrows + q.arrows)


def enumerate_paths(quiver: Quiver, source, max_len: int) -> list[Path]:
    """All paths starting at ``source`` of length <= max_len.

    Ordered by degree and then lexicographically in the declared arrow
    order; deterministic.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    out = [quiver.trivial_path(source)]
    level = out[:]
    for _ in range(max_len):
        nxt = []
        for p in level:
            for a in quiver.arrows_from[p.target]:
                nxt.append(Path(quiver, p.source, p.arrows + (a.index,)))
        if not nxt:
            break
        out.extend(nxt)
        level = nxt
    return out


def iter_paths_of_length(quiver: Quiver, length: int) -> Iterator[Path]:
    """All paths of exactly the given length, any source, in order."""
    if length == 0:
        for v in quiver.vertices:
            yield quiver.trivial_path(v)
        return
    level = [quiver.trivial_path(v) for v in quiver.vertices]
    for _ in range(length):
        nxt = []
        for p in level:
            for a in quiver.arrows_from[p.target]:
                nxt.append(Path(quiver, p.source, p.arrows + (a.index,)))
        level = nxt
    yield from level


def parse_path(text: str, quiver: Quiver) -> Path:
    """Parse ``e(<vertex>)`` or ``<arrow>(*<arrow>)*`` into a Path."""
    s = text.strip()
    if not s:
        raise PathSyntaxError("empty path expression")
    if s.startswith("e(") and s.endswith(")"):
        vtext = s[2:-1].strip()
        vertex = _lookup_vertex(vtext, quiver)
        return quiver.trivial_path(vertex)
    names = [part.strip() for part in s.split("*")]
    if any(not name for name in names):
        raise PathSyntaxError(f"malformed path expression {text!r}")
    return quiver.path(*names)


def _lookup_vertex(token: str, quiver: Quiver):
    if token in quiver.vertex_index:
        return token
    try:
        v = int(token)
    except ValueError:
        raise PathSyntaxError(f"unknown vertex {token!r}") from None
    if v in quiver.vertex_index:
        return v
    raise PathSyntaxError(f"unknown vertex {token!r}")
