"""Reference algebras used by the demos and the test corpus."""

from __future__ import annotations

import random

from .algebra import BoundQuiverAlgebra, Relation, build_algebra
from .quiver import Path, Quiver, iter_paths_of_length


def two_loops_bridge() -> BoundQuiverAlgebra:
    """Two vertices, loops a and b joined by a bridge g, with relations
    a*a, b*b and the commutation a*g - g*b.  A 6-dimensional
    non-selfinjective algebra with Gorenstein parameter 1."""
    Q = Quiver([1, 2], [("a", 1, 1), ("g", 1, 2), ("b", 2, 2)])
    return build_algebra(Q, [
        Relation([(1, Q.path("a", "a"))]),
        Relation([(1, Q.path("b", "b"))]),
        Relation([(1, Q.path("a", "g")), (-1, Q.path("g", "b"))]),
    ])


def cycle_with_tail() -> BoundQuiverAlgebra:
    """Radical square zero on a 4-cycle 2->3->4->5->2 with a tail 1->2."""
    Q = Quiver([1, 2, 3, 4, 5],
               [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 4), ("a4", 4, 5),
                ("a5", 5, 2)])
    return radical_square_zero(Q)


def radical_square_zero(Q: Quiver) -> BoundQuiverAlgebra:
    return build_algebra(
        Q, [Relation([(1, p)]) for p in iter_paths_of_length(Q, 2)])


def truncated_polynomial(n: int) -> BoundQuiverAlgebra:
    """k[x]/(x^n) as a one-loop quiver algebra; selfinjective."""
    if n < 2:
        raise ValueError("n must be >= 2")
    Q = Quiver([1], [("x", 1, 1)])
    return build_algebra(Q, [Relation([(1, Q.path(*["x"] * n))])])


def nakayama_cycle(vertices: int, rad_length: int = 2) -> BoundQuiverAlgebra:
    """Cyclic quiver on the given number of vertices with J^rad_length = 0;
    selfinjective Nakayama."""
    names = [f"c{i}" for i in range(1, vertices + 1)]
    arrows = [(names[i], i + 1, (i + 1) % vertices + 1)
              for i in range(vertices)]
    Q = Quiver(list(range(1, vertices + 1)), arrows)
    rels = [Relation([(1, p)])
            for p in iter_paths_of_length(Q, rad_length)]
    return build_algebra(Q, rels)


def linear_quiver(vertices: int) -> BoundQuiverAlgebra:
    """Path algebra of 1 -> 2 -> ... -> n, no relations (hereditary)."""
    arrows = [(f"a{i}", i, i + 1) for i in range(1, vertices)]
    Q = Quiver(list(range(1, vertices + 1)), arrows)
    return build_algebra(Q, [])


def linear_a3_with_relation() -> BoundQuiverAlgebra:
    """1 -> 2 -> 3 with the composite killed; gldim 2."""
    Q = Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 3)])
    return build_algebra(Q, [Relation([(1, Q.path("a", "b"))])])


def local_two_loops() -> BoundQuiverAlgebra:
    """One vertex, two loops, rad^2 = 0; not selfinjective although the
    syzygy operator is injective on the path-ideal class universe."""
    Q = Quiver([1], [("x", 1, 1), ("y", 1, 1)])
    return radical_square_zero(Q)


def random_monomial_algebra(rng: random.Random, max_vertices: int = 5,
                            max_arrows: int = 10) -> BoundQuiverAlgebra:
    """A random admissible monomial algebra: a random quiver truncated at
    radical length 2 or 3, sometimes with extra shorter relations."""
    nv = rng.randint(1, max_vertices)
    na = rng.randint(1, max_arrows)
    vertices = list(range(1, nv + 1))
    arrows = [(f"a{i}", rng.choice(vertices), rng.choice(vertices))
              for i in range(1, na + 1)]
    Q = Quiver(vertices, arrows)
    trunc = rng.choice((2, 2, 3))
    if trunc == 3 and sum(1 for _ in iter_paths_of_length(Q, 3)) > 400:
        trunc = 2
    relation_paths = {p.arrows: p for p in iter_paths_of_length(Q, trunc)}
    if trunc == 3:
        length2 = list(iter_paths_of_length(Q, 2))
        rng.shuffle(length2)
        for p in length2[:rng.randint(0, max(1, len(length2) // 3))]:
            relation_paths[p.arrows] = p
    rels = [Relation([(1, p)]) for _, p in sorted(relation_paths.items())]
    return build_algebra(Q, rels)


def monomial_corpus(count: int = 24, seed: int = 20240) -> list:
    """Deterministic mixed corpus: named fixtures plus random monomial
    algebras, all admissible."""
    rng = random.Random(seed)
    corpus = [
        truncated_polynomial(2),
        truncated_polynomial(3),
        truncated_polynomial(4),
        nakayama_cycle(3, 2),
        nakayama_cycle(4, 3),
        cycle_with_tail(),
        local_two_loops(),
        linear_quiver(2),
        linear_a3_with_relation(),
    ]
    while len(corpus) < count:
        corpus.append(random_monomial_algebra(rng))
    return corpus


def selfinjective_corpus() -> list:
    return [truncated_polynomial(2), truncated_polynomial(3),
            truncated_polynomial(4), nakayama_cycle(3, 2),
            nakayama_cycle(4, 3), nakayama_cycle(2, 4)]
