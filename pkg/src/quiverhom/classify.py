"""Recognizers for the algebra families with known dimension behaviour:
monomial, radical square zero, right serial, special biserial, gentle."""

from __future__ import annotations

from dataclasses import dataclass

from . import representations as reps
from .algebra import BoundQuiverAlgebra
from .quiver import Path, iter_paths_of_length


@dataclass(frozen=True)
class ClassFlags:
    monomial: bool
    radical_square_zero: bool
    right_serial: bool
    special_biserial: bool
    gentle: bool

    def __post_init__(self):
        if self.gentle:
            assert self.special_biserial and self.monomial
        if self.radical_square_zero:
            assert self.monomial


def _arrow_path(A, arrow) -> Path:
    return Path(A.quiver, arrow.source, (arrow.index,))


def _surviving_continuations(A, b):
    return [a for a in A.quiver.arrows_from[b.target]
            if not A.concat_nf(_arrow_path(A, b), _arrow_path(A, a)).is_zero]


def _surviving_predecessors(A, b):
    return [a for a in A.quiver.arrows_to[b.source]
            if not A.concat_nf(_arrow_path(A, a), _arrow_path(A, b)).is_zero]


def is_right_serial(A: BoundQuiverAlgebra) -> bool:
    """Every indecomposable projective has a uniserial radical filtration."""
    for v in A.quiver.vertices:
        layer = reps.projective(A, v)
        while layer.total_dim > 0:
            tops = reps.top_multiplicities(layer)
            if sum(tops.values()) > 1:
                return False
            layer = reps.radical_submodule(layer)
    return True


def is_special_biserial(A: BoundQuiverAlgebra) -> bool:
    q = A.quiver
    for v in q.vertices:
        if len(q.arrows_from[v]) > 2 or len(q.arrows_to[v]) > 2:
            return False
    for b in q.arrows:
        if len(_surviving_continuations(A, b)) > 1:
            return False
        if len(_surviving_predecessors(A, b)) > 1:
            return False
    return True


def is_gentle(A: BoundQuiverAlgebra) -> bool:
    if not is_special_biserial(A):
        return False
    # the ideal must be generated by length-2 paths: the reduced rewriting
    # system then consists exactly of those paths with zero tails
    for lead, tail in A.rules.items():
        if lead.length != 2 or not tail.is_zero:
            return False
    q = A.quiver
    for b in q.arrows:
        killed_continuations = [
            a for a in q.arrows_from[b.target]
            if A.concat_nf(_arrow_path(A, b), _arrow_path(A, a)).is_zero]
        if len(killed_continuations) > 1:
            return False
        killed_predecessors = [
            a for a in q.arrows_to[b.source]
            if A.concat_nf(_arrow_path(A, a), _arrow_path(A, b)).is_zero]
        if len(killed_predecessors) > 1:
            return False
    return True


def classify(A: BoundQuiverAlgebra) -> ClassFlags:
    """Evaluate every family membership test on a built algebra."""
    rad_sq_zero = all(A.normal_form_path(p).is_zero
                      for p in iter_paths_of_length(A.quiver, 2))
    return ClassFlags(
        monomial=A.monomial_flag,
        radical_square_zero=rad_sq_zero,
        right_serial=is_right_serial(A),
        special_biserial=is_special_biserial(A),
        gentle=is_gentle(A),
    )
