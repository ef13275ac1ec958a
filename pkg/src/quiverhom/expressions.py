"""Formal module expressions: sums of S(v), P(v), I(v) and ideal(path).

Grammar: atoms combined with ``+``, each optionally prefixed by a positive
integer multiplicity as in ``3*S(1) + ideal(a*g) + P(2)``.
"""

from __future__ import annotations

from collections import Counter

from .algebra import BoundQuiverAlgebra
from .quiver import parse_path, PathSyntaxError


class ModuleExprError(ValueError):
    """Malformed module expression or invalid atom."""


class ModuleExpr:
    """Multiset of module atoms with positive integer multiplicities.

    Atoms are tuples ``("S", v)``, ``("P", v)``, ``("I", v)`` or
    ``("ideal", path)``.
    """

    def __init__(self, atoms: Counter):
        self.atoms = Counter()
        for atom, mult in atoms.items():
            if mult < 1:
                raise ModuleExprError(f"multiplicity {mult} for {atom}")
            self.atoms[atom] += mult

    def sorted_atoms(self):
        return sorted(self.atoms.items(), key=lambda kv: _atom_key(kv[0]))

    def has_injective_atoms(self) -> bool:
        return any(a[0] == "I" for a in self.atoms)

    def scale(self, k: int) -> "ModuleExpr":
        return ModuleExpr(Counter({a: m * k for a, m in self.atoms.items()}))

    def __add__(self, other: "ModuleExpr") -> "ModuleExpr":
        return ModuleExpr(self.atoms + other.atoms)

    def __eq__(self, other):
        return isinstance(other, ModuleExpr) and self.atoms == other.atoms

    def __repr__(self):
        parts = []
        for atom, mult in self.sorted_atoms():
            text = atom_text(atom)
            parts.append(text if mult == 1 else f"{mult}*{text}")
        return " + ".join(parts) if parts else "0"


def atom_text(atom) -> str:
    kind = atom[0]
    if kind == "ideal":
        return f"ideal({atom[1]!r})"
    return f"{kind}({atom[1]})"


def _atom_key(atom):
    order = {"S": 0, "P": 1, "I": 2, "ideal": 3}
    kind = atom[0]
    if kind == "ideal":
        return (order[kind], atom[1]._key())
    return (order[kind], str(atom[1]))


def expr_atoms(*atoms) -> ModuleExpr:
    return ModuleExpr(Counter(atoms))


def parse_module_expr(text: str, A: BoundQuiverAlgebra) -> ModuleExpr:
    """Parse the S/P/I/ideal grammar against a concrete algebra."""
    atoms = Counter()
    chunks = [c.strip() for c in text.split("+")]
    if not any(chunks):
        raise ModuleExprError("empty module expression")
    for chunk in chunks:
        if not chunk:
            raise ModuleExprError(f"empty term in {text!r}")
        mult = 1
        body = chunk
        # an integer prefix before '*' is a multiplicity, not a path letter
        if "*" in chunk:
            head, rest = chunk.split("*", 1)
            if head.strip().isdigit():
                mult = int(head)
                body = rest.strip()
                if mult < 1:
                    raise ModuleExprError(f"multiplicity must be >= 1: "
                                          f"{chunk!r}")
        atoms[_parse_atom(body, A)] += mult
    return ModuleExpr(atoms)


def _parse_atom(body: str, A: BoundQuiverAlgebra):
    if not body.endswith(")"):
        raise ModuleExprError(f"malformed atom {body!r}")
    for kind in ("ideal", "S", "P", "I"):
        if body.startswith(kind + "("):
            inner = body[len(kind) + 1:-1].strip()
            if kind == "ideal":
                try:
                    path = parse_path(inner, A.quiver)
                except PathSyntaxError as exc:
                    raise ModuleExprError(str(exc)) from None
                if A.normal_form_path(path).is_zero:
                    raise ModuleExprError(
                        f"ideal({inner}): path is zero in the algebra")
                return ("ideal", path)
            vertex = _vertex_token(inner, A)
            return (kind, vertex)
    raise ModuleExprError(f"unknown atom {body!r}")


def _vertex_token(token: str, A: BoundQuiverAlgebra):
    q = A.quiver
    if token in q.vertex_index:
        return token
    try:
        v = int(token)
    except ValueError:
        raise ModuleExprError(f"unknown vertex {token!r}") from None
    if v in q.vertex_index:
        return v
    raise ModuleExprError(f"unknown vertex {token!r}")
