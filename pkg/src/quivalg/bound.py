"""Relations on path algebras and bound path algebras kQ/I.

Cyclic quivers are handled through a user-supplied truncation bound M: all
computations happen inside the finite quotient by paths of length > M, and
admissibility is proved or refuted only within that bound.  For acyclic
quivers the default bound (longest path + 1) makes the truncation inactive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import SCAlgebra, AlgebraHom, algebra_from_paths, quotient_algebra
from .errors import InadmissibleIdeal, QuivalgError, ValidationError
from .linalg import (
    Subspace,
    Vec,
    bilinear_image,
    canonicalize,
    frac,
    subspace_contains,
    subspace_sum,
    vec_add,
    vec_scale,
    zero_vec,
)
from .quiver import Quiver, enumerate_paths, is_acyclic, longest_path_length, path_from_arrows

RelationTerm = tuple[Fraction, tuple[str, ...]]  # coefficient, arrow labels


@dataclass(eq=False)
class RelationSet:
    """Formal Q-combinations of paths of length >= 2, plus a truncation bound."""

    quiver: Quiver
    relations: tuple[tuple[RelationTerm, ...], ...]
    max_len: int

    def __post_init__(self):
        if self.max_len < 1:
            raise ValidationError("truncation bound must be at least 1")
        for rel in self.relations:
            for coeff, labels in rel:
                path = path_from_arrows(self.quiver, labels)
                if path.length < 2:
                    raise ValidationError(
                        "relations must be combinations of paths of length >= 2",
                        witness=labels,
                    )


def relation_set(
    quiver: Quiver,
    relations: Sequence[Sequence[tuple, ]],
    max_len: int | None = None,
) -> RelationSet:
    """Normalize raw (coeff, labels) terms; default bound covers acyclic quivers."""
    if max_len is None:
        if not is_acyclic(quiver):
            raise ValidationError("cyclic quivers need an explicit truncation bound")
        # admissibility needs m >= 2, so never default below 2
        max_len = max(2, longest_path_length(quiver) + 1)
    rels = tuple(
        tuple((frac(c), tuple(labels)) for c, labels in rel) for rel in relations
    )
    return RelationSet(quiver, rels, max_len)


def truncated_path_algebra(q: Quiver, max_len: int) -> SCAlgebra:
    """kQ modulo all paths of length > max_len; finite even for cyclic Q."""
    if max_len < 1:
        raise ValidationError("truncation bound must be at least 1")
    paths = enumerate_paths(q, max_len)
    return algebra_from_paths(q, paths, max_len=max_len)


def relation_vector(t: SCAlgebra, rel: Sequence[RelationTerm]) -> Vec:
    """The element of the truncated algebra named by one relation line."""
    out = zero_vec(t.dim)
    index = {(p.start, p.arrows): i for i, p in enumerate(t.paths)}
    for coeff, labels in rel:
        path = path_from_arrows(t.quiver, labels)
        key = (path.start, path.arrows)
        if key not in index:
            raise ValidationError(
                f"relation path {'*'.join(labels)} exceeds the truncation bound",
                witness=labels,
            )
        out = vec_add(out, vec_scale(frac(coeff), t.basis_vec(index[key])))
    return out


def ideal_closure(t: SCAlgebra, generators: Sequence[Vec]) -> Subspace:
    """Smallest subspace containing the generators and absorbing products.

    Iterates two-sided products with the full algebra until the dimension
    stabilizes.
    """
    span = canonicalize(list(generators), t.dim)
    full = t.full_space()
    while True:
        grown = subspace_sum(
            span,
            subspace_sum(
                bilinear_image(t.mul_vec, full, span),
                bilinear_image(t.mul_vec, span, full),
            ),
        )
        if grown.dim == span.dim:
            return span
        span = grown


def arrow_ideal(t: SCAlgebra) -> Subspace:
    """The ideal R_Q generated by the arrows: all paths of length >= 1."""
    arrows = [
        t.basis_vec(i) for i, p in enumerate(t.paths) if p.length == 1
    ]
    return ideal_closure(t, arrows)


def path_length_span(t: SCAlgebra, min_len: int) -> Subspace:
    return canonicalize(
        [t.basis_vec(i) for i, p in enumerate(t.paths) if p.length >= min_len], t.dim
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    m: int | None
    inside_square: bool
    undetermined: bool  # held only within the bound; raise M to decide

    def __bool__(self):
        return self.admissible


def check_admissible(r: RelationSet) -> AdmissibilityReport:
    """Decide R_Q^m <= I <= R_Q^2 inside the truncation at max_len.

    The least m <= max_len with R_Q^m contained in the closure is returned;
    if the containment only holds vacuously at max_len + 1 the answer is
    "undetermined, raise M".
    """
    t = truncated_path_algebra(r.quiver, r.max_len)
    ideal = ideal_closure(t, [relation_vector(t, rel) for rel in r.relations])
    r_square = path_length_span(t, 2)
    inside = subspace_contains(r_square, ideal)
    m = None
    for candidate in range(2, r.max_len + 2):
        if subspace_contains(ideal, path_length_span(t, candidate)):
            m = candidate
            break
    admissible = inside and m is not None and m <= r.max_len
    undetermined = inside and not admissible
    return AdmissibilityReport(admissible, m, inside, undetermined)


def bound_algebra(r: RelationSet) -> tuple[SCAlgebra, AlgebraHom]:
    """The bound path algebra kQ/I and the projection from the truncation.

    Requires admissibility; since R_Q^m <= I the truncation is inactive and
    the quotient is canonically kQ/I.  The quotient basis keeps its path
    bookkeeping, so representation conversion works on bound algebras.
    """
    report = check_admissible(r)
    if not report.admissible:
        detail = "undetermined within the bound, raise M" if report.undetermined else (
            "ideal is not inside the arrow-ideal square" if not report.inside_square
            else "no power of the arrow ideal falls inside"
        )
        raise InadmissibleIdeal(f"relation set is not admissible: {detail}")
    t = truncated_path_algebra(r.quiver, r.max_len)
    ideal = ideal_closure(t, [relation_vector(t, rel) for rel in r.relations])
    quotient, proj = quotient_algebra(t, ideal)
    if quotient.paths is None:
        raise QuivalgError("bound algebra lost its path bookkeeping")
    expected = _dimension_bookkeeping(t, ideal, report.m)
    if quotient.dim != expected:
        raise QuivalgError(
            f"bound algebra dimension {quotient.dim} disagrees with bookkeeping {expected}"
        )
    return quotient, proj


def _dimension_bookkeeping(t: SCAlgebra, ideal: Subspace, m: int) -> int:
    """dim kQ/I = #paths shorter than m minus dim(I within their span)."""
    from .linalg import subspace_intersect

    short = canonicalize(
        [t.basis_vec(i) for i, p in enumerate(t.paths) if p.length < m], t.dim
    )
    overlap = subspace_intersect(ideal, short)
    return short.dim - overlap.dim
