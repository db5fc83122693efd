"""Admissible ideals and bound path algebras."""

import pytest

from quivalg import algebra as alg
from quivalg import bound, corpus
from quivalg.errors import InadmissibleIdeal, ValidationError
from quivalg.linalg import canonicalize
from quivalg.quiver import path_algebra, validate_quiver


def two_loop_quiver():
    return validate_quiver(["1"], [("a", "1", "1"), ("b", "1", "1")])


def two_loop_relations(max_len=3):
    return bound.relation_set(
        two_loop_quiver(),
        [[(1, ("a", "a"))], [(1, ("b", "b"))], [(1, ("a", "b"))]],
        max_len=max_len,
    )


class TestTruncation:
    def test_two_loop_dim(self):
        t = bound.truncated_path_algebra(two_loop_quiver(), 2)
        assert t.dim == 7  # 1 + 2 + 4

    def test_acyclic_truncation_inactive(self):
        q = validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
        t = bound.truncated_path_algebra(q, 5)
        assert alg.same_table(t, path_algebra(q))

    def test_single_loop_truncation_is_poly(self):
        q = validate_quiver(["1"], [("a", "1", "1")])
        for m in (2, 3, 5):
            t = bound.truncated_path_algebra(q, m - 1)
            assert alg.same_table(t, alg.truncated_poly(m))


class TestIdealClosure:
    def test_empty_generators(self):
        t = bound.truncated_path_algebra(two_loop_quiver(), 2)
        assert bound.ideal_closure(t, []).dim == 0

    def test_arrow_ideal_of_one_arrow(self):
        kq = path_algebra(validate_quiver(["1", "2"], [("h", "1", "2")]))
        r = bound.arrow_ideal(kq)
        assert r == canonicalize([kq.basis_vec(kq.index_of("h"))], 3)

    def test_two_loop_closure_by_hand(self):
        # in the 7-dim truncation the closure of {a^2, b^2, ab} misses b*a
        t = bound.truncated_path_algebra(two_loop_quiver(), 2)
        gens = [
            bound.relation_vector(t, [(1, ("a", "a"))]),
            bound.relation_vector(t, [(1, ("b", "b"))]),
            bound.relation_vector(t, [(1, ("a", "b"))]),
        ]
        closure = bound.ideal_closure(t, gens)
        assert closure.dim == 3
        ba = t.basis_vec(t.index_of("b*a"))
        assert not closure.contains_vector(ba)


class TestAdmissibility:
    def test_acyclic_no_relations(self):
        q = validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
        r = bound.relation_set(q, [])
        report = bound.check_admissible(r)
        # longest path has length 2, so m = 3
        assert report.admissible and report.m == 3

    def test_two_loop_admissible_m3(self):
        report = bound.check_admissible(two_loop_relations())
        assert report.admissible and report.m == 3

    def test_loop_without_relations_undetermined(self):
        q = validate_quiver(["1"], [("a", "1", "1")])
        r = bound.relation_set(q, [], max_len=4)
        report = bound.check_admissible(r)
        assert not report.admissible and report.undetermined

    def test_relation_with_arrow_rejected(self):
        q = validate_quiver(["1", "2"], [("h", "1", "2")])
        with pytest.raises(ValidationError):
            bound.relation_set(q, [[(1, ("h",))]])

    def test_monotone_in_bound(self):
        # admissible at M stays admissible with the same m at larger M
        for m_len in (3, 4, 5):
            report = bound.check_admissible(two_loop_relations(max_len=m_len))
            assert report.admissible and report.m == 3

    def test_cyclic_needs_explicit_bound(self):
        with pytest.raises(ValidationError):
            bound.relation_set(two_loop_quiver(), [])


class TestBoundAlgebra:
    def test_one_arrow_no_relations(self):
        q = validate_quiver(["1", "2"], [("h", "1", "2")])
        b, proj = bound.bound_algebra(bound.relation_set(q, []))
        assert b.dim == 3
        assert proj.surjective

    def test_two_loop_bound_basis(self):
        b, _ = bound.bound_algebra(two_loop_relations())
        assert b.dim == 4
        assert b.basis_labels == ("p_1", "a", "b", "b*a")

    def test_two_loop_bound_iso_to_c_subalgebra(self):
        b, _ = bound.bound_algebra(two_loop_relations())
        c = corpus.c_subalgebra_u3()
        images = {"p_1": "u", "a": "E23", "b": "E12", "b*a": "E13"}
        f = alg.hom_from_images(
            b, c, [c.basis_vec(c.index_of(images[l])) for l in b.basis_labels]
        )
        assert alg.is_isomorphism(f)

    def test_single_loop_gives_truncated_poly(self):
        q = validate_quiver(["1"], [("a", "1", "1")])
        for m in (2, 3, 4):
            r = bound.relation_set(q, [[(1, ("a",) * m)]], max_len=m)
            b, _ = bound.bound_algebra(r)
            assert alg.same_table(b, alg.truncated_poly(m))

    def test_inadmissible_rejected(self):
        q = validate_quiver(["1"], [("a", "1", "1")])
        r = bound.relation_set(q, [], max_len=3)
        with pytest.raises(InadmissibleIdeal):
            bound.bound_algebra(r)

    def test_radical_is_arrow_image(self):
        # J(kQ/I) = image of the arrow ideal under the bound projection
        cases = [
            two_loop_relations(),
            corpus.a3_bound_algebra()[1],
            corpus.commutative_square_algebra()[1],
        ]
        for r in cases:
            b, proj = bound.bound_algebra(r)
            t = proj.source
            arrows = bound.arrow_ideal(t)
            image = canonicalize([proj.apply(v) for v in arrows.basis_rows()], b.dim)
            assert alg.radical(b).radical == image

    def test_dimension_bookkeeping_on_corpus(self):
        # construction re-checks dim = #short paths - overlap internally
        for _, q in corpus.corpus_quivers(seed=3, count=6):
            b, _ = bound.bound_algebra(bound.relation_set(q, []))
            assert b.dim == path_algebra(q).dim
