"""Representations of quivers and algebras, and the conversion dictionary."""

import pytest

from quivalg import algebra as alg
from quivalg import bound, corpus, repcat
from quivalg.errors import DimensionMismatch, ValidationError
from quivalg.linalg import Matrix
from quivalg.quiver import path_algebra, validate_quiver


def one_arrow_setup():
    q = validate_quiver(["1", "2"], [("h", "1", "2")])
    return q, path_algebra(q)


class TestValidateModule:
    def test_zero_module(self):
        q, kq = one_arrow_setup()
        rep = repcat.validate_rep(q, {"1": 0, "2": 0}, {})
        assert repcat.rep_to_module(rep, algebra=kq).dim == 0

    def test_regular_module_every_builder(self):
        for a in (alg.upper_triangular(2), alg.truncated_poly(3),
                  alg.matrix_algebra(2), corpus.mixed_algebra()):
            repcat.regular_module(a)

    def test_relation_violation_detected(self):
        # rho(x)^2 != 0 cannot define a module over the dual numbers
        a = alg.truncated_poly(2)
        action = (Matrix.identity(1), Matrix.identity(1))
        with pytest.raises(ValidationError):
            repcat.validate_module(repcat.AlgebraModule(a, 1, action))

    def test_unit_must_act_as_identity(self):
        a = alg.truncated_poly(2)
        action = (Matrix.zero(1, 1), Matrix.zero(1, 1))
        with pytest.raises(ValidationError):
            repcat.validate_module(repcat.AlgebraModule(a, 1, action))


class TestMorphisms:
    def test_identity_and_zero(self):
        _, kq = one_arrow_setup()
        m = repcat.regular_module(kq)
        assert repcat.check_rep_morphism(m, m, Matrix.identity(3))
        assert repcat.check_rep_morphism(m, m, Matrix.zero(3, 3))

    def test_right_multiplication_commutes(self):
        u2 = alg.upper_triangular(2)
        m = repcat.regular_module(u2)
        phi = u2.right_mult_matrix(u2.basis_vec(u2.index_of("E12")))
        assert repcat.check_rep_morphism(m, m, phi)

    def test_morphisms_compose(self):
        u2 = alg.upper_triangular(2)
        m = repcat.regular_module(u2)
        phi = u2.right_mult_matrix(u2.basis_vec(u2.index_of("E12")))
        assert repcat.check_rep_morphism(m, m, phi * phi)

    def test_algebra_mismatch(self):
        m1 = repcat.regular_module(alg.truncated_poly(2))
        m2 = repcat.regular_module(alg.upper_triangular(2))
        with pytest.raises(ValidationError):
            repcat.check_rep_morphism(m1, m2, Matrix.zero(3, 2))

    def test_shape_mismatch(self):
        m = repcat.regular_module(alg.truncated_poly(2))
        with pytest.raises(DimensionMismatch):
            repcat.check_rep_morphism(m, m, Matrix.zero(3, 3))


class TestConversion:
    def test_one_arrow_rep(self):
        q, kq = one_arrow_setup()
        rep = repcat.validate_rep(q, {"1": 1, "2": 1}, {"h": Matrix(1, 1, [[1]])})
        mod = repcat.rep_to_module(rep, algebra=kq)
        assert mod.dim == 2
        assert mod.action[kq.index_of("h")].rank() == 1

    def test_roundtrip_returns_original_matrices(self):
        q, kq = one_arrow_setup()
        rep = repcat.validate_rep(q, {"1": 2, "2": 1}, {"h": Matrix(1, 2, [[3, 5]])})
        mod = repcat.rep_to_module(rep, algebra=kq)
        back, change = repcat.module_to_rep(mod)
        assert back.maps["h"] == rep.maps["h"]
        assert back.spaces == rep.spaces
        assert change == Matrix.identity(3)

    def test_regular_module_vertex_dimensions(self):
        # computed as rank of the trivial-path action in the regular module
        _, kq = one_arrow_setup()
        mod = repcat.regular_module(kq)
        rep, _ = repcat.module_to_rep(mod)
        p1 = mod.action[kq.index_of("p_1")]
        p2 = mod.action[kq.index_of("p_2")]
        assert rep.spaces == {"1": p1.rank(), "2": p2.rank()}
        assert sorted(rep.spaces.values()) == [1, 2]

    def test_projections_sum_to_identity(self):
        for name, a in corpus.corpus_sbalg_ac():
            if a.paths is None:
                continue
            mod = repcat.regular_module(a)
            total = Matrix.zero(mod.dim, mod.dim)
            for i, p in enumerate(a.paths):
                if p.length == 0:
                    total = total + mod.action[i]
            assert total == Matrix.identity(mod.dim)

    def test_roundtrip_on_corpus_modules(self):
        for name, a in corpus.corpus_sbalg_ac():
            if a.paths is None:
                continue
            assert repcat.roundtrip_is_identity(repcat.regular_module(a)), name

    def test_bound_rep_with_nilpotent_loop(self):
        q = validate_quiver(["1"], [("a", "1", "1")])
        r = bound.relation_set(q, [[(1, ("a", "a", "a"))]], max_len=3)
        balg, _ = bound.bound_algebra(r)
        nilp = Matrix(3, 3, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        rep = repcat.validate_rep(q, {"1": 3}, {"a": nilp})
        mod = repcat.rep_to_module(rep, bound=r, algebra=balg)
        assert repcat.roundtrip_is_identity(mod)

    def test_bound_violation_distinct_error(self):
        q = validate_quiver(["1"], [("a", "1", "1")])
        r = bound.relation_set(q, [[(1, ("a", "a", "a"))]], max_len=3)
        balg, _ = bound.bound_algebra(r)
        rep = repcat.validate_rep(q, {"1": 1}, {"a": Matrix(1, 1, [[1]])})
        with pytest.raises(ValidationError) as err:
            repcat.rep_to_module(rep, bound=r, algebra=balg)
        assert "relation acts nonzero" in str(err.value)

    def test_module_without_bookkeeping_rejected(self):
        a = corpus.mixed_algebra()
        mod = repcat.regular_module(a)
        with pytest.raises(Exception) as err:
            repcat.module_to_rep(mod)
        assert "bookkeeping" in str(err.value)
