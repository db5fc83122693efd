"""Text formats round-trip and the CLI behaves per its exit-code contract."""

import io
import pathlib
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from quivalg import algebra as alg
from quivalg import bound, corpus, formats
from quivalg.cli import main
from quivalg.errors import FormatError
from quivalg.quiver import validate_quiver
from quivalg.vquiver import validate_vquiver


class TestScalarsAndLincombs:
    def test_scalar_forms(self):
        assert formats.parse_scalar("3/2") == alg.frac("3/2")
        assert formats.parse_scalar("-7") == -7
        with pytest.raises(FormatError):
            formats.parse_scalar("x")
        with pytest.raises(FormatError):
            formats.parse_scalar("1/0")

    def test_lincomb_roundtrip(self):
        labels = ("a", "b", "c")
        vector = (alg.frac("1/2"), alg.frac(0), alg.frac(-3))
        text = formats.lincomb_to_text(vector, labels)
        parsed = formats.parse_lincomb(text)
        out = [alg.frac(0)] * 3
        for c, lab in parsed:
            out[labels.index(lab)] += c
        assert tuple(out) == vector

    def test_zero_lincomb(self):
        assert formats.lincomb_to_text((0, 0), ("a", "b")) == "0"
        assert formats.parse_lincomb("0") == []

    def test_starred_labels_survive(self):
        parsed = formats.parse_lincomb("1*a*b - 2*c")
        assert parsed == [(1, "a*b"), (-2, "c")]


class TestRoundTrips:
    def test_quiver(self):
        q = validate_quiver(["1", "2"], [("h", "1", "2")])
        again = formats.parse_quiver(formats.quiver_to_text(q))
        assert again == q

    def test_algebra(self):
        for a in (alg.upper_triangular(2), alg.truncated_poly(3), corpus.mixed_algebra()):
            again = formats.parse_algebra(formats.algebra_to_text(a))
            assert alg.same_table(again, a)
            assert again.basis_labels == a.basis_labels

    def test_bound_algebra_with_path_labels(self):
        b, _ = bound.bound_algebra(corpus.a3_bound_algebra()[1])
        again = formats.parse_algebra(formats.algebra_to_text(b))
        assert alg.same_table(again, b)

    def test_vquiver(self):
        v = validate_vquiver(["e", "f"], {("e", "f"): ["x", "y"]})
        again = formats.parse_vquiver(formats.vquiver_to_text(v))
        assert again.vertices == v.vertices and again.edge_labels == v.edge_labels

    def test_relations(self):
        q = validate_quiver(["1"], [("a", "1", "1"), ("b", "1", "1")])
        r = bound.relation_set(
            q, [[(1, ("a", "a")), (-1, ("b", "b"))]], max_len=3
        )
        again = formats.parse_relations(formats.relations_to_text(r), q)
        assert again.relations == r.relations and again.max_len == 3

    def test_rep(self):
        from quivalg import repcat
        from quivalg.linalg import Matrix

        q = validate_quiver(["1", "2"], [("h", "1", "2")])
        rep = repcat.validate_rep(q, {"1": 2, "2": 1}, {"h": Matrix(1, 2, [[1, -2]])})
        again = formats.parse_rep(formats.rep_to_text(rep), q)
        assert again.spaces == rep.spaces and again.maps["h"] == rep.maps["h"]

    def test_malformed_inputs(self):
        with pytest.raises(FormatError):
            formats.parse_quiver("not a quiver\n")
        with pytest.raises(FormatError):
            formats.parse_algebra("algebra dim x\n")
        with pytest.raises(FormatError):
            formats.parse_vquiver("vquiver\nedges a b: dim\n")

    def test_shipped_samples_parse(self):
        root = pathlib.Path(__file__).resolve().parent.parent / "samples"
        quiver = formats.parse_quiver((root / "one_arrow.quiver").read_text())
        formats.parse_rep((root / "one_arrow.rep").read_text(), quiver)
        loops = formats.parse_quiver((root / "two_loops.quiver").read_text())
        rel = formats.parse_relations((root / "two_loops.rel").read_text(), loops)
        assert bound.check_admissible(rel).admissible
        formats.parse_vquiver((root / "chain.vq").read_text())
        formats.parse_category((root / "arrow_category.cat").read_text())
        formats.parse_galois((root / "closure.galois").read_text())

    @given(st.lists(st.fractions(max_denominator=40), min_size=1, max_size=5))
    def test_lincomb_roundtrip_property(self, coeffs):
        labels = tuple(f"b{i}" for i in range(len(coeffs)))
        text = formats.lincomb_to_text(coeffs, labels)
        out = [alg.frac(0)] * len(coeffs)
        for c, lab in formats.parse_lincomb(text):
            out[labels.index(lab)] += c
        assert out == [alg.frac(c) for c in coeffs]


def run_cli(args, stdin_text=""):
    """Invoke main() in-process, capturing stdout."""
    old_stdin, old_stdout = sys.stdin, sys.stdout
    sys.stdin = io.StringIO(stdin_text)
    sys.stdout = io.StringIO()
    try:
        code = main(args)
        out = sys.stdout.getvalue()
    finally:
        sys.stdin, sys.stdout = old_stdin, old_stdout
    return code, out


QUIVER_TEXT = "quiver\nvertex 1\nvertex 2\narrow h: 1 -> 2\n"


class TestCLI:
    def test_quiver_info(self):
        code, out = run_cli(["quiver", "info"], QUIVER_TEXT)
        assert code == 0 and "acyclic: True" in out

    def test_quiver_paths(self):
        code, out = run_cli(["quiver", "paths"], QUIVER_TEXT)
        assert code == 0
        assert [l.split()[0] for l in out.splitlines()] == ["p_1", "p_2", "h"]

    def test_build_pipe_radical(self):
        code, built = run_cli(["algebra", "build", "upper-triangular", "2"])
        assert code == 0
        code, out = run_cli(["algebra", "radical"], built)
        assert code == 0 and "dim J = 1" in out

    def test_gallery_deterministic_and_green(self):
        code1, out1 = run_cli(["paper-gallery"])
        code2, out2 = run_cli(["paper-gallery"])
        assert code1 == code2 == 0
        assert out1 == out2
        assert all(line.startswith("PASS") for line in out1.splitlines())

    def test_malformed_input_exits_2(self):
        code, _ = run_cli(["quiver", "info"], "bogus\n")
        assert code == 2

    def test_validation_failure_exits_1(self):
        # cyclic quiver cannot have a finite path algebra
        cyclic = "quiver\nvertex 1\narrow a: 1 -> 1\n"
        code, _ = run_cli(["quiver", "path-algebra"], cyclic)
        assert code == 1

    def test_bound_check_and_construct(self, tmp_path):
        qf = tmp_path / "q.quiver"
        rf = tmp_path / "r.rel"
        qf.write_text("quiver\nvertex 1\narrow a: 1 -> 1\narrow b: 1 -> 1\n")
        rf.write_text(
            "relations\nmaxlen: 3\nrelation: 1*a*a\nrelation: 1*b*b\nrelation: 1*a*b\n"
        )
        code, out = run_cli(["bound", "check", str(qf), str(rf)])
        assert code == 0 and "PASS admissible m = 3" in out
        code, out = run_cli(["bound", "construct", str(qf), str(rf)])
        assert code == 0 and "algebra dim 4" in out

    def test_inadmissible_exits_1(self, tmp_path):
        qf = tmp_path / "q.quiver"
        rf = tmp_path / "r.rel"
        qf.write_text("quiver\nvertex 1\narrow a: 1 -> 1\n")
        rf.write_text("relations\nmaxlen: 3\n")
        code, out = run_cli(["bound", "check", str(qf), str(rf)])
        assert code == 1 and "FAIL" in out

    def test_adjunction_unit_counit(self, tmp_path):
        vf = tmp_path / "v.vq"
        vf.write_text("vquiver\nvertex e\nvertex f\nedges e f: dim 1 x\n")
        code, out = run_cli(["adjunction", "unit", str(vf)])
        assert code == 0 and "PASS unit-iso" in out
        code, built = run_cli(["algebra", "build", "upper-triangular", "3"])
        code, out = run_cli(["adjunction", "counit"], built)
        assert code == 0 and "PASS counit-surjective" in out

    def test_adjunction_triangles_on_files(self, tmp_path):
        vf = tmp_path / "v.vq"
        vf.write_text("vquiver\nvertex e\nvertex f\nedges e f: dim 1 x\n")
        af = tmp_path / "a.alg"
        _, built = run_cli(["algebra", "build", "upper-triangular", "2"])
        af.write_text(built)
        code, out = run_cli(
            ["adjunction", "triangles", "--vquiver", str(vf), "--algebra", str(af)]
        )
        assert code == 0
        assert "F-triangle" in out and "G-triangle" in out

    def test_algebra_gabriel_and_present(self):
        _, built = run_cli(["algebra", "build", "upper-triangular", "3"])
        code, out = run_cli(["algebra", "gabriel"], built)
        assert code == 0 and "vquiver" in out
        code, out = run_cli(["algebra", "present"], built)
        assert code == 0 and "PASS presentation" in out

    def test_algebra_idempotents(self):
        _, built = run_cli(["algebra", "build", "upper-triangular", "2"])
        code, out = run_cli(["algebra", "idempotents"], built)
        assert code == 0 and "e0 = 1*E11" in out

    def test_cat_validate_galois_adjunction(self, tmp_path):
        cat_text = (
            "objects: X Y\n"
            "mor idX: X -> X\nmor idY: Y -> Y\nmor f: X -> Y\n"
            "id X = idX\nid Y = idY\n"
        )
        cf_file = tmp_path / "c.cat"
        cf_file.write_text(cat_text)
        code, out = run_cli(["cat", "validate", str(cf_file)])
        assert code == 0 and "PASS category-valid" in out
        galois = tmp_path / "g.galois"
        galois.write_text(
            "galois\n"
            "poset J: e s1 s2 X\nle J: e s1\nle J: e s2\nle J: s1 X\nle J: s2 X\n"
            "poset I: e s2 X\nle I: e s2\nle I: s2 X\n"
            "F: e -> e\nF: s1 -> X\nF: s2 -> s2\nF: X -> X\n"
            "G: e -> e\nG: s2 -> s2\nG: X -> X\n"
        )
        code, out = run_cli(["cat", "adjunction", str(galois)])
        assert code == 0 and "PASS hom-bijection-adjunction" in out
        # corrupt one table entry: caught with nonzero exit
        bad = galois.read_text().replace("F: s1 -> X", "F: s1 -> s2")
        badf = tmp_path / "bad.galois"
        badf.write_text(bad)
        code, out = run_cli(["cat", "adjunction", str(badf)])
        assert code == 1 and "FAIL galois" in out

    def test_cat_equivalence_and_quotient(self, tmp_path):
        cat_text = (
            "objects: X Y\n"
            "mor idX: X -> X\nmor idY: Y -> Y\nmor f: X -> Y\nmor g: X -> Y\n"
            "id X = idX\nid Y = idY\n"
        )
        cfile = tmp_path / "c.cat"
        cfile.write_text(cat_text)
        fun = tmp_path / "f.fun"
        fun.write_text(
            "functor covariant\nob X -> X\nob Y -> Y\n"
            "mor idX -> idX\nmor idY -> idY\nmor f -> f\nmor g -> f\n"
        )
        code, out = run_cli(
            ["cat", "equivalence", "--source", str(cfile), "--target", str(cfile), str(fun)]
        )
        assert code == 1  # not faithful: f and g collapse
        assert "FAIL faithful" in out
        cong = tmp_path / "c.cong"
        cong.write_text("congruence\nglue f g\n")
        code, out = run_cli(["cat", "quotient", str(cfile), "--congruence", str(cong)])
        assert code == 0 and "PASS quotient-valid" in out

    def test_rep_validate_and_convert(self, tmp_path):
        qf = tmp_path / "q.quiver"
        qf.write_text(QUIVER_TEXT)
        rf = tmp_path / "r.rep"
        rf.write_text("rep\nspace 1: 1\nspace 2: 1\nmap h: 1\n")
        code, out = run_cli(["rep", "validate", str(rf), "--quiver", str(qf)])
        assert code == 0 and "PASS rep-valid" in out
        code, out = run_cli(
            ["rep", "convert", str(rf), "--quiver", str(qf), "--roundtrip"]
        )
        assert code == 0 and "PASS roundtrip" in out

    def test_vquiver_info_and_path_algebra(self, tmp_path):
        vf = tmp_path / "v.vq"
        vf.write_text("vquiver\nvertex e\nvertex f\nedges e f: dim 2 x y\n")
        code, out = run_cli(["vquiver", "info", str(vf)])
        assert code == 0 and "path algebra dimension: 4" in out
        code, out = run_cli(["vquiver", "path-algebra", str(vf)])
        assert code == 0 and "algebra dim 4" in out


class TestConsoleScript:
    def test_installed_entry_point(self):
        result = subprocess.run(
            ["quivalg", "paper-gallery"], capture_output=True, text=True
        )
        assert result.returncode == 0
        assert "PASS" in result.stdout
