"""Seeded test corpora: quivers, Vquivers and algebras used across the suite.

Everything here is deterministic given the seed, so reports built from these
corpora are byte-identical run to run.
"""

from __future__ import annotations

import random

from . import algebra as alg
from . import bound
from .quiver import Quiver, validate_quiver
from .vquiver import Vquiver, validate_vquiver, vquiver_of_quiver


def random_acyclic_quiver(rng: random.Random, n_vertices: int, n_arrows: int) -> Quiver:
    """Arrows only go forward along a fixed vertex order, so no cycles."""
    vertices = [f"v{i}" for i in range(1, n_vertices + 1)]
    arrows = []
    for k in range(n_arrows):
        i = rng.randrange(0, n_vertices - 1)
        j = rng.randrange(i + 1, n_vertices)
        arrows.append((f"a{k}", vertices[i], vertices[j]))
    return validate_quiver(vertices, arrows)


def corpus_quivers(seed: int = 2024, count: int = 20) -> list[tuple[str, Quiver]]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, 5)
        m = rng.randint(1, min(6, 2 * n))
        out.append((f"rand-quiver-{k}", random_acyclic_quiver(rng, n, m)))
    return out


def corpus_vquivers(seed: int = 2024, count: int = 12) -> list[tuple[str, Vquiver]]:
    """Acyclic Vquivers: hand-picked shapes plus seeded arrow-count Vquivers."""
    out = [
        ("vq-single", validate_vquiver(["e"], {})),
        ("vq-1to2", validate_vquiver(["e", "f"], {("e", "f"): ["x"]})),
        ("vq-kronecker", validate_vquiver(["e", "f"], {("e", "f"): ["x", "y"]})),
        (
            "vq-chain3",
            validate_vquiver(
                ["e", "f", "g"], {("e", "f"): ["x"], ("f", "g"): ["y"]}
            ),
        ),
        (
            "vq-square",
            validate_vquiver(
                ["p", "q", "r", "s"],
                {("p", "q"): ["a"], ("p", "r"): ["b"], ("q", "s"): ["c"], ("r", "s"): ["d"]},
            ),
        ),
    ]
    rng = random.Random(seed)
    k = 0
    while len(out) < count:
        q = random_acyclic_quiver(rng, rng.randint(2, 4), rng.randint(1, 5))
        out.append((f"vq-rand-{k}", vquiver_of_quiver(q)))
        k += 1
    return out


def mixed_algebra() -> alg.SCAlgebra:
    """The 5-dimensional triangular algebra with entries (Q, Q[x]/x^2; 0, Q[x]/x^2).

    Basis: u (top-left unit), m0, m1 (top-right 1 and x), d0, d1
    (bottom-right 1 and x).  Its Gabriel Vquiver has an arrow (u -> d0)
    and a loop at d0.
    """
    idx = {"u": 0, "m0": 1, "m1": 2, "d0": 3, "d1": 4}
    table: dict[tuple[int, int], dict[int, int]] = {}

    def put(x, y, z):
        table[(idx[x], idx[y])] = {idx[z]: 1}

    put("u", "u", "u")
    put("u", "m0", "m0")
    put("u", "m1", "m1")
    put("m0", "d0", "m0")
    put("m0", "d1", "m1")
    put("m1", "d0", "m1")
    put("d0", "d0", "d0")
    put("d0", "d1", "d1")
    put("d1", "d0", "d1")
    return alg.make_algebra(["u", "m0", "m1", "d0", "d1"], table, [1, 0, 0, 1, 0])


def c_subalgebra_u3() -> alg.SCAlgebra:
    """The subalgebra of U_3 with equal diagonal entries: span{1, E12, E23, E13}."""
    idx = {"u": 0, "E12": 1, "E23": 2, "E13": 3}
    table: dict[tuple[int, int], dict[int, int]] = {}
    for x in idx:
        table[(idx["u"], idx[x])] = {idx[x]: 1}
        table[(idx[x], idx["u"])] = {idx[x]: 1}
    table[(idx["E12"], idx["E23"])] = {idx["E13"]: 1}
    return alg.make_algebra(["u", "E12", "E23", "E13"], table, [1, 0, 0, 0])


def rational_n(n: int) -> alg.SCAlgebra:
    """Q^n as the path algebra of n isolated vertices."""
    from .quiver import path_algebra

    q = validate_quiver([str(i) for i in range(1, n + 1)], [])
    return path_algebra(q)


def commutative_square_algebra() -> tuple[alg.SCAlgebra, bound.RelationSet]:
    """kQ of the commutative square bound by a*b = c*d (dimension 9)."""
    q = validate_quiver(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
    )
    r = bound.relation_set(q, [[(1, ("a", "b")), (-1, ("c", "d"))]])
    return bound.bound_algebra(r)[0], r


def a3_bound_algebra() -> tuple[alg.SCAlgebra, bound.RelationSet]:
    """kQ(1 -> 2 -> 3) bound by the length-two path (dimension 5)."""
    q = validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    r = bound.relation_set(q, [[(1, ("a", "b"))]])
    return bound.bound_algebra(r)[0], r


def corpus_sbalg_ac() -> list[tuple[str, alg.SCAlgebra]]:
    """At least ten basic algebras whose Gabriel Vquiver is acyclic."""
    from .quiver import path_algebra

    kronecker = validate_quiver(["1", "2"], [("x", "1", "2"), ("y", "1", "2")])
    a3 = validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    fork = validate_quiver(
        ["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3")]
    )
    out = [
        ("Q1", rational_n(1)),
        ("Q3", rational_n(3)),
        ("U2", alg.upper_triangular(2)),
        ("U3", alg.upper_triangular(3)),
        ("U4", alg.upper_triangular(4)),
        ("U5", alg.upper_triangular(5)),
        ("kQ-kronecker", path_algebra(kronecker)),
        ("kQ-A3", path_algebra(a3)),
        ("kQ-fork", path_algebra(fork)),
        ("A3-bound", a3_bound_algebra()[0]),
        ("square-bound", commutative_square_algebra()[0]),
    ]
    return out


def corpus_basic() -> list[tuple[str, alg.SCAlgebra]]:
    """Basic algebras for choice-independence checks; loops allowed."""
    out = list(corpus_sbalg_ac())
    out += [
        ("Qx2", alg.truncated_poly(2)),
        ("Qx3", alg.truncated_poly(3)),
        ("Qx4", alg.truncated_poly(4)),
        ("mixed", mixed_algebra()),
        ("C-sub-U3", c_subalgebra_u3()),
    ]
    return out
