from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIGURE_EIGHT, TREFOIL, mutate
from kashaev.algebra import Laurent, format_poly, sym_signature
from kashaev.diagram import parse_pd, vertex_roles
from kashaev.errors import AlgebraError, FacesNotAdjacent
from kashaev.tau import (
    adjacent_pairs,
    build_tau,
    eval_tau,
    kashaev_invariant,
    local_tau,
    reduce_tau,
    tau_laurent,
    u_to_x,
    x_to_u,
)

# Kashaev matrix of the worked example (right-handed trefoil with a negative kink),
# rows and columns f1..f6
EXAMPLE = [
    ["4x^2-2", "1", "2x", "1", "0", "2x"],
    ["1", "4x^2-3", "2x", "1", "-1", "0"],
    ["2x", "2x", "3", "2x", "0", "3"],
    ["1", "1", "2x", "4x^2-2", "0", "2x"],
    ["0", "-1", "0", "0", "-1", "-2x"],
    ["2x", "0", "3", "2x", "-2x", "-4x^2+3"],
]
EXAMPLE_PD = "X(1,8,2,1),X(7,5,8,4),X(5,3,6,2),X(3,7,4,6)"
EXAMPLE_FACES = (4, 1, 3, 5, 2, 0)  # face id of f1..f6


def _strings(rows):
    return [[format_poly(u_to_x(e), "x") for e in r] for r in rows]


def _local(roles, sign=1):
    n = max(roles) + 1
    out = [["0"] * n for _ in range(n)]
    for (i, j), v in local_tau(roles, sign).items():
        out[i][j] = format_poly(v, "x")
    return out


def test_local_table_injective():
    assert _local((0, 1, 2, 3)) == [
        ["2x^2-1", "x", "1", "x"],
        ["x", "1", "x", "1"],
        ["1", "x", "2x^2-1", "x"],
        ["x", "1", "x", "1"],
    ]
    assert _local((0, 1, 2, 3), -1)[0] == ["-2x^2+1", "-x", "-1", "-x"]


def test_local_table_merges():
    merged_bd = _local((0, 1, 2, 1))
    assert merged_bd[1][1] == "4"
    assert merged_bd[0][1] == "2x"
    merged_ac = _local((0, 1, 0, 2))
    assert merged_ac[0][0] == "4x^2"


def test_unknot_is_zero():
    k = build_tau(parse_pd("U"))
    assert len(k) == 2 and all(e.is_zero() for row in k.entries for e in row)


def test_kink_matrix():
    # one positive crossing with f_a = f_c merged: hand summation of the local table
    assert build_tau(parse_pd("X(1,1,2,2)")).as_strings() == [
        ["1", "2x", "1"], ["2x", "4x^2", "2x"], ["1", "2x", "1"]]
    assert build_tau(parse_pd("X(2,1,1,2)")).as_strings()[1] == ["-2x", "-4x^2", "-2x"]


def test_example_matrix():
    k = build_tau(parse_pd(EXAMPLE_PD))
    got = k.as_strings()
    idx = [k.index(f) for f in EXAMPLE_FACES]
    assert [[got[i][j] for j in idx] for i in idx] == EXAMPLE


def test_example_reduced_minor():
    k = build_tau(parse_pd(EXAMPLE_PD))
    f5, f6 = EXAMPLE_FACES[4], EXAMPLE_FACES[5]
    red = _strings(reduce_tau(k, f5, f6))
    keep = [f for f in k.faces if f not in (f5, f6)]
    idx = [keep.index(f) for f in EXAMPLE_FACES[:4]]
    assert [[red[i][j] for j in idx] for i in idx] == [row[:4] for row in EXAMPLE[:4]]


def test_reduce_tau():
    k = build_tau(parse_pd(TREFOIL))
    assert len(reduce_tau(k)) == 3
    assert reduce_tau(build_tau(parse_pd("U"))) == []
    pairs = set(adjacent_pairs(k))
    bad = next((i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) not in pairs)
    with pytest.raises(FacesNotAdjacent):
        reduce_tau(k, *bad)


def test_eval_local_table():
    # the single-vertex table is half-integral in u, so evaluate it in x
    table = local_tau((0, 1, 2, 3))

    def at(x):
        return [[table[(i, j)](Fraction(x)) for j in range(4)] for i in range(4)]

    assert at(0) == [[-1, 0, 1, 0], [0, 1, 0, 1], [1, 0, -1, 0], [0, 1, 0, 1]]
    assert at(1) == [[1] * 4 for _ in range(4)]


def test_single_vertex_not_integral():
    # 2x^2 - 1 = (u^2 - 2) / 2 is only integral after summing
    with pytest.raises(AlgebraError):
        x_to_u(Laurent({2: 2, 0: -1}, "x"))


def test_tau_laurent_examples():
    u = Laurent({1: 1}, "u")
    assert tau_laurent([[u]]) == [[Laurent({1: 1, -1: 1})]]
    assert tau_laurent([[Laurent({}, "u")]]) == [[Laurent({})]]


def _all_structural(d):
    k = build_tau(d)
    for i, row in enumerate(k.entries):
        for j, e in enumerate(row):
            assert e == k.entries[j][i]
            assert e.is_integral()
            for p in tau_laurent([[e]])[0]:
                assert p.is_integral() and p == p.bar()
    fs = d.face_structure
    touched = {f for r in vertex_roles(d) for f in r.roles}
    for f in fs.faces:
        if f.id not in touched:
            assert all(e.is_zero() for e in k.entries[k.index(f.id)])


def test_structure_catalog(catalog):
    for entry in catalog.values():
        _all_structural(entry.diagram)


@given(st.sampled_from([TREFOIL, FIGURE_EIGHT, "X(4,1,3,2),X(2,3,1,4)", "U", "U,U"]), st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_structure_mutations(pd, seed):
    _all_structural(mutate(parse_pd(pd), 4, seed))


def test_zero_padding_keeps_signature():
    d = parse_pd("X(4,2,5,1),X(6,4,1,3),X(2,6,3,5),U")
    k = build_tau(d)
    interior = [f for f in k.faces if all(e.is_zero() for e in k.entries[k.index(f)])]
    assert interior
    keep = [i for i, f in enumerate(k.faces) if f not in interior]
    for x in (0, Fraction(1, 3), Fraction(-4, 5), 2):
        m = eval_tau(k, x)
        assert sym_signature(m) == sym_signature([[m[i][j] for j in keep] for i in keep])


def test_calibration_chooses_roles():
    # the swapped assignment of the opposite-face pairs breaks integrality
    for pd in (TREFOIL, FIGURE_EIGHT):
        d = parse_pd(pd)
        build_tau(d)
        with pytest.raises(AlgebraError):
            build_tau(d, convention="swapped")


def test_invariant_examples(trefoil, figure_eight):
    assert kashaev_invariant(trefoil, 0) == -4
    assert kashaev_invariant(figure_eight, 0) == 0
    assert kashaev_invariant(parse_pd("U"), Fraction(1, 2)) == 0
