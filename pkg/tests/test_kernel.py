from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIGURE_EIGHT, TREFOIL, mutate
from kashaev.algebra import Laurent, rank_laurent
from kashaev.diagram import disjoint_union, parse_pd
from kashaev.errors import KernelViolation
from kashaev.kernel import KernelVector, apply_tau, disconnected_kernel_basis, kernel_basis, verify_kernel
from kashaev.tau import build_tau, eval_tau

S = Laurent({1: 1})


def test_unknot_basis():
    d = parse_pd("U")
    gp, gm = kernel_basis(d)
    ext = d.face_structure.exterior
    assert gp.coeffs == {ext: Laurent.const(1), 1 - ext: -S}
    assert gm.coeffs[1 - ext] == -Laurent({-1: 1})
    c = verify_kernel(d)
    assert c.details["rank"] == 0 and c.details["kernel_dim"] == 2


def test_trefoil_kernel(trefoil):
    k = build_tau(trefoil)
    for g in kernel_basis(trefoil):
        assert all(r.is_zero() for r in apply_tau(k, g))
    w = trefoil.face_structure.winding
    gp = kernel_basis(trefoil)[0]
    assert all(gp.coeffs[f] == (-S) ** n for f, n in w.items())
    c = verify_kernel(trefoil)
    assert (c.details["faces"], c.details["rank"], c.details["kernel_dim"]) == (5, 3, 2)


def test_figure_eight_kernel(figure_eight):
    assert verify_kernel(figure_eight).details["kernel_dim"] == 2


def test_split_kernels():
    two = disjoint_union(parse_pd(TREFOIL), parse_pd(TREFOIL))
    c = verify_kernel(two)
    assert (c.details["faces"], c.details["rank"], c.details["kernel_dim"]) == (9, 6, 3)
    assert len(disconnected_kernel_basis(two)) == 3
    c = verify_kernel(parse_pd("U,U"))
    assert (c.details["faces"], c.details["rank"], c.details["kernel_dim"]) == (3, 0, 3)


def test_one_piece_reduces_to_connected_basis(trefoil):
    # the disconnected construction spans the same space for one piece
    faces = build_tau(trefoil).faces
    rows = [g.as_list(faces) for g in kernel_basis(trefoil)]
    both = rows + [g.as_list(faces) for g in disconnected_kernel_basis(trefoil)]
    assert rank_laurent(rows) == rank_laurent(both) == 2


def test_shift_invariance(trefoil):
    # shifting every winding by one multiplies g+ by the unit -s
    k = build_tau(trefoil)
    gp = kernel_basis(trefoil)[0]
    shifted = KernelVector({f: c * (-S) for f, c in gp.coeffs.items()})
    assert all(r.is_zero() for r in apply_tau(k, shifted))


def test_violation_detected(trefoil):
    k = build_tau(trefoil)
    gp = kernel_basis(trefoil)[0]
    f = next(iter(gp.coeffs))
    broken = KernelVector({**gp.coeffs, f: gp.coeffs[f] + Laurent.const(1)})
    assert not all(r.is_zero() for r in apply_tau(k, broken))


def test_catalog_kernels(catalog):
    for entry in catalog.values():
        c = verify_kernel(entry.diagram, entry.name)
        expected = 1 + len(entry.diagram.face_structure.pieces) if len(entry.diagram.face_structure.pieces) > 1 else 2
        assert c.passed and c.details["kernel_dim"] == expected


@given(st.sampled_from([TREFOIL, FIGURE_EIGHT, "X(4,1,3,2),X(2,3,1,4)", "U",
                        "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5),U"]),
       st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_mutation_kernels(pd, seed):
    assert verify_kernel(mutate(parse_pd(pd), 3, seed)).passed


@given(st.sampled_from([TREFOIL, FIGURE_EIGHT, "X(4,1,3,2),X(2,3,1,4)"]),
       st.fractions(min_value=-10, max_value=10, max_denominator=10).filter(lambda q: q != 0))
@settings(max_examples=30, deadline=None)
def test_specialization(pd, q):
    d = parse_pd(pd)
    k = build_tau(d)
    x = (q + 1 / q) / 2
    m = eval_tau(k, x)
    for g in kernel_basis(d):
        vals = g.at(q)
        vec = [vals[f] for f in k.faces]
        assert all(sum(a * b for a, b in zip(row, vec)) == 0 for row in m)
