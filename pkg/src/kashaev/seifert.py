"""Seifert-matrix side: Levine-Tristram signatures and Alexander polynomials.

Two independent routes live here.

* Catalog route: a transcribed Seifert matrix ``A`` gives
  ``sigma(omega) = sign((1-omega) A + (1-conj omega) A^T)`` and the
  Conway-normalized ``Delta(t) = det(t^(1/2) A - t^(-1/2) A^T)``.
* Diagram route: a Seifert matrix for the link together with its reverse,
  generated by the faces and crossings of a diagram, built from fixed local
  linking tables.  Its Hermitian form ``Q`` splits into a face block ``X``,
  a crossing block ``Z`` and the coupling ``Y``; the Schur complement
  ``X - Y Z^-1 Y*``, rescaled face by face by ``(-conj sqrt omega)^w(f)``,
  is the Kashaev matrix evaluated at ``x = Re sqrt omega``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .algebra import (
    CirclePoint,
    GaussRational,
    Laurent,
    circle_param,
    det_laurent,
    herm_signature,
    poly_sqrt,
    sym_signature,
)
from .diagram import Diagram, vertex_roles, writhe
from .errors import NotASquare, NotOnCircle, OmegaIsOne, SingularZ
from .tau import build_tau, eval_tau, reduce_tau, tau_laurent

__all__ = [
    "lt_signature",
    "conway_alexander",
    "SeifertData",
    "build_disjoint_seifert",
    "BlockQ",
    "build_Q",
    "schur_face_block",
    "rescale_by_winding",
    "Certificate",
    "main_theorem_check",
    "alexander_via_tau",
    "alexander_certificate",
    "vertex_schur_block",
    "normalize_delta",
    "POSITIVE_TABLE",
    "NEGATIVE_TABLE",
]

_h = Fraction(1, 2)

# Local linking numbers lk(i^-(row), col) near a crossing.  Rows and columns
# are ordered (f_a, f_b, f_c, f_d, v).
POSITIVE_TABLE = (
    (-_h, 0, 0, _h, 0),
    (-_h, 0, -_h, 0, 1),
    (0, 0, -_h, _h, 0),
    (0, 0, 0, 0, 0),
    (1, 0, 1, -1, -1),
)
NEGATIVE_TABLE = (
    (_h, 0, 0, _h, -1),
    (-_h, 0, -_h, 0, 1),
    (0, 0, _h, _h, -1),
    (0, 0, 0, 0, 0),
    (0, 0, 0, -1, 1),
)


def _hermitian_form(a, omega: GaussRational):
    s = 1 - omega
    sb = s.conj()
    n = len(a)
    return [[s * a[i][j] + sb * a[j][i] for j in range(n)] for i in range(n)]


def lt_signature(a, omega: GaussRational) -> int:
    """Levine-Tristram signature of a Seifert matrix at ``omega``."""
    omega = GaussRational.of(omega)
    if omega.norm2() != 1:
        raise NotOnCircle(f"|omega|^2 = {omega.norm2()}")
    if omega == 1:
        return 0
    return herm_signature(_hermitian_form(a, omega))


def conway_alexander(a) -> Laurent:
    """``det(s A - s^-1 A^T)`` with ``s = t^(1/2)``."""
    n = len(a)
    s, sinv = Laurent({1: 1}), Laurent({-1: 1})
    m = [[s.scale(a[i][j]) - sinv.scale(a[j][i]) for j in range(n)] for i in range(n)]
    return det_laurent(m)


@dataclass(frozen=True)
class SeifertData:
    """Seifert matrix indexed by faces followed by crossings."""

    matrix: tuple[tuple[Fraction, ...], ...]
    faces: tuple[int, ...]
    vertices: tuple[int, ...]
    vertex_signs: tuple[int, ...]

    @property
    def labels(self):
        return [("f", f) for f in self.faces] + [("v", v) for v in self.vertices]


def build_disjoint_seifert(d: Diagram) -> SeifertData:
    """Sum of the local linking tables over all crossings.

    Repeated faces around a crossing have their rows and columns summed; a
    crossing's curve does not link the pushoff of another crossing's curve.
    """
    fs = d.face_structure
    nf = len(fs)
    nv = len(d.crossings)
    a = [[Fraction(0)] * (nf + nv) for _ in range(nf + nv)]
    for r in vertex_roles(d, fs):
        table = POSITIVE_TABLE if r.sign > 0 else NEGATIVE_TABLE
        idx = list(r.roles) + [nf + r.crossing]
        for i in range(5):
            for j in range(5):
                if table[i][j]:
                    a[idx[i]][idx[j]] += table[i][j]
    return SeifertData(
        tuple(tuple(row) for row in a),
        tuple(range(nf)),
        tuple(range(nv)),
        tuple(x.sign for x in d.crossings),
    )


@dataclass(frozen=True)
class BlockQ:
    q: list
    x: list
    y: list
    z: list
    n_faces: int

    def z_diagonal(self):
        return [self.z[i][i] for i in range(len(self.z))]


def build_Q(a: SeifertData, omega: GaussRational) -> BlockQ:
    omega = GaussRational.of(omega)
    if omega.norm2() != 1:
        raise NotOnCircle(f"|omega|^2 = {omega.norm2()}")
    if omega == 1:
        raise OmegaIsOne("Q has a singular crossing block at omega = 1")
    q = _hermitian_form(a.matrix, omega)
    nf = len(a.faces)
    x = [row[:nf] for row in q[:nf]]
    y = [row[nf:] for row in q[:nf]]
    z = [row[nf:] for row in q[nf:]]
    two_minus = 2 - omega - omega.conj()
    for k, sgn in enumerate(a.vertex_signs):
        for l in range(len(z)):
            expected = (-two_minus if sgn > 0 else two_minus) if k == l else 0
            if z[k][l] != expected:
                raise AssertionError(f"crossing block entry ({k},{l}) = {z[k][l]}, expected {expected}")
    return BlockQ(q, x, y, z, nf)


def schur_face_block(q: BlockQ) -> list[list[GaussRational]]:
    """``X - Y Z^-1 Y*`` for the diagonal crossing block ``Z``."""
    zinv = []
    for i, zi in enumerate(q.z_diagonal()):
        if not zi:
            raise SingularZ(f"crossing block vanishes at position {i}")
        zinv.append(GaussRational(1) / zi)
    n = q.n_faces
    out = [[GaussRational.of(q.x[i][j]) for j in range(n)] for i in range(n)]
    for k, zk in enumerate(zinv):
        col = [q.y[i][k] for i in range(n)]
        nz = [i for i in range(n) if col[i]]
        for i in nz:
            for j in nz:
                out[i][j] = out[i][j] - col[i] * zk * col[j].conj()
    return out


def rescale_by_winding(b, windings, sqrt_omega: GaussRational):
    """Multiply entry ``(i, j)`` by ``(-conj sqrt_omega)^w_i (-sqrt_omega)^w_j``."""
    sw = GaussRational.of(sqrt_omega)
    if sw.norm2() != 1:
        raise NotOnCircle(f"|sqrt omega|^2 = {sw.norm2()}")
    row_unit = [(-sw.conj()) ** w for w in windings]
    col_unit = [(-sw) ** w for w in windings]
    return [[b[i][j] * row_unit[i] * col_unit[j] for j in range(len(b))] for i in range(len(b))]


@dataclass
class Certificate:
    """Machine-readable record of one verified identity."""

    kind: str
    diagram: str
    passed: bool
    v: str | None = None
    omega: list | None = None
    x: str | None = None
    kashaev_signature: int | None = None
    writhe: int | None = None
    invariant: int | None = None
    lt_signature_doubled: int | None = None
    q_signature: int | None = None
    schur_match: bool | None = None
    alexander_match: bool | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and v != {}}


def main_theorem_check(d: Diagram, v, seifert_matrix=None, name: str | None = None) -> Certificate:
    """Check ``sign(tau_D(x)) - wr_D = sign(Q) = 2 sigma(omega)`` at one circle point.

    ``v`` parametrizes the point (see :func:`kashaev.algebra.circle_param`);
    ``v = 0`` is ``omega = 1`` and is rejected.  Without a catalog Seifert
    matrix only the diagram route is checked.
    """
    cp: CirclePoint = circle_param(v)
    if cp.omega == 1:
        raise OmegaIsOne("the theorem check excludes omega = 1")
    k = build_tau(d)
    tau_x = eval_tau(k, cp.x)
    ksig = sym_signature(tau_x)
    wr = writhe(d)
    invariant = ksig - wr

    sd = build_disjoint_seifert(d)
    bq = build_Q(sd, cp.omega)
    q_sig = herm_signature(bq.q)
    schur = schur_face_block(bq)
    schur_sig = herm_signature(schur)
    z_sig = herm_signature(bq.z)
    w = [d.face_structure.winding[f] for f in sd.faces]
    rescaled = rescale_by_winding(schur, w, cp.sqrt_omega)
    schur_match = all(rescaled[i][j] == tau_x[i][j] for i in range(len(tau_x)) for j in range(len(tau_x)))

    passed = schur_match and q_sig == schur_sig + z_sig and z_sig == -wr and q_sig == invariant
    lt2 = None
    if seifert_matrix is not None:
        lt2 = 2 * lt_signature(seifert_matrix, cp.omega)
        passed = passed and lt2 == invariant
    return Certificate(
        kind="main_theorem",
        diagram=name or d.to_pd(),
        passed=passed,
        v=str(cp.v),
        omega=cp.omega.to_json(),
        x=str(cp.x),
        kashaev_signature=ksig,
        writhe=wr,
        invariant=invariant,
        lt_signature_doubled=lt2,
        q_signature=q_sig,
        schur_match=schur_match,
        details={"schur_signature": schur_sig, "z_signature": z_sig},
    )


def normalize_delta(delta: Laurent) -> Laurent:
    """Fix the sign: ``Delta(1) > 0``, or a positive leading coefficient when ``Delta(1) = 0``."""
    if delta.is_zero():
        return delta
    at_one = delta(1)
    if at_one < 0 or (at_one == 0 and delta[delta.max_exp] < 0):
        return -delta
    return delta


def alexander_via_tau(d: Diagram, pair: tuple[int, int] | None = None) -> tuple[Laurent, Laurent, Laurent]:
    """``(det, Delta^2, Delta)`` from the reduced Kashaev matrix.

    ``Delta^2 = (-1)^(p + |V|) det(reduced tau)`` with ``2x = s + s^-1``; the
    square root is sign-normalized by :func:`normalize_delta`.
    """
    k = build_tau(d)
    red = reduce_tau(k, *(pair or (None, None)))
    det = det_laurent(tau_laurent(red))
    sign = -1 if (k.n_positive + k.n_crossings) % 2 else 1
    square = det.scale(sign)
    try:
        delta = poly_sqrt(square)
    except NotASquare as exc:
        raise NotASquare(f"(-1)^(p+|V|) det is not a square for {d.to_pd()}: {square}") from exc
    return det, square, normalize_delta(delta)


def alexander_certificate(d: Diagram, seifert_matrix=None, n_pairs: int = 3,
                          name: str | None = None) -> Certificate:
    """Compare ``det`` over several adjacent face pairs, and with the catalog.

    Passes when every tried pair gives the same determinant, the signed
    determinant is a square, and (with a Seifert matrix) it equals the square
    of ``det(s A - s^-1 A^T)``.
    """
    from .algebra import format_t
    from .tau import adjacent_pairs

    k = build_tau(d)
    pairs = adjacent_pairs(k)[:n_pairs] if len(k) > 1 else []
    dets = {}
    for pair in pairs:
        dets[pair] = det_laurent(tau_laurent(reduce_tau(k, *pair)))
    pair_independent = len(set(dets.values())) <= 1
    det, square, delta = alexander_via_tau(d)
    match = None
    details = {
        "pairs": [list(p) for p in pairs],
        "pair_independent": pair_independent,
        "delta_squared": format_t(square),
        "delta": format_t(delta),
    }
    if seifert_matrix is not None:
        expected = conway_alexander(seifert_matrix)
        match = square == expected * expected
        details["catalog_delta"] = format_t(normalize_delta(expected))
    return Certificate(
        kind="alexander",
        diagram=name or d.to_pd(),
        passed=pair_independent and match is not False,
        alexander_match=match,
        details=details,
    )


def vertex_schur_block(sign: int, omega) -> list[list[GaussRational]]:
    """Local face block ``X - Y Z^-1 Y*`` of one crossing, in role order ``a, b, c, d``."""
    omega = GaussRational.of(omega)
    if omega == 1:
        raise OmegaIsOne("the crossing block is singular at omega = 1")
    table = POSITIVE_TABLE if sign > 0 else NEGATIVE_TABLE
    q = _hermitian_form(table, omega)
    z = q[4][4]
    return [[q[i][j] - q[i][4] * (GaussRational(1) / z) * q[j][4].conj() for j in range(4)] for i in range(4)]
