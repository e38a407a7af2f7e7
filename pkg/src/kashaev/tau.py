"""The Kashaev matrix of a diagram.

Each crossing contributes a signed 4x4 block on its surrounding faces
(roles ``a, b, c, d`` from :func:`kashaev.diagram.vertex_roles`)::

          a        b   c        d
    a  2x^2-1      x   1        x
    b     x        1   x        1
    c     1        x   2x^2-1   x
    d     x        1   x        1

When two roles name the same face the corresponding rows and columns are
summed.  Blocks are assembled as polynomials in ``x`` with rational
coefficients; the sum always lies in ``Z[2x]`` and is stored as integer
polynomials in ``u = 2x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Laurent, format_poly, submatrix, substitute_u
from .diagram import Diagram, FaceStructure, VertexFaceRoles, vertex_roles, writhe
from .errors import AlgebraError, FacesNotAdjacent

__all__ = [
    "KashaevMatrix",
    "LOCAL_TABLE",
    "local_tau",
    "build_tau",
    "reduce_tau",
    "default_reduction_pair",
    "adjacent_pairs",
    "eval_tau",
    "tau_laurent",
    "kashaev_invariant",
    "x_to_u",
    "u_to_x",
]

X = Laurent({1: 1}, "x")
ONE = Laurent.const(1, "x")
DIAG_AC = Laurent({2: 2, 0: -1}, "x")

LOCAL_TABLE = (
    (DIAG_AC, X, ONE, X),
    (X, ONE, X, ONE),
    (ONE, X, DIAG_AC, X),
    (X, ONE, X, ONE),
)


def x_to_u(p: Laurent) -> Laurent:
    """Rewrite a polynomial in ``x`` in the variable ``u = 2x``; must be integral."""
    out = {}
    for k, c in p.items():
        q = Fraction(c) / 2 ** k
        if q.denominator != 1:
            raise AlgebraError(f"{format_poly(p, 'x')} is not in Z[2x]")
        out[k] = int(q)
    return Laurent(out, "u")


def u_to_x(p: Laurent) -> Laurent:
    return Laurent({k: c * 2 ** k for k, c in p.items()}, "x")


def local_tau(roles: VertexFaceRoles | tuple[int, int, int, int], sign: int = 1) -> dict:
    """Signed local contribution as ``{(face_i, face_j): poly in x}``.

    Repeated faces among the roles have their entries summed.
    """
    faces = roles.roles if isinstance(roles, VertexFaceRoles) else tuple(roles)
    out: dict = {}
    for i, fi in enumerate(faces):
        for j, fj in enumerate(faces):
            entry = LOCAL_TABLE[i][j]
            out[(fi, fj)] = out.get((fi, fj), Laurent({}, "x")) + (entry if sign > 0 else -entry)
    return out


@dataclass(frozen=True)
class KashaevMatrix:
    """Symmetric matrix over ``Z[u]``, ``u = 2x``, indexed by face ids."""

    entries: tuple[tuple[Laurent, ...], ...]
    faces: tuple[int, ...]
    writhe: int
    n_crossings: int
    n_positive: int
    face_structure: FaceStructure | None = None

    def __len__(self):
        return len(self.entries)

    def x_entries(self) -> list[list[Laurent]]:
        return [[u_to_x(e) for e in row] for row in self.entries]

    def as_strings(self) -> list[list[str]]:
        return [[format_poly(e, "x") for e in row] for row in self.x_entries()]

    def index(self, face: int) -> int:
        return self.faces.index(face)

    def to_json(self) -> dict:
        return {
            "faces": list(self.faces),
            "entries": self.as_strings(),
            "writhe": self.writhe,
            "crossings": self.n_crossings,
            "positive": self.n_positive,
        }


def build_tau(d: Diagram, convention: str = "standard") -> KashaevMatrix:
    fs = d.face_structure
    n = len(fs)
    acc = [[Laurent({}, "x") for _ in range(n)] for _ in range(n)]
    for r in vertex_roles(d, fs, convention):
        for (fi, fj), v in local_tau(r, r.sign).items():
            acc[fi][fj] = acc[fi][fj] + v
    entries = tuple(tuple(x_to_u(e) for e in row) for row in acc)
    for i in range(n):
        for j in range(i):
            if entries[i][j] != entries[j][i]:
                raise AlgebraError(f"assembled matrix is not symmetric at ({i},{j})")
    return KashaevMatrix(
        entries=entries,
        faces=tuple(f.id for f in fs.faces),
        writhe=writhe(d),
        n_crossings=len(d.crossings),
        n_positive=sum(1 for x in d.crossings if x.sign > 0),
        face_structure=fs,
    )


def adjacent_pairs(k: KashaevMatrix) -> list[tuple[int, int]]:
    """Unordered pairs of distinct faces sharing an edge (or an unknot circle)."""
    fs = k.face_structure
    pairs = set()
    for left, right in fs.edge_faces.values():
        if left != right:
            pairs.add((min(left, right), max(left, right)))
    for piece in fs.pieces:
        if piece.unknot is not None:
            pairs.add((fs.exterior, piece.interior_faces[0]))
    return sorted(pairs)


def default_reduction_pair(k: KashaevMatrix) -> tuple[int, int]:
    """The exterior face and the first interior face sharing an edge with it."""
    ext = k.face_structure.exterior
    for a, b in adjacent_pairs(k):
        if ext in (a, b):
            return (ext, b if a == ext else a)
    raise FacesNotAdjacent("exterior face has no neighbour")


def reduce_tau(k: KashaevMatrix, fi: int | None = None, fj: int | None = None) -> list[list[Laurent]]:
    """Drop the rows and columns of two faces that share an edge."""
    if fi is None and fj is None:
        fi, fj = default_reduction_pair(k)
    if (min(fi, fj), max(fi, fj)) not in adjacent_pairs(k):
        raise FacesNotAdjacent(f"faces {fi} and {fj} do not share an edge")
    drop = {k.index(fi), k.index(fj)}
    keep = [i for i in range(len(k)) if i not in drop]
    return submatrix([list(r) for r in k.entries], keep)


def eval_tau(k: KashaevMatrix | list, x) -> list[list[Fraction]]:
    """Entrywise evaluation at ``u = 2x`` (``x`` rational)."""
    rows = k.entries if isinstance(k, KashaevMatrix) else k
    u = 2 * Fraction(x)
    return [[Fraction(e(u)) if e else Fraction(0) for e in row] for row in rows]


def tau_laurent(k: KashaevMatrix | list) -> list[list[Laurent]]:
    """Entrywise substitution ``2x = s + s^-1`` with ``s = t^(1/2)``."""
    rows = k.entries if isinstance(k, KashaevMatrix) else k
    return [[substitute_u(e) for e in row] for row in rows]


def kashaev_invariant(d: Diagram, x, k: KashaevMatrix | None = None) -> int:
    """``sign(tau_D(x)) - writhe(D)``."""
    from .algebra import sym_signature

    k = k or build_tau(d)
    return sym_signature(eval_tau(k, x)) - k.writhe
