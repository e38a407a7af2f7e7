"""Explicit kernel vectors of the Kashaev matrix.

A vector ``sum_f a_{w(f)} f`` lies in the kernel whenever the coefficients
obey ``a_n + 2x a_{n+1} + a_{n+2} = 0`` along winding levels.  With
``2x = s + s^-1`` the characteristic roots are ``-s`` and ``-s^-1``, giving
``a_n = (-s)^n`` and ``a_n = (-s^-1)^n``.

For a split diagram the pieces only meet in the shared exterior face
``f_0``, so each piece carries its own solution of the recurrence, matched at
winding level 0; that space has dimension ``n + 1`` for ``n`` pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Laurent, rank_laurent
from .diagram import Diagram, DiagramPiece
from .errors import KernelViolation, RankMismatch
from .seifert import Certificate, alexander_via_tau
from .tau import KashaevMatrix, build_tau, tau_laurent

__all__ = [
    "KernelVector",
    "kernel_basis",
    "disconnected_kernel_basis",
    "apply_tau",
    "verify_kernel",
    "piece_diagram",
]

MINUS_S = Laurent({1: -1})
MINUS_S_INV = Laurent({-1: -1})


@dataclass(frozen=True)
class KernelVector:
    """Coefficients per face id, as Laurent polynomials in ``s = t^(1/2)``."""

    coeffs: dict
    name: str = ""

    def as_list(self, faces) -> list[Laurent]:
        return [self.coeffs.get(f, Laurent({})) for f in faces]

    def at(self, q) -> dict:
        """Specialize at ``s = q`` (a nonzero rational)."""
        q = Fraction(q)
        return {f: Fraction(c(q)) for f, c in self.coeffs.items()}

    def to_json(self) -> dict:
        from .algebra import format_t

        return {"name": self.name, "coeffs": {str(f): format_t(c) for f, c in sorted(self.coeffs.items())}}


def _geometric(root: Laurent, n: int) -> Laurent:
    return root ** n


def kernel_basis(d: Diagram) -> tuple[KernelVector, KernelVector]:
    """``g+`` with ``a_n = (-s)^n`` and ``g-`` with ``a_n = (-s^-1)^n``."""
    w = d.face_structure.winding
    gp = {f: _geometric(MINUS_S, n) for f, n in w.items()}
    gm = {f: _geometric(MINUS_S_INV, n) for f, n in w.items()}
    return KernelVector(gp, "g+"), KernelVector(gm, "g-")


def disconnected_kernel_basis(d: Diagram) -> list[KernelVector]:
    """``n + 1`` vectors for a diagram with ``n`` pieces.

    The first is ``(-s)^w`` on every face.  Piece ``i`` contributes
    ``(-s)^w - (-s^-1)^w`` on its own interior faces and zero elsewhere; it
    vanishes at winding 0, as the matching condition at ``f_0`` requires.
    """
    fs = d.face_structure
    w = fs.winding
    out = [KernelVector({f: _geometric(MINUS_S, n) for f, n in w.items()}, "g0")]
    for i, piece in enumerate(fs.pieces):
        coeffs = {f: Laurent({}) for f in w}
        for f in piece.interior_faces:
            coeffs[f] = _geometric(MINUS_S, w[f]) - _geometric(MINUS_S_INV, w[f])
        out.append(KernelVector(coeffs, f"g{i + 1}"))
    return out


def apply_tau(k: KashaevMatrix, g: KernelVector) -> list[Laurent]:
    rows = tau_laurent(k)
    vec = g.as_list(k.faces)
    out = []
    for row in rows:
        acc = Laurent({})
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def piece_diagram(d: Diagram, piece: DiagramPiece) -> Diagram:
    """The sub-diagram formed by one piece."""
    if piece.unknot is not None:
        return Diagram.from_crossings((), (d.unknots[piece.unknot],))
    return Diagram.from_crossings([d.crossings[i] for i in piece.crossings])


def verify_kernel(d: Diagram, name: str | None = None, k: KashaevMatrix | None = None) -> Certificate:
    """Check the explicit kernel vectors and the kernel dimension.

    Connected diagrams use :func:`kernel_basis`, split ones
    :func:`disconnected_kernel_basis`.  Every vector must be annihilated
    exactly and the vectors must be independent.  When every piece has
    ``Delta != 0`` the rank of ``tau`` must be ``|F| - len(basis)``.
    Raises :class:`KernelViolation` or :class:`RankMismatch`.
    """
    k = k or build_tau(d)
    fs = d.face_structure
    pieces = fs.pieces
    basis = list(kernel_basis(d)) if len(pieces) == 1 else disconnected_kernel_basis(d)
    label = name or d.to_pd()

    for g in basis:
        residual = apply_tau(k, g)
        if any(not r.is_zero() for r in residual):
            raise KernelViolation(f"{g.name} is not annihilated for {label}")

    independent = rank_laurent([g.as_list(k.faces) for g in basis])
    if independent != len(basis):
        raise RankMismatch(f"kernel vectors of {label} span only {independent} dimensions")

    deltas = [alexander_via_tau(piece_diagram(d, p))[2] for p in pieces]
    delta_nonzero = all(not delta.is_zero() for delta in deltas)
    rank = rank_laurent(tau_laurent(k))
    kernel_dim = len(k) - rank
    if kernel_dim < len(basis) or (delta_nonzero and kernel_dim != len(basis)):
        raise RankMismatch(
            f"{label}: rank {rank} of {len(k)} faces, expected kernel dimension {len(basis)}"
        )
    return Certificate(
        kind="kernel",
        diagram=label,
        passed=True,
        details={
            "faces": len(k),
            "rank": rank,
            "kernel_dim": kernel_dim,
            "basis_size": len(basis),
            "pieces": len(pieces),
            "delta_nonzero": delta_nonzero,
            "basis": [g.to_json() for g in basis],
        },
    )
