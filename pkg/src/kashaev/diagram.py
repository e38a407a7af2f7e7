"""Oriented link diagrams as 4-valent planar graphs.

A diagram is given by a PD code: one ``X(i,j,k,l)`` per crossing listing the
four incident edge labels counterclockwise, starting from the incoming
under-strand.  The under-strand runs ``i -> k``; the over-strand runs
``l -> j`` at a positive crossing and ``j -> l`` at a negative one.  A
crossing-free circle component cannot be written in PD and gets its own
token: ``U`` (counterclockwise) or ``U-`` (clockwise).

Slots and corners
-----------------
Slot ``(c, p)`` is position ``p`` of crossing ``c``.  Corner ``(c, p)`` is the
angular sector between slots ``p`` and ``p + 1``.  The counterclockwise tuple
order is the rotation system, and walking ``corner (c, p) -> edge at slot
(c, p+1) -> far slot (c', p') -> corner (c', p')`` traces faces.

Split diagrams are drawn side by side: every connected piece contributes the
face to the right of its smallest edge label to one shared exterior face.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DiagramError,
    EdgesNotCofacial,
    InconsistentWinding,
    LabelCountError,
    MalformedSyntax,
    NonPlanar,
    OrientationInconsistent,
)

__all__ = [
    "Crossing",
    "Diagram",
    "Face",
    "FaceStructure",
    "VertexFaceRoles",
    "DiagramPiece",
    "parse_pd",
    "faces",
    "winding_numbers",
    "writhe",
    "crossing_sign",
    "connected_components",
    "vertex_roles",
    "r1_insert",
    "r2_insert",
    "random_mutation",
    "disjoint_union",
    "mirror",
    "canonical",
    "load_json",
]


@dataclass(frozen=True)
class Crossing:
    labels: tuple[int, int, int, int]
    sign: int

    @property
    def over_in(self) -> int:
        """Tuple position where the over-strand enters."""
        return 3 if self.sign > 0 else 1

    def head_positions(self) -> tuple[int, int]:
        """Positions at which an edge enters this crossing."""
        return (0, self.over_in)

    def to_pd(self) -> str:
        return "X({},{},{},{})".format(*self.labels)


@dataclass(frozen=True)
class Diagram:
    """Validated oriented diagram.

    ``unknots`` holds one orientation (+1 counterclockwise, -1 clockwise) per
    crossing-free circle component.  Use :func:`parse_pd` or
    :meth:`from_crossings` rather than the constructor.
    """

    crossings: tuple[Crossing, ...]
    unknots: tuple[int, ...] = ()
    components: tuple[tuple[int, ...], ...] = ()
    slots: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def from_crossings(cls, crossings: Iterable[Crossing], unknots: Iterable[int] = ()) -> "Diagram":
        crossings = tuple(crossings)
        slots = _slot_table(crossings)
        comps = _components(crossings, slots)
        for comp in comps:
            for lab in comp:
                tail, head = _tail_head(crossings, slots, lab)
                if tail is None or head is None:
                    raise OrientationInconsistent(f"edge {lab} does not run from a tail to a head")
        d = cls(crossings, tuple(int(u) for u in unknots), comps, slots)
        _check_euler(d)
        return d

    @property
    def unknot_count(self) -> int:
        return len(self.unknots)

    @property
    def labels(self) -> list[int]:
        return sorted(self.slots)

    def tail(self, label) -> tuple[int, int]:
        return _tail_head(self.crossings, self.slots, label)[0]

    def head(self, label) -> tuple[int, int]:
        return _tail_head(self.crossings, self.slots, label)[1]

    def is_outgoing(self, c: int, p: int) -> bool:
        return p not in self.crossings[c].head_positions()

    def to_pd(self) -> str:
        parts = [x.to_pd() for x in self.crossings]
        parts += ["U" if o > 0 else "U-" for o in self.unknots]
        return ",".join(parts)

    def __str__(self):
        return self.to_pd()

    def to_json(self) -> dict:
        return {
            "crossings": [{"labels": list(x.labels), "sign": x.sign} for x in self.crossings],
            "components": [list(c) for c in self.components],
            "unknots": list(self.unknots),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        xs = [Crossing(tuple(c["labels"]), int(c["sign"])) for c in data["crossings"]]
        return cls.from_crossings(xs, data.get("unknots", ()))

    @cached_property
    def face_structure(self) -> "FaceStructure":
        return faces(self)


# ------------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:X\s*[\(\[]\s*([^\)\]]*)[\)\]]|(U-?))\s*(?:,|$)")


def parse_pd(text: str) -> Diagram:
    """Parse PD text such as ``"X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"`` or ``"U,U"``."""
    body = text.strip()
    m = re.fullmatch(r"PD\s*[\[\(](.*)[\]\)]", body, flags=re.S)
    if m:
        body = m.group(1).strip()
    if not body:
        raise MalformedSyntax("empty PD code")
    tuples, unknots = [], []
    pos = 0
    while pos < len(body):
        tok = _TOKEN.match(body, pos)
        if tok is None or tok.end() == pos:
            raise MalformedSyntax(f"cannot parse PD text near {body[pos:pos + 20]!r}")
        if tok.group(2):
            unknots.append(-1 if tok.group(2) == "U-" else 1)
        else:
            fields = [f.strip() for f in tok.group(1).split(",")]
            if len(fields) != 4 or not all(f.isdigit() for f in fields):
                raise MalformedSyntax(f"crossing needs four positive integer labels: X({tok.group(1)})")
            labs = tuple(int(f) for f in fields)
            if min(labs) <= 0:
                raise MalformedSyntax("edge labels must be positive")
            tuples.append(labs)
        pos = tok.end()
        if pos < len(body) and body[pos - 1] != ",":
            raise MalformedSyntax(f"missing comma near {body[pos:pos + 20]!r}")
    signs = _infer_signs(tuples)
    return Diagram.from_crossings([Crossing(t, s) for t, s in zip(tuples, signs)], unknots)


def _slot_table(crossings) -> dict:
    slots: dict = {}
    for c, x in enumerate(crossings):
        for p, lab in enumerate(x.labels):
            slots.setdefault(lab, []).append((c, p))
    bad = {lab: len(v) for lab, v in slots.items() if len(v) != 2}
    if bad:
        raise LabelCountError(f"labels not appearing exactly twice: {bad}")
    return {lab: tuple(v) for lab, v in slots.items()}


def _other_slot(slots, lab, slot):
    a, b = slots[lab]
    return b if a == slot else a


def _strand_walk(tuples, slots, start_label, start_slot):
    """Walk a strand; yields (label, entry slot) with entry slot the far end."""
    lab, slot = start_label, start_slot
    while True:
        far = _other_slot(slots, lab, slot)
        yield lab, far
        c, p = far
        nslot = (c, (p + 2) % 4)
        lab = tuples[c][nslot[1]]
        slot = nslot
        if lab == start_label and slot == start_slot:
            return


def _infer_signs(tuples) -> list[int]:
    """Orient every strand component and derive crossing signs."""
    pseudo = [Crossing(t, 1) for t in tuples]
    slots = _slot_table(pseudo)
    over_in = [None] * len(tuples)
    seen = set()
    for lab0 in sorted(slots):
        if lab0 in seen:
            continue
        start = min(slots[lab0])
        walk = list(_strand_walk(tuples, slots, lab0, start))
        labs = [lab for lab, _ in walk]
        seen.update(labs)
        votes = set()
        for _, (c, p) in walk:
            if p == 0:
                votes.add(1)
            elif p == 2:
                votes.add(-1)
        if len(votes) == 2:
            raise OrientationInconsistent(f"strand through edge {lab0} passes under in both directions")
        if votes:
            direction = votes.pop()
        else:
            direction = _numbering_direction(labs)
        if direction < 0:
            walk = list(_strand_walk(tuples, slots, lab0, walk[0][1]))
            labs = [lab for lab, _ in walk]
        if len(labs) >= 3 and sorted(labs) == list(range(min(labs), min(labs) + len(labs))):
            if _numbering_direction(labs) < 0 and _is_cyclic_run(labs[::-1]):
                raise OrientationInconsistent(
                    f"component {sorted(labs)} is numbered against its orientation")
        for _, (c, p) in walk:
            if p in (1, 3):
                if over_in[c] is not None and over_in[c] != p:
                    raise OrientationInconsistent(f"crossing {c} has two incoming over-strands")
                over_in[c] = p
    return [1 if p == 3 else -1 for p in over_in]


def _is_cyclic_run(labs) -> bool:
    n = len(labs)
    lo = min(labs)
    return all((labs[(k + 1) % n] - lo) == (labs[k] - lo + 1) % n for k in range(n))


def _numbering_direction(labs) -> int:
    if len(labs) < 3:
        return 1
    up = sum(1 for a, b in zip(labs, labs[1:] + labs[:1]) if b == a + 1)
    down = sum(1 for a, b in zip(labs, labs[1:] + labs[:1]) if a == b + 1)
    return 1 if up >= down else -1


def _tail_head(crossings, slots, lab):
    tail = head = None
    for c, p in slots[lab]:
        if p in crossings[c].head_positions():
            if head is not None:
                return None, None
            head = (c, p)
        else:
            if tail is not None:
                return None, None
            tail = (c, p)
    return tail, head


def _components(crossings, slots) -> tuple[tuple[int, ...], ...]:
    """Link components as label cycles in orientation order, each starting at its minimum."""
    comps = []
    seen = set()
    for lab0 in sorted(slots):
        if lab0 in seen:
            continue
        tail, head = _tail_head(crossings, slots, lab0)
        if tail is None:
            raise OrientationInconsistent(f"edge {lab0} has no consistent direction")
        cyc = []
        lab = lab0
        while True:
            cyc.append(lab)
            seen.add(lab)
            c, p = _tail_head(crossings, slots, lab)[1]
            lab = crossings[c].labels[(p + 2) % 4]
            if lab == lab0:
                break
            if lab in seen:
                raise OrientationInconsistent("strand walk does not close up")
        comps.append(tuple(cyc))
    return tuple(comps)


# ------------------------------------------------------------------ faces


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[tuple[int, str], ...]
    winding: int
    corners: tuple[tuple[int, int], ...] = ()

    @property
    def edges(self) -> set[int]:
        return {lab for lab, _ in self.boundary}


@dataclass(frozen=True)
class DiagramPiece:
    """One connected component of the underlying planar graph."""

    crossings: tuple[int, ...]
    interior_faces: tuple[int, ...]
    unknot: int | None = None


@dataclass(frozen=True)
class FaceStructure:
    faces: tuple[Face, ...]
    exterior: int
    corner_face: dict
    edge_faces: dict
    pieces: tuple[DiagramPiece, ...]

    def __len__(self):
        return len(self.faces)

    @property
    def winding(self) -> dict[int, int]:
        return {f.id: f.winding for f in self.faces}

    def adjacent(self, fi: int, fj: int) -> bool:
        """True when some edge has ``fi`` on one side and ``fj`` on the other."""
        for left, right in self.edge_faces.values():
            if {left, right} == {fi, fj} and fi != fj:
                return True
        return False

    def to_json(self) -> dict:
        return {
            "faces": [
                {"id": f.id, "boundary": [[lab, side] for lab, side in f.boundary], "winding": f.winding}
                for f in self.faces
            ],
            "winding": {str(f.id): f.winding for f in self.faces},
            "exterior": self.exterior,
        }


def _crossing_pieces(d: Diagram) -> list[list[int]]:
    parent = list(range(len(d.crossings)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (c1, _), (c2, _) in d.slots.values():
        parent[find(c1)] = find(c2)
    groups: dict = {}
    for c in range(len(d.crossings)):
        groups.setdefault(find(c), []).append(c)
    pieces = list(groups.values())
    pieces.sort(key=lambda cs: min(lab for c in cs for lab in d.crossings[c].labels))
    return pieces


def _corner_cycles(d: Diagram) -> list[list[tuple[int, int]]]:
    seen = set()
    cycles = []
    for c in range(len(d.crossings)):
        for p in range(4):
            if (c, p) in seen:
                continue
            cyc = []
            cur = (c, p)
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cc, pp = cur
                slot = (cc, (pp + 1) % 4)
                lab = d.crossings[cc].labels[slot[1]]
                cur = _other_slot(d.slots, lab, slot)
            cycles.append(cyc)
    return cycles


def _check_euler(d: Diagram):
    cycles = _corner_cycles(d)
    corner_cycle = {}
    for i, cyc in enumerate(cycles):
        for corner in cyc:
            corner_cycle[corner] = i
    for piece in _crossing_pieces(d):
        nf = len({corner_cycle[(c, p)] for c in piece for p in range(4)})
        v = len(piece)
        if v - 2 * v + nf != 2:
            raise NonPlanar(f"piece with {v} crossings has {nf} faces; Euler characteristic {nf - v} != 2")


def faces(d: Diagram) -> FaceStructure:
    """Faces by rotation-system traversal, with winding numbers.

    Face 0 is the shared exterior.  Interior faces follow piece by piece in
    order of first corner; unknot interiors come last.
    """
    cycles = _corner_cycles(d)
    corner_cycle = {}
    for i, cyc in enumerate(cycles):
        for corner in cyc:
            corner_cycle[corner] = i

    def step_entry(corner):
        c, p = corner
        q = (p + 1) % 4
        lab = d.crossings[c].labels[q]
        side = "R" if d.is_outgoing(c, q) else "L"
        return lab, side

    cycle_id = {}
    outer_cycles = set()
    pieces_raw = _crossing_pieces(d)
    for piece in pieces_raw:
        lo = min(lab for c in piece for lab in d.crossings[c].labels)
        for cyc_i in sorted({corner_cycle[(c, p)] for c in piece for p in range(4)}):
            if (lo, "R") in {step_entry(k) for k in cycles[cyc_i]}:
                outer_cycles.add(cyc_i)
                break
    next_id = 1
    piece_faces = []
    for piece in pieces_raw:
        interior = []
        for c in piece:
            for p in range(4):
                ci = corner_cycle[(c, p)]
                if ci in outer_cycles:
                    cycle_id[ci] = 0
                elif ci not in cycle_id:
                    cycle_id[ci] = next_id
                    interior.append(next_id)
                    next_id += 1
        piece_faces.append(DiagramPiece(tuple(piece), tuple(interior)))

    boundaries: dict = {0: []}
    corners: dict = {0: []}
    for ci, cyc in enumerate(cycles):
        fid = cycle_id[ci]
        boundaries.setdefault(fid, []).extend(step_entry(k) for k in cyc)
        corners.setdefault(fid, []).extend(cyc)

    edge_faces = {}
    for fid, bnd in boundaries.items():
        for lab, side in bnd:
            left, right = edge_faces.get(lab, (None, None))
            if side == "L":
                left = fid
            else:
                right = fid
            edge_faces[lab] = (left, right)

    windings = _solve_windings(edge_faces, next_id)
    unknot_pieces = []
    for orient in d.unknots:
        windings[next_id] = orient
        boundaries[next_id] = []
        corners[next_id] = []
        unknot_pieces.append(DiagramPiece((), (next_id,), unknot=len(unknot_pieces)))
        next_id += 1

    corner_face = {k: cycle_id[ci] for k, ci in corner_cycle.items()}
    face_list = tuple(
        Face(fid, tuple(boundaries[fid]), windings[fid], tuple(corners[fid])) for fid in range(next_id)
    )
    return FaceStructure(face_list, 0, corner_face, edge_faces, tuple(piece_faces + unknot_pieces))


def _solve_windings(edge_faces, nfaces) -> dict[int, int]:
    """Crossing an edge from its right side to its left adds one."""
    adj: dict = {f: [] for f in range(nfaces)}
    for lab, (left, right) in edge_faces.items():
        adj[right].append((left, 1, lab))
        adj[left].append((right, -1, lab))
    w = {0: 0}
    stack = [0]
    while stack:
        f = stack.pop()
        for g, dw, lab in adj[f]:
            if g not in w:
                w[g] = w[f] + dw
                stack.append(g)
    for lab, (left, right) in edge_faces.items():
        if w[left] != w[right] + 1:
            raise InconsistentWinding(f"edge {lab}: winding {w[left]} on the left, {w[right]} on the right")
    missing = set(range(nfaces)) - set(w)
    if missing:
        raise InconsistentWinding(f"faces {sorted(missing)} unreachable from the exterior")
    return w


def winding_numbers(fs: FaceStructure, exterior: int | None = None) -> dict[int, int]:
    """Winding map normalized so the chosen exterior face has winding 0."""
    w = fs.winding
    if exterior is None:
        exterior = fs.exterior
    if exterior not in w:
        raise DiagramError(f"no face with id {exterior}")
    base = w[exterior]
    for lab, (left, right) in fs.edge_faces.items():
        if w[left] != w[right] + 1:
            raise InconsistentWinding(f"edge {lab} violates the winding rule")
    return {f: k - base for f, k in w.items()}


# ------------------------------------------------------------ signs, writhe


def crossing_sign(d: Diagram, c: int) -> int:
    """Sign from the orientation of the over-strand relative to the tuple.

    ``+1`` when the over-strand enters at tuple position 4 (runs ``l -> j``),
    ``-1`` when it enters at position 2.  Checked against the stored sign.
    """
    x = d.crossings[c]
    incoming = [p for p in (1, 3) if d.head(x.labels[p]) == (c, p)]
    if len(incoming) != 1:
        raise OrientationInconsistent(f"crossing {c} needs exactly one incoming over-strand")
    sign = 1 if incoming[0] == 3 else -1
    if sign != x.sign:
        raise OrientationInconsistent(f"crossing {c}: stored sign {x.sign} disagrees with orientation")
    return sign


def writhe(d: Diagram) -> int:
    return sum(x.sign for x in d.crossings)


def connected_components(d: Diagram) -> tuple[DiagramPiece, ...]:
    return d.face_structure.pieces


@dataclass(frozen=True)
class VertexFaceRoles:
    """Faces in the four positions around a crossing.

    ``b`` lies to the left of both strands and ``d`` to the right of both, so
    ``w(b) = w(a) + 1 = w(c) + 1 = w(d) + 2``; ``a`` and ``c`` are the two
    mixed sectors.
    """

    crossing: int
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def roles(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


# corner indices (a, b, c, d) by crossing sign
_ROLE_CORNERS = {1: (1, 2, 3, 0), -1: (0, 3, 2, 1)}
# the other pairing of opposite sectors; only used to show it is wrong
_SWAPPED_CORNERS = {1: (2, 1, 0, 3), -1: (3, 0, 1, 2)}


def vertex_roles(d: Diagram, fs: FaceStructure | None = None, convention: str = "standard") -> list[VertexFaceRoles]:
    fs = fs or d.face_structure
    table = _ROLE_CORNERS if convention == "standard" else _SWAPPED_CORNERS
    out = []
    for c, x in enumerate(d.crossings):
        ks = table[x.sign]
        fa, fb, fc, fd = (fs.corner_face[(c, k)] for k in ks)
        out.append(VertexFaceRoles(c, fa, fb, fc, fd, x.sign))
    return out


# --------------------------------------------------------------- mutations
#
# Mutations build crossings whose labels are sortable keys (old_label, piece)
# and then renumber by sorting, which keeps every component consecutive.


def _relabel(keyed: list[tuple[tuple, int]], unknots) -> Diagram:
    keys = sorted({k for t, _ in keyed for k in t})
    new = {k: i + 1 for i, k in enumerate(keys)}
    xs = [Crossing(tuple(new[k] for k in t), s) for t, s in keyed]
    return Diagram.from_crossings(xs, unknots)


def canonical(d: Diagram) -> Diagram:
    """Renumber so each component is consecutive along its orientation."""
    order = {}
    for ci, comp in enumerate(d.components):
        for k, lab in enumerate(comp):
            order[lab] = (ci, k)
    keyed = [(tuple(order[lab] for lab in x.labels), x.sign) for x in d.crossings]
    return _relabel(keyed, d.unknots)


def _keyed(d: Diagram):
    return [[((lab, 0)) for lab in x.labels] for x in d.crossings], [x.sign for x in d.crossings]


def _r1_tuple(e_in, loop, e_out, sign, side):
    if side == "L":
        return ((e_in, e_out, loop, loop), 1) if sign > 0 else ((loop, e_in, e_out, loop), -1)
    return ((loop, loop, e_out, e_in), 1) if sign > 0 else ((e_in, loop, loop, e_out), -1)


def r1_insert(d: Diagram, edge: int | None = None, sign: int = 1, side: str = "L", unknot: int = 0) -> Diagram:
    """Add a kink of the given sign on ``edge`` (or on an unknot component).

    ``side`` puts the new loop on the left or right of the strand.
    """
    if sign not in (1, -1) or side not in ("L", "R"):
        raise ValueError("sign must be +1/-1 and side 'L'/'R'")
    tuples, signs = _keyed(d)
    unknots = list(d.unknots)
    if edge is None:
        if not unknots:
            raise EdgesNotCofacial("r1_insert needs an edge label or an unknot component")
        unknots.pop(unknot)
        top = max(d.slots, default=0) + 1
        e, loop = (top, 0), (top, 1)
        t, s = _r1_tuple(e, loop, e, sign, side)
    else:
        if edge not in d.slots:
            raise KeyError(f"no edge labelled {edge}")
        (hc, hp) = d.head(edge)
        tuples[hc][hp] = (edge, 2)
        t, s = _r1_tuple((edge, 0), (edge, 1), (edge, 2), sign, side)
    keyed = [(tuple(tp), sg) for tp, sg in zip(tuples, signs)] + [(t, s)]
    return canonical(_relabel(keyed, unknots))


def _face_side(fs: FaceStructure, face: int, edge: int) -> str:
    for lab, side in fs.faces[face].boundary:
        if lab == edge:
            return side
    raise EdgesNotCofacial(f"edge {edge} is not on the boundary of face {face}")


_COMPASS = ("E", "N", "W", "S")


def _r2_crossings(k1, k2, dir1, dir2, over1):
    """Two crossings of a finger of strand 1 pushed across strand 2.

    ``k1``/``k2`` are the three piece keys of each strand in orientation
    order; ``dir`` is +1 for eastward.  Strand 1 runs along the top, strand 2
    along the bottom, and the finger dips from 1 across 2.
    """
    p1 = k1 if dir1 > 0 else k1[::-1]  # west-to-east order
    p2 = k2 if dir2 > 0 else k2[::-1]
    left = {"E": p2[1], "N": p1[0], "W": p2[0], "S": p1[1]}
    right = {"E": p2[2], "N": p1[2], "W": p2[1], "S": p1[1]}
    in1 = {"L": "N" if dir1 > 0 else "S", "R": "S" if dir1 > 0 else "N"}
    in2 = "W" if dir2 > 0 else "E"
    out = []
    for name, slots in (("L", left), ("R", right)):
        under_in = in2 if over1 else in1[name]
        over_in = in1[name] if over1 else in2
        start = _COMPASS.index(under_in)
        order = [_COMPASS[(start + i) % 4] for i in range(4)]
        sign = 1 if order.index(over_in) == 3 else -1
        out.append((tuple(slots[c] for c in order), sign))
    return out


def r2_insert(d: Diagram, edge1: int | None = None, edge2: int | None = None, face: int | None = None,
              over: bool = True, unknot: int = 0) -> Diagram:
    """Push a finger of ``edge1`` across ``edge2`` through a face they share.

    ``over`` puts ``edge1`` on top.  With no edges, acts on an unknot
    component, pushing one arc of the circle across another.
    """
    if edge1 is None and edge2 is None:
        unknots = list(d.unknots)
        if not unknots:
            raise EdgesNotCofacial("r2_insert needs two edges or an unknot component")
        unknots.pop(unknot)
        tuples, signs = _keyed(d)
        top = max(d.slots, default=0) + 1
        a, b, c, e = ((top, i) for i in range(4))
        # circle split into two arcs; arc 1 = (c, e, a) pieces, arc 2 = (a, b, c)
        new = _r2_crossings((c, e, a), (a, b, c), -1, 1, over)
        keyed = [(tuple(tp), sg) for tp, sg in zip(tuples, signs)] + new
        return canonical(_relabel(keyed, unknots))
    if edge1 == edge2 or edge1 is None or edge2 is None:
        raise EdgesNotCofacial("r2_insert needs two distinct edges")
    fs = d.face_structure
    if face is None:
        shared = [f.id for f in fs.faces if edge1 in f.edges and edge2 in f.edges]
        if not shared:
            raise EdgesNotCofacial(f"edges {edge1} and {edge2} do not bound a common face")
        face = shared[0]
    s1, s2 = _face_side(fs, face, edge1), _face_side(fs, face, edge2)
    dir1 = 1 if s1 == "R" else -1
    dir2 = 1 if s2 == "L" else -1
    tuples, signs = _keyed(d)
    for e in (edge1, edge2):
        hc, hp = d.head(e)
        tuples[hc][hp] = (e, 2)
    k1 = [(edge1, i) for i in range(3)]
    k2 = [(edge2, i) for i in range(3)]
    new = _r2_crossings(k1, k2, dir1, dir2, over)
    keyed = [(tuple(tp), sg) for tp, sg in zip(tuples, signs)] + new
    return canonical(_relabel(keyed, d.unknots))


def random_mutation(d: Diagram, rng: random.Random) -> tuple[Diagram, str]:
    """One random R1 or R2 insertion; returns the new diagram and a description."""
    choices = []
    if d.crossings:
        choices += ["r1", "r2"]
    if d.unknots:
        choices += ["r1u", "r2u"]
    kind = rng.choice(choices)
    if kind == "r1":
        e = rng.choice(d.labels)
        s, side = rng.choice((1, -1)), rng.choice("LR")
        return r1_insert(d, e, s, side), f"r1(edge={e}, sign={s:+d}, side={side})"
    if kind == "r1u":
        k = rng.randrange(len(d.unknots))
        s, side = rng.choice((1, -1)), rng.choice("LR")
        return r1_insert(d, None, s, side, unknot=k), f"r1(unknot={k}, sign={s:+d}, side={side})"
    if kind == "r2u":
        k = rng.randrange(len(d.unknots))
        ov = rng.random() < 0.5
        return r2_insert(d, over=ov, unknot=k), f"r2(unknot={k}, over={ov})"
    fs = d.face_structure
    candidates = [f for f in fs.faces if len(f.edges) >= 2]
    f = rng.choice(candidates)
    e1, e2 = rng.sample(sorted(f.edges), 2)
    ov = rng.random() < 0.5
    return r2_insert(d, e1, e2, face=f.id, over=ov), f"r2(edges={e1},{e2}, face={f.id}, over={ov})"


def mirror(d: Diagram) -> Diagram:
    """Mirror image: swap over and under at every crossing."""
    xs = []
    for x in d.crossings:
        i, j, k, l = x.labels
        # the old incoming over-strand becomes the incoming under-strand
        t = (j, k, l, i) if x.sign < 0 else (l, i, j, k)
        xs.append(Crossing(t, -x.sign))
    return Diagram.from_crossings(xs, d.unknots)


def disjoint_union(*ds: Diagram) -> Diagram:
    """Split union, relabelling later diagrams after earlier ones."""
    xs, unknots, offset = [], [], 0
    for d in ds:
        dc = canonical(d) if d.crossings else d
        for x in dc.crossings:
            xs.append(Crossing(tuple(lab + offset for lab in x.labels), x.sign))
        offset += max(dc.slots, default=0)
        unknots += list(d.unknots)
    return Diagram.from_crossings(xs, unknots)


def load_json(text: str) -> Diagram:
    return Diagram.from_json(json.loads(text))
