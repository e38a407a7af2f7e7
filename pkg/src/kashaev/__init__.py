"""Kashaev's signature invariant of oriented link diagrams, in exact arithmetic.

The invariant ``sign(tau_D(x)) - writhe(D)`` is computed from the face
structure of a planar diagram and checked against Levine-Tristram
signatures, Alexander polynomials and explicit kernel vectors.

>>> from kashaev import parse_pd, kashaev_invariant
>>> d = parse_pd("X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)")
>>> kashaev_invariant(d, 0)
-4
"""

from .algebra import GaussRational, Laurent, circle_param, format_t, herm_signature, sym_signature
from .catalog import CatalogEntry, load_catalog
from .diagram import (
    Diagram,
    canonical,
    disjoint_union,
    mirror,
    parse_pd,
    r1_insert,
    r2_insert,
    random_mutation,
    vertex_roles,
    winding_numbers,
    writhe,
)
from .errors import AlgebraError, DiagramError, KashaevError, VerificationError
from .kernel import disconnected_kernel_basis, kernel_basis, verify_kernel
from .seifert import (
    Certificate,
    alexander_certificate,
    alexander_via_tau,
    conway_alexander,
    lt_signature,
    main_theorem_check,
)
from .tau import build_tau, eval_tau, kashaev_invariant, reduce_tau, tau_laurent

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "CatalogEntry",
    "Certificate",
    "Diagram",
    "DiagramError",
    "GaussRational",
    "KashaevError",
    "Laurent",
    "VerificationError",
    "alexander_certificate",
    "alexander_via_tau",
    "build_tau",
    "canonical",
    "circle_param",
    "conway_alexander",
    "disconnected_kernel_basis",
    "disjoint_union",
    "eval_tau",
    "format_t",
    "herm_signature",
    "kashaev_invariant",
    "kernel_basis",
    "load_catalog",
    "lt_signature",
    "main_theorem_check",
    "mirror",
    "parse_pd",
    "r1_insert",
    "r2_insert",
    "random_mutation",
    "reduce_tau",
    "sym_signature",
    "tau_laurent",
    "verify_kernel",
    "vertex_roles",
    "winding_numbers",
    "writhe",
]
