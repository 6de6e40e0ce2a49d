"""Exact positivity certificates for real polynomials.

Submodules:

* :mod:`polycert.polyring` sparse rational polynomials and their text format
* :mod:`polycert.lp` exact two-phase simplex
* :mod:`polycert.support` supports, Newton polytopes, atoms
* :mod:`polycert.valuation` monomial valuations, initial parts, places
* :mod:`polycert.polya` Pólya exponents on the simplex
* :mod:`polycert.simplexcert` certificates modulo ``x1+...+xn-1``
* :mod:`polycert.powers` eventual nonnegativity of powers
* :mod:`polycert.membership` degree-bounded semiring membership
* :mod:`polycert.documents` JSON certificate documents and their checker
"""

from .polyring import Polynomial, PolynomialSyntaxError, format_poly, parse, parse_many
from .lp import Constraint, LinearProgram, LpOutcome, solve
from .support import SupportSet, FaceData, atoms, faces, log_set, max_atom_count, minkowski_sum, newton_faces, vertices
from .valuation import RationalFunction, check_addass, initial_part, place, proper_initial_parts
from .polya import PolyaResult, polya_exponent, simplex_positive
from .simplexcert import (
    CertificationExhausted,
    IdentityData,
    SimplexCertificate,
    certify_positive_simplex,
    certify_simplex,
    verify_certificate,
)
from .powers import SemigroupParams, StabilizationReport, check_hypotheses, frobenius_conductor, stabilize
from .membership import InfeasibleAtDegree, MembershipWitness, SemiringPresentation, member_at_degree

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "PolynomialSyntaxError", "format_poly", "parse", "parse_many",
    "Constraint", "LinearProgram", "LpOutcome", "solve",
    "SupportSet", "FaceData", "atoms", "faces", "log_set", "max_atom_count", "minkowski_sum",
    "newton_faces", "vertices",
    "RationalFunction", "check_addass", "initial_part", "place", "proper_initial_parts",
    "PolyaResult", "polya_exponent", "simplex_positive",
    "CertificationExhausted", "IdentityData", "SimplexCertificate", "certify_positive_simplex",
    "certify_simplex", "verify_certificate",
    "SemigroupParams", "StabilizationReport", "check_hypotheses", "frobenius_conductor", "stabilize",
    "InfeasibleAtDegree", "MembershipWitness", "SemiringPresentation", "member_at_degree",
]
