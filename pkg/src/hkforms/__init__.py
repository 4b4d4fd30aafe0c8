"""hkforms: exact operator algebra on the exterior algebra of R^{4q}.

Builds the quaternionic triple (I, J, K), the Lefschetz operators L_R and
Lambda_R, the derivations ad R and the Hodge scalar H, verifies the su(2)
and so(5) structure with its B2 root system, and checks the invariant
theory of the determinant submodule -- all in exact complex-rational
arithmetic.
"""

__version__ = "0.1.0"

from .exterior import Form, SparseOp, sign_merge, wedge, wedge_power
from .quaternionic import (HyperTriple, SpherePoint, induced, kaehler_form,
                           holo_symplectic, rational_sphere_point, standard_triple)
from .lefschetz import OperatorBasis, bracket_table, build_basis, root_system
from .scalars import CRat

__all__ = [
    "__version__", "CRat", "Form", "SparseOp", "sign_merge", "wedge",
    "wedge_power", "HyperTriple", "SpherePoint", "induced", "kaehler_form",
    "holo_symplectic", "rational_sphere_point", "standard_triple",
    "OperatorBasis", "build_basis", "bracket_table", "root_system",
]
