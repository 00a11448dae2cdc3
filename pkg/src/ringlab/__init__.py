"""ringlab: a finite commutative ring laboratory for amalgamated algebras.

Constructs A bowtie^f J over finite rings and machine-verifies the Von
Neumann regularity and SFT characterizations, including the explicit
certificate constructions, by exhaustive computation.
"""

from ._kernels import BACKEND_NAME
from .amalgam import (
    AmalgamationRing,
    classify_spectrum,
    extend_prime_A,
    extend_prime_B,
    make_amalgamation,
    make_duplication,
    subring_fA_plus_J,
)
from .ideals import (
    Ideal,
    enumerate_ideals,
    ideal_generated,
    ideal_image,
    ideal_intersection,
    ideal_preimage,
    ideal_sum,
    is_maximal,
    is_prime,
    nilradical,
    spectrum,
)
from .predicates import (
    check_corollary_both_vnr,
    check_corollary_semisimple,
    check_theorem_vnr,
    is_boolean,
    is_field,
    is_reduced,
    is_semisimple,
    is_vnr,
)
from .rings import (
    FiniteModule,
    FiniteRing,
    RingElem,
    RingError,
    RingHom,
    elem_pow,
    make_hom,
    make_product,
    make_quotient,
    make_trivial_extension,
    make_zmod,
    module_from_ideal,
    module_from_quotient,
    module_self,
)
from .sft import (
    CertificateError,
    SftCertificate,
    cert_amalg,
    cert_contract,
    cert_qbar,
    cert_quotient,
    cert_sum,
    check_theorem_sft,
    minimal_exponent,
    trivial_certificate,
    verify_certificate,
)

__version__ = "0.1.0"
