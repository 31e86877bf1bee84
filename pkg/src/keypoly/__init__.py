"""Key polynomials by three models, and their multiplicity-free classification."""
from keypoly.classify import (
    ConjectureReport,
    VerificationReport,
    cross_check_models,
    is_multiplicity_free_key,
    quasikey_zero_conjecture_sweep,
    verify_classification,
    verify_lemmas,
)
from keypoly.compositions import (
    KM_PATTERNS,
    SegmentDecomposition,
    avoids_km,
    contains_pattern,
    dominance_leq,
    find_pattern,
    flat,
    left_swaps,
    lswap_closure,
    parse_composition,
    qlswap,
    rmin_rmax_flex,
    segment_decomposition,
)
from keypoly.demazure import demazure_pi, key_polynomial_demazure
from keypoly.kohnert import Diagram, key_polynomial_kohnert, kohnert_diagrams, kohwt, skyline
from keypoly.polynomial import Polynomial
from keypoly.quasikey import (
    QuasiKeyTableau,
    count_low_entries_above,
    enumerate_qkt,
    key_polynomial_quasikey,
    quasi_key_polynomial,
    weight_of,
)

__version__ = "0.1.0"
