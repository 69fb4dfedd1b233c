"""Projection decoding of binary self-dual [40,20,8] codes via the
Hermitian self-dual (10, 2^10, 4) code over GF(4)."""

from .constructions import (
    BinaryGeneratorMatrix,
    CertificationReport,
    binmap,
    c40_de,
    c40_se,
    certify,
    printed_de_matrix,
    printed_se_matrix,
    rho_a,
    rho_b,
    rho_c,
)
from .decoders import (
    CaseLabel,
    DecodeOutcome,
    InternalInvariantError,
    classify_case,
    decode_se,
    find_closest_in_e10,
    represent_decode,
    solve_syndrome,
    syndrome,
    syndrome_decode,
)
from .gf4 import Gf4Word, add, conj, hermitian_inner, mul, trace, trace_inner
from .oracle import OracleTable, build_oracle, indexed_decode, oracle_decode
from .projection import (
    LiftError,
    ParityProfile,
    has_projection_e,
    has_projection_o,
    lift,
    parity_profile,
    proj,
)
from .quaternary import (
    CodeTable,
    MonomialSymmetry,
    OrbitType,
    QuaternaryGeneratorMatrix,
    build_b10,
    build_e10,
    classify_type,
    enumerate_code,
    orbit_census,
)

__version__ = "1.0.0"
