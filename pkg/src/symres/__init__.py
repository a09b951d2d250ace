"""Exact symmetric subresultants, their fast divide-and-conquer computation,
and the Toeplitz computations built on them."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("artifact")
except PackageNotFoundError:
    __version__ = "0.1.0"

from .errors import (
    BranchMismatch,
    ExactnessViolation,
    InputError,
    InternalInconsistency,
    NoSplitting,
    Singular,
    SymresError,
)
from .fssr import fast_sequence, fssr, reach, replay_sequence, subresultant_constant_terms
from .poly import SymPoly, mul, reciprocal, sym_divide, sym_truncate
from .ring import Gaussian, prime_field
from .ssr_oracle import bezout_cofactors, subresultant_det, subresultant_sequence_det
from .ssr_seq import TransitionMatrix, compose_transitions, ssr_sequence, ssr_step
from .toeplitz import (
    GsGenerators,
    ToeplitzSpec,
    fitm_invert,
    gs_apply,
    gs_assemble,
    principal_minors,
    signature,
    toeplitz_from_pair,
)

__all__ = [
    "BranchMismatch", "ExactnessViolation", "Gaussian", "GsGenerators", "InputError",
    "InternalInconsistency", "NoSplitting", "Singular", "SymPoly", "SymresError",
    "ToeplitzSpec", "TransitionMatrix", "bezout_cofactors", "compose_transitions",
    "fast_sequence", "fitm_invert", "fssr", "gs_apply", "gs_assemble", "mul",
    "prime_field", "principal_minors", "reach", "reciprocal", "replay_sequence",
    "signature", "ssr_sequence", "ssr_step", "subresultant_constant_terms",
    "subresultant_det", "subresultant_sequence_det", "sym_divide", "sym_truncate",
    "toeplitz_from_pair",
]
