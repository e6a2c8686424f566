"""Orthogonal Meyer wavelet filter banks for integer scaling factors."""

from .errors import InvalidArgument
from .meyer import (
    DEFAULT_AUX,
    AuxiliaryFunction,
    AuxKind,
    Classical,
    ClassicalN2,
    CompositeFrequency,
    FrequencyDescriptor,
    eval_H,
    eval_H_classical_N2,
    eval_nu,
    eval_phi_hat,
)
from .synthesis import (
    Filter,
    FilterBank,
    compose_banks,
    composite_frequency_functions,
    decay_profile,
    eval_dtft,
    frequency_functions,
    synthesize_bank,
    synthesize_filter,
)
from .transform import (
    CoefficientSet,
    cascade_decompose,
    cascade_reconstruct,
    decompose,
    decompose_modulation,
    multilevel,
    multilevel_reconstruct,
    reconstruct,
)
from .verify import VerificationReport, modulation_matrix, verify_bank

__version__ = "0.1.0"
