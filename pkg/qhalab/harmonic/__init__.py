from .phase_space import (
    symplectic_form,
    half_phase,
    symplectic_fourier,
    phase_translate,
    phase_integral,
    function_convolution,
    lp_norm,
    l2_inner,
)
from .operators import (
    PARITY_SHIFT_PHASE,
    translate_signal,
    modulate_signal,
    tf_shift_matrix,
    parity_signal,
    parity_conjugate,
    alpha_shift,
    rank_one,
    trace,
    hs_inner,
    schatten_norm,
    schatten_report,
    numerical_rank,
)
from .transforms import (
    FW_PHASE_SIGN,
    RHO_PHASE_SIGN,
    stft,
    ambiguity,
    cross_wigner,
    fourier_wigner,
    rho,
    rho_superposition,
    twisted_convolution,
    weyl_transform,
    weyl_symbol,
    phase_convention_oracle,
)
from .convolutions import conv_fun_op, conv_op_op, build_conv_map, apply_conv_map
from .localization import (
    localization_operator,
    berezin_transform,
    locop_twisted_symbol,
)
from .tauberian import (
    zero_set,
    translate_span_rank,
    regularity_report,
    arveson_spectrum,
    localization_density_check,
    wiener_translate_rank,
    crafted_operator,
    weyl_regularity,
    self_convolution_zero_set,
)

__all__ = [
    "symplectic_form",
    "half_phase",
    "symplectic_fourier",
    "phase_translate",
    "phase_integral",
    "function_convolution",
    "lp_norm",
    "l2_inner",
    "PARITY_SHIFT_PHASE",
    "translate_signal",
    "modulate_signal",
    "tf_shift_matrix",
    "parity_signal",
    "parity_conjugate",
    "alpha_shift",
    "rank_one",
    "trace",
    "hs_inner",
    "schatten_norm",
    "schatten_report",
    "numerical_rank",
    "FW_PHASE_SIGN",
    "RHO_PHASE_SIGN",
    "stft",
    "ambiguity",
    "cross_wigner",
    "fourier_wigner",
    "rho",
    "rho_superposition",
    "twisted_convolution",
    "weyl_transform",
    "weyl_symbol",
    "phase_convention_oracle",
    "conv_fun_op",
    "conv_op_op",
    "build_conv_map",
    "apply_conv_map",
    "localization_operator",
    "berezin_transform",
    "locop_twisted_symbol",
    "zero_set",
    "translate_span_rank",
    "regularity_report",
    "arveson_spectrum",
    "localization_density_check",
    "wiener_translate_rank",
    "crafted_operator",
    "weyl_regularity",
    "self_convolution_zero_set",
]
