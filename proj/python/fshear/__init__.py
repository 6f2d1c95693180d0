"""Translation-invariant discrete shearlet transform."""

from ._fshear import (
    FshearError,
    Spectra,
    band_count,
    band_energy,
    build_spectra,
    check_frame,
    check_parseval,
    check_roundtrip,
    check_tiling,
    forward,
    index_to_params,
    inverse,
    meyer_aux,
    meyer_bump,
    params_to_index,
    psi1_hat,
    psi2_hat,
    random_image,
    read_image,
    render,
    scales_for_size,
    scaling_1d,
    write_image,
)

__all__ = [
    "FshearError",
    "Spectra",
    "band_count",
    "band_energy",
    "build_spectra",
    "check_frame",
    "check_parseval",
    "check_roundtrip",
    "check_tiling",
    "forward",
    "index_to_params",
    "inverse",
    "meyer_aux",
    "meyer_bump",
    "params_to_index",
    "psi1_hat",
    "psi2_hat",
    "random_image",
    "read_image",
    "render",
    "scales_for_size",
    "scaling_1d",
    "write_image",
]
