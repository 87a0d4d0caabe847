"""Dual-RIS received-SSK link simulator: analytic chain and Monte Carlo engine."""

from duris._core import (
    CltMoments,
    ConfigError,
    SystemConfig,
    Topology,
    TrialPlan,
    __version__,
    bessel_i,
    capacity_curve_bound,
    capacity_curve_integral,
    config_hash,
    empirical_snr_samples,
    ergodic_capacity_bound,
    ergodic_capacity_integral,
    gaussian_q,
    laguerre_half,
    marcum_identity_residual,
    marcum_q1,
    outage_curve,
    outage_probability,
    path_loss_single,
    path_loss_zeta,
    preset_names,
    product_moments,
    run_capacity,
    run_outage,
    run_preset,
    run_ssk_ber,
    sample_gains,
    snr_pdf,
    sum_mean,
    sum_variance,
)

__all__ = [
    "CltMoments",
    "ConfigError",
    "SystemConfig",
    "Topology",
    "TrialPlan",
    "__version__",
    "bessel_i",
    "capacity_curve_bound",
    "capacity_curve_integral",
    "config_hash",
    "empirical_snr_samples",
    "ergodic_capacity_bound",
    "ergodic_capacity_integral",
    "gaussian_q",
    "laguerre_half",
    "marcum_identity_residual",
    "marcum_q1",
    "outage_curve",
    "outage_probability",
    "path_loss_single",
    "path_loss_zeta",
    "preset_names",
    "product_moments",
    "run_capacity",
    "run_outage",
    "run_preset",
    "run_ssk_ber",
    "sample_gains",
    "snr_pdf",
    "sum_mean",
    "sum_variance",
]
