"""Exact one-dimensional optimal transport, shell-mixture geodesics, and
sliced-Wasserstein distance experiments."""

__version__ = "0.1.0"

from .families import (
    CircleMixture,
    ShellMixture,
    circle_family,
    circle_project,
    dilate,
    mixture_control_curve,
    mu_curve,
    mu_family,
    nu_curve,
    nu_family,
    radon_project,
    s_of_theta,
    shell_from_text,
    shell_masses,
    shell_to_text,
    transformed_nu_curve,
    translate,
    w_p_mu01,
)
from .measure1d import (
    ArcsinePart,
    Measure1D,
    MeasureError,
    PiecewiseLinearMap,
    QuantileFn,
    cdf_eval,
    measure_from_text,
    measure_to_text,
    pushforward_pwl,
    quantile,
    sample,
)
from .sliced import (
    PointCloud,
    empirical_w1d,
    sample_shell,
    sliced_geodesic_deviation,
    sw_pq,
    sw_pq_empirical,
    sw_per_direction,
    w_inf_circle,
    w_p_radial,
)
from .sphere import DirectionSet, beta_directions, c_dq, mc_directions
from .transport1d import (
    geodesic_deviation,
    interpolate,
    optimal_map,
    wasserstein_inf,
    wasserstein_p,
)

__all__ = [
    "__version__",
    "ArcsinePart",
    "CircleMixture",
    "DirectionSet",
    "Measure1D",
    "MeasureError",
    "PiecewiseLinearMap",
    "PointCloud",
    "QuantileFn",
    "ShellMixture",
    "beta_directions",
    "c_dq",
    "cdf_eval",
    "circle_family",
    "circle_project",
    "dilate",
    "empirical_w1d",
    "geodesic_deviation",
    "interpolate",
    "mc_directions",
    "measure_from_text",
    "measure_to_text",
    "mixture_control_curve",
    "mu_curve",
    "mu_family",
    "nu_curve",
    "nu_family",
    "optimal_map",
    "pushforward_pwl",
    "quantile",
    "radon_project",
    "s_of_theta",
    "sample",
    "sample_shell",
    "shell_from_text",
    "shell_masses",
    "shell_to_text",
    "sliced_geodesic_deviation",
    "sw_per_direction",
    "sw_pq",
    "sw_pq_empirical",
    "transformed_nu_curve",
    "translate",
    "w_inf_circle",
    "w_p_mu01",
    "w_p_radial",
    "wasserstein_inf",
    "wasserstein_p",
]
