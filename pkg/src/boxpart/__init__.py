"""Exact volume statistics of box-bounded plane partitions.

The package builds volume generating functions as ratios of cyclotomic-
style factors, expands them with exact integer arithmetic, and checks the
resulting distributions against closed-form moments, brute-force
enumeration, and the Gaussian / uniform-convolution limit laws.
"""

from __future__ import annotations

from .ensembles import (EnsembleSpec, Kind, VolumeDistribution, build_cspp,
                        build_pp, build_spp, builder, cspp, distribution,
                        ferrers_hw, ferrers_perimeter, pp, probability, spp)
from .ferrers import (JointDiagnostics, JointHeightAreaDistribution,
                      central_heights, conditional_area, ferrers_hw_polynomial,
                      gaussian_binomial, height_marginal_moments,
                      joint_diagnostics, perimeter_area_polynomial,
                      perimeter_joint)
from .limits import (ConvergenceReport, ConvergenceRow, LawKind,
                     Normalization, ReferenceLaw, concentration_ratio,
                     convergence_table, gaussian_cdf, ks_distance,
                     standard_gaussian, sup_cdf_distance,
                     uniform_convolution, uniform_convolution_cdf)
from .moments import (empirical_central_moment, empirical_moment, g_series,
                      h_bound_check, h_coefficient, h_polynomial, mean_closed,
                      variance_closed, variance_from_cumulant)
from .oracle import (EnumerationCapError, OracleDistribution,
                     PlanePartitionArray, enumerate_cspp, enumerate_ferrers,
                     enumerate_pp, enumerate_spp, iter_pp)
from .qpoly import (CapExceededError, DegreeCapError, ExactPolynomial,
                    FactorRatioProduct, NonzeroRemainderError, eval_at_one,
                    expand)

__all__ = [
    "CapExceededError",
    "ConvergenceReport",
    "ConvergenceRow",
    "DegreeCapError",
    "EnsembleSpec",
    "EnumerationCapError",
    "ExactPolynomial",
    "FactorRatioProduct",
    "JointDiagnostics",
    "JointHeightAreaDistribution",
    "Kind",
    "LawKind",
    "NonzeroRemainderError",
    "Normalization",
    "OracleDistribution",
    "PlanePartitionArray",
    "ReferenceLaw",
    "VolumeDistribution",
    "build_cspp",
    "build_pp",
    "build_spp",
    "builder",
    "central_heights",
    "concentration_ratio",
    "conditional_area",
    "convergence_table",
    "cspp",
    "distribution",
    "empirical_central_moment",
    "empirical_moment",
    "enumerate_cspp",
    "enumerate_ferrers",
    "enumerate_pp",
    "enumerate_spp",
    "eval_at_one",
    "expand",
    "ferrers_hw",
    "ferrers_hw_polynomial",
    "ferrers_perimeter",
    "g_series",
    "gaussian_binomial",
    "gaussian_cdf",
    "h_bound_check",
    "h_coefficient",
    "h_polynomial",
    "height_marginal_moments",
    "iter_pp",
    "joint_diagnostics",
    "ks_distance",
    "mean_closed",
    "pp",
    "perimeter_area_polynomial",
    "perimeter_joint",
    "probability",
    "spp",
    "standard_gaussian",
    "sup_cdf_distance",
    "uniform_convolution",
    "uniform_convolution_cdf",
    "variance_closed",
    "variance_from_cumulant",
]

__version__ = "0.1.0"
