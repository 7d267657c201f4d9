#pragma once

#include <vector>

#include "srge/core_types.hpp"

namespace srge {

// Ground-state moment Tr(rho^n e^{i theta Q}) normalized to 1 at theta = 0.
// The g-function and e^{(1/n - n) log l'/6} factors are one opaque scale.
struct GroundMoment {
  int n = 1;
  double beta = 1.0;
  double log_cutoff = 1.0;
  double opaque_scale = 1.0;

  double theta_variance() const;  // pi^2 n / (beta^2 log l')
  double operator()(double theta) const;
};

GroundMoment ground_charged_moment(const ModelParams& params, const Geometry& geometry, int n);

// Coefficients of theta^0, beta^2 theta^2, beta^4 theta^4 of an even moment with zero rate.
struct MomentCoefficients {
  cplx c0, c2, c4;
};
MomentCoefficients extract_even_coefficients(const ModulatedPolynomial& p, const ModelParams& params,
                                             double tol = 1e-12);

enum class DistributionKind { absolute, ground_relative };

struct ChargeDistribution {
  std::vector<int> charges;
  std::vector<double> values;
  DistributionKind kind = DistributionKind::absolute;

  double total() const;
  double mean() const;
};

double prel_series(double h2, double h4, const ModelParams& params, const Geometry& geometry, int q);

// P(q) ~ exp(-pi^2 (q - shift)^2 / (2 beta^2 b1)), b1 = log l' - 2 pi^2 h2, normalized on [qmin, qmax].
ChargeDistribution gaussian_charge_distribution(double h2, const ModelParams& params, const Geometry& geometry,
                                                int qmin, int qmax, double shift = 0.0);

// int dtheta/2pi e^{-i theta q} p(theta) e^{-theta^2/(2 variance)} over the real line.
cplx modulated_gaussian_fourier(const ModulatedPolynomial& p, double variance, double q);

// Distribution generated by an n = 1 moment times the ground-state Gaussian.
ChargeDistribution charge_distribution(const ModulatedPolynomial& f1, const ModelParams& params,
                                       const Geometry& geometry, int qmin, int qmax,
                                       DistributionKind kind = DistributionKind::absolute);

double s2_series(double f0, double f2, double f4, const ModelParams& params, const Geometry& geometry, double q);

double delta_s2_excited(double f0, double f2, double f4, double h2, double h4, const ModelParams& params,
                        const Geometry& geometry, double q);

// Delta S_2 through the Fourier transforms of the full moments, without series truncation.
double delta_s2_numeric(const ModulatedPolynomial& f2, const ModulatedPolynomial& f1, const ModelParams& params,
                        const Geometry& geometry, double q);

double s2_compact(double f0, double f2, double h2, const ModelParams& params, const Geometry& geometry, double q,
                  double g_a = 1.0);

}  // namespace srge
