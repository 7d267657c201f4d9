#include "srge/resolved.hpp"

#include <cmath>

namespace srge {

double GroundMoment::theta_variance() const { return kPi * kPi * n / (beta * beta * log_cutoff); }

double GroundMoment::operator()(double theta) const {
  return std::exp(-theta * theta / (2 * theta_variance()));
}

GroundMoment ground_charged_moment(const ModelParams& params, const Geometry& geometry, int n) {
  if (n < 1) throw DomainError("replica index must be >= 1");
  if (!(geometry.cutoff_ratio > 1)) throw DomainError("cutoff ratio l/eps must exceed 1");
  GroundMoment g;
  g.n = n;
  g.beta = params.beta;
  g.log_cutoff = geometry.log_cutoff();
  g.opaque_scale = std::exp((1.0 / n - n) * g.log_cutoff / 6);
  return g;
}

MomentCoefficients extract_even_coefficients(const ModulatedPolynomial& p, const ModelParams& params, double tol) {
  if (std::abs(p.rate) > tol) throw DomainError("moment carries a nonzero phase rate; use the numeric Fourier path");
  for (std::size_t j = 1; j < p.coeffs.size(); j += 2)
    if (std::abs(p.coeffs[j]) > tol)
      throw DomainError("moment has odd powers of theta; use the numeric Fourier path");
  auto at = [&](std::size_t j) { return j < p.coeffs.size() ? p.coeffs[j] : cplx(0.0); };
  double b2 = params.beta * params.beta;
  return {at(0), at(2) / b2, at(4) / (b2 * b2)};
}

double ChargeDistribution::total() const {
  double s = 0;
  for (double v : values) s += v;
  return s;
}

double ChargeDistribution::mean() const {
  double s = 0, w = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += charges[i] * values[i];
    w += values[i];
  }
  return s / w;
}

double prel_series(double h2, double h4, const ModelParams& params, const Geometry& geometry, int q) {
  double L = geometry.log_cutoff();
  double b2 = params.beta * params.beta;
  return 1 + h2 * kPi * kPi / L + (3 * h4 - h2 / b2 * q * q) * std::pow(kPi, 4) / (L * L);
}

ChargeDistribution gaussian_charge_distribution(double h2, const ModelParams& params, const Geometry& geometry,
                                                int qmin, int qmax, double shift) {
  if (qmin > qmax) throw DomainError("empty charge window");
  double b1 = geometry.log_cutoff() - 2 * kPi * kPi * h2;
  if (!(b1 > 0)) throw DomainError("shifted variance b1 <= 0: cutoff too small for the Gaussian approximation");
  ChargeDistribution d;
  double b2 = params.beta * params.beta;
  for (int q = qmin; q <= qmax; ++q) {
    d.charges.push_back(q);
    d.values.push_back(std::exp(-kPi * kPi * (q - shift) * (q - shift) / (2 * b2 * b1)));
  }
  double t = d.total();
  for (auto& v : d.values) v /= t;
  return d;
}

cplx modulated_gaussian_fourier(const ModulatedPolynomial& p, double variance, double q) {
  if (!(variance > 0)) throw DomainError("variance must be positive");
  // theta ~ N(mu, variance) with mu = -i variance u after completing the square
  double u = q - p.rate;
  cplx mu(0.0, -variance * u);
  double sd = std::sqrt(variance);
  cplx total(0.0);
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    if (p.coeffs[j] == cplx(0.0)) continue;
    cplx e(0.0);
    double binom = 1, dfact = 1;
    for (std::size_t i = 0; i <= j; ++i) {
      if (i > 0) binom = binom * double(j - i + 1) / double(i);
      if (i % 2) continue;
      if (i >= 2) dfact *= double(i - 1);
      e += binom * std::pow(mu, int(j - i)) * std::pow(sd, double(i)) * dfact;
    }
    total += p.coeffs[j] * e;
  }
  return total * std::sqrt(2 * kPi * variance) / (2 * kPi) * std::exp(-variance * u * u / 2);
}

ChargeDistribution charge_distribution(const ModulatedPolynomial& f1, const ModelParams& params,
                                       const Geometry& geometry, int qmin, int qmax, DistributionKind kind) {
  if (qmin > qmax) throw DomainError("empty charge window");
  double var = ground_charged_moment(params, geometry, 1).theta_variance();
  ModulatedPolynomial one;
  ChargeDistribution d;
  d.kind = kind;
  for (int q = qmin; q <= qmax; ++q) {
    double v = modulated_gaussian_fourier(f1, var, q).real();
    if (kind == DistributionKind::ground_relative) v /= modulated_gaussian_fourier(one, var, q).real();
    d.charges.push_back(q);
    d.values.push_back(v);
  }
  if (kind == DistributionKind::absolute) {
    double t = d.total();
    if (!(std::abs(t) > 0)) throw DomainError("charge distribution has vanishing total weight");
    for (auto& v : d.values) v /= t;
  }
  return d;
}

double s2_series(double f0, double f2, double f4, const ModelParams& params, const Geometry& geometry, double q) {
  if (!(f0 > 0)) throw DomainError("f0 must be positive");
  double L = geometry.log_cutoff();
  double b2 = params.beta * params.beta;
  double a = f2 / f0;
  return -std::log(f0) - 2 * a * kPi * kPi / L +
         (2 * a * a - 12 * f4 / f0 + 4 * a / b2 * q * q) * std::pow(kPi, 4) / (L * L);
}

double delta_s2_excited(double f0, double f2, double f4, double h2, double h4, const ModelParams& params,
                        const Geometry& geometry, double q) {
  if (!(f0 > 0)) throw DomainError("f0 must be positive");
  double L = geometry.log_cutoff();
  double b2 = params.beta * params.beta;
  double a = f2 / f0;
  return -std::log(f0) + 2 * (h2 - a) * kPi * kPi / L +
         2 * (a * a - 6 * f4 / f0 - h2 * h2 / 2 + 3 * h4 + (2 * a - h2) / b2 * q * q) * std::pow(kPi, 4) / (L * L);
}

double delta_s2_numeric(const ModulatedPolynomial& f2, const ModulatedPolynomial& f1, const ModelParams& params,
                        const Geometry& geometry, double q) {
  double v2 = ground_charged_moment(params, geometry, 2).theta_variance();
  double v1 = ground_charged_moment(params, geometry, 1).theta_variance();
  ModulatedPolynomial one;
  double s2 = (modulated_gaussian_fourier(f2, v2, q) / modulated_gaussian_fourier(one, v2, q)).real();
  double p = (modulated_gaussian_fourier(f1, v1, q) / modulated_gaussian_fourier(one, v1, q)).real();
  if (!(s2 > 0) || !(p > 0)) throw DomainError("resolved moment is not positive at this charge");
  return -std::log(s2) + 2 * std::log(p);
}

double s2_compact(double f0, double f2, double h2, const ModelParams& params, const Geometry& geometry, double q,
                  double g_a) {
  if (!(f0 > 0)) throw DomainError("f0 must be positive");
  if (!(g_a > 0)) throw DomainError("g-function must be positive");
  double L = geometry.log_cutoff();
  double a = f2 / f0;
  double log_delta = -4 * kPi * kPi * (h2 - a);
  double log_kappa = -kPi * kPi * (h2 + 2 * a);
  if (!(L + log_delta > 0) || !(L + log_kappa > 0))
    throw DomainError("log l' too small for the compact form");
  double b = params.beta;
  double w = 2 * a - h2;
  return 0.25 * L - 0.5 * std::log(L + log_delta) - std::log(2 * b * f0 / std::sqrt(kPi)) + 2 * std::log(g_a) -
         2 * std::pow(kPi, 4) * w * w / (L * L) +
         2 * std::pow(kPi, 4) * q * q * w / (b * b * (L + log_kappa) * (L + log_kappa));
}

}  // namespace srge
