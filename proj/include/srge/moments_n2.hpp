#pragma once

#include <array>
#include <optional>

#include "srge/core_types.hpp"

namespace srge {

struct N2Request {
  ModelParams params;
  Geometry geometry;
  std::array<BosonState, 4> psi;
  bool zero_momentum_convention = true;
  double v_over_L = 0.0;
};

struct KPrefactor {
  cplx scale;
  double rate;
};

// Vertex-operator factor of the n = 2 moment.  Requires alpha1 + alpha3 = alpha2 + alpha4.
KPrefactor k_prefactor(const ModelParams& params, double r, double v_over_L, const std::array<double, 4>& alphas);

ModulatedPolynomial f2_chiral(const ModelParams& params, double r, const std::array<ChiralModeList, 4>& modes,
                              const std::array<double, 4>& alphas, std::optional<double> v_over_L = std::nullopt);

// r = 1/2 path using the tabulated vertex contractions.
ModulatedPolynomial f2_chiral_half(const ModelParams& params, const std::array<ChiralModeList, 4>& modes,
                                   const std::array<double, 4>& alphas);

// c_s of the r = 1/2 table as an exact rational (numerator, denominator).
std::pair<long long, long long> half_system_coefficient(int s);

ModulatedPolynomial f2_full(const N2Request& req);

// Seven-term level-2 combination, minus its theta = 0 value.
cplx delta_z2(const ModelParams& params, double r, double theta);
// The same combination before the subtraction.
cplx level2_z2_ratio(const ModelParams& params, double r, double theta);

}  // namespace srge
