#pragma once

#include <optional>

#include "srge/core_types.hpp"

namespace srge {

struct N1Request {
  ModelParams params;
  Geometry geometry;
  BosonState psi_in;
  BosonState psi_out;
  bool zero_momentum_convention = true;
  double v_over_L = 0.0;  // used only when the xi phase is kept
};

// F1^L(theta; in, out; alpha) from the closed vertex factor
// L(k) = sigma beta (e^{-2 pi i sigma r k} - 1).  A given v_over_L multiplies by xi.
ModulatedPolynomial f1_chiral(const ModelParams& params, double r, const ChiralModeList& modes_in,
                              const ChiralModeList& modes_out, double alpha,
                              std::optional<double> v_over_L = std::nullopt);

// Same quantity through the generic residue path, keeping the explicit alpha terms.
ModulatedPolynomial f1_chiral_residue(const ModelParams& params, double r, const ChiralModeList& modes_in,
                                      const ChiralModeList& modes_out, double alpha);

ModulatedPolynomial f1_full(const N1Request& req);

// Diagonal moment as a product of one-mode generating functions over distinct k.
ModulatedPolynomial f1_excited_diagonal(const ModelParams& params, double r, const BosonState& state);

// Level-2 chiral combination minus its theta = 0 value.
cplx delta_z1(const ModelParams& params, double r, double theta);

}  // namespace srge
