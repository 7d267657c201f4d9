#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "srge/core_types.hpp"
#include "srge/xx_lattice.hpp"

namespace srge {

inline constexpr int kMaxEdSites = 14;

class EmptySectorError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Amplitudes over the 2^N occupation basis; site 1 is the most significant bit.
struct DenseState {
  int N = 0;
  Eigen::VectorXcd amplitudes;

  static DenseState from_amplitudes(int N, Eigen::VectorXcd amps);
  static DenseState from_slater(const MomentumState& s);
  static DenseState basis(int N, unsigned long long config);
};

// Tr_{A^c}|in><out| on sites 1..ell, stored in blocks (q_row, q_col) of subsystem occupation.
struct GeneralizedRDM {
  int ell = 0;
  std::map<std::pair<int, int>, Eigen::MatrixXcd> blocks;

  cplx trace() const;
  Eigen::MatrixXcd dense() const;  // 2^ell x 2^ell, ell <= 12
  GeneralizedRDM operator*(const GeneralizedRDM& o) const;
};

// Basis configurations of ell sites with occupation q, in increasing index order.
std::vector<unsigned> sector_configs(int ell, int q);

GeneralizedRDM reduce(const DenseState& psi_in, const DenseState& psi_out, int ell);

// Diagonal projector onto N_A = q (dense 2^ell x 2^ell).
Eigen::MatrixXcd charge_projector(int ell, int q);

struct ResolvedTrace {
  cplx trace;     // Tr_A[rho_n ... rho_1 Pi_q]
  cplx entropy;   // (1/(1-n)) log(trace / normalization), complex in general
};

// rdms ordered as (rho_12, rho_34, ...); the product is rho_{2n-1,2n} ... rho_12.
// q is the subsystem occupation N_A.
cplx projected_trace(const std::vector<GeneralizedRDM>& rdms, int q);
// Generalized entropy, normalized by Tr_A[rho_0^n Pi_q] built from ground_rdms (n >= 2).
ResolvedTrace srre(const std::vector<GeneralizedRDM>& rdms, const std::vector<GeneralizedRDM>& ground_rdms, int q);
// (1/(1-n)) log(Tr[rho^n Pi_q] / Tr[rho Pi_q]^n), n >= 2.
double srre_diagonal(const GeneralizedRDM& rho, int q, int n);

// Same quantities through the charged moments on the ell+1 point theta grid.
cplx projected_trace_fourier(const std::vector<GeneralizedRDM>& rdms, int q);

// Tr[rho_n ... rho_1 e^{i theta (N_A - ell/2)}] for states (s1, s2, ..., s_{2n}).
cplx charged_moment_ed(const std::vector<DenseState>& states, int ell, double theta, int n);
cplx charged_moment_rdms(const std::vector<GeneralizedRDM>& rdms, double theta);

}  // namespace srge
