#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "srge/core_types.hpp"

namespace srge {

class BranchTrackingError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Slater determinant of plane waves e^{2 pi i k x / N}/sqrt(N), x = 1..N, with
// half-integer (antiperiodic) momenta k.
struct MomentumState {
  int N = 0;
  std::vector<double> occupied;

  static MomentumState make(int N, std::vector<double> occupied);
  int particles() const { return int(occupied.size()); }
};

// N/2 particles in the lowest |k|; ties go to positive k.
MomentumState ground_state(int N);
Eigen::MatrixXcd orbitals(const MomentumState& s);

// C_xy = <c_x^dag c_y> on sites 1..ell.
Eigen::MatrixXcd correlation_matrix_c(const MomentumState& s, int ell);

// Mode sums: g1(d) = (2i/N) sum_k sin(2 pi k d/N), g2(d) = i((2/N) sum_k cos(2 pi k d/N) - delta_{d0}).
cplx lattice_g1(const MomentumState& s, int d);
cplx lattice_g2(const MomentumState& s, int d);

// Gamma_mn = <a_m a_n> - delta_mn with a_{2j-1} = c_j + c_j^dag, a_{2j} = i(c_j - c_j^dag).
struct MajoranaCorrelation {
  Eigen::MatrixXcd gamma;
  int ell() const { return int(gamma.rows() / 2); }
};
MajoranaCorrelation correlation_matrix(const MomentumState& s, int ell);

// (Qtilde)_{2m,2m-1} = -(Qtilde)_{2m-1,2m} = -i in 1-based indices.
Eigen::MatrixXcd charge_matrix(int ell);

// Tr(rho_A^n e^{i theta Q_A}) with Q_A = N_A - ell/2, from
// sqrt(det[((1-Gamma)/2)^n + ((1+Gamma)/2)^n e^{i theta Qtilde}]); the root is followed
// continuously from theta = 0 in steps of at most max_step.
cplx diagonal_charged_moment(const MomentumState& s, int ell, double theta, int n, double max_step = 0.05);
std::vector<cplx> diagonal_charged_moment_grid(const MomentumState& s, int ell, const std::vector<double>& thetas,
                                               int n, double max_step = 0.05);

// det[(1-C)^n + e^{i theta} C^n] e^{-i theta ell/2}; no square root involved.
cplx diagonal_charged_moment_direct(const MomentumState& s, int ell, double theta, int n);

// Tr_A[Tr_{A^c}(|s_{2n-1}><s_{2n}|) ... Tr_{A^c}(|s_1><s_2|) e^{i theta Q_A}] via the Slater determinant
// of the replica-doubled single-particle overlap with a twisted boundary on A.
cplx generalized_charged_moment(const std::vector<MomentumState>& states, int ell, double theta, int n);

struct WeightedState {
  std::string label;
  MomentumState state;
  double weight;
};

// ground, i d phi, V_{1,0}, and the two level-2 realizations (two holes + one particle,
// one hole + two particles), each with weight 1/2.
std::vector<WeightedState> level2_lattice_states(int N);

// Tr(rho_e^n e^{i theta Q})/Tr(rho_0^n e^{i theta Q}) minus the same at theta = 0.
cplx lattice_delta_z(const MomentumState& excited, int ell, double theta, int n, double max_step = 0.05);

}  // namespace srge
