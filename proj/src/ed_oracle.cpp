#include "srge/ed_oracle.hpp"

#include <bit>
#include <cmath>

namespace srge {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

void check_sites(int N) {
  if (N < 1 || N > kMaxEdSites) throw DomainError("dense oracle supports 1 <= N <= " + std::to_string(kMaxEdSites));
}

GeneralizedRDM chain(const std::vector<GeneralizedRDM>& rdms) {
  if (rdms.empty()) throw DomainError("need at least one reduced density matrix");
  GeneralizedRDM p = rdms[0];
  for (std::size_t i = 1; i < rdms.size(); ++i) p = rdms[i] * p;
  return p;
}

}  // namespace

DenseState DenseState::from_amplitudes(int N, VectorXcd amps) {
  check_sites(N);
  if (amps.size() != (Eigen::Index(1) << N)) throw DomainError("amplitude vector must have dimension 2^N");
  return DenseState{N, std::move(amps)};
}

DenseState DenseState::from_slater(const MomentumState& s) {
  check_sites(s.N);
  const int N = s.N, P = s.particles();
  MatrixXcd u = orbitals(s);
  VectorXcd amps = VectorXcd::Zero(Eigen::Index(1) << N);
  MatrixXcd sub(P, P);
  for (unsigned cfg = 0; cfg < (1u << N); ++cfg) {
    if (std::popcount(cfg) != P) continue;
    int row = 0;
    for (int x = 0; x < N; ++x)
      if ((cfg >> (N - 1 - x)) & 1u) sub.row(row++) = u.row(x);
    amps[cfg] = P ? sub.partialPivLu().determinant() : cplx(1.0);
  }
  return DenseState{N, amps};
}

DenseState DenseState::basis(int N, unsigned long long config) {
  check_sites(N);
  if (config >= (1ULL << N)) throw DomainError("basis configuration out of range");
  VectorXcd amps = VectorXcd::Zero(Eigen::Index(1) << N);
  amps[Eigen::Index(config)] = 1.0;
  return DenseState{N, amps};
}

std::vector<unsigned> sector_configs(int ell, int q) {
  std::vector<unsigned> out;
  for (unsigned a = 0; a < (1u << ell); ++a)
    if (std::popcount(a) == q) out.push_back(a);
  return out;
}

cplx GeneralizedRDM::trace() const {
  cplx t(0.0);
  for (const auto& [key, m] : blocks)
    if (key.first == key.second) t += m.trace();
  return t;
}

MatrixXcd GeneralizedRDM::dense() const {
  if (ell > 12) throw DomainError("dense reduced density matrix limited to ell <= 12");
  MatrixXcd d = MatrixXcd::Zero(1 << ell, 1 << ell);
  for (const auto& [key, m] : blocks) {
    auto rows = sector_configs(ell, key.first);
    auto cols = sector_configs(ell, key.second);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) d(rows[i], cols[j]) = m(i, j);
  }
  return d;
}

GeneralizedRDM GeneralizedRDM::operator*(const GeneralizedRDM& o) const {
  if (ell != o.ell) throw DomainError("reduced density matrices on different subsystems");
  GeneralizedRDM out;
  out.ell = ell;
  for (const auto& [ka, a] : blocks)
    for (const auto& [kb, b] : o.blocks) {
      if (ka.second != kb.first) continue;
      auto key = std::make_pair(ka.first, kb.second);
      auto it = out.blocks.find(key);
      if (it == out.blocks.end())
        out.blocks.emplace(key, a * b);
      else
        it->second += a * b;
    }
  return out;
}

GeneralizedRDM reduce(const DenseState& psi_in, const DenseState& psi_out, int ell) {
  if (psi_in.N != psi_out.N) throw DomainError("states live on chains of different length");
  const int N = psi_in.N;
  if (ell < 1 || ell >= N) throw DomainError("subsystem must satisfy 1 <= ell < N");
  const Eigen::Index nb = Eigen::Index(1) << (N - ell);
  std::vector<MatrixXcd> a(ell + 1), b(ell + 1);
  for (int q = 0; q <= ell; ++q) {
    auto cfgs = sector_configs(ell, q);
    a[q].resize(Eigen::Index(cfgs.size()), nb);
    b[q].resize(Eigen::Index(cfgs.size()), nb);
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
      a[q].row(Eigen::Index(i)) = psi_in.amplitudes.segment(Eigen::Index(cfgs[i]) * nb, nb).transpose();
      b[q].row(Eigen::Index(i)) = psi_out.amplitudes.segment(Eigen::Index(cfgs[i]) * nb, nb).transpose();
    }
  }
  GeneralizedRDM out;
  out.ell = ell;
  for (int q1 = 0; q1 <= ell; ++q1) {
    if (a[q1].squaredNorm() == 0) continue;
    for (int q2 = 0; q2 <= ell; ++q2) {
      if (b[q2].squaredNorm() == 0) continue;
      out.blocks.emplace(std::make_pair(q1, q2), a[q1] * b[q2].adjoint());
    }
  }
  return out;
}

MatrixXcd charge_projector(int ell, int q) {
  if (ell < 0 || ell > 12) throw DomainError("dense projector limited to 0 <= ell <= 12");
  MatrixXcd p = MatrixXcd::Zero(1 << ell, 1 << ell);
  for (unsigned a = 0; a < (1u << ell); ++a)
    if (std::popcount(a) == q) p(a, a) = 1.0;
  return p;
}

cplx projected_trace(const std::vector<GeneralizedRDM>& rdms, int q) {
  GeneralizedRDM p = chain(rdms);
  if (p.ell <= 10) return (p.dense() * charge_projector(p.ell, q)).trace();
  auto it = p.blocks.find({q, q});
  return it == p.blocks.end() ? cplx(0.0) : it->second.trace();
}

ResolvedTrace srre(const std::vector<GeneralizedRDM>& rdms, const std::vector<GeneralizedRDM>& ground_rdms, int q) {
  const int n = int(rdms.size());
  if (n < 2) throw DomainError("Renyi index n >= 2 required for the resolved entropy");
  if (int(ground_rdms.size()) != n) throw DomainError("ground normalization needs n copies");
  cplx num = projected_trace(rdms, q);
  cplx den = projected_trace(ground_rdms, q);
  if (std::abs(den) < 1e-300) throw EmptySectorError("charge sector q = " + std::to_string(q) + " is empty");
  return {num, std::log(num / den) / double(1 - n)};
}

double srre_diagonal(const GeneralizedRDM& rho, int q, int n) {
  if (n < 2) throw DomainError("Renyi index n >= 2 required for the resolved entropy");
  double p = projected_trace({rho}, q).real();
  if (!(p > 1e-300)) throw EmptySectorError("charge sector q = " + std::to_string(q) + " is empty");
  double t = projected_trace(std::vector<GeneralizedRDM>(n, rho), q).real();
  return std::log(t / std::pow(p, n)) / (1 - n);
}

cplx charged_moment_rdms(const std::vector<GeneralizedRDM>& rdms, double theta) {
  GeneralizedRDM p = chain(rdms);
  cplx t(0.0);
  for (const auto& [key, m] : p.blocks)
    if (key.first == key.second) t += std::polar(1.0, theta * (key.first - p.ell / 2.0)) * m.trace();
  return t;
}

cplx projected_trace_fourier(const std::vector<GeneralizedRDM>& rdms, int q) {
  const int ell = rdms.at(0).ell;
  cplx acc(0.0);
  for (int j = 0; j <= ell; ++j) {
    double th = 2 * kPi * j / (ell + 1);
    acc += std::polar(1.0, -th * (q - ell / 2.0)) * charged_moment_rdms(rdms, th);
  }
  return acc / double(ell + 1);
}

cplx charged_moment_ed(const std::vector<DenseState>& states, int ell, double theta, int n) {
  if (int(states.size()) != 2 * n) throw DomainError("charged moment of order n needs 2n states");
  std::vector<GeneralizedRDM> rdms;
  for (int c = 0; c < n; ++c) rdms.push_back(reduce(states[2 * c], states[2 * c + 1], ell));
  return charged_moment_rdms(rdms, theta);
}

}  // namespace srge
