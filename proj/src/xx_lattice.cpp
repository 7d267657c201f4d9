#include "srge/xx_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace srge {

using Eigen::MatrixXcd;

namespace {

bool is_half_integer(double k) { return std::abs(k - std::floor(k) - 0.5) < 1e-12; }

MatrixXcd mpow(const MatrixXcd& a, int n) {
  MatrixXcd out = MatrixXcd::Identity(a.rows(), a.cols());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

void check_ell(const MomentumState& s, int ell) {
  if (ell < 1 || ell > s.N) throw DomainError("subsystem size must satisfy 1 <= ell <= N");
}

struct MajoranaPieces {
  MatrixXcd a;  // ((1 - Gamma)/2)^n
  MatrixXcd b;  // ((1 + Gamma)/2)^n
  MatrixXcd q;
  cplx det(double theta) const {
    // e^{i theta Q} = cos theta + i sin theta Q since Q^2 = 1
    MatrixXcd m = a + b * std::cos(theta) + (b * q) * cplx(0.0, std::sin(theta));
    return m.partialPivLu().determinant();
  }
};

MajoranaPieces pieces(const MomentumState& s, int ell, int n) {
  if (n < 1) throw DomainError("replica index must be >= 1");
  MatrixXcd g = correlation_matrix(s, ell).gamma;
  MatrixXcd id = MatrixXcd::Identity(g.rows(), g.cols());
  return {mpow((id - g) / 2.0, n), mpow((id + g) / 2.0, n), charge_matrix(ell)};
}

class BranchTracker {
 public:
  BranchTracker(const MajoranaPieces& p, double max_step) : p_(p), max_step_(max_step) {
    if (!(max_step > 0)) throw DomainError("theta tracking step must be positive");
    cplx d0 = p_.det(0.0);
    value_ = std::sqrt(d0);
    zero_tol_ = 1e-10 * std::abs(value_);
    if (std::abs(value_.imag()) > 1e-10 * std::max(1.0, std::abs(value_)) || value_.real() <= 0)
      throw BranchTrackingError("determinant at theta = 0 is not positive; cannot fix the square-root branch");
  }

  cplx advance_to(double target) {
    while (theta_ != target) {
      // continuity cannot be carried through a zero of the moment
      if (at_zero_)
        throw BranchTrackingError("square-root branch lost at the zero of the moment at theta = " +
                                  std::to_string(theta_) + "; track from theta = 0 on each side of it");
      double h = std::clamp(target - theta_, -max_step_, max_step_);
      for (;;) {
        double next = (std::abs(target - theta_) <= std::abs(h)) ? target : theta_ + h;
        cplx c = std::sqrt(p_.det(next));
        if (next == target && std::abs(c) <= zero_tol_) {
          // the target is a zero: both signs agree to within the tolerance
          value_ = c;
          theta_ = next;
          at_zero_ = true;
          break;
        }
        double dp = std::abs(c - value_), dm = std::abs(c + value_);
        if (std::min(dp, dm) <= 0.5 * std::max(dp, dm)) {
          value_ = dp <= dm ? c : -c;
          theta_ = next;
          break;
        }
        h /= 2;
        if (std::abs(h) < 1e-9)
          throw BranchTrackingError("square-root branch ambiguous near theta = " + std::to_string(theta_) +
                                    "; the moment nearly vanishes there, refine the theta step or avoid this point");
      }
    }
    return value_;
  }

 private:
  const MajoranaPieces& p_;
  double max_step_;
  double theta_ = 0.0;
  cplx value_;
  double zero_tol_ = 0.0;
  bool at_zero_ = false;
};

}  // namespace

MomentumState MomentumState::make(int N, std::vector<double> occupied) {
  if (N < 2 || N % 2) throw DomainError("chain length N must be even and >= 2, got " + std::to_string(N));
  std::set<long long> seen;
  for (double k : occupied) {
    if (!is_half_integer(k)) throw DomainError("momentum labels must be half-integers");
    long long key = (long long)std::llround(2 * k) % (2LL * N);
    if (key < 0) key += 2LL * N;
    if (!seen.insert(key).second) throw DomainError("momentum occupied twice (mod N)");
  }
  return MomentumState{N, std::move(occupied)};
}

MomentumState ground_state(int N) {
  std::vector<double> ks;
  for (int j = 0; j < N; ++j) ks.push_back(-N / 2.0 + 0.5 + j);
  std::stable_sort(ks.begin(), ks.end(), [](double a, double b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
  });
  ks.resize(N / 2);
  std::sort(ks.begin(), ks.end());
  return MomentumState::make(N, ks);
}

MatrixXcd orbitals(const MomentumState& s) {
  MatrixXcd u(s.N, s.particles());
  double norm = 1.0 / std::sqrt(double(s.N));
  for (int x = 0; x < s.N; ++x)
    for (int j = 0; j < s.particles(); ++j) u(x, j) = std::polar(norm, 2 * kPi * s.occupied[j] * (x + 1) / s.N);
  return u;
}

MatrixXcd correlation_matrix_c(const MomentumState& s, int ell) {
  check_ell(s, ell);
  MatrixXcd u = orbitals(s).topRows(ell);
  return u.conjugate() * u.transpose();
}

cplx lattice_g1(const MomentumState& s, int d) {
  double acc = 0;
  for (double k : s.occupied) acc += std::sin(2 * kPi * k * d / s.N);
  return cplx(0.0, 2.0 * acc / s.N);
}

cplx lattice_g2(const MomentumState& s, int d) {
  double acc = 0;
  for (double k : s.occupied) acc += std::cos(2 * kPi * k * d / s.N);
  return cplx(0.0, 2.0 * acc / s.N - (d == 0 ? 1.0 : 0.0));
}

MajoranaCorrelation correlation_matrix(const MomentumState& s, int ell) {
  check_ell(s, ell);
  std::vector<cplx> g1(2 * ell - 1), g2(2 * ell - 1);
  for (int d = -(ell - 1); d <= ell - 1; ++d) {
    g1[d + ell - 1] = lattice_g1(s, d);
    g2[d + ell - 1] = lattice_g2(s, d);
  }
  MatrixXcd g(2 * ell, 2 * ell);
  for (int m = 0; m < ell; ++m)
    for (int n = 0; n < ell; ++n) {
      int d = n - m + ell - 1;
      g(2 * m, 2 * n) = g1[d];
      g(2 * m + 1, 2 * n + 1) = g1[d];
      g(2 * m, 2 * n + 1) = g2[d];
      g(2 * m + 1, 2 * n) = -g2[d];
    }
  return {g};
}

MatrixXcd charge_matrix(int ell) {
  MatrixXcd q = MatrixXcd::Zero(2 * ell, 2 * ell);
  for (int m = 0; m < ell; ++m) {
    q(2 * m + 1, 2 * m) = cplx(0.0, -1.0);
    q(2 * m, 2 * m + 1) = cplx(0.0, 1.0);
  }
  return q;
}

std::vector<cplx> diagonal_charged_moment_grid(const MomentumState& s, int ell, const std::vector<double>& thetas,
                                               int n, double max_step) {
  MajoranaPieces p = pieces(s, ell, n);
  std::vector<std::size_t> order(thetas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return thetas[a] < thetas[b]; });
  std::vector<cplx> out(thetas.size());
  BranchTracker up(p, max_step), down(p, max_step);
  for (std::size_t i : order)
    if (thetas[i] >= 0) out[i] = up.advance_to(thetas[i]);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (thetas[*it] < 0) out[*it] = down.advance_to(thetas[*it]);
  return out;
}

cplx diagonal_charged_moment(const MomentumState& s, int ell, double theta, int n, double max_step) {
  return diagonal_charged_moment_grid(s, ell, {theta}, n, max_step)[0];
}

cplx diagonal_charged_moment_direct(const MomentumState& s, int ell, double theta, int n) {
  MatrixXcd c = correlation_matrix_c(s, ell);
  MatrixXcd id = MatrixXcd::Identity(ell, ell);
  MatrixXcd m = mpow(id - c, n) + std::polar(1.0, theta) * mpow(c, n);
  return m.partialPivLu().determinant() * std::polar(1.0, -theta * ell / 2.0);
}

cplx generalized_charged_moment(const std::vector<MomentumState>& states, int ell, double theta, int n) {
  if (n < 1) throw DomainError("replica index must be >= 1");
  if (int(states.size()) != 2 * n) throw DomainError("generalized moment of order n needs 2n states");
  const int N = states[0].N;
  const int P = states[0].particles();
  for (const auto& s : states)
    if (s.N != N || s.particles() != P)
      throw DomainError("all states must share chain length and particle number");
  check_ell(states[0], ell);

  // Ket copy c maps to bra copy c+1 on A; the last copy closes with (-1)^{n-1} e^{i theta}.
  const cplx twist = (n % 2 ? 1.0 : -1.0) * std::polar(1.0, theta);
  MatrixXcd m = MatrixXcd::Zero(n * P, n * P);
  for (int c = 0; c < n; ++c) {
    MatrixXcd ua = orbitals(states[2 * c]);
    MatrixXcd ub_same = orbitals(states[2 * c + 1]);
    int next = (c + 1) % n;
    MatrixXcd ub_next = orbitals(states[2 * next + 1]);
    cplx w = (c == n - 1) ? twist : cplx(1.0);
    // outside A the copy is traced with itself
    m.block(c * P, c * P, P, P) += ub_same.bottomRows(N - ell).adjoint() * ua.bottomRows(N - ell);
    m.block(next * P, c * P, P, P) += w * (ub_next.topRows(ell).adjoint() * ua.topRows(ell));
  }
  return m.partialPivLu().determinant() * std::polar(1.0, -theta * ell / 2.0);
}

std::vector<WeightedState> level2_lattice_states(int N) {
  if (N < 8 || N % 4) throw DomainError("the state dictionary needs N to be a multiple of 4 (N >= 8)");
  MomentumState g = ground_state(N);
  double kf = N / 4.0 - 0.5;
  auto replace = [&](double remove, double add) {
    std::vector<double> ks;
    for (double k : g.occupied)
      if (k != remove) ks.push_back(k);
    ks.push_back(add);
    std::sort(ks.begin(), ks.end());
    return MomentumState::make(N, ks);
  };
  std::vector<double> plus = g.occupied;
  plus.push_back(kf + 1);
  std::sort(plus.begin(), plus.end());
  return {
      {"ground", g, 1.0},
      {"dphi", replace(kf, kf + 1), 1.0},
      {"vertex", MomentumState::make(N, plus), 1.0},
      {"level2_two_holes_one_particle", replace(kf, kf + 2), 0.5},
      {"level2_one_hole_two_particles", replace(kf - 1, kf + 1), 0.5},
  };
}

cplx lattice_delta_z(const MomentumState& excited, int ell, double theta, int n, double max_step) {
  MomentumState g = ground_state(excited.N);
  std::vector<double> grid = {0.0, theta};
  auto e = diagonal_charged_moment_grid(excited, ell, grid, n, max_step);
  auto z = diagonal_charged_moment_grid(g, ell, grid, n, max_step);
  return e[1] / z[1] - e[0] / z[0];
}

}  // namespace srge
