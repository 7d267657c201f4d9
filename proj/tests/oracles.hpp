#pragma once

// Independent reference computations shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <random>
#include <vector>

#include "srge/xx_lattice.hpp"

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

struct Sheets {
  std::vector<cplx> y;
  std::vector<int> sigma;
  int n;
};

inline Sheets sheets(int n, double r) {
  if (n == 1) return {{std::polar(1.0, pi * r), std::polar(1.0, -pi * r)}, {1, -1}, 1};
  cplx w = std::polar(1.0, pi * r / 2);
  return {{w, std::conj(w), -w, -std::conj(w)}, {1, -1, 1, -1}, 2};
}

inline cplx kernel(const Sheets& g, int i, cplx z) {
  cplx y = g.y[i];
  if (g.n == 1) return z - std::conj(y);
  return (z * z - std::conj(y * y)) / (z + y);
}

// sigma_p sigma_q oint oint dz1 dz2 f_p^kp f_q^kq (-1/(z1-z2)^2) / ((z1-y_p)^kp (z2-y_q)^kq)
// by the trapezoid rule on circles.  For p == q the z2 circle sits inside the z1 circle.
// Sheets are 1-based.
inline cplx pair_value_quadrature(int n, int p, int kp, int q, int kq, double r, double radius = 0.05,
                                  int nodes = 4096) {
  Sheets g = sheets(n, r);
  --p;
  --q;
  const double r1 = radius, r2 = p == q ? radius / 2 : radius;
  std::vector<cplx> z1(nodes), w1(nodes), z2(nodes), w2(nodes);
  for (int j = 0; j < nodes; ++j) {
    cplx e = std::polar(1.0, 2 * pi * j / nodes);
    z1[j] = g.y[p] + r1 * e;
    z2[j] = g.y[q] + r2 * e;
    cplx dz1 = cplx(0, 2 * pi / nodes) * r1 * e;
    cplx dz2 = cplx(0, 2 * pi / nodes) * r2 * e;
    w1[j] = dz1 * std::pow(kernel(g, p, z1[j]), kp) / std::pow(z1[j] - g.y[p], kp);
    w2[j] = dz2 * std::pow(kernel(g, q, z2[j]), kq) / std::pow(z2[j] - g.y[q], kq);
  }
  cplx acc(0.0);
  for (int a = 0; a < nodes; ++a) {
    cplx row(0.0);
    for (int b = 0; b < nodes; ++b) {
      cplx d = z1[a] - z2[b];
      row -= w2[b] / (d * d);
    }
    acc += w1[a] * row;
  }
  return double(g.sigma[p] * g.sigma[q]) * acc;
}

// (-1/2pi)(-sigma) oint f^k (z-y)^{-k} J(z) dz with the one-point function
// J(z) = -i beta theta/(2 pi z) - i sum_mu a_mu/(z - y_mu); returned as (c0, c1) in theta.
inline std::pair<cplx, cplx> vertex_quadrature(int n, double r, int sheet, int k, double beta,
                                               const std::vector<double>& alphas_eff, int nodes = 512) {
  Sheets g = sheets(n, r);
  const double rad = 0.05;
  cplx c0(0.0), c1(0.0);
  const cplx I(0, 1);
  for (int j = 0; j < nodes; ++j) {
    cplx e = std::polar(1.0, 2 * pi * j / nodes);
    cplx z = g.y[sheet] + rad * e;
    cplx w = I * (2 * pi / nodes) * rad * e * std::pow(kernel(g, sheet, z), k) / std::pow(z - g.y[sheet], k);
    cplx ja(0.0);
    for (std::size_t mu = 0; mu < g.y.size(); ++mu) ja += -I * alphas_eff[mu] / (z - g.y[mu]);
    c0 += w * ja;
    c1 += w * (-I * beta / (2 * pi * z));
  }
  double pre = -1 / (2 * pi) * -double(g.sigma[sheet]);
  return {pre * c0, pre * c1};
}

// Chiral moment without the vertex prefactor: normalization times the sum over Wick
// contractions, each ingredient integrated on circles.  lists are the mode lists per sheet.
inline cplx chiral_moment_quadrature(int n, double r, double beta, const std::vector<std::vector<int>>& lists,
                                     const std::vector<double>& alphas_eff, double theta, int nodes = 256) {
  struct M {
    int sheet, k;
  };
  std::vector<M> modes;
  double norm = 1;
  for (std::size_t s = 0; s < lists.size(); ++s) {
    std::vector<int> seen;
    for (int k : lists[s]) {
      modes.push_back({int(s), k});
      seen.push_back(k);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size();) {
      std::size_t j = i;
      while (j < seen.size() && seen[j] == seen[i]) ++j;
      norm /= std::pow(double(seen[i]), (j - i) / 2.0) * std::sqrt(std::tgamma(double(j - i + 1)));
      i = j;
    }
  }
  const int m = int(modes.size());
  std::vector<cplx> v(m);
  for (int a = 0; a < m; ++a) {
    auto [c0, c1] = vertex_quadrature(n, r, modes[a].sheet, modes[a].k, beta, alphas_eff);
    v[a] = c0 + c1 * theta;
  }
  std::vector<std::vector<cplx>> d(m, std::vector<cplx>(m));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      d[a][b] = d[b][a] = pair_value_quadrature(n, modes[a].sheet + 1, modes[a].k, modes[b].sheet + 1, modes[b].k,
                                                r, 0.05, nodes) /
                          (4 * pi * pi);
  // sum over subsets contracted with vertices; the rest fully paired
  std::function<cplx(std::vector<int>)> haf = [&](std::vector<int> rest) -> cplx {
    if (rest.empty()) return 1.0;
    if (rest.size() % 2) return 0.0;
    cplx s(0.0);
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<int> next;
      for (std::size_t t = 1; t < rest.size(); ++t)
        if (t != j) next.push_back(rest[t]);
      s += d[rest[0]][rest[j]] * haf(next);
    }
    return s;
  };
  cplx total(0.0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    cplx pv(1.0);
    std::vector<int> rest;
    for (int a = 0; a < m; ++a) {
      if (mask >> a & 1u)
        pv *= v[a];
      else
        rest.push_back(a);
    }
    total += pv * haf(rest);
  }
  return norm * total;
}

// Random antiperiodic occupation with P particles among half-integer momenta of a chain of N sites.
inline srge::MomentumState random_state(int N, int P, std::mt19937& rng) {
  std::vector<double> ks;
  for (int j = 0; j < N; ++j) ks.push_back(-N / 2.0 + 0.5 + j);
  std::shuffle(ks.begin(), ks.end(), rng);
  ks.resize(P);
  return srge::MomentumState::make(N, ks);
}

// sum_j c_j theta^j
inline cplx horner(const std::vector<cplx>& c, double t) {
  cplx s(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * t + *it;
  return s;
}

}  // namespace oracle
