#include "srge/moments_n1.hpp"

#include <cmath>

#include "srge/wick_engine.hpp"

namespace srge {

namespace {

ModulatedPolynomial finish(std::vector<cplx> coeffs, double rate, double norm) {
  ModulatedPolynomial p;
  p.rate = rate;
  for (auto& c : coeffs) c *= norm;
  p.coeffs = std::move(coeffs);
  return p;
}

cplx xi_phase(const std::vector<ChiralModeList>& lists, const std::vector<int>& sigma, double v_over_L) {
  double s = 0;
  for (std::size_t i = 0; i < lists.size(); ++i) s += sigma[i] * lists[i].level();
  return std::polar(1.0, 2 * kPi * v_over_L * s);
}

}  // namespace

ModulatedPolynomial f1_chiral(const ModelParams& params, double r, const ChiralModeList& modes_in,
                              const ChiralModeList& modes_out, double alpha, std::optional<double> v_over_L) {
  if (!(r > 0 && r < 1)) throw DomainError("ratio r must lie in (0,1)");
  std::vector<Mode> modes = flatten_modes({modes_in, modes_out});
  check_mode_budget(modes.size());
  const int sigma[2] = {1, -1};
  const double beta = params.beta;

  std::vector<VertexTerm> v;
  for (auto md : modes) {
    int s = sigma[md.sheet];
    cplx L = double(s) * beta * (std::polar(1.0, -2 * kPi * s * r * md.k) - 1.0);
    v.push_back({0.0, -L / (2 * kPi)});
  }
  std::vector<std::vector<cplx>> pair(modes.size(), std::vector<cplx>(modes.size(), 0.0));
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = 0; b < modes.size(); ++b)
      if (a != b)
        pair[a][b] = pair_value_n1(modes[a].sheet + 1, modes[b].sheet + 1, modes[a].k, modes[b].k) / (4 * kPi * kPi);

  double norm = normalization_factor(modes_in) * normalization_factor(modes_out);
  ModulatedPolynomial p = finish(assemble_contractions(v, pair), beta * r * alpha, norm);
  if (v_over_L) p = scale_modulated(p, xi_phase({modes_in, modes_out}, {1, -1}, *v_over_L));
  return p;
}

ModulatedPolynomial f1_chiral_residue(const ModelParams& params, double r, const ChiralModeList& modes_in,
                                      const ChiralModeList& modes_out, double alpha) {
  SheetGeometry g = SheetGeometry::make(1, r);
  std::vector<Mode> modes = flatten_modes({modes_in, modes_out});
  check_mode_budget(modes.size());
  std::vector<double> alphas_eff = {alpha, -alpha};
  std::vector<VertexTerm> v;
  for (auto md : modes) v.push_back(vertex_term(g, md.sheet, md.k, params.beta, alphas_eff));
  std::vector<std::vector<cplx>> pair(modes.size(), std::vector<cplx>(modes.size(), 0.0));
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = 0; b < modes.size(); ++b)
      if (a != b) pair[a][b] = pair_value(g, modes[a].sheet, modes[a].k, modes[b].sheet, modes[b].k) / (4 * kPi * kPi);
  double norm = normalization_factor(modes_in) * normalization_factor(modes_out);
  return finish(assemble_contractions(v, pair), params.beta * r * alpha, norm);
}

ModulatedPolynomial f1_full(const N1Request& req) {
  const double beta = req.params.beta;
  const BosonState& a = req.psi_in;
  const BosonState& b = req.psi_out;
  if (a.n != b.n || a.m != b.m) return ModulatedPolynomial::zero();
  double r = req.geometry.ratio;
  std::optional<double> vl;
  if (!req.zero_momentum_convention) vl = req.v_over_L;
  ModulatedPolynomial left = f1_chiral(req.params, r, a.left, b.left, a.alpha(beta), vl);
  ModulatedPolynomial right = conj_modulated(f1_chiral(req.params, r, a.right, b.right, a.alphabar(beta), vl));
  return mul_modulated(left, right);
}

ModulatedPolynomial f1_excited_diagonal(const ModelParams& params, double r, const BosonState& state) {
  const double beta = params.beta;
  auto chiral = [&](const ChiralModeList& l) {
    ModulatedPolynomial p;
    for (auto [k, nk] : l.multiplicities()) {
      // sum_m C(n,m)/m! (-x)^m,  x = beta^2 theta^2 sin^2(k pi r)/(pi^2 k)
      double s = std::sin(k * kPi * r);
      double x = beta * beta * s * s / (kPi * kPi * k);
      ModulatedPolynomial f;
      f.coeffs.assign(2 * nk + 1, cplx(0.0));
      double binom = 1, fact = 1;
      for (int m = 0; m <= nk; ++m) {
        if (m > 0) {
          binom = binom * (nk - m + 1) / m;
          fact *= m;
        }
        f.coeffs[2 * m] = binom / fact * std::pow(-x, m);
      }
      p = mul_modulated(p, f);
    }
    return p;
  };
  ModulatedPolynomial left = chiral(state.left);
  left.rate = beta * r * state.alpha(beta);
  ModulatedPolynomial right = chiral(state.right);
  right.rate = beta * r * state.alphabar(beta);
  return mul_modulated(left, conj_modulated(right));
}

cplx delta_z1(const ModelParams& params, double r, double theta) {
  ChiralModeList l11{1, 1}, l2{2};
  auto F = [&](const ChiralModeList& a, const ChiralModeList& b) {
    return eval_modulated(f1_chiral(params, r, a, b, 0.0), theta);
  };
  return 0.5 * (F(l11, l11) + F(l2, l2)) + F(l11, l2) - 1.0;
}

}  // namespace srge
