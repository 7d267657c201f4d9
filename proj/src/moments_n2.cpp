#include "srge/moments_n2.hpp"

#include <cmath>

#include "srge/wick_engine.hpp"

namespace srge {

namespace {

void check_balance(const std::array<double, 4>& a) {
  if (std::abs(a[0] + a[2] - a[1] - a[3]) > 1e-12)
    throw DomainError("charge balance alpha1 + alpha3 = alpha2 + alpha4 violated");
}

ModulatedPolynomial assemble(const std::vector<Mode>& modes, const std::vector<VertexTerm>& v, double r,
                             const std::array<ChiralModeList, 4>& lists) {
  SheetGeometry g = SheetGeometry::make(2, r);
  std::vector<std::vector<cplx>> pair(modes.size(), std::vector<cplx>(modes.size(), 0.0));
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = a + 1; b < modes.size(); ++b)
      pair[a][b] = pair[b][a] =
          pair_value(g, modes[a].sheet, modes[a].k, modes[b].sheet, modes[b].k) / (4 * kPi * kPi);
  double norm = 1;
  for (auto& l : lists) norm *= normalization_factor(l);
  ModulatedPolynomial p;
  p.coeffs = assemble_contractions(v, pair);
  for (auto& c : p.coeffs) c *= norm;
  return p;
}

ModulatedPolynomial apply_prefactor(ModulatedPolynomial p, const KPrefactor& k) {
  p = scale_modulated(p, k.scale);
  p.rate = k.rate;
  return p;
}

cplx xi_phase(const std::array<ChiralModeList, 4>& lists, double v_over_L) {
  double s = lists[0].level() - lists[1].level() + lists[2].level() - lists[3].level();
  return std::polar(1.0, 2 * kPi * v_over_L * s);
}

}  // namespace

KPrefactor k_prefactor(const ModelParams& params, double r, double v_over_L, const std::array<double, 4>& a) {
  check_balance(a);
  if (!(r > 0 && r < 1)) throw DomainError("ratio r must lie in (0,1)");
  const cplx I(0.0, 1.0);
  double d12 = a[0] - a[1], d23 = a[1] - a[2];
  cplx scale = std::exp(I * kPi * r * (a[1] - a[0]) * (a[1] - a[2]));
  scale *= std::exp(I * kPi * v_over_L * (a[0] * a[0] + a[2] * a[2] - a[1] * a[1] - a[3] * a[3]));
  scale *= std::pow(std::cos(kPi * r / 2), d23 * d23);
  scale *= std::pow(std::sin(kPi * r / 2), d12 * d12);
  double rate = params.beta * (r * (a[0] + a[2]) + a[2] - a[3]) / 2;
  return {scale, rate};
}

ModulatedPolynomial f2_chiral(const ModelParams& params, double r, const std::array<ChiralModeList, 4>& modes,
                              const std::array<double, 4>& alphas, std::optional<double> v_over_L) {
  KPrefactor k = k_prefactor(params, r, v_over_L.value_or(0.0), alphas);
  std::vector<Mode> flat = flatten_modes({modes.begin(), modes.end()});
  check_mode_budget(flat.size());
  SheetGeometry g = SheetGeometry::make(2, r);
  std::vector<double> eff = {alphas[0], -alphas[1], alphas[2], -alphas[3]};
  std::vector<VertexTerm> v;
  for (auto md : flat) v.push_back(vertex_term(g, md.sheet, md.k, params.beta, eff));
  ModulatedPolynomial p = apply_prefactor(assemble(flat, v, r, modes), k);
  if (v_over_L) p = scale_modulated(p, xi_phase(modes, *v_over_L));
  return p;
}

std::pair<long long, long long> half_system_coefficient(int s) {
  static const std::pair<long long, long long> table[] = {{1, 2},     {1, 4},      {3, 16},
                                                          {5, 32},    {35, 256},   {63, 512},
                                                          {231, 2048}, {429, 4096}, {6435, 65536}};
  if (s < 0) throw DomainError("c_s needs s >= 0");
  if (s < 9) return table[s];
  if (s > 28) throw DomainError("c_s beyond s = 28 overflows the exact representation");
  // C(2s,s)/2^{2s+1}, reduced
  long long num = 1;
  for (int j = 1; j <= s; ++j) num = num * (s + j) / j;
  long long den = 1LL << (2 * s + 1);
  while (num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  return {num, den};
}

ModulatedPolynomial f2_chiral_half(const ModelParams& params, const std::array<ChiralModeList, 4>& modes,
                                   const std::array<double, 4>& a) {
  const double r = 0.5;
  KPrefactor kp = k_prefactor(params, r, 0.0, a);
  std::vector<Mode> flat = flatten_modes({modes.begin(), modes.end()});
  check_mode_budget(flat.size());
  const cplx I(0.0, 1.0);
  auto c = [](int s) {
    auto [p, q] = half_system_coefficient(s);
    return double(p) / double(q);
  };
  // g2 on sheets 1,2; sheets 3,4 carry the opposite sign.
  auto g2 = [&](int sheet, int k) -> cplx {
    double sign = sheet >= 2 ? -1.0 : 1.0;
    int base = sheet % 2;
    bool odd = k % 2;
    int s = odd ? (k - 1) / 2 : k / 2;
    cplx val;
    if (base == 0)
      val = odd ? 2 * kPi * I * c(s) * (a[1] - a[3]) : cplx(2 * kPi * c(s) * (a[0] - a[2]));
    else
      val = odd ? 2 * kPi * I * c(s) * (a[0] - a[2]) : cplx(-2 * kPi * c(s) * (a[1] - a[3]));
    return sign * val;
  };
  const int sigma[4] = {1, -1, 1, -1};
  std::vector<VertexTerm> v;
  for (auto md : flat) {
    double g1 = (md.k % 2) ? params.beta : 0.0;
    v.push_back({double(sigma[md.sheet]) * g2(md.sheet, md.k) / (2 * kPi), cplx(sigma[md.sheet] * g1 / (2 * kPi))});
  }
  return apply_prefactor(assemble(flat, v, r, modes), kp);
}

ModulatedPolynomial f2_full(const N2Request& req) {
  const double beta = req.params.beta;
  std::array<double, 4> al, ab;
  std::array<ChiralModeList, 4> lm, rm;
  for (int i = 0; i < 4; ++i) {
    al[i] = req.psi[i].alpha(beta);
    ab[i] = req.psi[i].alphabar(beta);
    lm[i] = req.psi[i].left;
    rm[i] = req.psi[i].right;
  }
  if (std::abs(al[0] + al[2] - al[1] - al[3]) > 1e-12 || std::abs(ab[0] + ab[2] - ab[1] - ab[3]) > 1e-12)
    return ModulatedPolynomial::zero();
  std::optional<double> vl;
  if (!req.zero_momentum_convention) vl = req.v_over_L;
  double r = req.geometry.ratio;
  ModulatedPolynomial left = f2_chiral(req.params, r, lm, al, vl);
  ModulatedPolynomial right = conj_modulated(f2_chiral(req.params, r, rm, ab, vl));
  return mul_modulated(left, right);
}

cplx level2_z2_ratio(const ModelParams& params, double r, double theta) {
  ChiralModeList A{1, 1}, B{2};
  const std::array<double, 4> zero{0, 0, 0, 0};
  auto F = [&](const ChiralModeList& a, const ChiralModeList& b, const ChiralModeList& c, const ChiralModeList& d) {
    return eval_modulated(f2_chiral(params, r, {a, b, c, d}, zero), theta);
  };
  return F(A, A, A, B) + F(A, B, B, B) +
         0.25 * (2.0 * F(A, B, B, A) + 2.0 * F(A, A, B, B) + 2.0 * F(A, B, A, B) + F(A, A, A, A) + F(B, B, B, B));
}

cplx delta_z2(const ModelParams& params, double r, double theta) {
  return level2_z2_ratio(params, r, theta) - level2_z2_ratio(params, r, 0.0);
}

}  // namespace srge
