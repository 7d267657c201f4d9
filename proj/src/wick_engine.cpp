#include "srge/wick_engine.hpp"

#include <bit>
#include <cmath>

namespace srge {

TaylorSeries::TaylorSeries(cplx center, std::vector<cplx> coeffs) : center_(center), c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("TaylorSeries needs at least one coefficient");
}

TaylorSeries TaylorSeries::constant(cplx center, cplx value, int order) {
  std::vector<cplx> c(order + 1, cplx(0.0));
  c[0] = value;
  return TaylorSeries(center, std::move(c));
}

TaylorSeries TaylorSeries::identity(cplx center, int order) {
  std::vector<cplx> c(order + 1, cplx(0.0));
  c[0] = center;
  if (order >= 1) c[1] = 1.0;
  return TaylorSeries(center, std::move(c));
}

void TaylorSeries::check_compatible(const TaylorSeries& o) const {
  if (center_ != o.center_) throw DomainError("TaylorSeries centers differ");
}

TaylorSeries TaylorSeries::operator+(const TaylorSeries& o) const {
  check_compatible(o);
  std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<cplx> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = c_[j] + o.c_[j];
  return TaylorSeries(center_, std::move(c));
}

TaylorSeries TaylorSeries::operator-(const TaylorSeries& o) const { return *this + o * cplx(-1.0); }

TaylorSeries TaylorSeries::operator*(const TaylorSeries& o) const {
  check_compatible(o);
  std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<cplx> c(n, cplx(0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += c_[i] * o.c_[j];
  return TaylorSeries(center_, std::move(c));
}

TaylorSeries TaylorSeries::operator*(cplx s) const {
  std::vector<cplx> c = c_;
  for (auto& x : c) x *= s;
  return TaylorSeries(center_, std::move(c));
}

TaylorSeries TaylorSeries::operator+(cplx s) const {
  std::vector<cplx> c = c_;
  c[0] += s;
  return TaylorSeries(center_, std::move(c));
}

TaylorSeries TaylorSeries::operator-(cplx s) const { return *this + (-s); }

TaylorSeries TaylorSeries::reciprocal() const {
  if (c_[0] == cplx(0.0)) throw DomainError("reciprocal of a series with vanishing constant term");
  std::vector<cplx> r(c_.size(), cplx(0.0));
  r[0] = 1.0 / c_[0];
  for (std::size_t n = 1; n < c_.size(); ++n) {
    cplx s(0.0);
    for (std::size_t j = 1; j <= n; ++j) s += c_[j] * r[n - j];
    r[n] = -s / c_[0];
  }
  return TaylorSeries(center_, std::move(r));
}

TaylorSeries TaylorSeries::pow(int k) const {
  if (k < 0) return reciprocal().pow(-k);
  TaylorSeries out = constant(center_, 1.0, order());
  TaylorSeries base = *this;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

cplx deriv_at(const TaylorSeries& f, int order) {
  if (order < 0 || order > f.order())
    throw DomainError("series order " + std::to_string(f.order()) + " insufficient for derivative of order " +
                      std::to_string(order));
  return std::tgamma(order + 1.0) * f.coeffs()[order];
}

ContractionSplit split_from_mask(int m, std::uint32_t vertex_mask) {
  ContractionSplit s;
  for (int i = 0; i < m; ++i) ((vertex_mask >> i) & 1u ? s.vertex_set : s.pair_set).push_back(i);
  return s;
}

std::vector<ContractionSplit> splits(int m, int max_modes) {
  check_mode_budget(std::size_t(m), max_modes);
  std::vector<ContractionSplit> out;
  out.reserve(std::size_t(1) << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) out.push_back(split_from_mask(m, mask));
  return out;
}

std::vector<Pairing> perfect_matchings(const std::vector<int>& positions) {
  std::vector<Pairing> out;
  for_each_perfect_matching(positions, [&](const Pairing& p) { out.push_back(p); });
  return out;
}

SheetGeometry SheetGeometry::make(int n, double r) {
  if (n != 1 && n != 2) throw DomainError("only n = 1 and n = 2 sheet geometries are available");
  if (!(r > 0 && r < 1)) throw DomainError("ratio r must lie in (0,1)");
  SheetGeometry g;
  g.n = n;
  g.r = r;
  if (n == 1) {
    g.y = {std::polar(1.0, kPi * r), std::polar(1.0, -kPi * r)};
    g.sigma = {1, -1};
  } else {
    cplx a = std::polar(1.0, kPi * r / 2);
    g.y = {a, std::conj(a), -a, -std::conj(a)};
    g.sigma = {1, -1, 1, -1};
  }
  return g;
}

TaylorSeries SheetGeometry::kernel_power(int sheet, int k, int order) const {
  cplx yi = y.at(sheet);
  TaylorSeries z = TaylorSeries::identity(yi, order);
  TaylorSeries f = (n == 1) ? z - std::conj(yi) : (z * z - std::conj(yi * yi)) * (z + yi).reciprocal();
  return f.pow(k);
}

cplx pair_value(const SheetGeometry& g, int p, int kp, int q, int kq) {
  const cplx two_pi_i(0.0, 2 * kPi);
  int ord = kp + kq + 1;
  TaylorSeries Gp = g.kernel_power(p, kp, ord);
  TaylorSeries Gq = g.kernel_power(q, kq, ord);
  cplx sp = -double(g.sigma[p]) * two_pi_i;
  cplx sq = -double(g.sigma[q]) * two_pi_i;
  if (p != q) {
    // Inner residue at y_q leaves h(z1) = -sum (n+1) Gq[kq-1-n] (z1-y_q)^{-n-2}.
    cplx yp = g.y[p];
    TaylorSeries inv = (TaylorSeries::identity(yp, ord) - g.y[q]).reciprocal();
    TaylorSeries h = TaylorSeries::constant(yp, 0.0, ord);
    for (int n = 0; n < kq; ++n) h = h + inv.pow(n + 2) * (-(n + 1.0) * Gq[kq - 1 - n]);
    return sp * sq * (Gp * h)[kp - 1];
  }
  cplx s(0.0);
  for (int n = 0; n < kq; ++n) s += -(n + 1.0) * Gq[kq - 1 - n] * Gp[kp + n + 1];
  return sp * sq * s;
}

cplx pair_value_n1(int p, int r_idx, int kp, int kr) {
  if (p < 1 || p > 2 || r_idx < 1 || r_idx > 2) throw DomainError("n=1 sheet index must be 1 or 2");
  if (p != r_idx && kp == kr) return 4 * kPi * kPi * kp;
  return 0.0;
}

cplx pair_value_n2(int p, int r_idx, int kp, int kr, double r) {
  if (p < 1 || p > 4 || r_idx < 1 || r_idx > 4) throw DomainError("n=2 sheet index must be in 1..4");
  return pair_value(SheetGeometry::make(2, r), p - 1, kp, r_idx - 1, kr);
}

VertexTerm vertex_term(const SheetGeometry& g, int sheet, int k, double beta, const std::vector<double>& alphas_eff) {
  const cplx I(0.0, 1.0);
  cplx yi = g.y[sheet];
  int ord = k + 1;
  TaylorSeries G = g.kernel_power(sheet, k, ord);
  TaylorSeries z = TaylorSeries::identity(yi, ord);
  // flux pair at 0 and infinity: J(z) = -i (beta theta / 2pi) / z
  cplx t = (G * z.reciprocal())[k - 1] * (-I * beta / (2 * kPi));
  cplx a(0.0);
  for (int mu = 0; mu < g.sheets(); ++mu) {
    if (mu == sheet) continue;
    a += (G * (TaylorSeries::constant(yi, g.y[mu], ord) - z).reciprocal())[k - 1] * I * alphas_eff[mu];
  }
  a += -I * alphas_eff[sheet] * G[k];
  cplx orient = -double(g.sigma[sheet]) * 2.0 * kPi * I;
  double pre = -1.0 / (2 * kPi);
  return {pre * orient * a, pre * orient * t};
}

std::vector<cplx> assemble_contractions(const std::vector<VertexTerm>& v, const std::vector<std::vector<cplx>>& pair) {
  const int m = int(v.size());
  check_mode_budget(v.size());
  const std::uint32_t full = (1u << m) - 1;
  const std::size_t states = std::size_t(1) << m;

  std::vector<cplx> haf(states, cplx(0.0));
  haf[0] = 1.0;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    if (std::popcount(mask) % 2) continue;
    int f = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << f);
    cplx s(0.0);
    for (std::uint32_t bits = rest; bits; bits &= bits - 1) {
      int l = std::countr_zero(bits);
      s += pair[f][l] * haf[rest & ~(1u << l)];
    }
    haf[mask] = s;
  }

  const std::size_t width = std::size_t(m) + 1;
  std::vector<cplx> vprod(states * width, cplx(0.0));
  vprod[0] = 1.0;
  std::vector<cplx> out(width, cplx(0.0));
  for (std::uint32_t mask = 0;; ++mask) {
    if (mask) {
      int f = std::countr_zero(mask);
      const cplx* prev = &vprod[std::size_t(mask & (mask - 1)) * width];
      cplx* cur = &vprod[std::size_t(mask) * width];
      for (std::size_t j = 0; j < width; ++j) {
        cur[j] += prev[j] * v[f].c0;
        if (j + 1 < width) cur[j + 1] += prev[j] * v[f].c1;
      }
    }
    cplx h = haf[full & ~mask];
    if (h != cplx(0.0)) {
      const cplx* cur = &vprod[std::size_t(mask) * width];
      for (std::size_t j = 0; j < width; ++j) out[j] += cur[j] * h;
    }
    if (mask == full) break;
  }
  return out;
}

std::vector<Mode> flatten_modes(const std::vector<ChiralModeList>& lists) {
  std::vector<Mode> out;
  for (std::size_t i = 0; i < lists.size(); ++i)
    for (int k : lists[i].modes()) out.push_back({int(i), k});
  return out;
}

void check_mode_budget(std::size_t m, int max_modes) {
  if (m > std::size_t(max_modes))
    throw DomainError("total number of oscillator modes " + std::to_string(m) + " exceeds the bound " +
                      std::to_string(max_modes));
}

}  // namespace srge
