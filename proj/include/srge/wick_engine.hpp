#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "srge/core_types.hpp"

namespace srge {

inline constexpr int kMaxModes = 14;

// Truncated power series in (z - center).
class TaylorSeries {
 public:
  TaylorSeries(cplx center, std::vector<cplx> coeffs);

  static TaylorSeries constant(cplx center, cplx value, int order);
  static TaylorSeries identity(cplx center, int order);  // the function z

  cplx center() const { return center_; }
  int order() const { return int(c_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx operator[](int j) const { return j <= order() ? c_[j] : cplx(0.0); }

  TaylorSeries operator+(const TaylorSeries& o) const;
  TaylorSeries operator-(const TaylorSeries& o) const;
  TaylorSeries operator*(const TaylorSeries& o) const;
  TaylorSeries operator*(cplx s) const;
  TaylorSeries operator+(cplx s) const;
  TaylorSeries operator-(cplx s) const;
  TaylorSeries reciprocal() const;
  TaylorSeries pow(int k) const;

 private:
  cplx center_;
  std::vector<cplx> c_;
  void check_compatible(const TaylorSeries& o) const;
};

// order-th derivative at the center.
cplx deriv_at(const TaylorSeries& f, int order);

struct ContractionSplit {
  std::vector<int> vertex_set;
  std::vector<int> pair_set;
};

// All 2^m positional splits, indexed by the bitmask of the vertex set.
std::vector<ContractionSplit> splits(int m, int max_modes = kMaxModes);
ContractionSplit split_from_mask(int m, std::uint32_t vertex_mask);

using Pairing = std::vector<std::pair<int, int>>;

// All (2l-1)!! pairings of the given positions; empty result for odd size.
std::vector<Pairing> perfect_matchings(const std::vector<int>& positions);

template <class F>
void for_each_perfect_matching(const std::vector<int>& positions, F&& f) {
  if (positions.size() % 2) return;
  Pairing cur;
  std::vector<int> rest = positions;
  auto rec = [&](auto&& self, std::vector<int>& pool) -> void {
    if (pool.empty()) {
      f(static_cast<const Pairing&>(cur));
      return;
    }
    int first = pool[0];
    for (std::size_t j = 1; j < pool.size(); ++j) {
      std::vector<int> next;
      next.reserve(pool.size() - 2);
      for (std::size_t t = 1; t < pool.size(); ++t)
        if (t != j) next.push_back(pool[t]);
      cur.emplace_back(first, pool[j]);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, rest);
}

// Insertion points y_i, orientations sigma_i and conformal kernels f_i for the
// n-sheeted geometry (n = 1 or 2).  Sheets are 0-based here.
struct SheetGeometry {
  int n = 1;
  double r = 0.5;
  std::vector<cplx> y;
  std::vector<int> sigma;

  static SheetGeometry make(int n, double r);
  int sheets() const { return int(y.size()); }
  // Series of f_i(z)^k around y_i, f = z - conj(y) (n=1) or (z^2 - conj(y^2))/(z + y) (n=2).
  TaylorSeries kernel_power(int sheet, int k, int order) const;
};

// Double-contour residue of <d phi d phi> between modes (p,kp) and (q,kq), including
// orientation signs.  Sheets 0-based.  Closed form for n = 1: 4 pi^2 k delta.
cplx pair_value(const SheetGeometry& g, int p, int kp, int q, int kq);

// Sheet indices 1-based, as in the physics notation.
cplx pair_value_n1(int p, int r_idx, int kp, int kr);
cplx pair_value_n2(int p, int r_idx, int kp, int kr, double r);

// Contraction of a mode with the vertex and flux insertions, as c0 + c1 theta.
// The (-1/2pi) Wick prefactor is included.  alphas_eff are the signed charges
// (alpha1, -alpha2[, alpha3, -alpha4]).
struct VertexTerm {
  cplx c0;
  cplx c1;
};
VertexTerm vertex_term(const SheetGeometry& g, int sheet, int k, double beta,
                       const std::vector<double>& alphas_eff);

// Sum over all splits of prod(vertex terms) * sum over pairings of prod(pair terms).
// pair(a,b) must already carry the (-1/2pi)^2 prefactor.  Returns theta coefficients.
std::vector<cplx> assemble_contractions(const std::vector<VertexTerm>& v,
                                        const std::vector<std::vector<cplx>>& pair);

struct Mode {
  int sheet;
  int k;
};
std::vector<Mode> flatten_modes(const std::vector<ChiralModeList>& lists);
void check_mode_budget(std::size_t m, int max_modes = kMaxModes);

}  // namespace srge
