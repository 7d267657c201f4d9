#include "srge/core_types.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace srge {

ParseError::ParseError(std::size_t pos, const std::string& expected, const std::string& found)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": expected " + expected +
                         ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'")),
      pos_(pos),
      expected_(expected) {}

Geometry Geometry::make(double total_length, double ratio, double cutoff_ratio) {
  if (!(total_length > 0)) throw DomainError("total length must be positive");
  if (!(ratio > 0 && ratio < 1)) throw DomainError("ratio r must lie in (0,1)");
  if (!(cutoff_ratio > 1)) throw DomainError("cutoff ratio l/eps must exceed 1");
  Geometry g;
  g.total_length = total_length;
  g.ratio = ratio;
  g.cutoff_ratio = cutoff_ratio;
  g.chord_length = total_length / kPi * std::sin(kPi * ratio);
  return g;
}

double Geometry::log_cutoff() const { return std::log(cutoff_ratio); }

ModelParams ModelParams::make(double beta) {
  if (!(beta > 0)) throw DomainError("beta must be positive");
  ModelParams p;
  p.beta = beta;
  return p;
}

ChiralModeList::ChiralModeList(std::initializer_list<int> modes) : ChiralModeList(std::vector<int>(modes)) {}

ChiralModeList::ChiralModeList(std::vector<int> modes) : modes_(std::move(modes)) {
  for (int k : modes_)
    if (k < 1) throw DomainError("mode index must be a positive integer, got " + std::to_string(k));
}

int ChiralModeList::level() const {
  int s = 0;
  for (int k : modes_) s += k;
  return s;
}

std::map<int, int> ChiralModeList::multiplicities() const {
  std::map<int, int> out;
  for (int k : modes_) ++out[k];
  return out;
}

ModulatedPolynomial ModulatedPolynomial::zero() {
  ModulatedPolynomial p;
  p.coeffs = {cplx(0.0)};
  p.selection_zero = true;
  return p;
}

double normalization_factor(const ChiralModeList& modes) {
  double v = 1.0;
  for (auto [k, c] : modes.multiplicities()) v /= std::pow(double(k), c / 2.0) * std::sqrt(std::tgamma(c + 1.0));
  return v;
}

cplx eval_modulated(const ModulatedPolynomial& p, double theta) {
  cplx acc(0.0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * theta + *it;
  return std::polar(1.0, p.rate * theta) * acc;
}

ModulatedPolynomial mul_modulated(const ModulatedPolynomial& p, const ModulatedPolynomial& q) {
  ModulatedPolynomial out;
  out.rate = p.rate + q.rate;
  out.selection_zero = p.selection_zero || q.selection_zero;
  if (p.coeffs.empty() || q.coeffs.empty()) {
    out.coeffs = {cplx(0.0)};
    return out;
  }
  out.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) out.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  return out;
}

ModulatedPolynomial scale_modulated(const ModulatedPolynomial& p, cplx s) {
  ModulatedPolynomial out = p;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

ModulatedPolynomial add_modulated(const ModulatedPolynomial& p, const ModulatedPolynomial& q) {
  if (p.selection_zero) return q;
  if (q.selection_zero) return p;
  if (std::abs(p.rate - q.rate) > 1e-14)
    throw DomainError("cannot add modulated polynomials with different phase rates");
  ModulatedPolynomial out;
  out.rate = p.rate;
  out.coeffs.assign(std::max(p.coeffs.size(), q.coeffs.size()), cplx(0.0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) out.coeffs[i] += p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) out.coeffs[i] += q.coeffs[i];
  return out;
}

ModulatedPolynomial conj_modulated(const ModulatedPolynomial& p) {
  ModulatedPolynomial out = p;
  out.rate = -p.rate;
  for (auto& c : out.coeffs) c = std::conj(c);
  return out;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  BosonState run() {
    BosonState st;
    st.left = ChiralModeList(list('L'));
    expect(';');
    st.right = ChiralModeList(list('R'));
    expect(';');
    st.n = integer_field('n');
    expect(';');
    st.m = integer_field('m');
    skip_ws();
    if (i_ != s_.size()) fail("end of input");
    return st;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& expected) {
    std::size_t j = i_;
    while (j < s_.size() && s_[j] != ';' && s_[j] != ',' && s_[j] != ']') ++j;
    if (j == i_ && j < s_.size()) ++j;
    throw ParseError(i_, expected, std::string(s_.substr(i_, j - i_)));
  }
  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("'") + c + "'");
    ++i_;
  }
  long long number(bool allow_sign) {
    skip_ws();
    std::size_t start = i_;
    if (allow_sign && i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits || i_ - digits > 9) {
      i_ = start;
      fail(allow_sign ? "integer" : "positive integer");
    }
    return std::stoll(std::string(s_.substr(start, i_ - start)));
  }
  std::vector<int> list(char key) {
    expect(key);
    expect('=');
    expect('[');
    std::vector<int> out;
    skip_ws();
    if (i_ < s_.size() && s_[i_] == ']') {
      ++i_;
      return out;
    }
    for (;;) {
      skip_ws();
      std::size_t at = i_;
      long long k = number(false);
      if (k < 1) {
        i_ = at;
        fail("positive integer");
      }
      out.push_back(int(k));
      skip_ws();
      if (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        continue;
      }
      expect(']');
      return out;
    }
  }
  int integer_field(char key) {
    expect(key);
    expect('=');
    return int(number(true));
  }
};

std::string join(const ChiralModeList& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l.modes()[i];
  return os.str();
}

}  // namespace

BosonState parse_state_spec(std::string_view text) { return SpecParser(text).run(); }

std::string format_state_spec(const BosonState& s) {
  return "L=[" + join(s.left) + "];R=[" + join(s.right) + "];n=" + std::to_string(s.n) +
         ";m=" + std::to_string(s.m);
}

}  // namespace srge
