#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srge {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

// Physically invalid input (bad ranges, selection-rule violations, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& expected, const std::string& found);
  std::size_t position() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t pos_;
  std::string expected_;
};

// L: system size, r = (v-u)/L, cutoff_ratio = l/eps.
struct Geometry {
  double total_length = 1.0;
  double ratio = 0.5;
  double cutoff_ratio = 10.0;
  double chord_length = 1.0 / kPi;

  static Geometry make(double total_length, double ratio, double cutoff_ratio);
  double log_cutoff() const;
};

enum class Symmetry { winding };

struct ModelParams {
  double beta = 1.0;
  Symmetry symmetry = Symmetry::winding;

  static ModelParams make(double beta);
};

class ChiralModeList {
 public:
  ChiralModeList() = default;
  ChiralModeList(std::initializer_list<int> modes);
  explicit ChiralModeList(std::vector<int> modes);

  const std::vector<int>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  bool empty() const { return modes_.empty(); }
  int level() const;
  std::map<int, int> multiplicities() const;

  bool operator==(const ChiralModeList&) const = default;

 private:
  std::vector<int> modes_;
};

struct BosonState {
  ChiralModeList left;
  ChiralModeList right;
  int n = 0;
  int m = 0;

  // alpha = n beta + m/(2 beta), alphabar = n beta - m/(2 beta)
  double alpha(double beta) const { return n * beta + m / (2.0 * beta); }
  double alphabar(double beta) const { return n * beta - m / (2.0 * beta); }

  bool operator==(const BosonState&) const = default;
};

// e^{i rate theta} * sum_j coeffs[j] theta^j.  selection_zero marks results that
// vanish by a charge selection rule rather than by cancellation.
struct ModulatedPolynomial {
  double rate = 0.0;
  std::vector<cplx> coeffs{cplx(1.0)};
  bool selection_zero = false;

  static ModulatedPolynomial zero();
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

double normalization_factor(const ChiralModeList& modes);

cplx eval_modulated(const ModulatedPolynomial& p, double theta);
ModulatedPolynomial mul_modulated(const ModulatedPolynomial& p, const ModulatedPolynomial& q);
ModulatedPolynomial scale_modulated(const ModulatedPolynomial& p, cplx s);
ModulatedPolynomial add_modulated(const ModulatedPolynomial& p, const ModulatedPolynomial& q);
// Conjugated coefficients, negated rate: eval(conj_modulated(p), th) == conj(eval(p, th)) for real th.
ModulatedPolynomial conj_modulated(const ModulatedPolynomial& p);

// Grammar: L=[k,...];R=[k,...];n=<int>;m=<int>
BosonState parse_state_spec(std::string_view text);
std::string format_state_spec(const BosonState& s);

}  // namespace srge
