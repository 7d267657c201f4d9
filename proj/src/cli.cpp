#include "srge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "srge/ed_oracle.hpp"
#include "srge/moments_n1.hpp"
#include "srge/moments_n2.hpp"
#include "srge/resolved.hpp"
#include "srge/xx_lattice.hpp"

namespace srge {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> notes;
  json extra = json::object();
};

void emit(const Table& t, const std::string& format, const json& config, std::ostream& out) {
  if (format == "json") {
    json j;
    j["config"] = config;
    j["rows"] = json::array();
    for (const auto& r : t.rows) {
      json row = json::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) row[t.header[i]] = r[i];
      j["rows"].push_back(row);
    }
    for (auto& [k, v] : t.extra.items()) j[k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << num(r[i]);
    out << "\n";
  }
  for (const auto& [k, v] : t.notes) out << "# " << k << " " << v << "\n";
}

json poly_json(const ModulatedPolynomial& p) {
  json c = json::array();
  for (auto z : p.coeffs) c.push_back({z.real(), z.imag()});
  return {{"rate", p.rate}, {"selection_zero", p.selection_zero}, {"coeffs", c}};
}

std::string poly_text(const ModulatedPolynomial& p) {
  std::string s = "rate=" + num(p.rate) + " coeffs=";
  for (std::size_t j = 0; j < p.coeffs.size(); ++j)
    s += (j ? ";" : "") + num(p.coeffs[j].real()) + ":" + num(p.coeffs[j].imag());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

BosonState state_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_state_spec(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + " \"" + text + "\": " + e.what());
  } catch (const DomainError& e) {
    throw UsageError(flag + " \"" + text + "\": " + e.what());
  }
}

std::vector<double> grid_arg(const std::string& text, const std::string& flag) {
  try {
    auto g = parse_grid(text);
    if (g.empty()) throw UsageError(flag + ": empty grid");
    return g;
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + " \"" + text + "\": " + e.what());
  }
}

MomentumState lattice_state(const std::string& name, int N) {
  if (name == "ground") return ground_state(N);
  std::map<std::string, std::string> alias = {{"dphi", "dphi"},
                                              {"vertex", "vertex"},
                                              {"level2a", "level2_two_holes_one_particle"},
                                              {"level2b", "level2_one_hole_two_particles"}};
  if (auto it = alias.find(name); it != alias.end()) {
    for (auto& w : level2_lattice_states(N))
      if (w.label == it->second) return w.state;
  }
  if (name.rfind("k:", 0) == 0) {
    std::vector<double> ks;
    for (auto& t : split(name.substr(2), ','))
      if (!trim(t).empty()) ks.push_back(std::stod(trim(t)));
    return MomentumState::make(N, ks);
  }
  throw UsageError("unknown lattice state '" + name + "' (ground, dphi, vertex, level2a, level2b, k:<k1,k2,...>)");
}

// Config file: key = value lines, '#' comments.  Keys are long flag names.
std::vector<std::string> config_args(const std::string& path, const std::vector<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    std::string flag = "--" + key;
    bool overridden = std::any_of(given.begin(), given.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (!overridden) out.push_back(flag + "=" + val);
  }
  return out;
}

struct Common {
  double beta = 1.0;
  std::string r = "0.5";
  std::string theta = "0";
  std::string format = "csv";
  std::string output;
  std::string config;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--beta", c.beta, "inverse compactification radius")->check(CLI::PositiveNumber);
  app->add_option("--r,--r-grid", c.r, "ratio r or grid a:b:step");
  app->add_option("--theta,--theta-grid", c.theta, "flux theta or grid a:b:step");
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--output", c.output, "write to PATH instead of stdout");
  app->add_option("--config", c.config, "key=value config file; flags take precedence");
}

Table cmd_cft(int n, const Common& c, const std::vector<std::string>& states, bool combo, bool keep_xi,
              double v_over_L) {
  auto rs = grid_arg(c.r, "--r");
  auto ths = grid_arg(c.theta, "--theta");
  ModelParams params = ModelParams::make(c.beta);
  Table t;
  if (combo) {
    t.header = {"r", "theta", "re", "im"};
    std::vector<std::vector<double>> rows(rs.size() * ths.size());
    parallel_for(rows.size(), [&](std::size_t i) {
      double r = rs[i / ths.size()], th = ths[i % ths.size()];
      cplx v = n == 1 ? delta_z1(params, r, th) : delta_z2(params, r, th);
      rows[i] = {r, th, v.real(), v.imag()};
    });
    t.rows = std::move(rows);
    t.notes.push_back({"observable", n == 1 ? "delta_z1" : "delta_z2"});
    return t;
  }
  std::vector<BosonState> psi;
  for (std::size_t i = 0; i < states.size(); ++i) psi.push_back(state_arg(states[i], "state " + std::to_string(i + 1)));
  std::vector<ModulatedPolynomial> polys(rs.size());
  parallel_for(rs.size(), [&](std::size_t i) {
    Geometry g = Geometry::make(1.0, rs[i], 10.0);
    if (n == 1) {
      N1Request req{params, g, psi[0], psi[1], !keep_xi, v_over_L};
      polys[i] = f1_full(req);
    } else {
      N2Request req{params, g, {psi[0], psi[1], psi[2], psi[3]}, !keep_xi, v_over_L};
      polys[i] = f2_full(req);
    }
  });
  t.header = {"r", "theta", "re", "im"};
  json pj = json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (double th : ths) {
      cplx v = eval_modulated(polys[i], th);
      t.rows.push_back({rs[i], th, v.real(), v.imag()});
    }
    json e = poly_json(polys[i]);
    e["r"] = rs[i];
    pj.push_back(e);
    t.notes.push_back({"polynomial", "r=" + num(rs[i]) + " " + poly_text(polys[i])});
  }
  t.extra["polynomials"] = pj;
  return t;
}

std::vector<int> ell_list(const std::string& ell, const std::string& range, int N) {
  std::vector<int> out;
  if (!range.empty()) {
    auto parts = split(range, ':');
    if (parts.size() != 2) throw UsageError("--ell-range expects a:b");
    int a = std::stoi(parts[0]), b = std::stoi(parts[1]);
    if (a > b) throw UsageError("--ell-range must be ordered");
    for (int l = a; l <= b; ++l) out.push_back(l);
  } else {
    out.push_back(ell.empty() ? N / 2 : std::stoi(ell));
  }
  for (int l : out)
    if (l < 1 || l > N) throw DomainError("ell must lie in 1..N");
  return out;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  auto parts = split(text, ':');
  auto to_d = [](const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(trim(s), &pos);
    if (pos != trim(s).size()) throw std::invalid_argument("trailing characters in number '" + s + "'");
    return v;
  };
  if (parts.size() == 1) return {to_d(parts[0])};
  if (parts.size() != 3) throw std::invalid_argument("grid must be a number or a:b:step");
  double a = to_d(parts[0]), b = to_d(parts[1]), h = to_d(parts[2]);
  if (!(h > 0) || b < a) throw std::invalid_argument("grid needs a <= b and step > 0");
  std::vector<double> out;
  long count = std::lround(std::floor((b - a) / h + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(a + i * h);
  return out;
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SRGE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, unsigned(cap));
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  unsigned w = std::min<std::size_t>(worker_count(), n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

ComparisonSummary compare_delta_z(int n, int N, double theta, double r_min, double r_max) {
  if (n != 1 && n != 2) throw DomainError("comparison available for n = 1 and n = 2");
  MomentumState ex;
  for (auto& w : level2_lattice_states(N))
    if (w.label == "level2_two_holes_one_particle") ex = w.state;
  ModelParams params = ModelParams::make(1.0);
  std::vector<int> ells;
  for (int l = 1; l + 1 < N; ++l) {
    double r = (l + 0.5) / N;
    if (r >= r_min - 1e-12 && r <= r_max + 1e-12) ells.push_back(l);
  }
  if (ells.empty()) throw DomainError("no subsystem sizes inside the r window");
  std::vector<cplx> lat(ells.size() + 1);
  parallel_for(lat.size(), [&](std::size_t i) {
    int l = i < ells.size() ? ells[i] : ells.back() + 1;
    lat[i] = lattice_delta_z(ex, l, theta, n);
  });
  auto cft = [&](double r) { return n == 1 ? delta_z1(params, r, theta) : delta_z2(params, r, theta); };
  ComparisonSummary s;
  double osc = 0, osc_re = 0, osc_im = 0, mean = 0;
  for (std::size_t i = 0; i < ells.size(); ++i) {
    ComparisonRow row;
    row.ell = ells[i];
    row.r = (ells[i] + 0.5) / N;
    row.cft = cft(row.r);
    row.raw = lat[i];
    row.raw_cft = cft(double(ells[i]) / N);
    row.averaged = 0.5 * (lat[i] + lat[i + 1]);
    cplx d = row.averaged - row.cft;
    s.max_dev_avg = std::max(s.max_dev_avg, std::abs(d));
    s.max_dev_avg_re = std::max(s.max_dev_avg_re, std::abs(d.real()));
    s.max_dev_avg_im = std::max(s.max_dev_avg_im, std::abs(d.imag()));
    s.max_dev_raw = std::max(s.max_dev_raw, std::abs(row.raw - row.raw_cft));
    mean += std::abs(d);
    cplx jump = lat[i] - lat[i + 1];
    osc += std::abs(jump);
    osc_re += std::abs(jump.real());
    osc_im += std::abs(jump.imag());
    s.rows.push_back(row);
  }
  double m = double(ells.size());
  s.mean_dev_avg = mean / m;
  s.oscillation = osc / (2 * m);
  s.oscillation_re = osc_re / (2 * m);
  s.oscillation_im = osc_im / (2 * m);
  return s;
}

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"srge: generalized charged moments and symmetry-resolved entropies"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common c;
  std::string in_spec, out_spec, states_spec;
  bool combo = false, keep_xi = false;
  double v_over_L = 0.0;

  auto* f1 = app.add_subcommand("cft-f1", "normalized n=1 generalized charged moment");
  add_common(f1, c);
  f1->add_option("--in", in_spec, "state spec of psi_1");
  f1->add_option("--out", out_spec, "state spec of psi_2");
  f1->add_flag("--level2-combo", combo, "level-2 combination Delta Z_1");
  f1->add_flag("--keep-xi", keep_xi, "keep the momentum phase xi");
  f1->add_option("--v-over-L", v_over_L, "v/L for the xi phase");

  auto* f2 = app.add_subcommand("cft-f2", "normalized n=2 generalized charged moment");
  add_common(f2, c);
  f2->add_option("--states", states_spec, "four state specs separated by '|'");
  f2->add_flag("--level2-combo", combo, "level-2 combination Delta Z_2");
  f2->add_flag("--keep-xi", keep_xi, "keep the momentum phase xi");
  f2->add_option("--v-over-L", v_over_L, "v/L for the xi phase");

  int N = 64, n = 1;
  std::string ell, ell_range, state = "ground", lattice_states, observable = "moment";
  double step = 0.05;
  auto* lat = app.add_subcommand("lattice", "XX-chain charged moments");
  add_common(lat, c);
  lat->add_option("--N", N, "chain length (even)");
  lat->add_option("--ell", ell, "subsystem size");
  lat->add_option("--ell-range", ell_range, "subsystem sizes a:b");
  lat->add_option("--n", n, "replica index")->check(CLI::PositiveNumber);
  lat->add_option("--state", state, "ground, dphi, vertex, level2a, level2b or k:<k1,...>");
  lat->add_option("--states", lattice_states, "2n lattice states separated by '|' (generalized moment)");
  lat->add_option("--observable", observable, "moment or delta-z")->check(CLI::IsMember({"moment", "delta-z"}));
  lat->add_option("--theta-step", step, "maximal step of the square-root branch tracking");

  double r_min = 0.15, r_max = 0.85;
  std::string which = "dz1";
  auto* cmp = app.add_subcommand("compare", "parity-averaged lattice versus CFT");
  add_common(cmp, c);
  cmp->add_option("--N", N, "chain length (multiple of 4)");
  cmp->add_option("--observable", which, "dz1 or dz2")->check(CLI::IsMember({"dz1", "dz2"}));
  cmp->add_option("--r-min", r_min, "lower end of the r window");
  cmp->add_option("--r-max", r_max, "upper end of the r window");

  std::string quantity = "prel", q_range = "-5:5";
  double log_cutoff = 10.0, g_a = 1.0;
  bool numeric = false;
  auto* res = app.add_subcommand("resolved", "charge distributions and resolved second Renyi entropies");
  add_common(res, c);
  res->add_option("--quantity", quantity, "prel, distribution, gaussian, s2, delta-s2, s2-compact")
      ->check(CLI::IsMember({"prel", "distribution", "gaussian", "s2", "delta-s2", "s2-compact"}));
  res->add_option("--state", in_spec, "state spec (diagonal)");
  res->add_option("--log-cutoff", log_cutoff, "log(l/eps)")->check(CLI::PositiveNumber);
  res->add_option("--q-range", q_range, "charges a:b");
  res->add_option("--g-a", g_a, "boundary g-function (opaque)");
  res->add_flag("--numeric", numeric, "Fourier-transform the full moments instead of the series");

  auto* orc = app.add_subcommand("oracle", "dense ED versus XX-chain determinant formulas");
  add_common(orc, c);
  orc->add_option("--N", N, "chain length (<= 14)");
  orc->add_option("--ell", ell, "subsystem size");
  orc->add_option("--ell-range", ell_range, "subsystem sizes a:b");
  orc->add_option("--n", n, "replica index")->check(CLI::PositiveNumber);
  orc->add_option("--states", lattice_states, "2n lattice states separated by '|'");
  orc->add_option("--state", state, "diagonal lattice state");

  std::vector<std::string> args = args_in;
  try {
    // --config is merged by injecting keys that were not given as flags
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size())
        path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0)
        path = args[i].substr(9);
      if (!path.empty()) {
        auto extra = config_args(path, args);
        args.insert(args.end(), extra.begin(), extra.end());
        break;
      }
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  json config;
  config["beta"] = c.beta;
  config["r"] = c.r;
  config["theta"] = c.theta;

  try {
    Table t;
    if (f1->parsed()) {
      config["command"] = "cft-f1";
      if (!combo && (in_spec.empty() || out_spec.empty())) throw UsageError("cft-f1 needs --in and --out");
      config["in"] = in_spec;
      config["out"] = out_spec;
      t = cmd_cft(1, c, {in_spec, out_spec}, combo, keep_xi, v_over_L);
    } else if (f2->parsed()) {
      config["command"] = "cft-f2";
      auto parts = split(states_spec, '|');
      if (!combo && parts.size() != 4) throw UsageError("cft-f2 needs --states with four specs separated by '|'");
      config["states"] = states_spec;
      t = cmd_cft(2, c, parts, combo, keep_xi, v_over_L);
    } else if (lat->parsed()) {
      config["command"] = "lattice";
      config["N"] = N;
      config["n"] = n;
      if (N % 2 || N < 2) throw UsageError("--N must be even, got " + std::to_string(N));
      auto ells = ell_list(ell, ell_range, N);
      auto ths = grid_arg(c.theta, "--theta");
      std::vector<MomentumState> gen;
      if (!lattice_states.empty()) {
        for (auto& s : split(lattice_states, '|')) gen.push_back(lattice_state(trim(s), N));
        if (int(gen.size()) != 2 * n) throw UsageError("--states needs 2n entries");
      }
      MomentumState diag = gen.empty() ? lattice_state(state, N) : MomentumState{};
      t.header = {"N", "ell", "theta", "n", "re", "im"};
      std::vector<std::vector<cplx>> vals(ells.size());
      parallel_for(ells.size(), [&](std::size_t i) {
        int l = ells[i];
        if (!gen.empty()) {
          for (double th : ths) vals[i].push_back(generalized_charged_moment(gen, l, th, n));
        } else if (observable == "delta-z") {
          for (double th : ths) vals[i].push_back(lattice_delta_z(diag, l, th, n, step));
        } else {
          vals[i] = diagonal_charged_moment_grid(diag, l, ths, n, step);
        }
      });
      for (std::size_t i = 0; i < ells.size(); ++i)
        for (std::size_t j = 0; j < ths.size(); ++j)
          t.rows.push_back({double(N), double(ells[i]), ths[j], double(n), vals[i][j].real(), vals[i][j].imag()});
    } else if (cmp->parsed()) {
      config["command"] = "compare";
      config["N"] = N;
      config["observable"] = which;
      auto ths = grid_arg(c.theta, "--theta");
      t.header = {"theta", "ell", "r", "cft_re", "cft_im", "raw_re", "raw_im", "avg_re", "avg_im", "dev_raw", "dev_avg"};
      json summaries = json::array();
      for (double th : ths) {
        auto s = compare_delta_z(which == "dz1" ? 1 : 2, N, th, r_min, r_max);
        for (auto& row : s.rows)
          t.rows.push_back({th, double(row.ell), row.r, row.cft.real(), row.cft.imag(), row.raw.real(),
                            row.raw.imag(), row.averaged.real(), row.averaged.imag(), std::abs(row.raw - row.raw_cft),
                            std::abs(row.averaged - row.cft)});
        json js = {{"theta", th},
                   {"max_dev_avg", s.max_dev_avg},
                   {"mean_dev_avg", s.mean_dev_avg},
                   {"max_dev_raw", s.max_dev_raw},
                   {"oscillation_amplitude", s.oscillation}};
        summaries.push_back(js);
        t.notes.push_back({"summary", "theta=" + num(th) + " max_dev_avg=" + num(s.max_dev_avg) +
                                          " mean_dev_avg=" + num(s.mean_dev_avg) + " max_dev_raw=" +
                                          num(s.max_dev_raw) + " oscillation_amplitude=" + num(s.oscillation)});
      }
      t.extra["summary"] = summaries;
    } else if (res->parsed()) {
      config["command"] = "resolved";
      config["quantity"] = quantity;
      config["log_cutoff"] = log_cutoff;
      ModelParams params = ModelParams::make(c.beta);
      auto rs = grid_arg(c.r, "--r");
      double r = rs.at(0);
      Geometry g = Geometry::make(1.0, r, std::exp(log_cutoff));
      BosonState psi = in_spec.empty() ? BosonState{} : state_arg(in_spec, "--state");
      auto qr = split(q_range, ':');
      if (qr.size() != 2) throw UsageError("--q-range expects a:b");
      int qa = std::stoi(qr[0]), qb = std::stoi(qr[1]);
      if (qa > qb) throw UsageError("--q-range must be ordered");
      ModulatedPolynomial p1 = f1_full({params, g, psi, psi, true, 0.0});
      t.header = {"q", "value"};
      t.notes.push_back({"meta", "log_cutoff=" + num(log_cutoff) + " beta=" + num(c.beta) + " r=" + num(r) +
                                     (numeric ? " truncation=none" : " truncation=(log l')^-2")});
      if (quantity == "distribution" || (quantity == "prel" && numeric)) {
        auto d = charge_distribution(p1, params, g, qa, qb,
                                     quantity == "prel" ? DistributionKind::ground_relative : DistributionKind::absolute);
        for (std::size_t i = 0; i < d.charges.size(); ++i) t.rows.push_back({double(d.charges[i]), d.values[i]});
        t.notes.push_back({"mean", num(d.mean())});
      } else if (quantity == "delta-s2" && numeric) {
        ModulatedPolynomial p2 = f2_full({params, g, {psi, psi, psi, psi}, true, 0.0});
        for (int q = qa; q <= qb; ++q) t.rows.push_back({double(q), delta_s2_numeric(p2, p1, params, g, q)});
      } else {
        MomentCoefficients h;
        try {
          h = extract_even_coefficients(p1, params);
        } catch (const DomainError& e) {
          throw DomainError(std::string(e.what()) + " (pass --numeric for the Fourier-transform path)");
        }
        MomentCoefficients f{1.0, 0.0, 0.0};
        if (quantity != "prel" && quantity != "gaussian")
          f = extract_even_coefficients(f2_full({params, g, {psi, psi, psi, psi}, true, 0.0}), params);
        if (quantity == "gaussian") {
          auto d = gaussian_charge_distribution(h.c2.real(), params, g, qa, qb);
          for (std::size_t i = 0; i < d.charges.size(); ++i) t.rows.push_back({double(d.charges[i]), d.values[i]});
        }
        for (int q = qa; q <= qb && quantity != "gaussian"; ++q) {
          double v = 0;
          if (quantity == "prel") v = prel_series(h.c2.real(), h.c4.real(), params, g, q);
          if (quantity == "s2") v = s2_series(f.c0.real(), f.c2.real(), f.c4.real(), params, g, q);
          if (quantity == "delta-s2")
            v = delta_s2_excited(f.c0.real(), f.c2.real(), f.c4.real(), h.c2.real(), h.c4.real(), params, g, q);
          if (quantity == "s2-compact") v = s2_compact(f.c0.real(), f.c2.real(), h.c2.real(), params, g, q, g_a);
          t.rows.push_back({double(q), v});
        }
      }
    } else if (orc->parsed()) {
      config["command"] = "oracle";
      config["N"] = N;
      config["n"] = n;
      if (N % 2 || N < 2 || N > kMaxEdSites) throw UsageError("--N must be even and <= 14 for the oracle");
      auto ells = ell_list(ell, ell_range, N);
      auto ths = grid_arg(c.theta, "--theta");
      std::vector<MomentumState> gen;
      if (!lattice_states.empty())
        for (auto& s : split(lattice_states, '|')) gen.push_back(lattice_state(trim(s), N));
      else
        gen.assign(2 * n, lattice_state(state, N));
      if (int(gen.size()) != 2 * n) throw UsageError("--states needs 2n entries");
      std::vector<DenseState> dense;
      for (auto& s : gen) dense.push_back(DenseState::from_slater(s));
      t.header = {"N", "ell", "theta", "n", "ed_re", "ed_im", "lattice_re", "lattice_im", "abs_diff"};
      for (int l : ells) {
        if (l >= N) throw DomainError("oracle needs ell < N");
        for (double th : ths) {
          cplx e = charged_moment_ed(dense, l, th, n);
          cplx x = generalized_charged_moment(gen, l, th, n);
          t.rows.push_back({double(N), double(l), th, double(n), e.real(), e.imag(), x.real(), x.imag(), std::abs(e - x)});
        }
      }
    }
    if (c.output.empty()) {
      emit(t, c.format, config, out);
    } else {
      std::ofstream f(c.output);
      if (!f) throw UsageError("cannot write " + c.output);
      emit(t, c.format, config, f);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BranchTrackingError& e) {
    err << "error: " << e.what() << " (try a smaller --theta-step)\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: invalid number: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: number out of range: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace srge
