// Command-line front end: parse a measure system, dispatch one computation,
// persist JSON/CSV reports under --out.  Exit codes: 0 success, 2 when a
// verified claim fails numerically (or a required index is non-normal),
// 1 for usage/config errors.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mopuc/json_io.hpp"
#include "mopuc/parallel.hpp"
#include "mopuc/zeros.hpp"

namespace fs = std::filesystem;

namespace mopuc {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos
                                                             : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

double parse_double(const std::string& tok, const std::string& flag) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') {
    fail(errc::config_parse, flag + ": '" + tok + "' is not a number");
  }
  return v;
}

int parse_nonneg_int(const std::string& tok, const std::string& flag) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(errc::config_parse, flag + ": '" + tok + "' is not a nonnegative integer");
  }
  return std::atoi(tok.c_str());
}

MultiIndex parse_index(const std::string& text, int r, const std::string& flag) {
  std::vector<int> entries;
  for (const std::string& tok : split(text, ',')) {
    entries.push_back(parse_nonneg_int(tok, flag));
  }
  if (static_cast<int>(entries.size()) != r) {
    fail(errc::config_parse, flag + " needs " + std::to_string(r) +
                                 " comma-separated entries for this system, got " +
                                 std::to_string(entries.size()));
  }
  return MultiIndex(std::move(entries));
}

// --taus accepts: an integer k (k equispaced roots of unity), "random:k"
// (k seeded uniform angles), or a comma-separated list of angles in radians.
std::vector<cplx> parse_taus(const std::string& text, std::uint64_t seed) {
  std::vector<cplx> taus;
  if (text.rfind("random:", 0) == 0) {
    const int k = parse_nonneg_int(text.substr(7), "--taus random:k");
    if (k < 1) fail(errc::config_parse, "--taus random:k needs k >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < k; ++i) taus.push_back(std::polar(1.0, angle(rng)));
    return taus;
  }
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    const int k = parse_nonneg_int(text, "--taus");
    if (k < 1) fail(errc::config_parse, "--taus needs k >= 1");
    for (int m = 0; m < k; ++m) {
      taus.push_back(std::polar(1.0, kTwoPi * static_cast<double>(m) / k));
    }
    return taus;
  }
  for (const std::string& tok : split(text, ',')) {
    taus.push_back(std::polar(1.0, parse_double(tok, "--taus")));
  }
  return taus;
}

// ---------------------------------------------------------------------------
// Report files <command>[-part]-<timestamp>.<ext>, written to a temp file
// and renamed so readers never see a partial report.  Timestamps live only
// in the filename; bodies depend only on config and seed.
// ---------------------------------------------------------------------------
class Outputs {
 public:
  Outputs(std::string dir, std::string command)
      : dir_(std::move(dir)), command_(std::move(command)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) fail(errc::io_failure, "cannot create '" + dir_ + "': " + ec.message());
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%S", &tm);
    stamp_ = buf;
  }

  fs::path write(const std::string& part, const std::string& ext,
                 const std::string& body) const {
    std::string stem = command_;
    if (!part.empty()) stem += "-" + part;
    stem += "-" + stamp_;
    fs::path target = fs::path(dir_) / (stem + "." + ext);
    for (int k = 2; fs::exists(target); ++k) {
      target = fs::path(dir_) / (stem + "-" + std::to_string(k) + "." + ext);
    }
    const fs::path tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) fail(errc::io_failure, "cannot write '" + tmp.string() + "'");
      out << body;
      out.flush();
      if (!out) fail(errc::io_failure, "short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
      fail(errc::io_failure, "cannot move report into place: " + ec.message());
    }
    std::cout << "wrote " << target.string() << "\n";
    return target;
  }

 private:
  std::string dir_;
  std::string command_;
  std::string stamp_;
};

struct Common {
  std::string preset_name;
  std::string system_path;
  std::string out = ".";
  std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--preset", c.preset_name,
                  "Named system: SYS-LEB, SYS-BS:<a>, SYS-A2, SYS-AT2, "
                  "SYS-A2-JAC, SYS-A2-EXP, SYS-A2-THIN");
  sub->add_option("--system", c.system_path, "Path to a JSON system description");
  sub->add_option("--out", c.out, "Output directory")->capture_default_str();
  sub->add_option("--seed", c.seed,
                  "Seed for the Chebyshev sampler and random taus")
      ->capture_default_str();
}

MeasureSystem load_system(const Common& c) {
  if (!c.preset_name.empty() && !c.system_path.empty()) {
    fail(errc::config_parse, "--preset and --system are mutually exclusive");
  }
  if (!c.preset_name.empty()) return preset(c.preset_name);
  if (!c.system_path.empty()) return load_system_file(c.system_path);
  fail(errc::config_parse, "one of --preset or --system is required");
}

std::string label_of(const MeasureSystem& sys) {
  return sys.label().empty() ? "custom" : sys.label();
}

json run_header(const std::string& command, const MeasureSystem& sys) {
  return json{{"command", command},
              {"system", label_of(sys)},
              {"config", system_to_json(sys)}};
}

// The six root-table columns; `arc` is the 1-based open arc holding an
// on-circle root (-1 when off circle or between arcs).
std::string root_row(const MeasureSystem& sys, cplx z, RootClass cls) {
  int arc_index = -1;
  if (cls == RootClass::on_circle) {
    const double theta = normalize_angle(std::arg(z), sys.t0());
    for (int j = 0; j < sys.r(); ++j) {
      if (sys.component(j).arc.contains_open(theta)) {
        arc_index = j + 1;
        break;
      }
    }
  }
  return fmt(z.real()) + "," + fmt(z.imag()) + "," + fmt(std::abs(z)) + "," +
         fmt(std::arg(z)) + "," + root_class_name(cls) + "," +
         std::to_string(arc_index);
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int run_moments(const Common& c, int max_freq) {
  if (max_freq < 0) fail(errc::config_parse, "--max-freq must be >= 0");
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  for (int j = 0; j < sys.r(); ++j) {
    for (int two_t = -2 * max_freq; two_t <= 2 * max_freq; ++two_t) {
      eng.moment(j, two_t);
    }
  }
  std::string csv = "component,two_t,re,im\n";
  for (const MomentEngine::CacheEntry& e : eng.cache_snapshot()) {
    csv += std::to_string(e.component + 1) + "," + std::to_string(e.two_t) + "," +
           fmt(e.value.real()) + "," + fmt(e.value.imag()) + "\n";
  }
  Outputs(c.out, "moments").write("", "csv", csv);
  return 0;
}

int run_solve(const Common& c, const std::string& n_text, bool sharp) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  const MultiIndex n = parse_index(n_text, sys.r(), "--n");
  const SolveResult res = sharp ? solve_phi_sharp(eng, n) : solve_phi(eng, n);
  json j = run_header("solve", sys);
  j["n"] = n.str();
  j["sharp"] = sharp;
  j["result"] = solve_to_json(res);
  Outputs(c.out, "solve").write("", "json", j.dump(2) + "\n");
  std::cout << (sharp ? "phi#(" : "phi(") << n.str()
            << "): " << verdict_name(res.report.verdict)
            << ", sigma ratio " << fmt(res.report.ratio) << "\n";
  return 0;
}

int run_hp(const Common& c, const std::string& n_text, const std::string& m_text,
           bool star) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  const MultiIndex n = parse_index(n_text, sys.r(), "--n");
  const MultiIndex m = parse_index(m_text, sys.r(), "--m");
  const SolveResult res = star ? solve_hp_star(eng, n, m) : solve_hp(eng, n, m);
  json j = run_header("hp", sys);
  j["n"] = n.str();
  j["m"] = m.str();
  j["star"] = star;
  j["result"] = solve_to_json(res);
  Outputs(c.out, "hp").write("", "json", j.dump(2) + "\n");
  std::cout << (star ? "HP*(" : "HP(") << n.str() << " | " << m.str()
            << "): " << verdict_name(res.report.verdict)
            << ", sigma ratio " << fmt(res.report.ratio) << "\n";
  return 0;
}

int run_para(const Common& c, const std::string& n_text,
             const std::string& taus_text) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  const MultiIndex n = parse_index(n_text, sys.r(), "--n");
  const std::vector<cplx> taus = parse_taus(taus_text, c.seed);
  const SolveResult phi = solve_phi(eng, n);
  json results = json::array();
  for (cplx tau : taus) {
    const ParaPoly p = build_para(phi.poly, tau);
    results.push_back(json{{"tau", cplx_to_json(tau)},
                           {"coeffs", poly_to_json(p.x)},
                           {"trig", trig_to_json(trig_form(p, sys.branch()))},
                           {"residuals", para_residuals(eng, p, n)}});
  }
  json j = run_header("para", sys);
  j["n"] = n.str();
  j["results"] = results;
  Outputs(c.out, "para").write("", "json", j.dump(2) + "\n");
  std::cout << "para(" << n.str() << "): " << taus.size() << " tau values\n";
  return 0;
}

int run_zeros(const Common& c, const std::string& n_text,
              const std::optional<double>& tau_angle, double tol_circle) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  const MultiIndex n = parse_index(n_text, sys.r(), "--n");
  const SolveResult phi = solve_phi(eng, n);
  HalfLaurentPoly target = phi.poly;
  json j = run_header("zeros", sys);
  j["n"] = n.str();
  if (tau_angle) {
    const cplx tau = std::polar(1.0, *tau_angle);
    target = build_para(phi.poly, tau).x;
    j["tau"] = cplx_to_json(tau);
  }
  const ZeroReport rep = zero_report(sys, target, tol_circle);
  j["report"] = zeros_to_json(rep);
  std::string csv = "re,im,abs,arg,class,arc\n";
  for (size_t i = 0; i < rep.roots.size(); ++i) {
    csv += root_row(sys, rep.roots[i], rep.classes[i]) + "\n";
  }
  const Outputs out(c.out, "zeros");
  out.write("", "json", j.dump(2) + "\n");
  out.write("roots", "csv", csv);
  std::cout << "zeros(" << n.str() << "): " << rep.n_plus << " inside, "
            << rep.n_on << " on circle, " << rep.n_minus << " outside\n";
  return 0;
}

int run_phase(const Common& c, const std::string& n_text, int grid) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  const MultiIndex n = parse_index(n_text, sys.r(), "--n");
  const SolveResult phi = solve_phi(eng, n);
  const ZeroReport rep = zero_report(sys, phi.poly);
  const PhaseReport ph = phase(rep.roots, grid);
  std::string csv = "theta,psi\n";
  for (size_t i = 0; i < ph.theta.size(); ++i) {
    csv += fmt(ph.theta[i]) + "," + fmt(ph.psi[i]) + "\n";
  }
  Outputs(c.out, "phase").write("", "csv", csv);
  std::cout << "phase(" << n.str() << "): winding " << ph.winding
            << (ph.monotone ? ", strictly increasing" : ", NOT monotone") << "\n";
  return 0;
}

int run_scan(const Common& c, int max_index, const std::string& mode_text) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  ScanMode mode;
  if (mode_text == "phi") {
    mode = ScanMode::phi;
  } else if (mode_text == "hp-diag") {
    mode = ScanMode::hp_diag;
  } else if (mode_text == "hp-offdiag") {
    mode = ScanMode::hp_offdiag;
  } else {
    fail(errc::config_parse, "--mode must be phi, hp-diag, or hp-offdiag");
  }
  const std::vector<ScanRow> rows = normality_scan(eng, max_index, mode);
  std::string csv = "n,m,sigma_min,sigma_max,ratio,verdict\n";
  for (const ScanRow& row : rows) {
    csv += quoted(row.n.str()) + "," + quoted(row.m.str()) + "," +
           fmt(row.report.sigma_min) + "," + fmt(row.report.sigma_max) + "," +
           fmt(row.report.ratio) + "," + verdict_name(row.report.verdict) + "\n";
  }
  Outputs(c.out, "scan").write("", "csv", csv);
  int normal = 0;
  for (const ScanRow& row : rows) normal += row.report.verdict == Verdict::normal;
  std::cout << "scan " << mode_text << ": " << normal << "/" << rows.size()
            << " normal\n";
  return 0;
}

int run_counterexample(const Common& c, int max_index) {
  std::vector<MeasureSystem> catalog;
  if (!c.preset_name.empty() || !c.system_path.empty()) {
    catalog.push_back(load_system(c));
  } else {
    catalog = angelesco_catalog();
  }
  const std::vector<CounterexampleRow> rows = counterexample_scan(catalog, max_index);
  std::string csv = "system,n,normal,max_abs_root,outside\n";
  int findings = 0;
  for (const CounterexampleRow& row : rows) {
    csv += quoted(row.system) + "," + quoted(row.n.str()) + "," +
           (row.normal ? "true" : "false") + "," + fmt(row.max_abs_root) + "," +
           (row.outside ? "true" : "false") + "\n";
    findings += row.outside;
  }
  Outputs(c.out, "counterexample").write("", "csv", csv);
  std::cout << "counterexample scan: " << rows.size() << " rows, " << findings
            << " with a root outside the closed unit disk\n";
  return 0;
}

struct VerifyArgs {
  std::string mode = "all";
  std::string n_text;
  int max_index = 2;
  std::string taus_text = "8";
  int trials = 200;
  double tol_circle = 1e-8;
  int grid = 4096;
};

int run_verify(const Common& c, const VerifyArgs& a) {
  const MeasureSystem sys = load_system(c);
  const MomentEngine eng(sys);
  if (a.mode != "disk" && a.mode != "circle" && a.mode != "offdiag" &&
      a.mode != "chebyshev" && a.mode != "all") {
    fail(errc::config_parse,
         "--mode must be disk, circle, offdiag, chebyshev, or all");
  }

  VerifyOptions opt;
  opt.tol_circle = a.tol_circle;
  opt.grid = a.grid;

  std::vector<MultiIndex> indices;
  int max_index = a.max_index;
  if (!a.n_text.empty()) {
    indices.push_back(parse_index(a.n_text, sys.r(), "--n"));
    max_index = 0;
    for (int v : indices.front().entries) max_index = std::max(max_index, v);
  } else {
    indices = index_sweep(sys.r(), a.max_index);
  }
  const std::vector<cplx> taus = parse_taus(a.taus_text, c.seed);

  json j = run_header("verify", sys);
  j["mode"] = a.mode;
  j["options"] = json{{"tol_circle", opt.tol_circle},
                      {"disk_margin", opt.disk_margin},
                      {"min_gap", opt.min_gap},
                      {"grid", opt.grid}};
  std::vector<std::string> failures;
  std::string csv = "mode,n,tau,re,im,abs,arg,class,arc\n";

  if (a.mode == "disk" || a.mode == "all") {
    std::vector<std::optional<DiskVerdict>> verdicts(indices.size());
    parallel_for(indices.size(), [&](size_t i) {
      verdicts[i] = verify_zeros_in_disk(eng, indices[i], opt);
    });
    json arr = json::array();
    for (size_t i = 0; i < indices.size(); ++i) {
      const DiskVerdict& v = *verdicts[i];
      arr.push_back(disk_to_json(indices[i], v));
      if (!v.pass) failures.push_back("disk n=(" + indices[i].str() + "): " + v.failure);
      for (size_t k = 0; k < v.zeros.roots.size(); ++k) {
        csv += "disk," + quoted(indices[i].str()) + ",," +
               root_row(sys, v.zeros.roots[k], v.zeros.classes[k]) + "\n";
      }
    }
    j["disk"] = arr;
  }

  if (a.mode == "circle" || a.mode == "all") {
    std::vector<std::vector<CircleVerdict>> verdicts(indices.size());
    parallel_for(indices.size(), [&](size_t i) {
      verdicts[i] = verify_circle_zeros(eng, indices[i], taus, opt);
    });
    json arr = json::array();
    for (size_t i = 0; i < indices.size(); ++i) {
      for (const CircleVerdict& v : verdicts[i]) {
        arr.push_back(circle_to_json(indices[i], v));
        if (!v.pass) {
          failures.push_back("circle n=(" + indices[i].str() + ") tau=(" +
                             fmt(v.tau.real()) + "," + fmt(v.tau.imag()) +
                             "): " + v.failure);
        }
        const std::string tau_text = fmt(std::arg(v.tau));
        for (size_t k = 0; k < v.zeros.roots.size(); ++k) {
          csv += "circle," + quoted(indices[i].str()) + "," + tau_text + "," +
                 root_row(sys, v.zeros.roots[k], v.zeros.classes[k]) + "\n";
        }
      }
    }
    j["circle"] = arr;
  }

  if (a.mode == "offdiag" || a.mode == "all") {
    json arr = json::array();
    for (const OffdiagVerdict& v : verify_offdiag_normality(eng, max_index, opt)) {
      arr.push_back(offdiag_to_json(v));
      if (!v.pass) {
        failures.push_back("offdiag n=(" + v.n.str() + ") j=" +
                           std::to_string(v.j + 1) + ": " + v.failure);
      }
    }
    j["offdiag"] = arr;
  }

  if (a.mode == "chebyshev" || (a.mode == "all" && sys.tag() == SystemTag::at)) {
    json arr = json::array();
    for (size_t i = 0; i < indices.size(); ++i) {
      if (indices[i].total() == 0) continue;
      const ChebyshevReport rep =
          chebyshev_check(sys, indices[i], a.trials, c.seed + i);
      arr.push_back(json{{"n", indices[i].str()}, {"report", chebyshev_to_json(rep)}});
      if (!rep.signs_consistent) {
        failures.push_back(
            "chebyshev n=(" + indices[i].str() +
            "): determinant signs not consistent over " +
            std::to_string(rep.trials) + " trials (" +
            std::to_string(rep.positive) + " positive, " +
            std::to_string(rep.negative) + " negative, " +
            std::to_string(rep.zero) + " zero)");
      }
    }
    j["chebyshev"] = arr;
  }

  j["pass"] = failures.empty();
  j["failures"] = failures;
  const Outputs out(c.out, "verify");
  out.write("", "json", j.dump(2) + "\n");
  out.write("roots", "csv", csv);
  for (const std::string& f : failures) std::cout << "FAIL " << f << "\n";
  if (!failures.empty()) {
    std::string msg = failures.front();
    if (failures.size() > 1) {
      msg += " (+" + std::to_string(failures.size() - 1) + " more, see report)";
    }
    fail(errc::theorem_violated, msg);
  }
  std::cout << "verify " << a.mode << ": all checks passed\n";
  return 0;
}

}  // namespace
}  // namespace mopuc

int main(int argc, char** argv) {
  using namespace mopuc;

  CLI::App app{"Laurent-type multiple orthogonal polynomials on the unit circle"};
  app.require_subcommand(1);
  Common common;

  auto* cmd_moments = app.add_subcommand(
      "moments", "Dump trigonometric moments m_j(t), |t| <= max-freq, as CSV");
  int max_freq = 40;
  add_common(cmd_moments, common);
  cmd_moments->add_option("--max-freq", max_freq, "Largest |t| (half-integer steps)")
      ->capture_default_str();

  auto* cmd_solve =
      app.add_subcommand("solve", "Solve the orthogonality system for phi_n");
  std::string solve_n;
  bool solve_sharp = false;
  add_common(cmd_solve, common);
  cmd_solve->add_option("--n", solve_n, "Multi-index, e.g. 2,1")->required();
  cmd_solve->add_flag("--sharp", solve_sharp, "Emit the reversed dual phi# instead");

  auto* cmd_hp = app.add_subcommand(
      "hp", "Solve the two-point system on the span z^-|m| .. z^|n|");
  std::string hp_n, hp_m;
  bool hp_star = false;
  add_common(cmd_hp, common);
  cmd_hp->add_option("--n", hp_n, "Multi-index n")->required();
  cmd_hp->add_option("--m", hp_m, "Multi-index m")->required();
  cmd_hp->add_flag("--star", hp_star,
                   "Normalize at the bottom exponent instead (dual solve)");

  auto* cmd_para = app.add_subcommand(
      "para", "Build the paraorthogonal combinations for a list of taus");
  std::string para_n, para_taus = "1";
  add_common(cmd_para, common);
  cmd_para->add_option("--n", para_n, "Multi-index")->required();
  cmd_para->add_option("--taus", para_taus,
                       "k (equispaced) | angle list a,b,... | random:k")
      ->capture_default_str();

  auto* cmd_zeros = app.add_subcommand(
      "zeros", "Locate and classify the zeros of phi_n (or its tau-companion)");
  std::string zeros_n;
  double zeros_tau = 0.0, zeros_tol = 1e-8;
  add_common(cmd_zeros, common);
  cmd_zeros->add_option("--n", zeros_n, "Multi-index")->required();
  auto* zeros_tau_opt = cmd_zeros->add_option(
      "--tau", zeros_tau, "Angle of tau; analyzes the paraorthogonal combination");
  cmd_zeros->add_option("--tol-circle", zeros_tol, "On-circle classification band")
      ->capture_default_str();

  auto* cmd_phase = app.add_subcommand(
      "phase", "Sample the Blaschke phase of phi_n's zero set over [-pi, pi]");
  std::string phase_n;
  int phase_grid = 4096;
  add_common(cmd_phase, common);
  cmd_phase->add_option("--n", phase_n, "Multi-index")->required();
  cmd_phase->add_option("--grid", phase_grid, "Number of grid intervals")
      ->capture_default_str();

  auto* cmd_verify = app.add_subcommand(
      "verify", "Check the zero-location and normality claims on a sweep");
  VerifyArgs verify_args;
  add_common(cmd_verify, common);
  cmd_verify
      ->add_option("--mode", verify_args.mode,
                   "disk | circle | offdiag | chebyshev | all")
      ->capture_default_str();
  cmd_verify->add_option("--n", verify_args.n_text,
                         "Single multi-index (default: sweep to --max-index)");
  cmd_verify->add_option("--max-index", verify_args.max_index, "Sweep bound")
      ->capture_default_str();
  cmd_verify
      ->add_option("--taus", verify_args.taus_text,
                   "k (equispaced) | angle list | random:k")
      ->capture_default_str();
  cmd_verify->add_option("--trials", verify_args.trials, "Chebyshev sample count")
      ->capture_default_str();
  cmd_verify
      ->add_option("--tol-circle", verify_args.tol_circle,
                   "On-circle classification band")
      ->capture_default_str();
  cmd_verify->add_option("--grid", verify_args.grid, "Phase grid intervals")
      ->capture_default_str();

  auto* cmd_scan = app.add_subcommand(
      "scan", "Tabulate moment-matrix conditioning over an index sweep");
  int scan_max = 3;
  std::string scan_mode = "phi";
  add_common(cmd_scan, common);
  cmd_scan->add_option("--max-index", scan_max, "Sweep bound")->capture_default_str();
  cmd_scan->add_option("--mode", scan_mode, "phi | hp-diag | hp-offdiag")
      ->capture_default_str();

  auto* cmd_counter = app.add_subcommand(
      "counterexample",
      "Scan ordinary-polynomial zeros for escapes from the unit disk");
  int counter_max = 4;
  add_common(cmd_counter, common);
  cmd_counter->add_option("--max-index", counter_max, "Sweep bound")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (cmd_moments->parsed()) return run_moments(common, max_freq);
    if (cmd_solve->parsed()) return run_solve(common, solve_n, solve_sharp);
    if (cmd_hp->parsed()) return run_hp(common, hp_n, hp_m, hp_star);
    if (cmd_para->parsed()) return run_para(common, para_n, para_taus);
    if (cmd_zeros->parsed()) {
      std::optional<double> tau;
      if (zeros_tau_opt->count() > 0) tau = zeros_tau;
      return run_zeros(common, zeros_n, tau, zeros_tol);
    }
    if (cmd_phase->parsed()) return run_phase(common, phase_n, phase_grid);
    if (cmd_verify->parsed()) return run_verify(common, verify_args);
    if (cmd_scan->parsed()) return run_scan(common, scan_max, scan_mode);
    if (cmd_counter->parsed()) return run_counterexample(common, counter_max);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    const bool violated =
        e.code() == errc::theorem_violated || e.code() == errc::non_normal;
    return violated ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
