// Command-line surface: computing condition sets, flow-up bases, Poincare
// series, Schubert tables, chromatic functions, decompositions, and the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// error.  JSON output is byte-identical for identical inputs and seed.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gkmhess/csf.hpp"
#include "gkmhess/flowup.hpp"
#include "gkmhess/gkm.hpp"
#include "gkmhess/schubert.hpp"
#include "gkmhess/suites.hpp"

namespace {

using gkmhess::ConditionSet;
using gkmhess::GkmElement;
using gkmhess::HessenbergFunction;
using gkmhess::Permutation;
using gkmhess::Polynomial;
using json = nlohmann::ordered_json;

// Usage-level failure: bad arguments or bad input data (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HessenbergFunction parse_h(const std::string& text) {
  try {
    return HessenbergFunction::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int thread_count() {
  int threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("GKM_HESS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end && *end == '\0' && v >= 1) threads = std::min<long>(threads, v);
  }
  return threads;
}

void emit(const std::string& format, const json& j, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string transposition_list(const ConditionSet& C) {
  return C.to_string();
}

// Nonzero vertex values, one per line, for human-readable element output.
std::string element_lines(const GkmElement& f, const std::string& indent) {
  std::ostringstream out;
  bool any = false;
  for (const auto& [v, p] : f.values()) {
    if (p.is_zero()) continue;
    any = true;
    out << indent << v.to_string() << ": " << p.to_string() << "\n";
  }
  if (!any) out << indent << "0\n";
  return out.str();
}

int cmd_conditions(const std::string& htext, const std::string& format) {
  const HessenbergFunction h = parse_h(htext);
  const ConditionSet C = gkmhess::hessenberg_conditions(h);
  const int n = h.n();

  json j;
  j["h"] = h.to_string();
  j["conditions"] = json::array();
  for (const auto& t : C.conditions()) j["conditions"].push_back(t.to_string());
  j["indices"] = json::array();

  std::ostringstream text;
  text << "h = " << h.to_string() << "\n";
  text << "C = " << transposition_list(C) << "\n";
  for (int i = 1; i <= n - 1; ++i) {
    json row;
    row["i"] = i;
    text << "i=" << i << ": ";
    if (!C.contains_adjacent(i)) {
      row["status"] = "missing-adjacent";
      text << "s_i not in C\n";
    } else if (gkmhess::is_stable(C, i)) {
      row["status"] = "stable";
      text << "stable\n";
    } else if (const auto witness = gkmhess::almost_stable_witness(C, i)) {
      const auto [a, b] = gkmhess::almost_stable_multiplier(C, i);
      const ConditionSet lower = gkmhess::almost_stable_lower(C, i);
      const ConditionSet upper = gkmhess::almost_stable_upper(C, i);
      row["status"] = "almost-stable";
      row["witness"] = witness->to_string();
      row["lower"] = lower.to_string();
      row["upper"] = upper.to_string();
      row["multiplier"] = json::array({a, b});
      text << "almost-stable  witness " << witness->to_string() << "  lower "
           << lower.to_string() << "  upper " << upper.to_string() << "  multiplier phi(x"
           << a << " - x" << b << ")\n";
    } else {
      row["status"] = "unstable";
      text << "contains s_i but more than one condition escapes conjugation\n";
    }
    j["indices"].push_back(std::move(row));
  }
  emit(format, j, text.str());
  return 0;
}

int cmd_basis(const std::string& htext, const std::string& format) {
  const HessenbergFunction h = parse_h(htext);
  const gkmhess::FlowUpBasis basis = gkmhess::flow_up_basis(h);

  json j;
  j["h"] = h.to_string();
  j["conditions"] = gkmhess::hessenberg_conditions(h).to_string();
  j["elements"] = json::array();
  std::ostringstream text;
  text << "h = " << h.to_string() << "  C = "
       << transposition_list(gkmhess::hessenberg_conditions(h)) << "\n";
  for (const auto& w : basis.order) {
    const GkmElement& el = basis.elements.at(w);
    json row;
    row["w"] = w.to_string();
    row["degree"] = basis.degrees.at(w);
    row["diagonal"] = gkmhess::prescribed_diagonal(h, w).to_string();
    row["element"] = json::parse(gkmhess::to_json(el));
    j["elements"].push_back(std::move(row));
    text << "w = " << w.to_string() << "  degree " << basis.degrees.at(w) << "  diagonal "
         << gkmhess::prescribed_diagonal(h, w).to_string() << "\n"
         << element_lines(el, "  ");
  }
  emit(format, j, text.str());
  return 0;
}

int cmd_poincare(const std::string& htext, const std::string& format) {
  const HessenbergFunction h = parse_h(htext);
  const gkmhess::QPolynomial series = gkmhess::poincare_series(h);
  json j;
  j["h"] = h.to_string();
  j["poincare"] = series.to_string();
  j["coefficients"] = json::array();
  for (long long c : series.coefficients()) j["coefficients"].push_back(c);
  emit(format, j, "h = " + h.to_string() + "\npoincare = " + series.to_string() + "\n");
  return 0;
}

int cmd_schubert(int n, bool use_double, const std::string& format) {
  if (n < 1) throw UsageError("schubert: n must be at least 1");
  const gkmhess::SchubertTable table =
      use_double ? gkmhess::double_schubert_table(n) : gkmhess::schubert_table(n);
  json j;
  j["n"] = n;
  j["double"] = use_double;
  j["entries"] = json::object();
  std::ostringstream text;
  for (const auto& [w, p] : table.entries) {
    j["entries"][w.to_string()] = p.to_string();
    text << w.to_string() << ": " << p.to_string() << "\n";
  }
  emit(format, j, text.str());
  return 0;
}

int cmd_csf(const std::string& htext, int m, const std::string& format) {
  const HessenbergFunction h = parse_h(htext);
  if (m == 0) m = h.n();
  if (m < 1) throw UsageError("csf: --vars must be at least 1");
  const Polynomial c = gkmhess::csf_truncated(h, m);
  json j;
  j["h"] = h.to_string();
  j["vars"] = m;
  j["csf"] = c.to_string();
  emit(format, j,
       "h = " + h.to_string() + "  vars = " + std::to_string(m) + "\ncsf = " + c.to_string() +
           "\n");
  return 0;
}

int cmd_decompose(const std::string& htext, int i, const std::string& file,
                  const std::string& format) {
  const HessenbergFunction h = parse_h(htext);
  const int n = h.n();
  if (i < 1 || i > n - 1) throw UsageError("decompose: index must satisfy 1 <= i <= n-1");

  std::ifstream in(file);
  if (!in) throw UsageError("decompose: cannot read element file " + file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  GkmElement f = GkmElement::zero(n);
  try {
    f = gkmhess::gkm_element_from_json(buffer.str());
  } catch (const std::exception& e) {
    throw UsageError(std::string("decompose: bad element file: ") + e.what());
  }
  if (f.n() != n) throw UsageError("decompose: element rank does not match h");
  const ConditionSet C = gkmhess::hessenberg_conditions(h);
  if (!gkmhess::in_subring(f, C))
    throw UsageError("decompose: element is not in the condition subring of h");

  std::string kind;
  int a = i, b = i + 1;
  GkmElement first = GkmElement::zero(n), second = GkmElement::zero(n);
  if (gkmhess::is_stable(C, i)) {
    kind = "stable";
    std::tie(first, second) = gkmhess::stable_decompose(f, i, C);
  } else if (gkmhess::almost_stable_witness(C, i)) {
    kind = "almost-stable";
    std::tie(a, b) = gkmhess::almost_stable_multiplier(C, i);
    std::tie(first, second) = gkmhess::almost_stable_decompose(f, i, C);
  } else {
    throw UsageError("decompose: C(h) is neither stable nor almost-stable at i=" +
                     std::to_string(i));
  }
  if (!(f == first + gkmhess::phi_x_difference(n, a, b) * second))
    throw std::logic_error("decompose: reconstruction failed");

  json j;
  j["h"] = h.to_string();
  j["i"] = i;
  j["kind"] = kind;
  j["multiplier"] = json::array({a, b});
  j["p"] = json::parse(gkmhess::to_json(first));
  j["m"] = json::parse(gkmhess::to_json(second));
  j["reconstructs"] = true;

  std::ostringstream text;
  text << "h = " << h.to_string() << "  i = " << i << "  kind = " << kind << "\n";
  text << "f = p + phi(x" << a << " - x" << b << ") * m\n";
  text << "p:\n" << element_lines(first, "  ");
  text << "m:\n" << element_lines(second, "  ");
  text << "reconstruction: ok\n";
  emit(format, j, text.str());
  return 0;
}

int cmd_verify(const std::string& suite, int only_n, std::uint64_t seed, int samples,
               const std::string& format) {
  if (!gkmhess::is_suite(suite)) {
    std::string names = "all";
    for (const auto& name : gkmhess::suite_names()) names += ", " + name;
    throw UsageError("verify: unknown suite '" + suite + "' (choose from: " + names + ")");
  }
  gkmhess::SuiteOptions opts;
  if (only_n > 0) opts.only_n = only_n;
  opts.seed = seed;
  opts.samples = samples;
  opts.threads = thread_count();

  const auto start = std::chrono::steady_clock::now();
  gkmhess::RunReport report = gkmhess::run_suite(suite, opts);
  const auto stop = std::chrono::steady_clock::now();
  report.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (format == "json")
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.to_text();
  if (report.internal_error) return 3;
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKM rings of regular semisimple Hessenberg varieties: bases, divided "
               "differences, decompositions, and verification suites"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string h_conditions, h_basis, h_poincare, h_csf, h_decompose;
  auto* sub_conditions =
      app.add_subcommand("conditions", "Condition set of h and stability at every index");
  sub_conditions->add_option("hessenberg", h_conditions, "Hessenberg function, e.g. 2,3,3")
      ->required();

  auto* sub_basis = app.add_subcommand("basis", "Flow-up basis of the condition subring");
  sub_basis->add_option("hessenberg", h_basis, "Hessenberg function")->required();

  auto* sub_poincare = app.add_subcommand("poincare", "Graded dimension series of the basis");
  sub_poincare->add_option("hessenberg", h_poincare, "Hessenberg function")->required();

  int schubert_n = 0;
  bool schubert_double = false;
  auto* sub_schubert = app.add_subcommand("schubert", "Schubert polynomial table at rank n");
  sub_schubert->add_option("rank", schubert_n, "Rank")->required();
  sub_schubert->add_flag("--double", schubert_double, "Double Schubert polynomials");

  int csf_vars = 0;
  auto* sub_csf =
      app.add_subcommand("csf", "Truncated chromatic quasisymmetric function of h");
  sub_csf->add_option("hessenberg", h_csf, "Hessenberg function")->required();
  sub_csf->add_option("--vars", csf_vars, "Number of color variables (default: rank)");

  int decompose_i = 0;
  std::string element_file;
  auto* sub_decompose =
      app.add_subcommand("decompose", "Split an element of H_C(h) at index i");
  sub_decompose->add_option("hessenberg", h_decompose, "Hessenberg function")->required();
  sub_decompose->add_option("index", decompose_i, "Adjacent index")->required();
  sub_decompose->add_option("--element", element_file, "JSON file with the element")
      ->required();

  std::string suite = "all";
  int verify_n = 0;
  std::uint64_t seed = 1;
  int samples = 0;
  auto* sub_verify = app.add_subcommand("verify", "Run a verification suite");
  sub_verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  sub_verify->add_option("--n", verify_n, "Restrict to a single rank");
  sub_verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  sub_verify->add_option("--samples", samples, "Override per-case sample count");

  for (auto* sub : {sub_conditions, sub_basis, sub_poincare, sub_schubert, sub_csf,
                    sub_decompose, sub_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_conditions->parsed()) return cmd_conditions(h_conditions, format);
    if (sub_basis->parsed()) return cmd_basis(h_basis, format);
    if (sub_poincare->parsed()) return cmd_poincare(h_poincare, format);
    if (sub_schubert->parsed()) return cmd_schubert(schubert_n, schubert_double, format);
    if (sub_csf->parsed()) return cmd_csf(h_csf, csf_vars, format);
    if (sub_decompose->parsed())
      return cmd_decompose(h_decompose, decompose_i, element_file, format);
    if (sub_verify->parsed()) return cmd_verify(suite, verify_n, seed, samples, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
