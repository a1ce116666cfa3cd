// tancone: tangent cones of 4-generated Gorenstein monomial curves.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tancone/analysis.hpp"

using namespace tancone;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void print_text(std::ostream& os, const AnalysisRecord& rec, bool table) {
  os << "generators   " << join(rec.generators) << "\n";
  os << "status       " << rec.status();
  if (rec.rejection) os << " (" << rec.rejection_detail << ")";
  os << "\n";
  if (rec.structure) {
    const auto& d = *rec.structure;
    os << "case         " << to_string(d.label);
    if (rec.tangent_cone) os << "  variant " << rec.tangent_cone->variant;
    os << "\nalpha        " << d.alpha[0] << " " << d.alpha[1] << " " << d.alpha[2] << " " << d.alpha[3] << "\n";
  }
  if (rec.tangent_cone) {
    os << "tangent cone ";
    for (std::size_t i = 0; i < 5; ++i) os << (i ? ", " : "") << rec.tangent_cone->generators[i].to_string();
    os << "\n";
  }
  if (rec.resolution) {
    const auto b = betti_sequence(*rec.resolution);
    os << "betti        " << b[0] << " " << b[1] << " " << b[2] << " " << b[3]
       << (homogeneous_type(*rec.resolution) ? "  (homogeneous type)" : "") << "\n";
    if (!rec.resolution->twists.empty()) {
      os << "twists      ";
      for (std::size_t k = 0; k < rec.resolution->twists.size(); ++k)
        os << (k ? " | " : " ") << join(rec.resolution->twists[k]);
      os << "\n";
    }
  }
  if (rec.verification) {
    const auto& v = *rec.verification;
    auto word = [](bool b) { return b ? "ok" : "FAILED"; };
    os << "checks       complex " << word(v.complex_ok) << ", minimal " << word(v.minimal_ok) << ", ranks "
       << word(v.rank_ok) << ", witnesses " << word(v.witnesses_ok) << ", twists " << word(v.twists_ok) << "\n";
  }
  if (rec.hilbert) {
    const auto& h = *rec.hilbert;
    if (table) {
      os << "i\tH_G(i)\toracle\tequal\n";
      for (std::size_t i = 0; i < h.values.size(); ++i)
        os << i << "\t" << h.values[i] << "\t" << h.oracle_values[i] << "\t"
           << (h.values[i] == h.oracle_values[i] ? "yes" : "NO") << "\n";
    } else {
      os << "hilbert      " << join(h.values) << "\n";
    }
    os << "oracle       " << (h.equal ? "agrees" : "DISAGREES") << " for i <= " << h.bound << ", "
       << (h.nondecreasing ? "non-decreasing" : "DECREASES") << "\n";
  }
}

struct SingleArgs {
  std::vector<std::int64_t> gens;
  bool json = false;
  std::string out;
  std::int64_t upto = -1;
};

void add_single(CLI::App* cmd, SingleArgs& a) {
  cmd->add_option("--gens", a.gens, "four positive generators, comma separated")
      ->required()
      ->delimiter(',')
      ->expected(4);
  cmd->add_flag("--json", a.json, "print JSON instead of text");
  cmd->add_option("--out", a.out, "write JSON to this file");
}

int run_single(const SingleArgs& a, const JsonSections& sections, bool table) {
  AnalysisRecord rec;
  try {
    AnalysisOptions opts;
    if (a.upto >= 0) opts.hilbert_bound = a.upto;
    rec = analyze(a.gens, opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) {
      std::cerr << "error: cannot write " << a.out << "\n";
      return kUsage;
    }
    f << to_json(rec, sections).dump(2) << "\n";
  }
  if (a.json)
    std::cout << to_json(rec, sections).dump(2) << "\n";
  else if (a.out.empty())
    print_text(std::cout, rec, table);
  return rec.verification_failed() ? kVerificationFailure : kOk;
}

int run_sweep_cmd(int alpha_max, const std::vector<std::string>& filters, const std::string& out) {
  SweepOptions opts;
  opts.alpha_max = alpha_max;
  for (const auto& f : filters) {
    auto eq = f.find('=');
    std::string key = f.substr(0, eq), value = eq == std::string::npos ? "" : f.substr(eq + 1);
    if (key == "case") {
      opts.case_filter = parse_case_label(value);
      if (!opts.case_filter) {
        std::cerr << "error: unknown case '" << value << "'\n";
        return kUsage;
      }
    } else if (key == "variant") {
      try {
        opts.variant_filter = std::stoi(value);
      } catch (const std::exception&) {
        std::cerr << "error: bad variant '" << value << "'\n";
        return kUsage;
      }
    } else if (key == "status") {
      opts.status_filter = value;
    } else {
      std::cerr << "error: unknown filter '" << f << "' (use case=, variant= or status=)\n";
      return kUsage;
    }
  }

  SweepResult res = run_sweep(opts);
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) {
      std::cerr << "error: cannot write " << out << "\n";
      return kUsage;
    }
  }
  std::ostream& os = out.empty() ? std::cout : file;
  os << csv_header() << "\n";
  bool failed = false;
  for (const auto& row : res.rows) {
    os << csv_row(row) << "\n";  // one complete line per write
    failed = failed || row.record.verification_failed();
  }
  os.flush();

  std::cerr << "tuples " << res.tuples << ", degenerate " << res.degenerate << ", families " << res.families
            << ", rows " << res.rows.size() << ", " << res.seconds << " s\n";
  for (const auto& [key, n] : res.counts) std::cerr << "  " << key << ": " << n << "\n";
  return failed ? kVerificationFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent cones of 4-generated symmetric monomial curves"};
  app.require_subcommand(1);

  SingleArgs analyze_args, resolve_args, hilbert_args, verify_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline summary");
  add_single(analyze_cmd, analyze_args);
  auto* resolve_cmd = app.add_subcommand("resolve", "resolution matrices and twists");
  add_single(resolve_cmd, resolve_args);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function table against the oracle");
  add_single(hilbert_cmd, hilbert_args);
  hilbert_cmd->add_option("--upto", hilbert_args.upto, "last degree (raised to max|twist|+4 if smaller)")
      ->check(CLI::NonNegativeNumber);
  auto* verify_cmd = app.add_subcommand("verify", "certification report with witness details");
  add_single(verify_cmd, verify_args);

  int alpha_max = 3;
  std::vector<std::string> filters;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep the parametrization into a CSV dataset");
  sweep_cmd->add_option("--alpha-max", alpha_max, "bound on every free exponent")->check(CLI::Range(2, 8));
  sweep_cmd->add_option("--filter", filters, "case=1a, variant=N or status=ok (repeatable)");
  sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*analyze_cmd) return run_single(analyze_args, {}, false);
  if (*resolve_cmd) return run_single(resolve_args, {.resolution = true}, false);
  if (*hilbert_cmd) return run_single(hilbert_args, {.hilbert_table = true}, true);
  if (*verify_cmd) return run_single(verify_args, {.witnesses = true}, false);
  if (*sweep_cmd) return run_sweep_cmd(alpha_max, filters, sweep_out);
  return kUsage;
}
