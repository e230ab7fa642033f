// hk: print kernels, project polynomials, pair them, and run the identity
// verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hk/hk.hpp"

namespace {

constexpr int kExitUsage = 2;

const std::map<std::string, hk::Case> kCases{
    {"real", hk::Case::real}, {"complex", hk::Case::complex}, {"symplectic", hk::Case::symplectic}};

/// Grid flags shared by several subcommands.
struct ParamFlags {
  std::string case_name = "real";
  int m = 3;
  int n = 2;
  int k = 0;
  int p = 0;
  int q = 0;

  void add_to(CLI::App* cmd, bool degrees) {
    cmd->add_option("--case", case_name, "real | complex | symplectic")
        ->check(CLI::IsMember({"real", "complex", "symplectic"}))
        ->capture_default_str();
    cmd->add_option("--m", m, "real dimension")->capture_default_str();
    cmd->add_option("--n", n, "complex dimension (quaternionic for symplectic)")->capture_default_str();
    if (degrees) {
      cmd->add_option("--k", k, "degree (real case)")->capture_default_str();
      cmd->add_option("--p", p, "holomorphic degree")->capture_default_str();
      cmd->add_option("--q", q, "antiholomorphic degree")->capture_default_str();
    }
  }

  hk::Case kind() const { return kCases.at(case_name); }

  hk::KernelParams params() const {
    switch (kind()) {
      case hk::Case::real: return hk::KernelParams::real(m, k);
      case hk::Case::complex: return hk::KernelParams::complex(n, p, q);
      case hk::Case::symplectic: return hk::KernelParams::symplectic(n, p, q);
    }
    return hk::KernelParams::real(m, k);
  }

  /// Single-group system the input polynomials live in.
  hk::SystemRef input_system() const {
    switch (kind()) {
      case hk::Case::real: return hk::VariableSystem::make({{"x", m, hk::Kind::real}});
      case hk::Case::complex: return hk::VariableSystem::make({{"z", n, hk::Kind::complex}});
      case hk::Case::symplectic: return hk::VariableSystem::make({{"z", 2 * n, hk::Kind::complex}});
    }
    return nullptr;
  }

  std::string group() const { return kind() == hk::Case::real ? "x" : "z"; }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw hk::InvalidParams("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed(std::string s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int cmd_kernel(const ParamFlags& pf, const std::string& which, const std::string& excess, const std::string& format) {
  const hk::KernelParams kp = pf.params();
  static const std::map<std::string, hk::KernelKind> kinds{
      {"Z", hk::KernelKind::Z}, {"K", hk::KernelKind::K}, {"ZS", hk::KernelKind::ZS}, {"KS", hk::KernelKind::KS}};
  const hk::ExcessFactor ef = excess == "z_ubar" ? hk::ExcessFactor::z_ubar : hk::ExcessFactor::zbar_u;
  hk::Polynomial k = hk::kernel(kp, kinds.at(which), ef);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["params"] = hk::verify::params_json(kp);
    j["which"] = which;
    j["terms"] = k.size();
    j["polynomial"] = hk::format(k);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << hk::format(k) << '\n';
  }
  return 0;
}

int cmd_project(const ParamFlags& pf, const std::string& flavor, int ell, const std::string& orientation,
                const std::string& input, const std::string& text) {
  hk::SystemRef sys = pf.input_system();
  const std::string source = text.empty() ? read_input(input) : text;
  hk::Polynomial p = hk::parse(trimmed(source), sys);
  hk::Polynomial out(sys);
  if (flavor == "harmonic") {
    out = pf.kind() == hk::Case::real ? hk::proj_harmonic_real(p, "x", ell) : hk::proj_harmonic_complex(p, "z", ell);
  } else {
    if (pf.kind() != hk::Case::symplectic) throw hk::InvalidParams("the symplectic projection needs --case symplectic");
    if (orientation.empty()) {
      out = hk::proj_symplectic(p, "z");
    } else {
      out = hk::proj_symplectic(p, "z", orientation == "E" ? hk::Orientation::E : hk::Orientation::Edag);
    }
  }
  std::cout << hk::format(out) << '\n';
  return 0;
}

int cmd_inner(const ParamFlags& pf, const std::string& product, const std::string& a, const std::string& b) {
  hk::SystemRef sys = pf.input_system();
  hk::Polynomial pa = hk::parse(trimmed(a), sys);
  hk::Polynomial pb = hk::parse(trimmed(b), sys);
  hk::Polynomial r = product == "fischer" ? hk::fischer_pairing(pa, pb, pf.group()) : hk::spherical_inner(pa, pb, pf.group());
  std::cout << hk::format(r) << '\n';
  return 0;
}

struct VerifyFlags {
  std::string suite = "all";
  std::optional<std::string> case_name;
  std::vector<int> m;
  std::vector<int> n;
  std::optional<int> k;
  std::optional<int> kmax;
  std::optional<int> p;
  std::optional<int> q;
  std::uint64_t seed = 42;
  int jobs = 1;
  std::size_t max_terms = 0;
  bool allow_skip = false;
  bool timing = false;
  int samples = 5;
  int op_samples = 20;
};

int cmd_verify(const VerifyFlags& vf) {
  auto suite = hk::verify::parse_suite(vf.suite);
  hk::verify::Selection sel;
  if (vf.case_name) sel.only_case = kCases.at(*vf.case_name);
  sel.m = vf.m;
  sel.n = vf.n;
  sel.k = vf.k;
  sel.kmax = vf.kmax;
  sel.p = vf.p;
  sel.q = vf.q;
  hk::verify::Options opts;
  opts.seed = vf.seed;
  opts.jobs = vf.jobs;
  opts.max_terms = vf.max_terms;
  opts.samples = vf.samples;
  opts.op_samples = vf.op_samples;
  opts.timing = vf.timing;
  auto tasks = hk::verify::tasks_for(*suite, sel);
  if (tasks.empty()) throw hk::InvalidParams("the selection matches no verification task");
  auto reports = hk::verify::run(tasks, opts);
  std::cout << hk::verify::to_jsonl(reports, opts.timing) << std::flush;
  std::size_t fails = 0;
  std::size_t skips = 0;
  for (const auto& r : reports) {
    fails += r.status == hk::verify::Status::fail;
    skips += r.status == hk::verify::Status::skipped;
  }
  std::cerr << reports.size() << " reports, " << fails << " failed, " << skips << " skipped\n";
  return hk::verify::exit_code(reports, vf.allow_skip);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of harmonic-analysis kernel identities"};
  app.require_subcommand(1);

  ParamFlags kernel_params;
  std::string which = "K";
  std::string excess = "zbar_u";
  std::string format = "text";
  auto* kernel = app.add_subcommand("kernel", "print a kernel polynomial");
  kernel_params.add_to(kernel, true);
  kernel->add_option("--which", which, "Z | K | ZS | KS")->check(CLI::IsMember({"Z", "K", "ZS", "KS"}))->capture_default_str();
  kernel->add_option("--excess", excess, "excess factor of the symplectic kernels: zbar_u | z_ubar")
      ->check(CLI::IsMember({"zbar_u", "z_ubar"}))
      ->capture_default_str();
  kernel->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  ParamFlags project_params;
  std::string flavor = "harmonic";
  int ell = 0;
  std::string orientation;
  std::string input;
  std::string poly_text;
  auto* project = app.add_subcommand("project", "apply a projection operator to a polynomial");
  project_params.add_to(project, false);
  project->add_option("--flavor", flavor, "harmonic | symplectic")
      ->check(CLI::IsMember({"harmonic", "symplectic"}))
      ->capture_default_str();
  project->add_option("--ell", ell, "harmonic component index")->capture_default_str();
  project->add_option("--orientation", orientation, "Edag | E (default: by bidegree)")->check(CLI::IsMember({"Edag", "E"}));
  project->add_option("--input", input, "file holding the polynomial, - for stdin");
  project->add_option("polynomial", poly_text, "polynomial text (instead of --input)");

  ParamFlags inner_params;
  std::string product = "fischer";
  std::string left;
  std::string right;
  auto* inner = app.add_subcommand("inner", "pair two polynomials");
  inner_params.add_to(inner, false);
  inner->add_option("--product", product, "fischer | sphere")->check(CLI::IsMember({"fischer", "sphere"}))->capture_default_str();
  inner->add_option("left", left, "first polynomial (conjugated side)")->required();
  inner->add_option("right", right, "second polynomial")->required();

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run identity verification suites, JSON lines on stdout");
  verify->add_option("suite", vf.suite, "all | spherical | complex | symplectic | pizzetti | planewave")
      ->check(CLI::IsMember({"all", "spherical", "complex", "symplectic", "pizzetti", "planewave"}))
      ->capture_default_str();
  verify->add_option("--case", vf.case_name, "restrict to one case")->check(CLI::IsMember({"real", "complex", "symplectic"}));
  verify->add_option("--m", vf.m, "real dimensions")->delimiter(',');
  verify->add_option("--n", vf.n, "complex or quaternionic dimensions")->delimiter(',');
  verify->add_option("--k", vf.k, "single real degree");
  verify->add_option("--kmax", vf.kmax, "largest degree on the grid");
  verify->add_option("--p", vf.p, "single holomorphic degree");
  verify->add_option("--q", vf.q, "single antiholomorphic degree");
  verify->add_option("--seed", vf.seed, "base seed of the random inputs")->capture_default_str();
  verify->add_option("--jobs", vf.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--max-terms", vf.max_terms, "skip tasks whose polynomials exceed this many terms (0: no cap)")
      ->envname("HK_MAX_TERMS");
  verify->add_flag("--allow-skip", vf.allow_skip, "exit 0 even when tasks were skipped");
  verify->add_flag("--timing", vf.timing, "report wall-clock elapsed_ms");
  verify->add_option("--samples", vf.samples, "random inputs per reproduction check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--op-samples", vf.op_samples, "random inputs per operator identity")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(kernel_params, which, excess, format);
    if (project->parsed()) return cmd_project(project_params, flavor, ell, orientation, input, poly_text);
    if (inner->parsed()) return cmd_inner(inner_params, product, left, right);
    if (verify->parsed()) return cmd_verify(vf);
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
