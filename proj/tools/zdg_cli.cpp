// zdg: build zero-divisor graphs of lattices, compute strong metric
// dimensions, run the verification suites.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zdg/zdg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct InputFlags {
  std::string lattice, blowup, reduced, pir, vspace;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  auto* group = cmd->add_option_group("input", "exactly one input kind");
  group->add_option("--lattice", in.lattice, "lattice spec file");
  group->add_option("--blowup", in.blowup, "blow-up spec file");
  group->add_option("--reduced", in.reduced, "reduced ring: file or inline `q=2,2,2`");
  group->add_option("--pir", in.pir, "product of PIRs: file or inline `n=1,1`");
  group->add_option("--vspace", in.vspace, "vector space: file or inline `n=3 q=2`");
  group->require_option(1);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw zdg::Error(zdg::ErrorKind::InvalidArgument, "cannot read `" + path + "`");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// A file path, or the inline tokens following the keyword.
std::string spec_text(const std::string& value, const std::string& keyword) {
  if (fs::is_regular_file(value)) return read_file(value);
  return keyword + " " + value;
}

/// What every subcommand works on.
struct Loaded {
  std::string name;
  zdg::FiniteLattice lattice;
  zdg::SimpleGraph zero_divisor;
  zdg::SimpleGraph target;
  std::optional<std::size_t> formula;
  std::optional<zdg::BlowUpSpec> blowup;
};

Loaded from_instance(zdg::ApplicationInstance inst) {
  return Loaded{inst.name, std::move(*inst.lattice), std::move(inst.zero_divisor), std::move(inst.graph),
                inst.formula_sdim, std::nullopt};
}

Loaded load(const InputFlags& in) {
  if (!in.lattice.empty()) {
    auto L = zdg::parse_lattice_spec(read_file(in.lattice));
    auto g = zdg::zero_divisor_graph(L);
    auto gc = zdg::complement(g);
    return Loaded{fs::path(in.lattice).stem().string(), std::move(L), std::move(g), std::move(gc), std::nullopt,
                  std::nullopt};
  }
  if (!in.blowup.empty()) {
    auto spec = zdg::parse_blowup_spec(read_file(in.blowup));
    auto bu = zdg::build_blowup(spec);
    auto g = zdg::zero_divisor_graph(bu.lattice);
    auto gc = zdg::complement(g);
    std::optional<std::size_t> formula;
    if (spec.n() >= 3) formula = zdg::closed_form_sdim_blowup(spec);
    return Loaded{fs::path(in.blowup).stem().string(), std::move(bu.lattice), std::move(g), std::move(gc), formula,
                  spec};
  }
  if (!in.reduced.empty()) return from_instance(zdg::reduced_ring_instance(zdg::parse_reduced_spec(spec_text(in.reduced, "reduced"))));
  if (!in.pir.empty()) return from_instance(zdg::intersection_instance(zdg::parse_pir_spec(spec_text(in.pir, "pir"))));
  return from_instance(zdg::vector_space_instance(zdg::parse_vspace_spec(spec_text(in.vspace, "vspace"))));
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw zdg::Error(zdg::ErrorKind::InvalidArgument, "cannot write `" + path.string() + "`");
  f << text;
  std::cout << "wrote " << path.string() << "\n";
}

int cmd_build(const InputFlags& in, const std::string& out_dir, std::string stem) {
  const auto data = load(in);
  if (stem.empty()) stem = file_stem(data.name);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  auto emit = [&](const std::string& tag, const zdg::SimpleGraph& g) {
    write_text(dir / (stem + "." + tag + ".dot"), zdg::to_dot(g));
    write_text(dir / (stem + "." + tag + ".edges"), zdg::to_edge_list(g));
  };
  emit("G", data.zero_divisor);
  const auto gc = zdg::complement(data.zero_divisor);
  emit("Gc", gc);
  if (!data.target.same_structure(gc)) emit("app", data.target);
  {
    std::ostringstream hasse;
    zdg::write_hasse_dot(hasse, data.lattice);
    write_text(dir / (stem + ".hasse.dot"), hasse.str());
  }
  if (!zdg::is_connected(data.target)) {
    std::cout << "note: graph is disconnected, no SR graph\n";
    return kExitPass;
  }
  const auto sr = zdg::strong_resolving_graph(data.target);
  std::ostringstream dot;
  zdg::write_sr_dot(dot, data.target, sr);
  write_text(dir / (stem + ".SR.dot"), dot.str());
  write_text(dir / (stem + ".SR.edges"), zdg::to_edge_list(sr.graph));
  return kExitPass;
}

zdg::DimensionReport formula_report(const Loaded& data) {
  if (!data.formula)
    throw zdg::Error(zdg::ErrorKind::MethodInapplicable, "no closed form for a general lattice input");
  if (data.blowup) return zdg::closed_form_report(*data.blowup, data.name);
  zdg::DimensionReport r;
  r.graph_id = data.name;
  r.vertex_count = data.target.vertex_count();
  r.method = zdg::DimensionMethod::closed_form;
  r.sdim = *data.formula;
  return r;
}

int cmd_sdim(const InputFlags& in, const std::string& method, std::size_t cap, bool timings) {
  const auto data = load(in);
  std::vector<zdg::DimensionReport> reports;
  const bool any = method == "auto";
  if (method == "formula" || (any && data.formula)) reports.push_back(formula_report(data));
  if (method == "sr" || any) reports.push_back(zdg::strong_metric_dimension(data.target, data.name));
  if (method == "brute" || (any && data.target.vertex_count() <= cap))
    reports.push_back(zdg::strong_metric_dimension_bruteforce_report(data.target, data.name, cap));

  bool agree = true;
  for (const auto& r : reports) {
    std::cout << zdg::format_report_table(r, &data.target, timings) << zdg::format_report_line(r) << "\n\n";
    agree = agree && r.sdim == reports.front().sdim;
  }
  if (reports.size() > 1) std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
  return agree ? kExitPass : kExitFail;
}

int cmd_verify(const zdg::VerifyOptions& opt) {
  const auto out = zdg::run_verification(opt);
  std::cout << zdg::format_verification(out);
  return out.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of lattices and their strong metric dimension"};
  app.require_subcommand(1);

  InputFlags build_in;
  std::string out_dir = ".", stem;
  auto* build = app.add_subcommand("build", "write G, G^c, SR graph and Hasse diagram as DOT and edge lists");
  add_input_flags(build, build_in);
  build->add_option("--out", out_dir, "output directory");
  build->add_option("--name", stem, "file name stem");

  InputFlags sdim_in;
  std::string method = "auto";
  std::size_t cap = zdg::kDefaultBruteForceCap;
  bool timings = false;
  auto* sdim = app.add_subcommand("sdim", "strong metric dimension of G^c (or the application graph)");
  add_input_flags(sdim, sdim_in);
  sdim->add_option("--method", method, "auto, sr, brute or formula")
      ->check(CLI::IsMember({"auto", "sr", "brute", "formula"}));
  sdim->add_option("--cap", cap, "brute-force vertex cap")->check(CLI::Range(1, 62));
  sdim->add_flag("--timings", timings, "print elapsed time per method");

  zdg::VerifyOptions vopt;
  bool lemmas = false, formulas = false, all = false;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "run the lemma and formula checks over a blow-up corpus");
  verify->add_flag("--lemmas", lemmas, "structural and SR-graph checks");
  verify->add_flag("--formulas", formulas, "closed-form dimension checks");
  verify->add_flag("--all", all, "both suites (default)");
  verify->add_option("--n-min", vopt.corpus.n_min, "smallest number of atoms")->check(CLI::Range(3, 20));
  verify->add_option("--n-max", vopt.corpus.n_max, "largest number of atoms")->check(CLI::Range(3, 20));
  verify->add_option("--len-max", vopt.corpus.len_max, "longest chain")->check(CLI::Range(1, 64));
  verify->add_option("--seed", vopt.corpus.seed, "sampling seed");
  verify->add_option("--samples", vopt.corpus.samples, "specs sampled per size when not enumerated");
  verify->add_option("--inject-fault", fault, "test hook: none or sr-closed-form")
      ->check(CLI::IsMember({"none", "sr-closed-form"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_in, out_dir, stem);
    if (*sdim) return cmd_sdim(sdim_in, method, cap, timings);
    vopt.suite = (lemmas && !formulas && !all) ? zdg::Suite::lemmas
                 : (formulas && !lemmas && !all) ? zdg::Suite::formulas
                                                 : zdg::Suite::all;
    vopt.fault = fault == "sr-closed-form" ? zdg::Fault::sr_closed_form : zdg::Fault::none;
    if (vopt.corpus.n_min > vopt.corpus.n_max) {
      std::cerr << "error: --n-min exceeds --n-max\n";
      return kExitUsage;
    }
    return cmd_verify(vopt);
  } catch (const zdg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto k = e.kind();
    return (k == zdg::ErrorKind::FormulaMismatch || k == zdg::ErrorKind::TheoremViolated) ? kExitFail : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
