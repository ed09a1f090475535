#include "liftfact/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "liftfact/corpus.hpp"
#include "liftfact/error.hpp"

namespace liftfact {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string det_text(const DetMonomial& d) {
  return render(Poly::monomial(d.gain, d.delay));
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParse, path + ": " + ex.what());
  }
}

struct FactorArgs {
  std::string bank;
  std::string strategy;
  std::string engine = "cca";
  std::string form = "standard";
  std::string output = "text";
};

int cmd_factor(const FactorArgs& a, std::ostream& out) {
  CorpusEntry e = load_entry(a.bank);
  Strategy strat = parse_strategy(a.strategy);
  Factorization f;
  if (a.engine == "cca") {
    f = factor_cca(e.polyphase, strat);
  } else {
    if (strat.directives.size() != 1 || strat.directives[0].multiplicity != 0) {
      throw Error(ErrorCode::kInvalidDirective, "the EEA engine takes a single site, e.g. --strategy C0");
    }
    f = factor_eea(e.polyphase, strat.directives[0].site);
  }
  if (a.form == "standard") f = normalize_standard(f);
  DetMonomial dm = pr_check(e.polyphase);
  if (a.output == "json") {
    json j = to_json(f);
    j["bank"] = e.name;
    j["engine"] = a.engine;
    j["strategy"] = render(strat);
    j["form"] = a.form;
    j["det"] = to_json(dm);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "bank: " << e.name << "\n";
  out << "engine: " << a.engine << "  strategy: " << render(strat) << "  form: " << a.form << "\n";
  out << "det H(z) = " << det_text(dm) << "\n";
  out << render_product_line(f.steps) << "\n";
  out << "steps:\n";
  for (std::size_t i = 0; i < f.steps.size(); ++i) out << "  " << i + 1 << ". " << describe_step(f.steps[i]) << "\n";
  out << "trace:\n";
  for (const auto& t : f.trace) out << "  " << t << "\n";
  return 0;
}

struct EnumerateArgs {
  std::string bank;
  std::size_t max_depth = 64;
  long max_multiplicity = -1;
  long max_nodes = -1;
  std::string output = "text";
};

void collect_paths(const FactorizationTree& t, std::size_t node, const std::string& path,
                   std::vector<std::pair<std::string, const Factorization*>>& out) {
  const TreeNode& n = t.nodes[node];
  if (n.leaf) out.emplace_back(path, &*n.leaf);
  for (const auto& e : n.children) {
    std::string label;
    for (const auto& d : e.directives) label += (label.empty() ? "" : "|") + render(d);
    collect_paths(t, e.child, path.empty() ? label : path + "," + label, out);
  }
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  CorpusEntry e = load_entry(a.bank);
  EnumerateOptions opts;
  opts.max_depth = a.max_depth;
  if (a.max_multiplicity >= 0) opts.max_multiplicity = static_cast<std::size_t>(a.max_multiplicity);
  if (a.max_nodes >= 0) opts.max_nodes = static_cast<std::size_t>(a.max_nodes);
  FactorizationTree t = enumerate(e.polyphase, opts);
  if (a.output == "json") {
    json j = to_json(t);
    j["bank"] = e.name;
    out << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::pair<std::string, const Factorization*>> paths;
  collect_paths(t, 0, "", paths);
  std::size_t truncated = 0;
  for (const auto& n : t.nodes) truncated += n.truncated ? 1 : 0;
  out << "bank: " << e.name << "\n";
  out << "nodes: " << t.nodes.size() << "  leaves: " << paths.size() << "  depth: " << t.depth();
  if (truncated) out << "  truncated: " << truncated;
  out << "\n";
  for (const auto& [path, f] : paths) {
    out << path << "\n  " << render_product_line(normalize_standard(*f).steps) << "\n";
  }
  return 0;
}

std::string mismatch_report(const PolyMatrix2& want, const PolyMatrix2& got) {
  std::string s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (want.at(i, j) != got.at(i, j)) {
        s += "entry (" + std::to_string(i) + "," + std::to_string(j) + "): expected " + render(want.at(i, j)) +
             ", product gives " + render(got.at(i, j)) + "\n";
      }
  return s;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  json j = read_json(path);
  Factorization f = factorization_from_json(j);
  PolyMatrix2 p = product(f.steps);
  if (p != f.source) {
    out << "fail: " << path << "\n" << mismatch_report(f.source, p);
    throw Error(ErrorCode::kVerificationFailed, "product of steps differs from the source matrix");
  }
  DetMonomial dm = pr_check(f.source);
  out << "pass: " << f.steps.size() << " steps multiply back to the source matrix (det " << det_text(dm) << ")\n";
  return 0;
}

Signal parse_signal(const std::string& text, std::string& header) {
  if (text == "impulse") {
    header = "impulse";
    return impulse();
  }
  if (text.rfind("random:", 0) == 0) {
    std::string seed_text = text.substr(7);
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad seed in '" + text + "'");
    }
    header = "random seed=" + std::to_string(seed) + " (mt19937_64, 64 samples)";
    return random_signal(seed);
  }
  std::string path = text.rfind("file:", 0) == 0 ? text.substr(5) : text;
  json j = read_json(path);
  Signal x;
  const json& samples = j.is_array() ? j : j.at("samples");
  for (const auto& s : samples) x.samples.push_back(rational_from_json(s));
  if (j.is_object()) x.start = j.value("start", 0L);
  header = "file " + path;
  return x;
}

int cmd_simulate(const std::string& target, const std::string& signal, const std::string& mode_text,
                 const std::string& output, std::ostream& out) {
  SynthesisMode mode = mode_text == "exact" ? SynthesisMode::kExactInverse : SynthesisMode::kCausalAdjugate;
  std::string header;
  Signal x = parse_signal(signal, header);
  std::string source;
  PrReport r;
  std::filesystem::path p(target);
  bool is_factorization = false;
  json j;
  if (p.extension() == ".json" && std::filesystem::exists(p)) {
    j = read_json(target);
    is_factorization = j.contains("steps");
  }
  if (is_factorization) {
    Factorization f = factorization_from_json(j);
    if (product(f.steps) != f.source) {
      throw Error(ErrorCode::kVerificationFailed, "factorization does not multiply back to its source");
    }
    Signal ladder = synthesize(f, analyze(f, x), mode);
    Signal direct = synthesize(f.source, analyze(f.source, x), mode);
    if (!(ladder == direct)) throw Error(ErrorCode::kReconstructionMismatch, "ladder and matrix paths disagree");
    r = align(x, ladder);
    source = target + " (ladder path, checked against the matrix path)";
  } else {
    CorpusEntry e = load_entry(target);
    r = align(x, synthesize(e.polyphase, analyze(e.polyphase, x), mode));
    source = e.name + " (matrix path)";
  }
  if (output == "json") {
    out << json{{"source", source}, {"signal", header}, {"mode", mode_text}, {"gain", r.gain.str()}, {"delay", r.delay}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "# signal: " << header << "\n";
  out << "source: " << source << "\n";
  out << "synthesis: " << (mode == SynthesisMode::kExactInverse ? "exact inverse" : "causal adjugate") << "\n";
  out << "perfect reconstruction: gain " << r.gain.str() << ", delay " << r.delay << "\n";
  return 0;
}

int cmd_solve_lde(const std::string& a, const std::string& b, const std::string& c, const std::string& target,
                  const std::string& output, std::ostream& out) {
  Poly pa = parse_coefficients(a), pb = parse_coefficients(b), pc = parse_coefficients(c);
  LdeSolution s = degree_reducing(pa, pb, pc, target == "b" ? LdeTarget::kB : LdeTarget::kA);
  if (output == "json") {
    out << to_json(s).dump(2) << "\n";
    return 0;
  }
  out << "x = " << render(s.x) << "\n";
  out << "y = " << render(s.y) << "\n";
  out << "degree-reducing in: " << reduced_in_name(s.reduced_in) << "\n";
  return 0;
}

int cmd_list(std::ostream& out) {
  out << "corpus directory: " << corpus_dir() << "\n";
  for (const auto& n : builtin_names()) {
    CorpusEntry e = load_entry(n);
    out << e.name << "  det " << det_text(e.expected_det) << "  " << e.description << "\n";
  }
  return 0;
}

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

std::string describe_step(const LiftingStep& s) {
  return std::visit(overloaded{
                        [](const UpperLift& u) { return "upper  " + render(u.filter); },
                        [](const LowerLift& l) { return "lower  " + render(l.filter); },
                        [](const DelayDiag& d) {
                          return "delay  z^-" + std::to_string(d.m) + " on channel " + std::to_string(d.channel);
                        },
                        [](const GainDiag& g) { return "gain   " + g.k0.str() + ", " + g.k1.str(); },
                        [](const Swap&) { return std::string("swap"); },
                    },
                    s);
}

std::string render_product_line(const std::vector<LiftingStep>& steps) { return "H(z) = " + render(steps); }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lifting factorization of two-channel polyphase matrices", "liftfact"};
  app.require_subcommand(1);

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "factor a bank's polyphase matrix into lifting steps");
  factor->add_option("bank", fa.bank, "corpus name or bank JSON file")->required();
  factor->add_option("--strategy", fa.strategy, "directives, e.g. C1@M=1,C1 (a single site for --engine eea)")
      ->required();
  factor->add_option("--engine", fa.engine)->check(CLI::IsMember({"cca", "eea"}));
  factor->add_option("--form", fa.form)->check(CLI::IsMember({"raw", "standard"}));
  factor->add_option("--output", fa.output)->check(CLI::IsMember({"text", "json"}));

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every degree-lifting factorization");
  enumerate_cmd->add_option("bank", ea.bank, "corpus name or bank JSON file")->required();
  enumerate_cmd->add_option("--max-depth", ea.max_depth);
  enumerate_cmd->add_option("--max-multiplicity", ea.max_multiplicity, "cap on SGDA multiplicity");
  enumerate_cmd->add_option("--max-nodes", ea.max_nodes, "stop expanding once the tree has this many nodes");
  enumerate_cmd->add_option("--output", ea.output)->check(CLI::IsMember({"text", "json"}));

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check that a factorization file multiplies back to its source");
  verify->add_option("file", verify_path)->required();

  std::string sim_target, sim_signal = "impulse", sim_mode = "causal", sim_output = "text";
  auto* simulate = app.add_subcommand("simulate", "run analysis then synthesis and report gain and delay");
  simulate->add_option("target", sim_target, "corpus name, bank JSON or factorization JSON")->required();
  simulate->add_option("--signal", sim_signal, "impulse | random:<seed> | file:<path>");
  simulate->add_option("--mode", sim_mode)->check(CLI::IsMember({"causal", "exact"}));
  simulate->add_option("--output", sim_output)->check(CLI::IsMember({"text", "json"}));

  std::string la, lb, lc, ltarget = "a", loutput = "text";
  auto* lde = app.add_subcommand("solve-lde", "degree-reducing solution of a x + b y = c");
  lde->add_option("a", la, "coefficients of a, lowest power first, e.g. 1,1")->required();
  lde->add_option("b", lb)->required();
  lde->add_option("c", lc)->required();
  lde->add_option("--target", ltarget)->check(CLI::IsMember({"a", "b"}));
  lde->add_option("--output", loutput)->check(CLI::IsMember({"text", "json"}));

  auto* list = app.add_subcommand("list", "list corpus entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    print_error(err, "usage", e.what());
    return 2;
  }

  try {
    if (*factor) return cmd_factor(fa, out);
    if (*enumerate_cmd) return cmd_enumerate(ea, out);
    if (*verify) return cmd_verify(verify_path, out);
    if (*simulate) return cmd_simulate(sim_target, sim_signal, sim_mode, sim_output, out);
    if (*lde) return cmd_solve_lde(la, lb, lc, ltarget, loutput, out);
    if (*list) return cmd_list(out);
  } catch (const Error& e) {
    print_error(err, error_code_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace liftfact
