#include "fpc/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "fpc/code_io.hpp"
#include "fpc/error.hpp"
#include "fpc/orthogonal_array.hpp"
#include "fpc/planner.hpp"
#include "fpc/text.hpp"
#include "fpc/verifier.hpp"

namespace fpc::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0x5eed;
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
  bool quiet = false;
  std::string isa = "auto";

  VerifyOptions verify_options() const {
    VerifyOptions o;
    o.budget = budget;
    o.jobs = jobs;
    if (isa != "auto") o.isa = kernels::parse_isa(isa);
    return o;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string seconds(std::chrono::nanoseconds d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double>(d).count() << " s";
  return s.str();
}

std::string summary(const Code& code) {
  return "q=" + std::to_string(code.alphabet_size()) + " l=" + std::to_string(code.length()) +
         " M=" + std::to_string(code.size()) +
         " inf=" + (code.inf_id() ? std::to_string(*code.inf_id()) : "none");
}

void print_witness(std::ostream& out, const Witness& w, std::optional<Symbol> inf) {
  switch (w.kind) {
    case WitnessKind::framed:
      out << "witness: coalition of " << w.coalition.size() << "\n";
      for (const auto& y : w.coalition) out << "  " << format_word(y, inf) << '\n';
      out << "framed: " << format_word(w.framed_word, inf) << '\n';
      break;
    case WitnessKind::pt_violation:
      out << "witness: " << (w.pair.size() == 1 ? "word with too many inf entries" : "pair")
          << '\n';
      for (const auto& y : w.pair) out << "  " << format_word(y, inf) << '\n';
      out << "positions:";
      for (auto p : w.positions) out << ' ' << p;
      out << '\n';
      break;
    case WitnessKind::oa_violation:
      out << "witness: rows";
      for (auto r : w.rows) out << ' ' << r;
      out << " tuple";
      for (auto s : w.tuple) out << ' ' << s;
      out << " seen " << w.observed << " times, expected " << w.expected << '\n';
      break;
  }
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string recipe;
  std::size_t m = 0, c = 0, t = 2, s = 0;
  std::string in, out;
  bool augment = false;
  bool trust = false;
  CLI::Option *m_opt, *c_opt, *s_opt, *in_opt, *t_opt;
};

int do_construct(const ConstructArgs& a, const Globals& g, std::ostream& out) {
  auto forbid = [&](CLI::Option* opt, const char* name) {
    if (*opt) throw UsageError(std::string(name) + " is not used by recipe " + a.recipe);
  };
  auto need = [&](CLI::Option* opt, const char* name) {
    if (!*opt) throw UsageError("recipe " + a.recipe + " needs " + name);
  };

  std::optional<Code> code;
  std::size_t c = a.c;
  if (auto base = parse_base_code_id(a.recipe)) {
    forbid(a.m_opt, "--m");
    forbid(a.in_opt, "--in");
    forbid(a.s_opt, "--s");
    code = base_code(*base);
    if (!*a.c_opt) c = base_code_info(*base).c;
  } else if (a.recipe == "lemma2") {
    need(a.in_opt, "--in");
    need(a.m_opt, "--m");
    need(a.c_opt, "--c");
    forbid(a.s_opt, "--s");
    const Code parent = load_code(a.in);
    code = compose_lemma2(parent, ComposeParams{.m = a.m, .t = a.t, .c = c, .points = {},
                                                .trust = a.trust});
  } else if (a.recipe == "lemma7") {
    need(a.s_opt, "--s");
    need(a.m_opt, "--m");
    need(a.c_opt, "--c");
    forbid(a.in_opt, "--in");
    code = oa_pipeline_lemma7(a.s, a.t, a.s + 1, a.m, c);
  } else if (a.recipe == "cor-oa") {
    need(a.m_opt, "--m");
    need(a.c_opt, "--c");
    forbid(a.in_opt, "--in");
    forbid(a.s_opt, "--s");
    if (*a.t_opt && a.t != 2) throw UsageError("recipe cor-oa uses t=2");
    code = corollary_oa(c, a.m);
  } else {
    throw UsageError("unknown recipe " + a.recipe);
  }
  if (a.augment) code = augment_infinity(*code, c, a.t, a.trust);
  save_code(a.out, *code);
  if (!g.quiet) out << "wrote " << a.out << ": " << summary(*code) << '\n';
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::size_t c = 0;
  std::string algorithm = "cover";
  std::size_t pt = 0;
  std::string file;
  CLI::Option* pt_opt;
};

int do_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  const Code code = load_code(a.file);
  const auto options = g.verify_options();
  if (!g.quiet) out << a.file << ": " << summary(code) << " c=" << a.c << '\n';

  std::optional<bool> verdict;
  auto report = [&](const char* name, const VerifyReport& r) {
    if (!g.quiet) {
      out << name << ": " << (r.verdict ? "frameproof" : "NOT frameproof") << " ("
          << r.subsets_examined << " examined, " << seconds(r.elapsed) << ")\n";
    }
    if (!r.verdict && r.witness) print_witness(out, *r.witness, code.inf_id());
    if (verdict && *verdict != r.verdict) {
      throw Error(ErrorCode::precondition, "naive and cover verifiers disagree");
    }
    verdict = r.verdict;
  };
  if (a.algorithm == "naive" || a.algorithm == "both") {
    report("naive", is_frameproof_naive(code, a.c, options));
  }
  if (a.algorithm == "cover" || a.algorithm == "both") {
    report("cover", is_frameproof_cover(code, a.c, options));
  }
  bool ok = *verdict;
  if (*a.pt_opt) {
    auto r = satisfies_property_pt(code, a.pt, options);
    if (!g.quiet) out << "P(" << a.pt << "): " << (r.verdict ? "holds" : "FAILS") << '\n';
    if (!r.verdict && r.witness) print_witness(out, *r.witness, code.inf_id());
    ok = ok && r.verdict;
  }
  return ok ? kOk : kViolated;
}

// ---- plan / bounds -----------------------------------------------------------

int do_plan(std::size_t c, std::uint64_t q, bool execute, const std::string& out_path,
            const Globals& g, std::ostream& out) {
  ConstructionPlan plan;
  if (c == 2) {
    plan = plan_theorem2(q);
  } else if (c == 3) {
    plan = plan_theorem3(q);
  } else {
    throw UsageError("plan supports --c 2 or --c 3");
  }
  out << format_plan(plan);
  if (!execute) {
    if (!out_path.empty()) throw UsageError("--out needs --execute");
    return kOk;
  }
  const Code code = execute_plan(plan);
  if (!out_path.empty()) save_code(out_path, code);
  if (!g.quiet) out << "executed: " << summary(code) << '\n';
  return kOk;
}

int do_bounds(std::size_t c, CLI::Option* l_opt, std::size_t l, CLI::Option* q_opt,
              std::uint64_t q, const std::string& code_path, const Globals& g,
              std::ostream& out) {
  std::optional<std::uint64_t> size;
  if (!code_path.empty()) {
    const Code code = load_code(code_path);
    if (*l_opt && l != code.length()) throw UsageError("--l disagrees with the code file");
    if (*q_opt && q != code.alphabet_size()) throw UsageError("--q disagrees with the code file");
    l = code.length();
    q = code.alphabet_size();
    size = code.size();
  } else if (!*l_opt || !*q_opt) {
    throw UsageError("bounds needs --l and --q, or --code");
  }
  const auto r = bound_report(c, l, q, size);
  if (!g.quiet) out << format_bound_table(r);
  out << format_bound_line(r) << '\n';
  return r.within_bound() ? kOk : kViolated;
}

// ---- oa / import / export -----------------------------------------------------

enum class FileKind { code, oa };

FileKind sniff(const std::string& contents) {
  auto lines = text::split_lines(contents);
  if (!lines.empty()) {
    auto head = text::split_ws(lines[0]);
    if (!head.empty() && head[0] == "fpc1") return FileKind::code;
    if (!head.empty() && head[0] == "oa1") return FileKind::oa;
  }
  throw Error(ErrorCode::parse, "unrecognized file header (expected fpc1 or oa1)");
}

std::string canonical(const std::string& path, std::string& what) {
  const std::string contents = text::read_file(path);
  if (sniff(contents) == FileKind::code) {
    const Code code = parse_code(contents);
    what = "code " + summary(code);
    return format_code(code);
  }
  const OrthogonalArray array = parse_oa(contents);
  what = "array N=" + std::to_string(array.runs()) + " k=" + std::to_string(array.constraints()) +
         " s=" + std::to_string(array.levels()) + " t=" + std::to_string(array.strength());
  return format_oa(array);
}

int report_selftest(const std::vector<SelftestCheck>& checks, const Globals& g,
                    std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& check : checks) {
    if (check.passed) ++passed;
    if (!g.quiet) {
      out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
      if (!check.detail.empty()) out << " - " << check.detail;
      out << '\n';
    }
  }
  out << "selftest: " << passed << "/" << checks.size() << " passed\n";
  return passed == checks.size() ? kOk : kViolated;
}

int status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::budget_exceeded:
    case ErrorCode::limit_exceeded:
    case ErrorCode::io:
      return kResource;
    default:
      return kUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify q-ary c-frameproof codes", "fpc"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--budget", g.budget, "Naive verifier budget in (coalition, candidate) pairs");
  app.add_option("--jobs", g.jobs, "Verifier worker threads (0 = all cores)");
  app.add_flag("--quiet", g.quiet, "Print only summaries");
  app.add_option("--isa", g.isa, "Kernel ISA")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a code from a recipe");
  construct->add_option("--recipe", ca.recipe)
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "lem4", "lem5", "lemma2", "lemma7", "cor-oa"}));
  ca.m_opt = construct->add_option("--m", ca.m, "Prime power for the composition field");
  ca.c_opt = construct->add_option("--c", ca.c, "Coalition size");
  ca.t_opt = construct->add_option("--t", ca.t, "Property P(t) parameter")->capture_default_str();
  ca.s_opt = construct->add_option("--s", ca.s, "OA order (lemma7)");
  ca.in_opt = construct->add_option("--in", ca.in, "Parent code file (lemma2)");
  construct->add_flag("--augment-inf", ca.augment, "Append the all-inf word");
  construct->add_flag("--trust", ca.trust, "Skip Property P(t) re-verification of inputs");
  construct->add_option("--out", ca.out, "Output code file")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the c-frameproof property");
  verify->add_option("--c", va.c)->required();
  verify->add_option("--algorithm", va.algorithm)
      ->check(CLI::IsMember({"naive", "cover", "both"}))
      ->capture_default_str();
  va.pt_opt = verify->add_option("--pt", va.pt, "Also check Property P(t)");
  verify->add_option("codefile", va.file)->required();

  std::size_t plan_c = 0;
  std::uint64_t plan_q = 0;
  bool plan_execute = false;
  std::string plan_out;
  auto* plan = app.add_subcommand("plan", "Print (and run) the construction plan for q");
  plan->add_option("--c", plan_c)->required()->check(CLI::IsMember({2, 3}));
  plan->add_option("--q", plan_q)->required();
  plan->add_flag("--execute", plan_execute);
  plan->add_option("--out", plan_out);

  std::size_t oa_s = 0;
  std::string oa_out;
  auto* oa = app.add_subcommand("oa", "Build OA(2, s+1, s)");
  oa->add_option("--s", oa_s)->required();
  oa->add_option("--out", oa_out);

  std::string oa_file;
  auto* oa_verify = app.add_subcommand("oa-verify", "Check an orthogonal array file");
  oa_verify->add_option("file", oa_file)->required();

  std::size_t b_c = 0, b_l = 0;
  std::uint64_t b_q = 0;
  std::string b_code;
  auto* bounds = app.add_subcommand("bounds", "Size bounds and rates");
  bounds->add_option("--c", b_c)->required();
  auto* b_l_opt = bounds->add_option("--l", b_l);
  auto* b_q_opt = bounds->add_option("--q", b_q);
  bounds->add_option("--code", b_code);

  std::string io_in, io_out;
  auto* import = app.add_subcommand("import", "Validate a .fpc/.oa file and write it canonically");
  import->add_option("file", io_in)->required();
  import->add_option("--out", io_out)->required();
  std::string ex_in, ex_out;
  auto* export_ = app.add_subcommand("export", "Validate a .fpc/.oa file and print it canonically");
  export_->add_option("file", ex_in)->required();
  export_->add_option("--out", ex_out);

  auto* self = app.add_subcommand("selftest", "Run the built-in fixture and oracle checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (g.isa == "avx2" && !kernels::cpu_supports(kernels::Isa::avx2)) {
    err << "fpc: avx2 kernels are not available on this machine\n";
    return kUsage;
  }

  try {
    if (*construct) return do_construct(ca, g, out);
    if (*verify) return do_verify(va, g, out);
    if (*plan) return do_plan(plan_c, plan_q, plan_execute, plan_out, g, out);
    if (*bounds) return do_bounds(b_c, b_l_opt, b_l, b_q_opt, b_q, b_code, g, out);
    if (*oa) {
      const auto array = build_oa_strength2(oa_s);
      if (oa_out.empty()) {
        out << format_oa(array);
      } else {
        save_oa(oa_out, array);
        if (!g.quiet) out << "wrote " << oa_out << '\n';
      }
      return kOk;
    }
    if (*oa_verify) {
      const auto array = load_oa(oa_file);
      const auto r = verify_oa(array);
      if (!g.quiet || !r.verdict) {
        out << oa_file << ": " << (r.verdict ? "valid" : "INVALID") << " OA N=" << array.runs()
            << " k=" << array.constraints() << " s=" << array.levels()
            << " t=" << array.strength() << " index=" << array.index() << '\n';
      }
      if (r.witness) print_witness(out, *r.witness, std::nullopt);
      return r.verdict ? kOk : kViolated;
    }
    if (*import) {
      std::string what;
      text::write_file(io_out, canonical(io_in, what));
      if (!g.quiet) out << "imported " << what << " -> " << io_out << '\n';
      return kOk;
    }
    if (*export_) {
      std::string what;
      const std::string body = canonical(ex_in, what);
      if (ex_out.empty()) {
        out << body;
      } else {
        text::write_file(ex_out, body);
        if (!g.quiet) out << "exported " << what << " -> " << ex_out << '\n';
      }
      return kOk;
    }
    if (*self) {
      SelftestOptions so;
      so.seed = g.seed;
      so.jobs = g.jobs;
      return report_selftest(selftest(so), g, out);
    }
  } catch (const UsageError& e) {
    err << "fpc: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "fpc: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "fpc: " << to_string(e.code()) << ": " << e.what() << '\n';
    return status_for(e);
  } catch (const std::exception& e) {
    err << "fpc: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("fpc");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fpc::cli
