#include "fitkit_cli/app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/fitting.hpp"
#include "fitkit/group_io.hpp"
#include "fitkit/tower.hpp"
#include "fitkit_cli/corpus.hpp"
#include "fitkit_cli/report.hpp"
#include "fitkit_cli/suites.hpp"

namespace fitkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct CapFlags {
  std::optional<std::uint64_t> subgroups, lattice, oracle, tower_order, sylow, elements;

  Caps apply(Caps c) const {
    if (subgroups) c.subgroups = *subgroups;
    if (lattice) c.normal_lattice = *lattice;
    if (oracle) c.oracle = *oracle;
    if (tower_order) c.tower_order = *tower_order;
    if (sylow) c.sylow_exhaustive = *sylow;
    if (elements) c.elements = *elements;
    return c;
  }
};

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

Tower load_tower(const std::string& path) { return tower_from_json(read_text_file(path)); }

int cmd_analyze(const std::string& file, Format fmt, std::ostream& out) {
  FittingReport r = generalized_fitting(read_group_file(file));
  out << render_analysis(r, fmt);
  return kOk;
}

int cmd_build(const std::vector<std::uint64_t>& primes, std::size_t levels, const std::string& out_path,
              std::ostream& out) {
  Tower t = build_degenerate_tower(primes, levels);
  const std::string doc = tower_to_json(t);
  if (out_path.empty()) {
    out << doc;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!(f << doc)) throw Error("cannot write " + out_path);
  for (std::size_t i = 1; i <= t.depth(); ++i)
    out << "G_" << i << ": order " << t.level(i).order() << ", degree " << t.level(i).degree() << "\n";
  out << "wrote " << out_path << "\n";
  return kOk;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  Tower t = load_tower(file);
  const TowerCheck c = tower_validate(t);
  if (c.valid) {
    out << "valid: " << t.depth() << " levels, every projection a surjective homomorphism\n";
    return kOk;
  }
  out << "invalid at projection " << c.level << ": " << c.reason << "\n";
  return kVerificationFailed;
}

void require_valid(const Tower& t) {
  if (!t.check().valid) throw DomainError("tower is invalid: " + t.check().reason);
}

const char* kCertificateNote =
    "a valid certificate shows that the stable F* images below depth J are trivial; "
    "finite depth gives a sufficient condition only and does not decide the limit";

int cmd_certify(const std::string& file, std::size_t depth, Format fmt, std::ostream& out) {
  Tower t = load_tower(file);
  require_valid(t);
  DegeneracyCertificate c = fd_certificate(t, depth);
  if (fmt == Format::Json) {
    json levels = json::array();
    for (std::size_t i = 0; i < c.stable_images.size(); ++i)
      levels.push_back({{"level", i + 1}, {"stable_fstar_order", c.stable_images[i].order()}, {"trivial", c.trivial[i]}});
    json doc{{"schema", 1}, {"depth", depth}, {"valid", c.valid()}, {"levels", std::move(levels)}, {"note", kCertificateNote}};
    out << doc.dump(2) << "\n";
  } else {
    out << "certificate at depth " << depth << ": " << (c.valid() ? "valid" : "invalid") << "\n";
    for (std::size_t i = 0; i < c.stable_images.size(); ++i)
      out << "level " << i + 1 << ": stable F* image " << describe(c.stable_images[i])
          << (c.trivial[i] ? " (trivial)" : "") << "\n";
    out << "note: " << kCertificateNote << "\n";
  }
  return c.valid() ? kOk : kVerificationFailed;
}

int cmd_witness(const std::string& file, std::size_t level, const std::string& element, std::size_t depth,
                Format fmt, std::ostream& out) {
  Tower t = load_tower(file);
  require_valid(t);
  const Permutation x = Permutation::parse(element, t.level(level).degree());
  auto w = theorem_d_witness(t, {level, x}, depth);
  if (fmt == Format::Json) {
    json doc{{"schema", 1}, {"level", level}, {"element", x.to_string()}, {"depth", depth}, {"found", w.has_value()}};
    if (w) {
      json gens = json::array();
      for (const auto& g : w->kernel.generators()) gens.push_back(g.to_string());
      doc["witness"] = {{"level", w->level},
                        {"kernel_order", w->kernel.order()},
                        {"kernel_generators", std::move(gens)},
                        {"quotient_order", w->quotient_order},
                        {"fstar_order", w->fstar_order},
                        {"lift", w->lift.to_string()}};
    } else {
      doc["note"] = "no witness at this depth; this does not show the limit is not Fitting-degenerate";
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (!w) {
    out << "no witness at depth " << depth
        << "; this does not show the limit is not Fitting-degenerate\n";
    return kOk;
  }
  out << "witness at level " << w->level << "\n";
  out << "kernel K   " << describe(w->kernel) << "\n";
  out << "|G_j/K|    " << w->quotient_order << " (primitive)\n";
  out << "|F*(G_j/K)| " << w->fstar_order << ", lifted element outside it\n";
  out << "lift       " << w->lift.to_string() << "\n";
  return kOk;
}

int cmd_order(const std::string& file, std::size_t depth, std::ostream& out) {
  Tower t = load_tower(file);
  require_valid(t);
  out << tower_order(t, depth).to_string() << "\n";
  out << "note: partial order at depth " << depth << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& corpus_dir, bool timing,
               Format fmt, std::ostream& out) {
  if (!is_suite(suite)) {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw DomainError("unknown suite '" + suite + "'; known:" + known);
  }
  auto corpus = load_corpus(corpus_dir.empty() ? default_corpus_dir() : std::filesystem::path(corpus_dir));
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = run_suite(suite, corpus, opts);
  if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << render_suite(r, fmt);
  return r.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised Fitting subgroups of permutation groups, and towers of finite quotients"};
  app.name("fitkit");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  CapFlags cf;
  app.add_option("--cap-subgroups", cf.subgroups, "Max order for full subgroup enumeration")->group("Caps");
  app.add_option("--cap-lattice", cf.lattice, "Max order for the normal lattice")->group("Caps");
  app.add_option("--cap-oracle", cf.oracle, "Max order for the brute-force oracle")->group("Caps");
  app.add_option("--cap-tower-order", cf.tower_order, "Max order of a tower level")->group("Caps");
  app.add_option("--cap-sylow", cf.sylow, "Max order for exhaustive Sylow search")->group("Caps");
  app.add_option("--cap-elements", cf.elements, "Max elements listed explicitly")->group("Caps");

  std::string format = "text";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "F, components, E, F*, Z(F), C_G(F*) of a group file");
  std::string group_file;
  analyze->add_option("file", group_file, "Group file")->required();
  add_format(analyze);

  auto* tower = app.add_subcommand("tower", "Build and inspect towers of finite groups");
  tower->require_subcommand(1);
  std::string tower_file, out_path, element;
  std::vector<std::uint64_t> primes;
  std::size_t levels = 0, depth = 0, level = 1;
  auto* build = tower->add_subcommand("build", "Fitting-degenerate tower from a prime sequence");
  build->add_option("--primes", primes, "Comma-separated primes")->delimiter(',')->required();
  build->add_option("--levels", levels, "Number of levels")->required();
  build->add_option("--out", out_path, "Output file (JSON to stdout when absent)");
  auto* validate = tower->add_subcommand("validate", "Check every projection");
  validate->add_option("file", tower_file)->required();
  auto* certify = tower->add_subcommand("certify", "Stable F* images up to a depth");
  certify->add_option("file", tower_file)->required();
  certify->add_option("--depth", depth)->required();
  add_format(certify);
  auto* witness = tower->add_subcommand("witness", "Primitive quotient excluding an element from F*");
  witness->add_option("file", tower_file)->required();
  witness->add_option("--level", level, "Level of the element")->required();
  witness->add_option("--element", element, "Element in cycle notation")->required();
  witness->add_option("--depth", depth)->required();
  add_format(witness);
  auto* order = tower->add_subcommand("order", "Supernatural order up to a depth");
  order->add_option("file", tower_file)->required();
  order->add_option("--depth", depth)->required();

  auto* verify = app.add_subcommand("verify", "Run a named verification suite over the corpus");
  std::string suite, corpus_dir;
  SuiteOptions opts;
  std::vector<std::size_t> random;
  bool timing = false;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--max-order", opts.max_order, "Skip corpus groups above this order");
  verify->add_option("--seed", opts.seed, "Seed for random choices");
  verify->add_option("--random", random, "Add k random subgroups of Sym(n)")->expected(2)->type_name("K N");
  verify->add_option("--corpus", corpus_dir, "Corpus directory");
  verify->add_flag("--timing", timing, "Report wall clock (makes output non-reproducible)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    load_caps_from_env();
    ScopedCaps scoped(cf.apply(caps()));
    const Format fmt = parse_format(format);
    if (*analyze) return cmd_analyze(group_file, fmt, out);
    if (*build) return cmd_build(primes, levels, out_path, out);
    if (*validate) return cmd_validate(tower_file, out);
    if (*certify) return cmd_certify(tower_file, depth, fmt, out);
    if (*witness) return cmd_witness(tower_file, level, element, depth, fmt, out);
    if (*order) return cmd_order(tower_file, depth, out);
    if (*verify) {
      if (!random.empty()) {
        opts.random_k = random[0];
        opts.random_n = random[1];
      }
      return cmd_verify(suite, opts, corpus_dir, timing, fmt, out);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    // parse, precondition and file errors
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace fitkit::cli
