// ratpow: command-line front end for the rational-power library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ratpow/checks.hpp"
#include "ratpow/filtration.hpp"
#include "ratpow/homology.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/rational_power.hpp"
#include "ratpow/stanley.hpp"
#include "ratpow/sweep.hpp"

using namespace ratpow;

namespace {

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInvariant = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string ideal_path;
  std::string gens;
  std::string index;
  std::string out;
  std::string emit = "text";
};

void add_ideal_options(CLI::App* cmd, Common& c, bool with_index) {
  cmd->add_option("--ideal", c.ideal_path, "ideal document (generator list or JSON)");
  cmd->add_option("--gens", c.gens, "inline generator list, e.g. \"x^2, y^3\"");
  if (with_index) cmd->add_option("--index", c.index, "apply the rational power a/b first");
}

MonomialIdeal load_ideal(const Common& c) {
  if (!c.ideal_path.empty() && !c.gens.empty()) throw ParseError("give either --ideal or --gens, not both");
  if (!c.gens.empty()) return parse_ideal(c.gens);
  if (c.ideal_path.empty()) throw ParseError("an ideal is required (--ideal PATH or --gens LIST)");
  return parse_ideal_document(read_file(c.ideal_path));
}

/// The ideal, raised to --index when given.
MonomialIdeal target_ideal(const Common& c) {
  MonomialIdeal I = load_ideal(c);
  if (!c.index.empty()) I = rational_power(I, RationalIndex::parse(c.index));
  return I;
}

void write_out(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

std::string ideal_text(const MonomialIdeal& I, const std::string& emit) {
  if (emit == "json") return to_json(I) + "\n";
  return I.str() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational powers of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--out", c.out, "write output to PATH instead of stdout");

  auto* power_cmd = app.add_subcommand("power", "generators of I^{a/b}");
  add_ideal_options(power_cmd, c, true);
  power_cmd->add_option("--emit", c.emit, "text | json")->check(CLI::IsMember({"text", "json"}));

  int n_arg = 1;
  auto* closure_cmd = app.add_subcommand("closure", "integral closure of I^n");
  add_ideal_options(closure_cmd, c, false);
  closure_cmd->add_option("--n", n_arg, "power n (default 1)");
  closure_cmd->add_option("--emit", c.emit, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::optional<int> sym_n;
  auto* symbolic_cmd = app.add_subcommand("symbolic", "generator g and J = I^(g) of a squarefree ideal");
  add_ideal_options(symbolic_cmd, c, false);
  symbolic_cmd->add_option("--n", sym_n, "also print I^(n)");

  std::string family_in;
  auto* family_cmd = app.add_subcommand("family", "J, g, f, e of a hyperplane family");
  family_cmd->add_option("--in", family_in, "family document")->required();
  family_cmd->add_option("--emit", c.emit, "text | J | json")->check(CLI::IsMember({"text", "J", "json"}));

  auto* rees_cmd = app.add_subcommand("rees", "Rees valuations, e and normalized weights");
  add_ideal_options(rees_cmd, c, false);
  rees_cmd->add_option("--emit", c.emit, "text | json (polyhedron dump)")->check(CLI::IsMember({"text", "json"}));

  bool table = false;
  auto* depth_cmd = app.add_subcommand("depth", "depth(R/I) via local cohomology");
  add_ideal_options(depth_cmd, c, true);
  depth_cmd->add_flag("--table", table, "dump the local cohomology table as CSV");

  auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_ideal_options(reg_cmd, c, true);

  int lc_i = 0;
  auto* lclen_cmd = app.add_subcommand("lclen", "length of H^i_m(R/I)");
  add_ideal_options(lclen_cmd, c, true);
  lclen_cmd->add_option("--i", lc_i, "cohomological index");

  auto* ass_cmd = app.add_subcommand("ass", "associated primes of R/I");
  add_ideal_options(ass_cmd, c, true);

  bool quotient = false;
  std::optional<std::int64_t> max_n;
  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth");
  add_ideal_options(sdepth_cmd, c, true);
  sdepth_cmd->add_flag("--quotient", quotient, "of R/I instead of I");
  sdepth_cmd->add_option("--max-n", max_n, "sweep I^{n/e} for n = 1..N");

  std::int64_t split_m = 2, j_min = 1, j_max = 0, split_n = 4;
  auto* split_cmd = app.add_subcommand("split-check", "splitting check for the rational-power filtration");
  add_ideal_options(split_cmd, c, false);
  split_cmd->add_option("--m", split_m, "m >= 2");
  split_cmd->add_option("--max-n", split_n, "largest n");
  split_cmd->add_option("--j-min", j_min, "smallest j");
  split_cmd->add_option("--j-max", j_max, "largest j (default m)");

  SweepConfig cfg;
  std::string invariant = "depth";
  bool symbolic_mode = false;
  std::int64_t min_n = 1, step = 1, sweep_max = 12;
  auto* sweep_cmd = app.add_subcommand("sweep", "invariant of I^{n/e} (or I^(n)) over a range of n");
  add_ideal_options(sweep_cmd, c, false);
  sweep_cmd->add_option("--invariant", invariant, "depth | reg | sdepth | ass | lclen | gens")
      ->check(CLI::IsMember({"depth", "reg", "sdepth", "ass", "lclen", "gens"}));
  sweep_cmd->add_option("--min-n", min_n, "first n");
  sweep_cmd->add_option("--max-n", sweep_max, "last n");
  sweep_cmd->add_option("--step", step, "n increment");
  sweep_cmd->add_option("--i", cfg.lc_index, "cohomological index for lclen");
  sweep_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--symbolic", symbolic_mode, "sweep the symbolic powers I^(n) = J^{n/g}");
  bool ideal_sdepth = false;
  sweep_cmd->add_flag("--ideal-sdepth", ideal_sdepth, "sdepth of the ideal, not R/I");
  sweep_cmd->add_flag("--timing", cfg.timing, "fill the ms column");
  std::string sweep_emit = "csv";
  sweep_cmd->add_option("--emit", sweep_emit, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  SuiteOptions suite;
  auto* check_cmd = app.add_subcommand("check", "run the invariant suite");
  check_cmd->add_option("--seed", suite.seed, "corpus seed");
  check_cmd->add_option("--corpus", suite.corpus_size, "corpus size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    std::ostringstream os;
    if (*power_cmd) {
      if (c.index.empty()) throw ParseError("power needs --index a/b");
      os << ideal_text(target_ideal(c), c.emit);
    } else if (*closure_cmd) {
      if (n_arg < 1) throw ParseError("--n must be positive");
      const MonomialIdeal I = load_ideal(c);
      os << ideal_text(rational_power(I, RationalIndex(n_arg, 1)), c.emit);
    } else if (*symbolic_cmd) {
      const MonomialIdeal I = load_ideal(c);
      const auto sg = symbolic_generator_ideal(I);
      os << "g = " << sg.g << "\nJ = " << sg.ideal.str() << "\n";
      if (sym_n) os << "I^(" << *sym_n << ") = " << symbolic_power(I, *sym_n).str() << "\n";
    } else if (*family_cmd) {
      const auto F = parse_family_json(read_file(family_in));
      const auto R = family_to_ideal(F);
      if (c.emit == "J") {
        os << R.ideal.str() << "\n";
      } else if (c.emit == "json") {
        os << "{\"J\":" << to_json(R.ideal) << ",\"g\":" << R.g << ",\"f\":" << R.f << ",\"e\":" << R.e
           << ",\"region\":" << to_json(R.region) << "}\n";
      } else {
        os << "J = " << R.ideal.str() << "\ng = " << R.g << "\nf = " << R.f << "\ne = " << R.e << "\n";
      }
    } else if (*rees_cmd) {
      const MonomialIdeal I = load_ideal(c);
      if (c.emit == "json") {
        os << to_json(newton_polyhedron(I)) << "\n";
      } else {
        const auto rd = rees_valuations(I);
        for (std::size_t i = 0; i < rd.valuations.size(); ++i) {
          const auto& v = rd.valuations[i];
          os << "v = (";
          for (std::size_t j = 0; j < v.weights.size(); ++j) os << (j ? "," : "") << v.weights[j];
          os << ")  v(I) = " << v.value_on_ideal << "  w = (";
          for (std::size_t j = 0; j < rd.normalized_weights[i].size(); ++j) {
            os << (j ? "," : "") << rd.normalized_weights[i][j];
          }
          os << ")\n";
        }
        os << "e = " << rd.e << "\nanalytic spread = " << analytic_spread(I) << "\n";
      }
    } else if (*depth_cmd) {
      const auto lc = local_cohomology_table(target_ideal(c));
      if (table) {
        os << table_csv(lc.table);
      } else {
        os << lc.depth << "\n";
      }
    } else if (*reg_cmd) {
      const auto lc = local_cohomology_table(target_ideal(c));
      os << "reg(R/I) = " << lc.regularity << "\nreg(I) = " << lc.regularity + 1 << "\n";
    } else if (*lclen_cmd) {
      const auto l = lc_length(target_ideal(c), lc_i);
      os << (l.finite ? std::to_string(l.length) : std::string("infinite")) << "\n";
    } else if (*ass_cmd) {
      const MonomialIdeal I = target_ideal(c);
      for (const auto& w : associated_primes_with_witnesses(I)) {
        os << prime_str(w.prime, I.var_names()) << "  witness " << I.monomial_str(w.witness) << "\n";
      }
    } else if (*sdepth_cmd) {
      if (max_n) {
        SweepConfig s;
        s.ideal = target_ideal(c);
        s.invariant = Invariant::Sdepth;
        s.quotient = quotient;
        s.n_max = *max_n;
        os << emit_csv(run_sweep(s));
      } else {
        const MonomialIdeal I = target_ideal(c);
        os << sdepth_exact(quotient ? StanleyInstance::quotient(I) : StanleyInstance::ideal(I)) << "\n";
      }
    } else if (*split_cmd) {
      RationalPowers P(load_ideal(c));
      SplittingOptions opt;
      opt.n_max = split_n;
      opt.j_min = j_min;
      opt.j_max = j_max;
      const auto r = check_splitting(P, split_m, opt);
      if (r.passed) {
        os << "pass (" << r.checked << " checks)\n";
      } else {
        const auto& ce = *r.counterexample;
        os << "fail at n = " << ce.n << ", j = " << ce.j << ": beta = " << P.ideal().monomial_str(ce.beta) << "\n";
      }
      write_out(c, os.str());
      return r.passed ? 0 : kExitInvariant;
    } else if (*sweep_cmd) {
      cfg.ideal = load_ideal(c);
      cfg.invariant = parse_invariant(invariant);
      cfg.mode = symbolic_mode ? SweepMode::Symbolic : SweepMode::Rational;
      cfg.n_min = min_n;
      cfg.n_max = sweep_max;
      cfg.n_step = step;
      cfg.quotient = !ideal_sdepth;
      os << emit(run_sweep(cfg), sweep_emit == "json" ? EmitFormat::Json : EmitFormat::Csv);
    } else if (*check_cmd) {
      bool ok = true;
      for (const auto& r : run_invariant_suite(suite)) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) os << ": " << r.detail;
        os << "\n";
        ok = ok && r.passed;
      }
      write_out(c, os.str());
      return ok ? 0 : kExitInvariant;
    }
    write_out(c, os.str());
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
