#include "ratpow/sweep.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ratpow/filtration.hpp"
#include "ratpow/homology.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/rational_power.hpp"
#include "ratpow/stanley.hpp"

namespace ratpow {

Invariant parse_invariant(std::string_view name) {
  if (name == "depth") return Invariant::Depth;
  if (name == "reg") return Invariant::Reg;
  if (name == "sdepth") return Invariant::Sdepth;
  if (name == "ass") return Invariant::Ass;
  if (name == "lclen") return Invariant::Lclen;
  if (name == "gens") return Invariant::Gens;
  throw ParseError("unknown invariant '" + std::string(name) + "'");
}

std::string invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::Depth: return "depth";
    case Invariant::Reg: return "reg";
    case Invariant::Sdepth: return "sdepth";
    case Invariant::Ass: return "ass";
    case Invariant::Lclen: return "lclen";
    case Invariant::Gens: return "gens";
  }
  return "?";
}

namespace {

std::string join_primes(const std::vector<MonomialPrime>& primes, const std::vector<std::string>& vars) {
  std::string s;
  for (const auto& p : primes) {
    if (!s.empty()) s += ' ';
    s += prime_str(p, vars);
  }
  return s;
}

bool is_m_primary(const MonomialIdeal& ideal) {
  for (std::size_t j = 0; j < ideal.dim(); ++j) {
    bool pure = false;
    for (const auto& g : ideal.gens()) pure = pure || g.support() == (1u << j);
    if (!pure) return false;
  }
  return true;
}

/// The filtration being swept: k -> I_k together with its index strings.
struct Filtration {
  std::optional<RationalPowers> powers;
  std::int64_t denominator = 1;  // e, or g in symbolic mode
  std::int64_t period = 1;
  int spread = 1;

  std::int64_t step(std::int64_t n) const { return powers->canonical_step(RationalIndex(n, denominator)); }
  MonomialIdeal at(std::int64_t n) const { return powers->step(step(n)); }
  std::string index(std::int64_t n) const { return std::to_string(n) + "/" + std::to_string(denominator); }
};

Filtration make_filtration(const SweepConfig& cfg) {
  Filtration f;
  if (cfg.mode == SweepMode::Rational) {
    f.powers.emplace(cfg.ideal);
    f.denominator = f.powers->e();
    f.spread = analytic_spread(cfg.ideal);
  } else {
    SymbolicGenerator sg = symbolic_generator_ideal(cfg.ideal, 0);
    f.powers.emplace(sg.ideal);
    f.denominator = sg.g;
    f.spread = analytic_spread(sg.ideal);
  }
  f.period = f.denominator;
  return f;
}

std::string lclen_name(int i) { return "lclen_i" + std::to_string(i); }

std::string compute_value(const SweepConfig& cfg, const Filtration& filt, std::int64_t n) {
  const MonomialIdeal ideal = filt.at(n);
  if (ideal.is_unit()) {
    if (cfg.invariant == Invariant::Gens) return "1";
    throw DomainError("the filtration is the unit ideal at this n");
  }
  switch (cfg.invariant) {
    case Invariant::Depth: return std::to_string(local_cohomology_table(ideal).depth);
    case Invariant::Reg: return std::to_string(betti_table(ideal).ideal_regularity());
    case Invariant::Sdepth: {
      const auto inst = cfg.quotient ? StanleyInstance::quotient(ideal) : StanleyInstance::ideal(ideal);
      return std::to_string(sdepth_exact(inst));
    }
    case Invariant::Ass: return join_primes(associated_primes(ideal), ideal.var_names());
    case Invariant::Lclen: {
      if (cfg.lc_index == 0 && is_m_primary(ideal)) return std::to_string(colength_lattice(*filt.powers, filt.step(n)));
      const LcLength l = lc_length(ideal, cfg.lc_index);
      return l.finite ? std::to_string(l.length) : "inf";
    }
    case Invariant::Gens: {
      std::string s;
      for (const auto& g : ideal.gens()) {
        if (!s.empty()) s += ' ';
        s += ideal.monomial_str(g);
      }
      return s;
    }
  }
  return "";
}

[[noreturn]] void rethrow_at(std::exception_ptr ep, std::int64_t n) {
  const std::string where = "n = " + std::to_string(n) + ": ";
  try {
    std::rethrow_exception(ep);
  } catch (const ParseError& e) {
    throw ParseError(where + e.what());
  } catch (const LimitExceeded& e) {
    throw LimitExceeded(where + e.what());
  } catch (const UnboundedRegion& e) {
    throw UnboundedRegion(where + e.what());
  } catch (const DomainError& e) {
    throw DomainError(where + e.what());
  } catch (const OverflowError& e) {
    throw OverflowError(where + e.what());
  } catch (const std::exception& e) {
    throw InternalError(where + e.what());
  }
}

void add_summaries(const SweepConfig& cfg, const Filtration& filt, std::vector<ExperimentRecord>& records) {
  if (records.empty()) return;
  const std::string name = records.front().invariant;
  std::vector<std::string> values;
  for (const auto& r : records) values.push_back(r.value);
  const std::size_t tail = stable_tail_start(values);
  const ExperimentRecord last = records.back();
  auto summary = [&](std::int64_t n, const std::string& inv, const std::string& value) {
    records.push_back({n, filt.index(n), inv, value, 0});
  };
  switch (cfg.invariant) {
    case Invariant::Depth:
      summary(last.n, "depth_limit_predicted", std::to_string(static_cast<int>(cfg.ideal.dim()) - filt.spread));
      summary(records[tail].n, "depth_stabilized", values[tail]);
      break;
    case Invariant::Sdepth: summary(records[tail].n, "sdepth_stabilized", values[tail]); break;
    case Invariant::Ass: {
      std::vector<MonomialPrime> uni;
      for (std::int64_t n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) {
        for (const auto& p : associated_primes(filt.at(n))) uni.push_back(p);
      }
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      summary(records[tail].n, "ass_stabilized", values[tail]);
      records.push_back({last.n, filt.index(last.n), "ass_union", join_primes(uni, cfg.ideal.var_names()), 0});
      break;
    }
    case Invariant::Reg: {
      // last two points in the same residue class modulo the period
      for (std::size_t i = records.size() - 1; i-- > 0;) {
        if ((last.n - records[i].n) % filt.period != 0) continue;
        const Rational slope(std::stoll(last.value) - std::stoll(records[i].value), last.n - records[i].n);
        summary(last.n, "reg_slope", slope.str());
        break;
      }
      break;
    }
    case Invariant::Lclen: {
      if (records.size() < 2) break;
      const auto& prev = records[records.size() - 2];
      if (prev.value == "inf" || last.value == "inf") break;
      std::int64_t dn = 1, dp = 1;
      for (std::size_t j = 0; j < cfg.ideal.dim(); ++j) {
        dn = checked_mul(dn, last.n);
        dp = checked_mul(dp, prev.n);
      }
      const Rational density(std::stoll(last.value) - std::stoll(prev.value), dn - dp);
      summary(last.n, name + "_density", density.str());
      break;
    }
    case Invariant::Gens: break;
  }
}

}  // namespace

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.n_step < 1) throw DomainError("sweep n range is empty");
  if (cfg.jobs < 1) throw DomainError("sweep needs at least one job");
  if (!cfg.ideal.is_proper_nonzero()) throw DomainError("sweep needs a proper nonzero ideal");
  const Filtration filt = make_filtration(cfg);
  std::vector<std::int64_t> ns;
  for (std::int64_t n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) ns.push_back(n);

  const std::string name = cfg.invariant == Invariant::Lclen ? lclen_name(cfg.lc_index) : invariant_name(cfg.invariant);
  std::vector<ExperimentRecord> records(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        records[i] = {ns[i], filt.index(ns[i]), name, compute_value(cfg, filt, ns[i]), 0};
      } catch (...) {
        errors[i] = std::current_exception();
      }
      if (cfg.timing) {
        records[i].ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      }
    }
  };
  const int threads = std::min<int>(cfg.jobs, static_cast<int>(ns.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (errors[i]) rethrow_at(errors[i], ns[i]);
  }
  add_summaries(cfg, filt, records);
  return records;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

bool is_integer_literal(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::string emit_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "n,index,invariant,value,ms\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + ',' + csv_field(r.index) + ',' + csv_field(r.invariant) + ',' + csv_field(r.value) +
           ',' + format_ms(r.ms) + '\n';
  }
  return out;
}

std::string emit_json(const std::vector<ExperimentRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["index"] = r.index;
    o["invariant"] = r.invariant;
    if (is_integer_literal(r.value)) {
      o["value"] = std::stoll(r.value);
    } else {
      o["value"] = r.value;
    }
    o["ms"] = r.ms;
    arr.push_back(std::move(o));
  }
  return arr.dump(1) + "\n";
}

std::string emit(const std::vector<ExperimentRecord>& records, EmitFormat format) {
  return format == EmitFormat::Csv ? emit_csv(records) : emit_json(records);
}

std::vector<ExperimentRecord> parse_records_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("record document must be an array");
  std::vector<ExperimentRecord> out;
  try {
    for (const auto& o : doc) {
      ExperimentRecord r;
      r.n = o.at("n").get<std::int64_t>();
      r.index = o.at("index").get<std::string>();
      r.invariant = o.at("invariant").get<std::string>();
      const auto& v = o.at("value");
      r.value = v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::int64_t>());
      r.ms = o.at("ms").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
  return out;
}

}  // namespace ratpow
