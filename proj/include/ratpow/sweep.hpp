#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ratpow/ideal.hpp"

namespace ratpow {

enum class Invariant { Depth, Reg, Sdepth, Ass, Lclen, Gens };
enum class SweepMode {
  Rational,  // I^{n/e}
  Symbolic   // I^{(n)} = J^{n/g}
};
enum class EmitFormat { Csv, Json };

Invariant parse_invariant(std::string_view name);
std::string invariant_name(Invariant inv);

struct SweepConfig {
  MonomialIdeal ideal;
  Invariant invariant = Invariant::Depth;
  SweepMode mode = SweepMode::Rational;
  std::int64_t n_min = 1;
  std::int64_t n_max = 12;
  std::int64_t n_step = 1;
  /// Cohomological index for lclen.
  int lc_index = 0;
  /// sdepth of R/I (true) or of I.
  bool quotient = true;
  int jobs = 1;
  /// Fill the ms column; off by default so output bytes are reproducible.
  bool timing = false;
};

struct ExperimentRecord {
  std::int64_t n = 0;
  std::string index;  // "n/e" unreduced
  std::string invariant;
  std::string value;  // integer, "p/q", "inf" or a space-separated list
  double ms = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Per-n records in increasing n, followed by summary records
/// (depth_limit_predicted, depth_stabilized, reg_slope, lclen_iK_density,
/// ass_stabilized, ass_union, sdepth_stabilized) where they apply.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg);

std::string emit_csv(const std::vector<ExperimentRecord>& records);
std::string emit_json(const std::vector<ExperimentRecord>& records);
std::string emit(const std::vector<ExperimentRecord>& records, EmitFormat format);
std::vector<ExperimentRecord> parse_records_json(std::string_view text);

/// Start index of the longest constant suffix.
template <typename T>
std::size_t stable_tail_start(const std::vector<T>& values) {
  if (values.empty()) return 0;
  std::size_t i = values.size() - 1;
  while (i > 0 && values[i - 1] == values.back()) --i;
  return i;
}

}  // namespace ratpow
