#include "ratpow/stanley.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace ratpow {

StanleyInstance StanleyInstance::quotient(const MonomialIdeal& ideal) {
  StanleyInstance s;
  s.kind = Kind::Quotient;
  s.upper = MonomialIdeal::unit(ideal.var_names());
  s.lower = ideal;
  return s;
}

StanleyInstance StanleyInstance::ideal(const MonomialIdeal& ideal) {
  StanleyInstance s;
  s.kind = Kind::Ideal;
  s.upper = ideal;
  s.lower = MonomialIdeal::zero(ideal.var_names());
  return s;
}

StanleyInstance StanleyInstance::relative(const MonomialIdeal& upper, const MonomialIdeal& lower) {
  if (upper.dim() != lower.dim()) throw DomainError("relative Stanley instance dimension mismatch");
  if (!is_subset(lower, upper)) throw DomainError("relative Stanley instance needs I inside J");
  StanleyInstance s;
  s.kind = Kind::Relative;
  s.upper = upper;
  s.lower = lower;
  return s;
}

namespace {

class IntervalSearch {
 public:
  IntervalSearch(const StanleyInstance& inst, const Exponent& g, const StanleyLimits& limits)
      : d_(g.size()), g_(g), limits_(limits) {
    std::int64_t n = 1;
    for (int v : g.entries()) n *= v + 1;
    coords_.reserve(n);
    Exponent a(d_);
    for (std::int64_t idx = 0; idx < n; ++idx) {
      coords_.push_back(a);
      for (std::size_t j = 0; j < d_; ++j) {
        if (++a[j] <= g_[j]) break;
        a[j] = 0;
      }
    }
    stride_.assign(d_, 1);
    for (std::size_t j = 1; j < d_; ++j) stride_[j] = stride_[j - 1] * (g_[j - 1] + 1);
    in_p_.assign(n, false);
    for (std::int64_t idx = 0; idx < n; ++idx) {
      const Exponent& c = coords_[idx];
      in_p_[idx] = inst.upper.contains(c) && !inst.lower.contains(c);
      if (in_p_[idx]) order_.push_back(idx);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::int64_t x, std::int64_t y) { return coords_[x].degree() < coords_[y].degree(); });
  }

  bool empty() const { return order_.empty(); }

  bool feasible(int k) {
    k_ = k;
    covered_.assign(coords_.size(), false);
    failed_.clear();
    return search(0);
  }

 private:
  int rho(const Exponent& a) const {
    int r = 0;
    for (std::size_t j = 0; j < d_; ++j) r += a[j] == g_[j];
    return r;
  }

  std::string state_key() const {
    std::string s((covered_.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < covered_.size(); ++i) {
      if (covered_[i]) s[i / 8] = static_cast<char>(s[i / 8] | (1 << (i % 8)));
    }
    return s;
  }

  /// Indices of [c, top], or empty if some element is unavailable.
  bool collect(const Exponent& c, const Exponent& top, std::vector<std::int64_t>& out) const {
    out.clear();
    Exponent a = c;
    while (true) {
      std::int64_t idx = 0;
      for (std::size_t j = 0; j < d_; ++j) idx += stride_[j] * a[j];
      if (!in_p_[idx] || covered_[idx]) return false;
      out.push_back(idx);
      std::size_t j = 0;
      for (; j < d_; ++j) {
        if (++a[j] <= top[j]) break;
        a[j] = c[j];
      }
      if (j == d_) return true;
    }
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && covered_[order_[pos]]) ++pos;
    if (pos == order_.size()) return true;
    if (++nodes_ > limits_.max_nodes) throw LimitExceeded("Stanley depth search exceeded its node budget");
    const std::string key = state_key();
    if (failed_.count(key)) return false;

    const std::int64_t c_idx = order_[pos];
    const Exponent& c = coords_[c_idx];
    const int need = k_ - rho(c);
    if (need <= 0) {
      covered_[c_idx] = true;
      if (search(pos + 1)) return true;
      covered_[c_idx] = false;
      failed_.insert(key);
      return false;
    }
    std::vector<int> free;
    for (std::size_t j = 0; j < d_; ++j) {
      if (c[j] < g_[j]) free.push_back(static_cast<int>(j));
    }
    if (static_cast<int>(free.size()) >= need) {
      // choose `need` of the free coordinates to push to g
      std::vector<bool> pick(free.size(), false);
      std::fill(pick.begin(), pick.begin() + need, true);
      std::vector<std::int64_t> cells;
      do {
        Exponent top = c;
        for (std::size_t t = 0; t < free.size(); ++t) {
          if (pick[t]) top[free[t]] = g_[free[t]];
        }
        if (!collect(c, top, cells)) continue;
        for (auto i : cells) covered_[i] = true;
        if (search(pos + 1)) return true;
        for (auto i : cells) covered_[i] = false;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    failed_.insert(key);
    return false;
  }

  std::size_t d_;
  Exponent g_;
  StanleyLimits limits_;
  std::vector<Exponent> coords_;
  std::vector<std::int64_t> stride_;
  std::vector<bool> in_p_;
  std::vector<std::int64_t> order_;
  std::vector<bool> covered_;
  std::unordered_set<std::string> failed_;
  int k_ = 0;
  std::int64_t nodes_ = 0;
};

std::int64_t box_size(const Exponent& g) {
  std::int64_t n = 1;
  for (int v : g.entries()) n = checked_mul(n, v + 1);
  return n;
}

int sdepth_at(const StanleyInstance& inst, const Exponent& g, const StanleyLimits& limits) {
  IntervalSearch search(inst, g, limits);
  if (search.empty()) throw DomainError("Stanley depth of the zero module is undefined");
  for (int k = static_cast<int>(g.size()); k > 0; --k) {
    if (search.feasible(k)) return k;
  }
  return 0;
}

}  // namespace

int sdepth_exact(const StanleyInstance& inst, const StanleyLimits& limits) {
  const std::size_t d = inst.upper.dim();
  if (inst.lower.dim() != d) throw DomainError("Stanley instance dimension mismatch");
  if (d > limits.max_dim) throw LimitExceeded("Stanley depth is limited to " + std::to_string(limits.max_dim) + " variables");
  if (inst.upper.is_zero()) throw DomainError("Stanley depth of the zero module is undefined");
  Exponent g(d);
  for (const auto* ideal : {&inst.upper, &inst.lower}) {
    for (const auto& gen : ideal->gens()) g = componentwise_max(g, gen);
  }
  if (inst.bound.size() == d) {
    for (std::size_t j = 0; j < d; ++j) {
      if (inst.bound[j] < g[j]) throw DomainError("truncation bound below a generator exponent");
    }
    g = inst.bound;
  } else if (inst.bound.size() != 0) {
    throw DomainError("truncation bound dimension mismatch");
  }
  Exponent g1 = g;
  for (std::size_t j = 0; j < d; ++j) ++g1[j];
  const std::int64_t largest = limits.recheck ? box_size(g1) : box_size(g);
  if (largest > limits.max_box) {
    throw LimitExceeded("Stanley depth box of " + std::to_string(largest) + " points exceeds the limit of " +
                        std::to_string(limits.max_box));
  }
  const int value = sdepth_at(inst, g, limits);
  if (limits.recheck && sdepth_at(inst, g1, limits) != value) {
    throw InternalError("Stanley depth changed when the truncation bound was enlarged");
  }
  return value;
}

PowerEquivalenceReport power_equivalences(const RationalPowers& powers, const Exponent& f,
                                          const PowerEquivalenceParams& p) {
  if (p.k < 1 || p.s < 1 || p.m < 1) throw DomainError("power equivalences need m, k, s >= 1");
  if (p.k > p.m || p.j < p.m - p.k || p.j > p.m) throw DomainError("power equivalences need k <= m and m-k <= j <= m");
  PowerEquivalenceReport r;
  r.a_lhs = powers.member_step(p.m, f);
  r.a_rhs = powers.member_step(checked_add(checked_mul(p.k, p.m), p.j), f.scaled(static_cast<int>(p.k + 1)));
  r.b_lhs = powers.member_step(p.s, f);
  r.b_rhs = powers.member_step(checked_mul(p.k, p.s), f.scaled(static_cast<int>(p.k)));
  r.bs_rhs = powers.member_step(checked_mul(p.k, p.s), f.scaled(static_cast<int>(p.s)));
  return r;
}

}  // namespace ratpow
