#ifndef SZEGO_ALPHA_MOMENTS_HPP
#define SZEGO_ALPHA_MOMENTS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "szego/combinatorics.hpp"
#include "szego/gaussian_moments.hpp"
#include "szego/multi_index.hpp"
#include "szego/rational.hpp"
#include "szego/rational_function.hpp"

namespace szego {

/// E(alpha^p conj(alpha^q)) = prod_n p(n)! / ((n b + 1)...(n b + p(n))) if p == q, else 0.
inline RatFuncBeta alpha_joint_moment(const MultiIndex& p, const MultiIndex& q) {
  if (p != q) {
    return RatFuncBeta();
  }
  BetaPoly den(Rat(1));
  for (const auto& [n, c] : p.entries()) {
    for (int k = 1; k <= c; ++k) {
      den *= BetaPoly{Rat(k), Rat(n)};
    }
  }
  BigInt num(1);
  for (const auto& [n, c] : p.entries()) num *= factorial(static_cast<unsigned long>(c));
  return RatFuncBeta::normalize(BetaPoly(Rat(num)), den);
}

/// prod_{N >= 1} m(N)! / ((N b + 1)...(N b + m(N))) at a rational beta;
/// the N = 0 factor is 1.
inline Rat multiplicity_term(const MultiplicityVector& m, const Rat& beta) {
  Rat out(1);
  for (const auto& [N, c] : m.entries()) {
    if (N == 0) continue;
    for (int k = 1; k <= c; ++k) {
      out *= Rat(k) / (Rat(N) * beta + Rat(k));
    }
  }
  return out;
}

/// Truncated alpha-side sum at a rational beta.
struct TruncatedSumResult {
  Rat value;          // partial sum over tuples with every index <= max_index
  int max_index = 0;
  Rat last_shell;     // contribution of tuples whose largest index is max_index
  Rat tail_estimate;  // last_shell * max_index
};

namespace detail {

/// Labeled index sequences of a tuple family: the p side sequences (pairs
/// i > j) followed by the q side sequences (pairs k > l).
struct TupleLayout {
  std::vector<int> degree;
  std::vector<bool> q_side;

  TupleLayout(const MultiIndex& p, const MultiIndex& q) {
    for (int n : part_degrees(p)) {
      degree.push_back(n);
      q_side.push_back(false);
    }
    for (int n : part_degrees(q)) {
      degree.push_back(n);
      q_side.push_back(true);
    }
  }
  std::size_t size() const noexcept { return degree.size(); }
};

enum class ShellMode {
  // Multiset balance: #i + #l == #j + #k at every index; weight uses m = #i + #l.
  balanced,
  // No balance; weight uses m = number of indices placed (one sequence only).
  unbalanced,
};

/// Transfer-matrix evaluation of sums over families of gap sequences,
/// scanning indices t = 0, 1, ..., max_index upward.
///
/// Per sequence the state is (gap consumed, inside a pair). Going upward a
/// pair starts at its lower index (j or l) and closes at its upper index
/// (i or k); the gap grows by one per step while inside. A family is
/// complete when every sequence is closed with its full degree; it is then
/// banked in the shell of the current index, which is its largest index.
///
/// Exactness: with beta = a/b every level weight is
/// m! b^m / prod_{k<=m} (t a + k b), so all states share the denominator
/// D_t = prod_{s<=t} prod_{k<=K_s} (s a + k b) and only integer
/// numerators are stored.
class ShellScan {
public:
  ShellScan(TupleLayout layout, ShellMode mode) : layout_(std::move(layout)), mode_(mode) {}

  TruncatedSumResult run(const Rat& beta, int max_index) {
    if (beta.sign() <= 0) {
      throw std::invalid_argument("beta must be positive");
    }
    if (max_index < 0) {
      throw std::invalid_argument("max_index must be nonnegative");
    }
    const BigInt a = beta.num();
    const BigInt b = beta.den();
    const std::size_t S = layout_.size();
    TruncatedSumResult out;
    out.max_index = max_index;
    if (S == 0) {
      out.value = Rat(1);
      return out;
    }
    std::map<Key, BigInt> states;
    states.emplace(Key(2 * S, 0), BigInt(1));
    BigInt denom(1);
    BigInt total(0);
    BigInt shell(0);
    for (int t = 0; t <= max_index; ++t) {
      // Collect transitions and the largest multiplicity used at this level.
      int level_max = 0;
      for (const auto& [key, w] : states) {
        for (const auto& tr : transitions(key)) level_max = std::max(level_max, tr.m);
      }
      std::vector<BigInt> factor(static_cast<std::size_t>(level_max) + 1);
      BigInt level_den(1);
      if (t == 0) {
        for (auto& f : factor) f = 1;
      } else {
        std::vector<BigInt> lin(static_cast<std::size_t>(level_max) + 1);
        for (int k = 1; k <= level_max; ++k) lin[static_cast<std::size_t>(k)] = a * t + b * k;
        for (int k = 1; k <= level_max; ++k) level_den *= lin[static_cast<std::size_t>(k)];
        BigInt bpow(1);
        for (int m = 0; m <= level_max; ++m) {
          BigInt f = factorial(static_cast<unsigned long>(m)) * bpow;
          for (int k = m + 1; k <= level_max; ++k) f *= lin[static_cast<std::size_t>(k)];
          factor[static_cast<std::size_t>(m)] = f;
          bpow *= b;
        }
      }
      std::map<Key, BigInt> next;
      shell = 0;
      for (const auto& [key, w] : states) {
        for (const auto& tr : transitions(key)) {
          const BigInt contribution = w * factor[static_cast<std::size_t>(tr.m)];
          if (tr.complete) {
            shell += contribution;
          } else {
            next[tr.next] += contribution;
          }
        }
      }
      total = total * level_den + shell;
      denom *= level_den;
      states = std::move(next);
    }
    out.value = Rat(total, denom);
    out.last_shell = Rat(shell, denom);
    out.tail_estimate = out.last_shell * Rat(max_index);
    return out;
  }

private:
  // Two bytes per sequence: gap consumed, inside flag.
  using Key = std::vector<std::uint8_t>;

  struct Transition {
    Key next;  // state after the upward step to t + 1
    int m = 0;
    bool complete = false;
  };

  const std::vector<Transition>& transitions(const Key& key) {
    if (const auto it = cache_.find(key); it != cache_.end()) {
      return it->second;
    }
    std::vector<Transition> out;
    const std::size_t S = layout_.size();
    Key after = key;
    auto rec = [&](auto&& self, std::size_t s, int up, int down) -> void {
      if (s == S) {
        int m = 0;
        if (mode_ == ShellMode::balanced) {
          if (up != down) return;
          m = up;
        } else {
          m = up + down;
        }
        bool complete = true;
        for (std::size_t k = 0; k < S; ++k) {
          if (after[2 * k + 1] != 0 || after[2 * k] != layout_.degree[k]) {
            complete = false;
            break;
          }
        }
        if (complete) {
          out.push_back({Key(), m, true});
          return;
        }
        Key stepped = after;
        for (std::size_t k = 0; k < S; ++k) {
          if (stepped[2 * k + 1] != 0) {
            if (++stepped[2 * k] > layout_.degree[k]) return;
          }
        }
        out.push_back({std::move(stepped), m, false});
        return;
      }
      const std::uint8_t gap = key[2 * s];
      const bool inside = key[2 * s + 1] != 0;
      const bool q = layout_.q_side[s];
      // No event for this sequence.
      self(self, s + 1, up, down);
      if (inside) {
        // Upper end of a pair: i (p side, counts up) or k (q side, counts down).
        after[2 * s + 1] = 0;
        self(self, s + 1, up + (q ? 0 : 1), down + (q ? 1 : 0));
        after[2 * s + 1] = 1;
      } else if (gap < layout_.degree[s]) {
        // Lower end of a pair: j (p side, counts down) or l (q side, counts up).
        after[2 * s + 1] = 1;
        self(self, s + 1, up + (q ? 1 : 0), down + (q ? 0 : 1));
        after[2 * s + 1] = 0;
      }
    };
    rec(rec, 0, 0, 0);
    return cache_.emplace(key, std::move(out)).first->second;
  }

  TupleLayout layout_;
  ShellMode mode_;
  std::map<Key, std::vector<Transition>> cache_;
};

}  // namespace detail

/// E(x^p conj(x^q)) under the alpha law, summed over all tuple families
/// with indices <= max_index, exactly at a rational beta > 0.
inline TruncatedSumResult alpha_x_moment(const MultiIndex& p, const MultiIndex& q, const Rat& beta, int max_index) {
  if (p.degree() != q.degree()) {
    TruncatedSumResult zero;
    zero.max_index = max_index;
    return zero;
  }
  return detail::ShellScan(detail::TupleLayout(p, q), detail::ShellMode::balanced).run(beta, max_index);
}

namespace detail {

/// Per-sequence index usage inside a tuple family.
struct SequenceChoice {
  std::vector<int> tops;     // i (p side) or k (q side)
  std::vector<int> bottoms;  // j (p side) or l (q side)
};

inline std::vector<std::vector<GapSequence>> candidate_sequences(const TupleLayout& layout, int max_index,
                                                                  const std::vector<bool>& allowed) {
  std::map<int, std::vector<GapSequence>> by_degree;
  for (int n : layout.degree) {
    if (!by_degree.count(n)) {
      std::vector<GapSequence> v;
      for_each_gap_sequence(n, max_index, [&](const GapSequence& g) { v.push_back(g); }, allowed);
      by_degree.emplace(n, std::move(v));
    }
  }
  std::vector<std::vector<GapSequence>> out;
  for (int n : layout.degree) out.push_back(by_degree.at(n));
  return out;
}

}  // namespace detail

/// Number of tuple families (i_{n,r}, j_{n,r}, k_{m,s}, l_{m,s}) with all
/// indices <= max_index and sum delta_i + sum delta_l = sum delta_j +
/// sum delta_k = m.
inline std::uint64_t count_tuples(const MultiIndex& p, const MultiIndex& q, const MultiplicityVector& m,
                                  int max_index) {
  if (p.degree() != q.degree()) {
    return 0;
  }
  const detail::TupleLayout layout(p, q);
  if (layout.size() == 0) {
    return m.empty() ? 1 : 0;
  }
  if (m.max_support() > max_index || m.empty()) {
    return 0;
  }
  std::vector<bool> allowed(static_cast<std::size_t>(max_index) + 1, false);
  for (const auto& [k, c] : m.entries()) allowed[static_cast<std::size_t>(k)] = true;
  const auto candidates = detail::candidate_sequences(layout, max_index, allowed);
  // upper: budget for i (p side) and l (q side); lower: budget for j and k.
  std::vector<int> upper = m.dense(max_index);
  std::vector<int> lower = upper;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == layout.size()) {
      for (std::size_t k = 0; k < upper.size(); ++k)
        if (upper[k] != 0 || lower[k] != 0) return;
      ++count;
      return;
    }
    const bool q_side = layout.q_side[s];
    std::vector<int>& top_budget = q_side ? lower : upper;
    std::vector<int>& bottom_budget = q_side ? upper : lower;
    for (const GapSequence& g : candidates[s]) {
      bool fits = true;
      std::size_t used = 0;
      for (; used < g.pairs.size(); ++used) {
        const auto [i, j] = g.pairs[used];
        if (top_budget[static_cast<std::size_t>(i)] == 0 || bottom_budget[static_cast<std::size_t>(j)] == 0) {
          fits = false;
          break;
        }
        --top_budget[static_cast<std::size_t>(i)];
        --bottom_budget[static_cast<std::size_t>(j)];
      }
      if (fits) self(self, s + 1);
      for (std::size_t u = 0; u < used; ++u) {
        const auto [i, j] = g.pairs[u];
        ++top_budget[static_cast<std::size_t>(i)];
        ++bottom_budget[static_cast<std::size_t>(j)];
      }
    }
  };
  rec(rec, 0);
  return count;
}

inline constexpr int kEnumerationIndexGuard = 12;

/// Every realized multiplicity vector with its tuple count, by direct
/// enumeration of all tuple families with indices <= max_index.
inline std::map<MultiplicityVector, std::uint64_t> realized_multiplicities(const MultiIndex& p, const MultiIndex& q,
                                                                           int max_index) {
  if (max_index > kEnumerationIndexGuard) {
    throw std::invalid_argument("realized_multiplicities: max_index guard exceeded");
  }
  std::map<MultiplicityVector, std::uint64_t> out;
  if (p.degree() != q.degree()) {
    return out;
  }
  const detail::TupleLayout layout(p, q);
  const auto candidates = detail::candidate_sequences(layout, max_index, {});
  std::vector<int> upper(static_cast<std::size_t>(max_index) + 1, 0);
  std::vector<int> lower = upper;
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == layout.size()) {
      if (upper != lower) return;
      MultiplicityVector m;
      for (std::size_t k = 0; k < upper.size(); ++k)
        if (upper[k] > 0) m.add(static_cast<int>(k), upper[k]);
      ++out[m];
      return;
    }
    const bool q_side = layout.q_side[s];
    std::vector<int>& tops = q_side ? lower : upper;
    std::vector<int>& bottoms = q_side ? upper : lower;
    for (const GapSequence& g : candidates[s]) {
      for (const auto& [i, j] : g.pairs) {
        ++tops[static_cast<std::size_t>(i)];
        ++bottoms[static_cast<std::size_t>(j)];
      }
      self(self, s + 1);
      for (const auto& [i, j] : g.pairs) {
        --tops[static_cast<std::size_t>(i)];
        --bottoms[static_cast<std::size_t>(j)];
      }
    }
  };
  rec(rec, 0);
  return out;
}

/// Sum over realized m of count * multiplicity_term(m, beta).
inline Rat alpha_x_moment_enumerated(const MultiIndex& p, const MultiIndex& q, const Rat& beta, int max_index) {
  Rat total(0);
  for (const auto& [m, c] : realized_multiplicities(p, q, max_index)) {
    total += Rat(static_cast<unsigned long>(c)) * multiplicity_term(m, beta);
  }
  return total;
}

struct NiceIdentityResult {
  Rat lhs;   // truncated sum over gap sequences
  Rat rhs;   // variance_pmf(n) at beta
  Rat tail;  // last shell * max_index
  Rat last_shell;
};

/// Truncated sum of prod_u 1/((i(u) b + 1)(j(u) b + 1)) over gap sequences
/// of degree n, against prod_k ((1/k) b^{-1} + (k-1)/k).
inline NiceIdentityResult nice_identity_check(int n, const Rat& beta, int max_index) {
  if (n < 1) {
    throw std::invalid_argument("nice_identity_check: n must be >= 1");
  }
  const auto partial =
      detail::ShellScan(detail::TupleLayout(MultiIndex::delta(n), MultiIndex()), detail::ShellMode::unbalanced)
          .run(beta, max_index);
  return {partial.value, variance_pmf(n).eval(beta), partial.tail_estimate, partial.last_shell};
}

inline constexpr int kTailSafetyFactor = 10;

struct IdentityCheck {
  Rat beta;
  Rat gaussian;  // exact polynomial evaluated at beta
  TruncatedSumResult alpha;
  Rat difference;  // gaussian - alpha partial sum
  bool pass = false;
};

struct CnIdentityReport {
  MultiIndex p;
  MultiIndex q;
  MomentPolynomial gaussian;
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

/// Compares the exact Gaussian moment with the truncated alpha-side sum at
/// each beta; passes iff |difference| <= 10 * tail_estimate everywhere.
inline CnIdentityReport verify_cn_identity(const MultiIndex& p, const MultiIndex& q, const std::vector<Rat>& betas,
                                           int max_index) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("verify_cn_identity: deg(p) must equal deg(q)");
  }
  CnIdentityReport report{p, q, gaussian_x_moment(p, q), {}, true};
  for (const Rat& beta : betas) {
    IdentityCheck check;
    check.beta = beta;
    check.gaussian = report.gaussian.eval(beta);
    check.alpha = alpha_x_moment(p, q, beta, max_index);
    check.difference = check.gaussian - check.alpha.value;
    check.pass = abs(check.difference) <= Rat(kTailSafetyFactor) * check.alpha.tail_estimate;
    report.pass = report.pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace szego

#endif  // SZEGO_ALPHA_MOMENTS_HPP
