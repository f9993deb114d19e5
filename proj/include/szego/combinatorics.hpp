#ifndef SZEGO_COMBINATORICS_HPP
#define SZEGO_COMBINATORICS_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "szego/multi_index.hpp"
#include "szego/rational.hpp"

namespace szego {

// ---------------------------------------------------------------------------
// Partitions as densities

namespace detail {

inline void partitions_rec(int part, int remaining, int max_part, std::vector<int>& counts,
                           std::vector<MultiIndex>& out) {
  if (remaining == 0) {
    MultiIndex L;
    for (int u = 1; u <= max_part; ++u) {
      if (counts[static_cast<std::size_t>(u)] > 0) {
        L.add(u, counts[static_cast<std::size_t>(u)]);
      }
    }
    out.push_back(std::move(L));
    return;
  }
  if (part > remaining) {
    return;
  }
  for (int c = remaining / part; c >= 0; --c) {
    counts[static_cast<std::size_t>(part)] = c;
    partitions_rec(part + 1, remaining - c * part, max_part, counts, out);
  }
  counts[static_cast<std::size_t>(part)] = 0;
}

}  // namespace detail

/// All multi-indices L with deg(L) == d.
///
/// Order is descending lexicographic on the density vector
/// (L(1), L(2), ...), so {1:d} comes first and {d:1} last.
inline std::vector<MultiIndex> partitions(int d) {
  if (d < 0) {
    throw std::invalid_argument("partitions: negative degree");
  }
  std::vector<MultiIndex> out;
  std::vector<int> counts(static_cast<std::size_t>(d) + 2, 0);
  detail::partitions_rec(1, d, d, counts, out);
  return out;
}

/// 1 / prod_u (L(u)! u^L(u)): the Haar probability of cycle type L.
inline Rat haar_weight(const MultiIndex& L) {
  BigInt stab(1);
  for (const auto& [u, c] : L.entries()) {
    BigInt upow;
    mpz_ui_pow_ui(upow.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(c));
    stab *= factorial(static_cast<unsigned long>(c)) * upow;
  }
  return Rat(BigInt(1), stab);
}

/// All J <= bound (componentwise) with deg(J) == degree, visited in a fixed
/// order (descending counts on ascending indices).
template <class Visit>
void for_each_sub_multi_index(const MultiIndex& bound, int degree, Visit&& visit) {
  std::vector<std::pair<int, int>> slots(bound.entries().begin(), bound.entries().end());
  MultiIndex current;
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (remaining == 0) {
      visit(static_cast<const MultiIndex&>(current));
      return;
    }
    if (k == slots.size()) {
      return;
    }
    const auto [u, cap] = slots[k];
    if (u > remaining) {
      return;
    }
    for (int c = std::min(cap, remaining / u); c >= 0; --c) {
      if (c > 0) {
        current.add(u, c);
      }
      self(self, k + 1, remaining - c * u);
      if (c > 0) {
        current.add(u, -c);
      }
    }
  };
  rec(rec, 0, degree);
}

/// One part J_{n,r} of a decomposition.
struct DecompositionPart {
  int n = 0;
  int r = 0;
  MultiIndex J;
};

/// Family (J_{n,r}) with deg J_{n,r} == n, ordered by (n, r).
struct Decomposition {
  std::vector<DecompositionPart> parts;

  MultiIndex total() const {
    MultiIndex L;
    for (const auto& part : parts) {
      L += part.J;
    }
    return L;
  }
};

/// Part degrees of p in (n, r) order: p(n) copies of each n.
inline std::vector<int> part_degrees(const MultiIndex& p) {
  std::vector<int> out;
  for (const auto& [n, c] : p.entries()) {
    out.insert(out.end(), static_cast<std::size_t>(c), n);
  }
  return out;
}

/// Every decomposition compatible with p, each part ranging over
/// partitions(n) independently. Order: lexicographic in parts.
inline std::vector<Decomposition> decompositions(const MultiIndex& p) {
  std::vector<Decomposition> out;
  Decomposition current;
  std::map<int, std::vector<MultiIndex>> table;
  for (const auto& [n, c] : p.entries()) {
    table.emplace(n, partitions(n));
  }
  std::vector<std::pair<int, int>> labels;
  for (const auto& [n, c] : p.entries()) {
    for (int r = 1; r <= c; ++r) {
      labels.emplace_back(n, r);
    }
  }
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == labels.size()) {
      out.push_back(current);
      return;
    }
    const auto [n, r] = labels[k];
    for (const auto& J : table.at(n)) {
      current.parts.push_back({n, r, J});
      self(self, k + 1);
      current.parts.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Memoized evaluation of f(p, L) for a fixed p over many L.
///
/// f(p, L) sums, over all decompositions L = sum_{n,r} J_{n,r} with
/// deg J_{n,r} = n, the multinomial prod_u L(u)! / prod_{n,r} J_{n,r}(u)!.
/// The memo is keyed on (remaining L, number of parts already placed).
class DecompositionCounter {
public:
  explicit DecompositionCounter(const MultiIndex& p) : degrees_(part_degrees(p)), degree_(p.degree()) {}

  BigInt operator()(const MultiIndex& L) {
    if (L.degree() != degree_) {
      return BigInt(0);
    }
    return count(L, 0);
  }

private:
  BigInt count(const MultiIndex& remaining, std::size_t k) {
    if (k == degrees_.size()) {
      return remaining.empty() ? BigInt(1) : BigInt(0);
    }
    const auto key = std::make_pair(remaining, k);
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    BigInt total(0);
    for_each_sub_multi_index(remaining, degrees_[k], [&](const MultiIndex& J) {
      BigInt ways(1);
      MultiIndex rest = remaining;
      for (const auto& [u, c] : J.entries()) {
        ways *= binomial(static_cast<unsigned long>(remaining[u]), static_cast<unsigned long>(c));
        rest.add(u, -c);
      }
      const BigInt tail = count(rest, k + 1);
      if (tail != 0) {
        total += ways * tail;
      }
    });
    memo_.emplace(key, total);
    return total;
  }

  std::vector<int> degrees_;
  int degree_;
  std::map<std::pair<MultiIndex, std::size_t>, BigInt> memo_;
};

/// f(p, L); zero when deg(L) != deg(p) or L admits no decomposition.
inline BigInt f_weight(const MultiIndex& p, const MultiIndex& L) { return DecompositionCounter(p)(L); }

// ---------------------------------------------------------------------------
// Gap sequences

/// Interlaced pairs i(1) > j(1) > i(2) > ... > i(L) > j(L) >= 0.
struct GapSequence {
  std::vector<std::pair<int, int>> pairs;

  int degree() const {
    int n = 0;
    for (const auto& [i, j] : pairs) {
      n += i - j;
    }
    return n;
  }

  int max_index() const { return pairs.empty() ? -1 : pairs.front().first; }

  std::vector<int> flatten() const {
    std::vector<int> out;
    for (const auto& [i, j] : pairs) {
      out.push_back(i);
      out.push_back(j);
    }
    return out;
  }

  bool valid() const {
    const auto flat = flatten();
    if (flat.empty() || flat.back() < 0) {
      return false;
    }
    for (std::size_t k = 1; k < flat.size(); ++k) {
      if (flat[k] >= flat[k - 1]) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const GapSequence&, const GapSequence&) = default;
  friend auto operator<=>(const GapSequence& a, const GapSequence& b) { return a.flatten() <=> b.flatten(); }
};

/// Visits every gap sequence of degree n with i(1) <= max_index (and, when
/// allowed is non-empty, using only indices flagged in allowed).
/// Order is ascending lexicographic on the flattened index list.
template <class Visit>
void for_each_gap_sequence(int n, int max_index, Visit&& visit, const std::vector<bool>& allowed = {}) {
  if (n < 1) {
    throw std::invalid_argument("gap sequences need degree >= 1");
  }
  auto ok = [&](int idx) {
    return allowed.empty() || (idx < static_cast<int>(allowed.size()) && allowed[static_cast<std::size_t>(idx)]);
  };
  GapSequence current;
  // Next top index lies in [remaining, upper].
  auto rec = [&](auto&& self, int upper, int remaining) -> void {
    for (int i = remaining; i <= upper; ++i) {
      if (!ok(i)) {
        continue;
      }
      for (int j = std::max(0, i - remaining); j < i; ++j) {
        if (!ok(j)) {
          continue;
        }
        const int left = remaining - (i - j);
        if (left > 0 && j - 1 < left) {
          continue;
        }
        current.pairs.emplace_back(i, j);
        if (left == 0) {
          visit(static_cast<const GapSequence&>(current));
        } else {
          self(self, j - 1, left);
        }
        current.pairs.pop_back();
      }
    }
  };
  rec(rec, max_index, n);
}

inline std::vector<GapSequence> gap_sequences(int n, int max_index) {
  std::vector<GapSequence> out;
  for_each_gap_sequence(n, max_index, [&](const GapSequence& g) { out.push_back(g); });
  return out;
}

}  // namespace szego

#endif  // SZEGO_COMBINATORICS_HPP
