#ifndef SZEGO_MULTI_INDEX_HPP
#define SZEGO_MULTI_INDEX_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace szego {

/// Malformed "index:count,..." text; the message names the offending token.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Finitely supported map index -> positive count. Zero counts are never
/// stored, so two equal vectors have identical maps.
template <int MinIndex>
class SparseCounts {
public:
  using map_type = std::map<int, int>;

  SparseCounts() = default;
  SparseCounts(std::initializer_list<std::pair<const int, int>> init) {
    for (const auto& [k, v] : init) {
      add(k, v);
    }
  }

  static SparseCounts delta(int index, int count = 1) {
    SparseCounts out;
    out.add(index, count);
    return out;
  }

  /// Parses "1:2,3:1". Indices must be strictly increasing and counts
  /// positive; the empty string is the zero vector.
  static SparseCounts parse(std::string_view text) {
    SparseCounts out;
    if (text.empty()) {
      return out;
    }
    int last = MinIndex - 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string token(text.substr(pos, comma - pos));
      const auto colon = token.find(':');
      auto fail = [&](const std::string& why) {
        throw ParseError("malformed multi-index token '" + token + "': " + why);
      };
      if (colon == std::string::npos) {
        fail("expected index:count");
      }
      const int index = parse_int(token.substr(0, colon), fail);
      const int count = parse_int(token.substr(colon + 1), fail);
      if (index < MinIndex) {
        fail("index below " + std::to_string(MinIndex));
      }
      if (count <= 0) {
        fail("count must be positive");
      }
      if (index <= last) {
        fail("indices must be strictly increasing");
      }
      last = index;
      out.counts_[index] = count;
      pos = comma + 1;
    }
    return out;
  }

  int operator[](int index) const {
    const auto it = counts_.find(index);
    return it == counts_.end() ? 0 : it->second;
  }

  void add(int index, int count = 1) {
    if (index < MinIndex) {
      throw std::out_of_range("multi-index position " + std::to_string(index) + " below minimum");
    }
    const int v = (*this)[index] + count;
    if (v < 0) {
      throw std::out_of_range("multi-index count would become negative");
    }
    if (v == 0) {
      counts_.erase(index);
    } else {
      counts_[index] = v;
    }
  }

  const map_type& entries() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }

  /// sum_j j * p(j)
  int degree() const {
    int d = 0;
    for (const auto& [k, v] : counts_) {
      d += k * v;
    }
    return d;
  }

  /// sum_j p(j)
  int size() const {
    int s = 0;
    for (const auto& [k, v] : counts_) {
      s += v;
    }
    return s;
  }

  /// Number of indices with a positive count.
  int length() const noexcept { return static_cast<int>(counts_.size()); }

  /// Largest index with a positive count, or MinIndex - 1 when empty.
  int max_support() const { return counts_.empty() ? MinIndex - 1 : counts_.rbegin()->first; }

  /// Dense vector of counts for indices [MinIndex, upto].
  std::vector<int> dense(int upto) const {
    std::vector<int> out(static_cast<std::size_t>(std::max(upto - MinIndex + 1, 0)), 0);
    for (const auto& [k, v] : counts_) {
      if (k <= upto) {
        out[static_cast<std::size_t>(k - MinIndex)] = v;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [k, v] : counts_) {
      if (!out.empty()) {
        out += ',';
      }
      out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out;
  }

  SparseCounts& operator+=(const SparseCounts& o) {
    for (const auto& [k, v] : o.counts_) {
      add(k, v);
    }
    return *this;
  }
  friend SparseCounts operator+(SparseCounts a, const SparseCounts& b) { return a += b; }

  friend bool operator==(const SparseCounts&, const SparseCounts&) = default;
  friend auto operator<=>(const SparseCounts& a, const SparseCounts& b) { return a.counts_ <=> b.counts_; }

  friend std::ostream& operator<<(std::ostream& os, const SparseCounts& p) {
    return os << "{" << p.to_string() << "}";
  }

private:
  template <class Fail>
  static int parse_int(const std::string& s, Fail&& fail) {
    if (s.empty()) {
      fail("empty number");
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      fail("not an integer");
    }
    if (used != s.size()) {
      fail("not an integer");
    }
    return v;
  }

  map_type counts_;
};

}  // namespace detail

/// Multi-index over the positive integers (houses p, q, J, K, L).
using MultiIndex = detail::SparseCounts<1>;

/// Multi-index whose indexing starts at 0 (the multiplicity vector m).
using MultiplicityVector = detail::SparseCounts<0>;

}  // namespace szego

template <int N>
struct std::hash<szego::detail::SparseCounts<N>> {
  std::size_t operator()(const szego::detail::SparseCounts<N>& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [k, v] : p.entries()) {
      h ^= std::hash<long long>{}((static_cast<long long>(k) << 32) ^ v) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // SZEGO_MULTI_INDEX_HPP
