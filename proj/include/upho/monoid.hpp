#ifndef UPHO_MONOID_HPP_
#define UPHO_MONOID_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "upho/error.hpp"
#include "upho/poset.hpp"

namespace upho {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct Relation {
  Word lhs;
  Word rhs;
};

/// Finite alphabet with homogeneous relations of length >= 2.
class MonoidPresentation {
 public:
  MonoidPresentation(std::vector<std::string> alphabet, std::vector<Relation> relations)
      : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
    if (alphabet_.empty()) throw Error(ErrorCode::MalformedInput, "alphabet is empty");
    std::set<std::string> seen;
    for (const auto& s : alphabet_)
      if (s.empty() || !seen.insert(s).second)
        throw Error(ErrorCode::MalformedInput, "alphabet symbols must be distinct and nonempty");
    for (const auto& r : relations_) {
      if (r.lhs.size() != r.rhs.size())
        throw Error(ErrorCode::MalformedInput, "relation " + format(r.lhs) + " = " + format(r.rhs) +
                                                   " is not homogeneous");
      if (r.lhs.size() < 2)
        throw Error(ErrorCode::MalformedInput, "relations must have length at least 2");
      for (auto w : {&r.lhs, &r.rhs})
        for (auto a : *w)
          if (a >= alphabet_.size()) throw Error(ErrorCode::MalformedInput, "letter out of range");
    }
  }

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t letters() const noexcept { return alphabet_.size(); }

  std::string format(const Word& w) const {
    std::string out;
    for (auto a : w) out += alphabet_.at(a);
    return out;
  }

  /// Greedy longest-symbol tokenization.
  Word parse_word(const std::string& text) const {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t best = 0;
      Letter which = 0;
      for (Letter a = 0; a < alphabet_.size(); ++a) {
        const auto& s = alphabet_[a];
        if (s.size() > best && text.compare(i, s.size(), s) == 0) {
          best = s.size();
          which = a;
        }
      }
      if (best == 0)
        throw Error(ErrorCode::ParseError, "unknown symbol at offset " + std::to_string(i) + " in \"" + text + "\"");
      w.push_back(which);
      i += best;
    }
    return w;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<Relation> relations_;
};

/// Text format: first line the alphabet symbols separated by spaces, then one
/// "LHS = RHS" per line.  Blank lines and lines starting with '#' are skipped.
inline MonoidPresentation parse_presentation(std::istream& in) {
  std::string line;
  std::vector<std::string> alphabet;
  auto meaningful = [](const std::string& l) {
    auto pos = l.find_first_not_of(" \t\r");
    return pos != std::string::npos && l[pos] != '#';
  };
  while (std::getline(in, line)) {
    if (!meaningful(line)) continue;
    std::istringstream ss(line);
    for (std::string s; ss >> s;) alphabet.push_back(s);
    break;
  }
  if (alphabet.empty()) throw Error(ErrorCode::ParseError, "missing alphabet line");
  MonoidPresentation free(alphabet, {});
  std::vector<Relation> relations;
  while (std::getline(in, line)) {
    if (!meaningful(line)) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected LHS = RHS: \"" + line + "\"");
    auto strip = [](std::string s) {
      s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
      return s;
    };
    relations.push_back({free.parse_word(strip(line.substr(0, eq))), free.parse_word(strip(line.substr(eq + 1)))});
  }
  return MonoidPresentation(std::move(alphabet), std::move(relations));
}

inline MonoidPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

/// Default 2,000,000 words in total, overridden by UPHO_BUDGET.
inline std::uint64_t word_budget() {
  if (const char* env = std::getenv("UPHO_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2'000'000;
}

/// Words of length l are encoded in radix |alphabet|, first letter most
/// significant, so numeric order is lexicographic order.
class CongruenceTable {
 public:
  std::size_t max_length() const noexcept { return class_of_.size() - 1; }
  std::size_t letters() const noexcept { return k_; }

  std::size_t class_count(std::size_t len) const { return reps_.at(len).size(); }
  std::vector<std::size_t> class_counts() const {
    std::vector<std::size_t> out;
    for (const auto& r : reps_) out.push_back(r.size());
    return out;
  }

  std::uint64_t encode(const Word& w) const {
    std::uint64_t code = 0;
    for (auto a : w) code = code * k_ + a;
    return code;
  }
  Word decode(std::uint64_t code, std::size_t len) const {
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<Letter>(code % k_);
      code /= k_;
    }
    return w;
  }

  /// Class ids at each length are ordered by their minimal word.
  std::uint32_t class_of(const Word& w) const { return class_of_.at(w.size()).at(encode(w)); }
  std::uint32_t class_of_code(std::size_t len, std::uint64_t code) const { return class_of_[len][code]; }
  Word representative(std::size_t len, std::uint32_t cls) const { return decode(reps_.at(len).at(cls), len); }

  /// All words of the class, in lexicographic order.
  std::vector<Word> members(std::size_t len, std::uint32_t cls) const {
    std::vector<Word> out;
    const auto& row = class_of_.at(len);
    for (std::uint64_t c = 0; c < row.size(); ++c)
      if (row[c] == cls) out.push_back(decode(c, len));
    return out;
  }

 private:
  friend CongruenceTable congruence_classes(const MonoidPresentation&, std::size_t);
  std::size_t k_ = 1;
  std::vector<std::vector<std::uint32_t>> class_of_;
  std::vector<std::vector<std::uint64_t>> reps_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller code becomes the root, so roots are minimal words.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace detail

/// Enumerates every word of each length up to max_len and unites it with each
/// single substitution of a relation side at any position.
inline CongruenceTable congruence_classes(const MonoidPresentation& pres, std::size_t max_len) {
  const std::uint64_t k = pres.letters();
  const std::uint64_t budget = word_budget();
  std::uint64_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += layer;
    if (total > budget || (len < max_len && layer > budget / k))
      throw Error(ErrorCode::BudgetExceeded, "enumerating words up to length " + std::to_string(max_len) +
                                                 " exceeds the budget of " + std::to_string(budget));
    layer *= k;
  }

  CongruenceTable table;
  table.k_ = static_cast<std::size_t>(k);
  std::vector<std::uint64_t> power{1};
  for (std::size_t i = 0; i < max_len; ++i) power.push_back(power.back() * k);

  struct Side {
    std::uint64_t from, to;
    std::size_t len;
  };
  std::vector<Side> sides;
  for (const auto& r : pres.relations()) {
    sides.push_back({table.encode(r.lhs), table.encode(r.rhs), r.lhs.size()});
    sides.push_back({table.encode(r.rhs), table.encode(r.lhs), r.lhs.size()});
  }

  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::uint64_t n = power[len];
    detail::UnionFind uf(n);
    for (const auto& s : sides) {
      if (s.len > len) continue;
      for (std::size_t pos = 0; pos + s.len <= len; ++pos) {
        const std::uint64_t shift = power[len - pos - s.len];
        // X u Y with |X| = pos: code = X * k^(len-pos) + u * shift + Y.
        for (std::uint64_t x = 0; x < power[pos]; ++x)
          for (std::uint64_t y = 0; y < shift; ++y) {
            const std::uint64_t base = x * power[len - pos] + y;
            uf.unite(static_cast<std::uint32_t>(base + s.from * shift),
                     static_cast<std::uint32_t>(base + s.to * shift));
          }
      }
    }
    std::vector<std::uint32_t> cls(n);
    std::vector<std::uint64_t> reps;
    std::vector<std::uint32_t> id_of_root(n, static_cast<std::uint32_t>(-1));
    for (std::uint64_t c = 0; c < n; ++c) {
      auto root = uf.find(static_cast<std::uint32_t>(c));
      if (id_of_root[root] == static_cast<std::uint32_t>(-1)) {
        id_of_root[root] = static_cast<std::uint32_t>(reps.size());
        reps.push_back(c);
      }
      cls[c] = id_of_root[root];
    }
    table.class_of_.push_back(std::move(cls));
    table.reps_.push_back(std::move(reps));
  }
  return table;
}

/// Classes of words of length < depth; class(w) is covered by class(w a).
inline RankedPoset monoid_poset(const CongruenceTable& table, std::size_t depth) {
  if (depth < 1 || depth > table.max_length() + 1)
    throw Error(ErrorCode::InsufficientDepth, "table does not reach depth " + std::to_string(depth));
  std::vector<std::size_t> sizes;
  std::vector<LocalCovers> layers;
  const auto k = table.letters();
  for (std::size_t len = 0; len < depth; ++len) {
    sizes.push_back(table.class_count(len));
    if (len + 1 == depth) break;
    LocalCovers layer;
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < len; ++i) words *= k;
    for (std::uint64_t c = 0; c < words; ++c)
      for (std::uint64_t a = 0; a < k; ++a)
        layer.emplace_back(table.class_of_code(len, c), table.class_of_code(len + 1, c * k + a));
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    layers.push_back(std::move(layer));
  }
  return build_layered(sizes, layers, /*embed=*/false);
}

inline RankedPoset monoid_poset(const MonoidPresentation& pres, std::size_t depth) {
  if (depth < 1) throw Error(ErrorCode::InsufficientDepth, "depth must be at least 1");
  return monoid_poset(congruence_classes(pres, depth - 1), depth);
}

struct CancellationFailure {
  Letter letter;
  Word x;
  Word y;
};

struct CancellationReport {
  bool passed = true;
  std::optional<CancellationFailure> witness;
};

/// For every letter a and length l < max_length, class(w) -> class(a w) must
/// be injective.  The witness is the first violation in (length, letter,
/// class) order, with X and Y the minimal words of their classes.
inline CancellationReport left_cancellation_check(const CongruenceTable& table) {
  CancellationReport out;
  const auto k = table.letters();
  std::uint64_t words = 1;
  for (std::size_t len = 0; len < table.max_length(); ++len, words *= k) {
    for (Letter a = 0; a < k; ++a) {
      std::vector<std::uint32_t> preimage(table.class_count(len + 1), static_cast<std::uint32_t>(-1));
      for (std::uint32_t cls = 0; cls < table.class_count(len); ++cls) {
        const auto rep = table.encode(table.representative(len, cls));
        const auto image = table.class_of_code(len + 1, a * words + rep);
        if (preimage[image] == static_cast<std::uint32_t>(-1)) {
          preimage[image] = cls;
          continue;
        }
        out.passed = false;
        out.witness = CancellationFailure{a, table.representative(len, preimage[image]),
                                          table.representative(len, cls)};
        return out;
      }
    }
  }
  return out;
}

inline CancellationReport left_cancellation_check(const MonoidPresentation& pres, std::size_t max_len) {
  return left_cancellation_check(congruence_classes(pres, max_len));
}

/// Alphabet {L, R}; for each n the relation (LR)^n LL = RR L^(2(n-1)) RL.
inline MonoidPresentation s_family(const std::set<std::uint32_t>& indices) {
  constexpr Letter L = 0, R = 1;
  std::vector<Relation> relations;
  for (auto n : indices) {
    if (n < 2) throw Error(ErrorCode::IndexTooSmall, "relation index " + std::to_string(n) + " is below 2");
    Word lhs, rhs{R, R};
    for (std::uint32_t i = 0; i < n; ++i) lhs.insert(lhs.end(), {L, R});
    lhs.insert(lhs.end(), {L, L});
    rhs.insert(rhs.end(), 2 * (n - 1), L);
    rhs.insert(rhs.end(), {R, L});
    relations.push_back({std::move(lhs), std::move(rhs)});
  }
  return MonoidPresentation({"L", "R"}, std::move(relations));
}

/// a, b, c with ac = ba and bc = ca.
inline MonoidPresentation stern_presentation() {
  return MonoidPresentation({"a", "b", "c"}, {{{0, 2}, {1, 0}}, {{1, 2}, {2, 0}}});
}

struct SeparationReport {
  std::vector<std::vector<std::size_t>> counts;
  bool distinct = true;
  std::optional<std::pair<std::size_t, std::size_t>> coinciding;
  /// Pairs whose counts at length 2n+2 (n the least index in exactly one of
  /// them) do not differ by exactly one.
  std::vector<std::pair<std::size_t, std::size_t>> sharp_failures;
};

/// Class-count vectors of s_family(subset) through max_len for each subset.
inline SeparationReport distinct_rgf_check(const std::vector<std::set<std::uint32_t>>& subsets,
                                           std::size_t max_len) {
  SeparationReport out;
  for (const auto& s : subsets) {
    for (auto n : s)
      if (2 * static_cast<std::size_t>(n) + 2 > max_len)
        throw Error(ErrorCode::InsufficientDepth, "relation t_" + std::to_string(n) + " is longer than " +
                                                      std::to_string(max_len));
    out.counts.push_back(congruence_classes(s_family(s), max_len).class_counts());
  }
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (out.counts[i] == out.counts[j]) {
        if (out.distinct) out.coinciding = std::pair{i, j};
        out.distinct = false;
        continue;
      }
      std::vector<std::uint32_t> diff;
      std::set_symmetric_difference(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                                    subsets[j].end(), std::back_inserter(diff));
      const std::size_t len = 2 * static_cast<std::size_t>(diff.front()) + 2;
      const auto a = out.counts[i][len], b = out.counts[j][len];
      if ((a > b ? a - b : b - a) != 1) out.sharp_failures.emplace_back(i, j);
    }
  return out;
}

}  // namespace upho

#endif  // UPHO_MONOID_HPP_
