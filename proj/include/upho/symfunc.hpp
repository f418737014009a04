#ifndef UPHO_SYMFUNC_HPP_
#define UPHO_SYMFUNC_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "upho/error.hpp"
#include "upho/poset.hpp"
#include "upho/series.hpp"
#include "upho/sturm.hpp"

namespace upho {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::uint32_t> parts;

  Partition() = default;
  Partition(std::initializer_list<std::uint32_t> p) : parts(p) { validate(); }
  explicit Partition(std::vector<std::uint32_t> p) : parts(std::move(p)) { validate(); }

  std::size_t size() const {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  }
  std::size_t length() const { return parts.size(); }
  std::uint32_t operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

  /// Lexicographic on parts.
  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out + "]";
  }

 private:
  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] == 0 || (i > 0 && parts[i] > parts[i - 1]))
        throw Error(ErrorCode::MalformedInput, "partition parts must be positive and weakly decreasing");
  }
};

/// True iff lambda dominates mu (equal sizes assumed).
inline bool dominates(const Partition& lambda, const Partition& mu) {
  std::size_t a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

/// Partitions of n in reverse lexicographic order ((n) first, (1^n) last).
/// This order refines dominance: a dominating partition comes earlier.
inline std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return {Partition{}};
  std::vector<std::uint32_t> p{static_cast<std::uint32_t>(n)};
  while (true) {
    out.emplace_back(p);
    // Find the last part > 1, decrement it and redistribute the remainder
    // greedily in parts no larger than it.
    std::size_t ones = 0;
    while (!p.empty() && p.back() == 1) {
      p.pop_back();
      ++ones;
    }
    if (p.empty()) break;
    std::uint32_t k = --p.back();
    std::size_t rest = ones + 1;
    while (rest > 0) {
      auto take = static_cast<std::uint32_t>(std::min<std::size_t>(k, rest));
      p.push_back(take);
      rest -= take;
    }
  }
  return out;
}

enum class Basis { Monomial, Schur };

/// Reverse lexicographic key order.
using PartitionMap = std::map<Partition, BigInt, std::greater<>>;

/// Homogeneous symmetric function of one degree in a fixed basis.
struct SymmetricFunctionDeg {
  std::size_t degree = 0;
  Basis basis = Basis::Monomial;
  PartitionMap coefficients;

  BigInt coeff(const Partition& lambda) const {
    auto it = coefficients.find(lambda);
    return it == coefficients.end() ? BigInt(0) : it->second;
  }

  void set(const Partition& lambda, BigInt value) {
    if (lambda.size() != degree)
      throw Error(ErrorCode::SizeMismatch, "partition " + lambda.to_string() + " is not of " +
                                               std::to_string(degree));
    if (value == 0)
      coefficients.erase(lambda);
    else
      coefficients[lambda] = std::move(value);
  }

  friend bool operator==(const SymmetricFunctionDeg&, const SymmetricFunctionDeg&) = default;
};

/// Degree-n part of F(x_1) F(x_2) ... in the monomial basis: the coefficient
/// of m_mu is prod_i r_{mu_i}.
inline SymmetricFunctionDeg ehrenborg_monomial(const IntSeries& r, std::size_t n) {
  if (r.size() <= n)
    throw Error(ErrorCode::InsufficientSeries, "series has " + std::to_string(r.size()) +
                                                   " coefficients, degree " + std::to_string(n) +
                                                   " needs " + std::to_string(n + 1));
  SymmetricFunctionDeg f{n, Basis::Monomial, {}};
  for (const auto& mu : partitions(n)) {
    BigInt c = 1;
    for (auto part : mu.parts) c *= r[part];
    f.set(mu, std::move(c));
  }
  return f;
}

/// Degree-n Ehrenborg function of p in m variables, counted directly from
/// multichains 0 = t_0 <= t_1 <= ... <= t_{k-1} < t_k with rank(t_k) = n and
/// k <= m.  Throws NotSymmetric if the monomial coefficients are not
/// invariant under permuting variables.
inline SymmetricFunctionDeg ehrenborg_by_chains(const RankedPoset& p, std::size_t num_vars,
                                                std::size_t n) {
  if (p.depth() <= n)
    throw Error(ErrorCode::InsufficientDepth, "poset depth " + std::to_string(p.depth()) +
                                                  " does not reach rank " + std::to_string(n));
  if (num_vars < n)
    throw Error(ErrorCode::MalformedInput, "need at least n variables");
  if (!unique_min_check(p)) throw Error(ErrorCode::StructureError, "poset lacks a unique minimum");

  SymmetricFunctionDeg out{n, Basis::Monomial, {}};
  if (n == 0) {
    out.set(Partition{}, 1);
    return out;
  }

  // above[v][w]: w >= v, for ranks <= n.
  const std::size_t N = p.size();
  std::vector<std::vector<char>> above(N);
  for (std::size_t k = n + 1; k-- > 0;)
    for (Vertex v : p.rank(k)) {
      auto& row = above[v];
      row.assign(N, 0);
      row[v] = 1;
      if (k == n) continue;
      for (Vertex w : p.up(v))
        for (Vertex x = 0; x < N; ++x)
          if (above[w][x]) row[x] = 1;
    }

  const Vertex root = p.rank(0).front();
  std::map<std::vector<std::uint32_t>, BigInt> monomials;
  std::vector<std::uint32_t> alpha(num_vars, 0);
  // Weak compositions of n into num_vars parts; the chain length k is the
  // index of the last nonzero part.
  std::function<void(std::size_t, std::size_t)> compose = [&](std::size_t i, std::size_t left) {
    if (i + 1 == num_vars) {
      alpha[i] = static_cast<std::uint32_t>(left);
      // Count chains with rank jumps alpha.
      std::vector<BigInt> ways(N, 0);
      ways[root] = 1;
      std::size_t rank = 0;
      for (auto step : alpha) {
        if (step == 0) continue;
        std::vector<BigInt> next(N, 0);
        for (Vertex v : p.rank(rank)) {
          if (ways[v] == 0) continue;
          for (Vertex w : p.rank(rank + step))
            if (above[v][w]) next[w] += ways[v];
        }
        ways = std::move(next);
        rank += step;
      }
      BigInt total = 0;
      for (Vertex v : p.rank(n)) total += ways[v];
      if (total != 0) monomials[alpha] = total;
      return;
    }
    for (std::size_t a = 0; a <= left; ++a) {
      alpha[i] = static_cast<std::uint32_t>(a);
      compose(i + 1, left - a);
    }
  };
  compose(0, n);

  for (const auto& [exps, c] : monomials) {
    auto sorted = exps;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto it = monomials.find(sorted);
    if (it == monomials.end() || it->second != c)
      throw Error(ErrorCode::NotSymmetric, "monomial coefficients are not symmetric");
  }
  // Every permutation of a sorted exponent vector appears iff it matched
  // above; symmetry in the other direction follows from counting.
  for (const auto& [exps, c] : monomials) {
    if (!std::is_sorted(exps.begin(), exps.end(), std::greater<>())) continue;
    std::vector<std::uint32_t> parts;
    for (auto e : exps)
      if (e) parts.push_back(e);
    out.set(Partition(std::move(parts)), c);
  }
  return out;
}

/// Number of semistandard tableaux of shape lambda and content mu, filling
/// the entries 1, 2, ... one value at a time as horizontal strips, row by row
/// with column-strictness bounds.
inline BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::SizeMismatch, "|" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  const std::size_t rows = lambda.length();
  BigInt count = 0;
  std::vector<std::uint32_t> shape(rows, 0), next(rows, 0);

  // Extends `shape` by mu[value] boxes, choosing row lengths top-down.
  std::function<void(std::size_t)> fill_value;
  std::function<void(std::size_t, std::size_t, std::size_t)> fill_row =
      [&](std::size_t value, std::size_t row, std::size_t remaining) {
        if (row == rows) {
          if (remaining != 0) return;
          auto saved_shape = shape, saved_next = next;
          shape = next;
          fill_value(value + 1);
          shape = std::move(saved_shape);
          next = std::move(saved_next);
          return;
        }
        const std::uint32_t lo = shape[row];
        std::uint32_t hi = lambda[row];
        if (row > 0) hi = std::min(hi, shape[row - 1]);  // column strictness
        for (std::uint32_t len = lo; len <= hi && len - lo <= remaining; ++len) {
          next[row] = len;
          fill_row(value, row + 1, remaining - (len - lo));
        }
      };
  fill_value = [&](std::size_t value) {
    if (value == mu.length()) {
      if (std::equal(shape.begin(), shape.end(), lambda.parts.begin())) ++count;
      return;
    }
    fill_row(value, 0, mu[value]);
  };
  fill_value(0);
  return count;
}

/// Monomial expansion of sum_lambda d_lambda s_lambda.
inline SymmetricFunctionDeg monomial_from_schur(const SymmetricFunctionDeg& f) {
  if (f.basis != Basis::Schur) throw Error(ErrorCode::MalformedInput, "expected Schur basis");
  SymmetricFunctionDeg out{f.degree, Basis::Monomial, {}};
  for (const auto& mu : partitions(f.degree)) {
    BigInt c = 0;
    for (const auto& [lambda, d] : f.coefficients)
      if (dominates(lambda, mu)) c += d * kostka(lambda, mu);
    out.set(mu, std::move(c));
  }
  return out;
}

/// Solves c_mu = sum_lambda d_lambda K(lambda, mu) by back-substitution in
/// reverse lexicographic order, using K(mu, mu) = 1 and K(lambda, mu) = 0
/// unless lambda dominates mu.
inline SymmetricFunctionDeg schur_expand(const SymmetricFunctionDeg& f) {
  if (f.basis != Basis::Monomial) throw Error(ErrorCode::MalformedInput, "expected monomial basis");
  SymmetricFunctionDeg out{f.degree, Basis::Schur, {}};
  for (const auto& mu : partitions(f.degree)) {
    BigInt d = f.coeff(mu);
    for (const auto& [lambda, dl] : out.coefficients)
      if (lambda != mu && dominates(lambda, mu)) d -= dl * kostka(lambda, mu);
    out.set(mu, std::move(d));
  }
  return out;
}

struct NegativeSchurCoefficient {
  std::size_t degree;
  Partition lambda;
  BigInt coefficient;
};

struct SchurPositivity {
  bool positive = true;
  std::optional<NegativeSchurCoefficient> witness;
};

/// Schur positivity of F(x_1) F(x_2) ... through degree max_degree.
inline SchurPositivity is_schur_positive(const IntSeries& r, std::size_t max_degree) {
  if (r.size() <= max_degree)
    throw Error(ErrorCode::InsufficientSeries, "series too short for degree " + std::to_string(max_degree));
  SchurPositivity out;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const auto s = schur_expand(ehrenborg_monomial(r, n));
    for (const auto& [lambda, d] : s.coefficients)
      if (d < 0) {
        out.positive = false;
        out.witness = NegativeSchurCoefficient{n, lambda, d};
        return out;
      }
  }
  return out;
}

/// Lines "c · s[lambda]" in reverse lexicographic order.
inline std::vector<std::string> format_schur(const SymmetricFunctionDeg& f) {
  std::vector<std::string> out;
  const char* symbol = f.basis == Basis::Schur ? "s" : "m";
  for (const auto& [lambda, c] : f.coefficients)
    out.push_back(c.str() + " · " + symbol + lambda.to_string());
  return out;
}

}  // namespace upho

#endif  // UPHO_SYMFUNC_HPP_
