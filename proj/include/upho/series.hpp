#ifndef UPHO_SERIES_HPP_
#define UPHO_SERIES_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "upho/error.hpp"
#include "upho/poset.hpp"

namespace upho {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, constant term first, trailing zeros trimmed (the zero
/// polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (auto x : coeffs) c_.emplace_back(x);
    trim();
  }

  static IntPolynomial constant(BigInt x) { return IntPolynomial(std::vector<BigInt>{std::move(x)}); }
  /// 1 + a x
  static IntPolynomial linear(long long a) { return IntPolynomial{1, a}; }

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
  }
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(out));
  }
  IntPolynomial operator-() const {
    auto out = c_;
    for (auto& x : out) x = -x;
    return IntPolynomial(std::move(out));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      BigInt mag = abs(c_[k]);
      if (out.empty()) {
        if (c_[k] < 0) out += "-";
      } else {
        out += c_[k] < 0 ? " - " : " + ";
      }
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// Truncated power series: coefficients of x^0 .. x^order.
struct IntSeries {
  std::vector<BigInt> coefficients;

  IntSeries() = default;
  explicit IntSeries(std::vector<BigInt> c) : coefficients(std::move(c)) {}
  IntSeries(std::initializer_list<long long> c) {
    for (auto x : c) coefficients.emplace_back(x);
  }

  std::size_t size() const noexcept { return coefficients.size(); }
  const BigInt& operator[](std::size_t k) const { return coefficients.at(k); }
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

  /// Cauchy product truncated to the shorter operand.
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<BigInt> out(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t t = 0; t <= k; ++t) out[k] += a.coefficients[t] * b.coefficients[k - t];
    return IntSeries(std::move(out));
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      if (k) out += ",";
      out += coefficients[k].str();
    }
    return out + "]";
  }
};

/// numerator / denominator with denominator(0) = 1.
class RationalFunction {
 public:
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    const BigInt d0 = den_.coeff(0);
    if (d0 == -1) {
      num_ = -num_;
      den_ = -den_;
    } else if (d0 != 1) {
      throw Error(ErrorCode::NonUnitConstantTerm,
                  "denominator constant term is " + d0.str() + ", expected +-1");
    }
  }

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }

  std::string to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Coefficients c_0 .. c_order of numerator / denominator, from the
/// recurrence sum_j d_j c_{k-j} = n_k.
inline IntSeries expand_rational(const RationalFunction& f, std::size_t order) {
  const auto& d = f.denominator().coefficients();
  std::vector<BigInt> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    BigInt acc = f.numerator().coeff(k);
    for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * c[k - j];
    c[k] = std::move(acc);
  }
  return IntSeries(std::move(c));
}

/// Rank sizes |P_0| .. |P_{depth-1}|.
inline IntSeries rgf(const RankedPoset& p) {
  std::vector<BigInt> c;
  for (auto n : p.rank_sizes()) c.emplace_back(n);
  return IntSeries(std::move(c));
}

inline bool match_rational(const IntSeries& s, const RationalFunction& f) {
  if (s.size() == 0) return true;
  return expand_rational(f, s.size() - 1) == s;
}

/// prod (1 + a_i x) / prod (1 - b_j x)
inline RationalFunction product_form(const std::vector<long long>& a,
                                     const std::vector<long long>& b) {
  IntPolynomial num{1}, den{1};
  for (auto x : a) num = num * IntPolynomial::linear(x);
  for (auto x : b) den = den * IntPolynomial::linear(-x);
  return RationalFunction(num, den);
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  RationalFunction parse() {
    auto [n1, d1] = side();
    IntPolynomial num = n1, den = d1;
    if (peek() == '/') {
      ++i_;
      auto [n2, d2] = side();
      num = num * d2;
      den = den * n2;
    }
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    if (den.is_zero()) fail("zero denominator");
    return RationalFunction(num, den);
  }

 private:
  // A run of parenthesised factors, or one bare polynomial.  Factors nest;
  // negative powers move a factor to the other side.
  std::pair<IntPolynomial, IntPolynomial> side() {
    IntPolynomial num{1}, den{1};
    if (peek() != '(') return {poly(), den};
    while (peek() == '(') {
      ++i_;
      auto [fn, fd] = side();
      expect(')');
      long long e = 1;
      if (peek() == '^') {
        ++i_;
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++i_;
        }
        e = integer();
        if (neg) e = -e;
      }
      if (e < 0) {
        std::swap(fn, fd);
        e = -e;
      }
      for (long long k = 0; k < e; ++k) {
        num = num * fn;
        den = den * fd;
      }
      if (peek() == '*') ++i_;
    }
    return {num, den};
  }

  IntPolynomial poly() {
    std::vector<BigInt> c;
    bool any = false;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
      } else if (any) {
        break;
      }
      BigInt coef = 1;
      bool has_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = BigInt(digits());
        has_coef = true;
        if (peek() == '*') ++i_;
      }
      std::size_t power = 0;
      if (peek() == 'x' || peek() == 't') {
        ++i_;
        power = 1;
        if (peek() == '^') {
          ++i_;
          power = static_cast<std::size_t>(integer());
        }
      } else if (!has_coef) {
        fail("expected a term");
      }
      if (c.size() <= power) c.resize(power + 1);
      c[power] += sign * coef;
      any = true;
    }
    return IntPolynomial(std::move(c));
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s_[i_++]);
    if (out.empty()) fail("expected digits");
    return out;
  }
  long long integer() { return std::stoll(digits()); }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++i_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses expressions such as "(1+x)(1+2x)/(1-x)", "1/(1-3x+x^2+x^3)" or
/// "(1-2x)^-2".
inline RationalFunction parse_rational(std::string_view text) {
  return detail::ExprParser(text).parse();
}

}  // namespace upho

#endif  // UPHO_SERIES_HPP_
