#ifndef UPHO_STURM_HPP_
#define UPHO_STURM_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "upho/error.hpp"
#include "upho/series.hpp"

namespace upho {

using BigRational = boost::multiprecision::cpp_rational;

/// Polynomial over Q, constant term first, trimmed.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }
  explicit QPolynomial(const IntPolynomial& p) {
    for (const auto& x : p.coefficients()) c_.emplace_back(x);
    trim();
  }

  const std::vector<BigRational>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const BigRational& leading() const { return c_.back(); }
  BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }

  QPolynomial derivative() const {
    std::vector<BigRational> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * static_cast<long long>(k));
    return QPolynomial(std::move(out));
  }

  QPolynomial monic() const {
    if (is_zero()) return *this;
    auto out = c_;
    const BigRational lc = leading();
    for (auto& x : out) x /= lc;
    return QPolynomial(std::move(out));
  }

  QPolynomial operator-() const {
    auto out = c_;
    for (auto& x : out) x = -x;
    return QPolynomial(std::move(out));
  }

  /// Quotient and remainder of *this by d.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const {
    if (d.is_zero()) throw Error(ErrorCode::MalformedInput, "polynomial division by zero");
    std::vector<BigRational> rem = c_;
    if (degree() < d.degree()) return {QPolynomial(), *this};
    std::vector<BigRational> quo(c_.size() - d.c_.size() + 1);
    for (long k = degree() - d.degree(); k >= 0; --k) {
      const BigRational f = rem[static_cast<std::size_t>(k) + d.c_.size() - 1] / d.leading();
      quo[static_cast<std::size_t>(k)] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * d.c_[j];
    }
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
  }

  /// Sign at +infinity (positive side) or -infinity.
  int sign_at_infinity(bool positive) const {
    if (is_zero()) return 0;
    int s = leading() > 0 ? 1 : -1;
    if (!positive && degree() % 2 == 1) s = -s;
    return s;
  }

  int sign_at_zero() const {
    if (is_zero() || c_[0] == 0) return 0;
    return c_[0] > 0 ? 1 : -1;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

/// Monic gcd.
inline QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots, all simple.
inline QPolynomial square_free_part(const QPolynomial& p) {
  if (p.degree() <= 0) return p;
  return p.divmod(gcd(p, p.derivative())).first;
}

/// p, p', then negated remainders until zero.
inline std::vector<QPolynomial> sturm_sequence(const QPolynomial& p) {
  std::vector<QPolynomial> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  while (true) {
    auto r = -(seq[seq.size() - 2].divmod(seq.back()).second);
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace detail

/// Distinct real roots of p in (-inf, 0) and in (0, +inf).  Requires p(0) != 0.
inline std::pair<int, int> count_real_roots_by_sign(const QPolynomial& p) {
  if (p.sign_at_zero() == 0)
    throw Error(ErrorCode::MalformedInput, "polynomial vanishes at 0");
  const auto seq = sturm_sequence(p);
  std::vector<int> neg, zero, pos;
  for (const auto& q : seq) {
    neg.push_back(q.sign_at_infinity(false));
    zero.push_back(q.sign_at_zero());
    pos.push_back(q.sign_at_infinity(true));
  }
  const int vn = detail::variations(neg), vz = detail::variations(zero), vp = detail::variations(pos);
  return {vn - vz, vz - vp};
}

/// Total positivity test for f = g/h in 1 + tZ[[t]]: after cancelling common
/// factors, every root of g must be a negative real and every root of h a
/// positive real.  Decided exactly with Sturm sequences on square-free parts.
inline bool davydov_check(const RationalFunction& f) {
  if (f.numerator().coeff(0) != 1)
    throw Error(ErrorCode::NonUnitConstantTerm, "numerator constant term must be 1");
  QPolynomial g(f.numerator()), h(f.denominator());
  const auto common = gcd(g, h);
  g = g.divmod(common).first;
  h = h.divmod(common).first;

  const auto gs = square_free_part(g);
  if (gs.degree() > 0 && count_real_roots_by_sign(gs).first != gs.degree()) return false;
  const auto hs = square_free_part(h);
  if (hs.degree() > 0 && count_real_roots_by_sign(hs).second != hs.degree()) return false;
  return true;
}

}  // namespace upho

#endif  // UPHO_STURM_HPP_
