// Copyright 2026 The schur-choice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHUR_INDEX_VALUE_HPP
#define SCHUR_INDEX_VALUE_HPP

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur/error.hpp"
#include "schur/rational.hpp"

namespace schur {

namespace detail {

/// Directed-rounding interval [lo, hi] at a fixed precision. Only the
/// operations the index comparisons need: rational endpoints, addition,
/// scaling by a rational, ln, and exp.
class BigFloatInterval {
 public:
  explicit BigFloatInterval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  BigFloatInterval(const BigFloatInterval& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  BigFloatInterval& operator=(const BigFloatInterval&) = delete;
  ~BigFloatInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static BigFloatInterval from_rat(const Rat& value, mpfr_prec_t prec) {
    BigFloatInterval out(prec);
    mpq_t q;
    mpq_init(q);
    mpq_set_str(q, to_string(value).c_str(), 10);
    mpq_canonicalize(q);
    mpfr_set_q(out.lo_, q, MPFR_RNDD);
    mpfr_set_q(out.hi_, q, MPFR_RNDU);
    mpq_clear(q);
    return out;
  }

  void add(const BigFloatInterval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  }

  /// In-place multiplication by a rational scalar.
  void scale(const Rat& factor, mpfr_prec_t prec) {
    const BigFloatInterval f = from_rat(factor, prec);
    mpfr_t a, b;
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);
    if (factor >= 0) {
      mpfr_mul(a, lo_, f.lo_, MPFR_RNDD);
      mpfr_mul(b, hi_, f.hi_, MPFR_RNDU);
    } else {
      mpfr_mul(a, hi_, f.lo_, MPFR_RNDD);
      mpfr_mul(b, lo_, f.hi_, MPFR_RNDU);
    }
    mpfr_set(lo_, a, MPFR_RNDD);
    mpfr_set(hi_, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
  }

  /// Natural log; requires a strictly positive interval.
  BigFloatInterval ln(mpfr_prec_t prec) const {
    if (!(mpfr_sgn(lo_) > 0)) {
      throw InternalError("interval log of a nonpositive value");
    }
    BigFloatInterval out(prec);
    mpfr_log(out.lo_, lo_, MPFR_RNDD);
    mpfr_log(out.hi_, hi_, MPFR_RNDU);
    return out;
  }

  BigFloatInterval exp(mpfr_prec_t prec) const {
    BigFloatInterval out(prec);
    mpfr_exp(out.lo_, lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, hi_, MPFR_RNDU);
    return out;
  }

  /// +1 strictly positive, -1 strictly negative, 0 undecided (straddles).
  int sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }

  std::string midpoint_string() const {
    mpfr_t mid;
    mpfr_init2(mid, mpfr_get_prec(lo_));
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char buffer[64];
    mpfr_snprintf(buffer, sizeof buffer, "%.12Rg", mid);
    mpfr_clear(mid);
    return buffer;
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// p^alpha as exp(alpha * ln p); p must be strictly positive.
inline BigFloatInterval pow_rat(const Rat& base, const Rat& exponent,
                                mpfr_prec_t prec) {
  BigFloatInterval l = BigFloatInterval::from_rat(base, prec).ln(prec);
  l.scale(exponent, prec);
  return l.exp(prec);
}

inline std::map<Int, Int> prime_factorize(Int value) {
  if (value <= 0) throw InternalError("factorizing a nonpositive integer");
  std::map<Int, Int> factors;
  for (Int p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    while (value % p == 0) {
      factors[p] += 1;
      value /= p;
    }
  }
  if (value > 1) factors[value] += 1;
  return factors;
}

}  // namespace detail

/// Exact value of a diversity index. Three shapes cover the built-in
/// indexes: a plain rational, a rational plus a rational combination of logs
/// of integers (kept over prime bases so equal values have equal forms), and
/// the Renyi value (1/(1-alpha)) * ln(sum p_i^alpha) for non-integer alpha
/// over a non-uniform proportion multiset.
///
/// Comparisons are exact for the first two shapes: log combinations reduce,
/// after clearing denominators, to comparing two big-integer products. The
/// Renyi shape compares by interval arithmetic with widening precision;
/// equal inputs are caught structurally (identical canonical forms) before
/// any rounding is involved.
class IndexValue {
 public:
  enum class Kind { kRational, kLogLinear, kPowerMean };

  static IndexValue rational(Rat value) {
    IndexValue v;
    v.kind_ = Kind::kRational;
    v.scalar_ = std::move(value);
    return v;
  }

  /// scalar + sum of coef * ln(arg) over positive integer args.
  static IndexValue log_linear(Rat scalar, const std::map<Int, Rat>& terms) {
    IndexValue v;
    v.scalar_ = std::move(scalar);
    for (const auto& [arg, coef] : terms) {
      if (arg <= 0) throw InputError("log of a nonpositive integer");
      if (coef == 0 || arg == 1) continue;
      for (const auto& [p, e] : detail::prime_factorize(arg)) {
        v.log_terms_[p] += coef * e;
      }
    }
    for (auto it = v.log_terms_.begin(); it != v.log_terms_.end();) {
      it = it->second == 0 ? v.log_terms_.erase(it) : std::next(it);
    }
    v.kind_ = v.log_terms_.empty() ? Kind::kRational : Kind::kLogLinear;
    return v;
  }

  /// (1/(1-alpha)) * ln(sum_i p_i^alpha) for positive proportions summing to
  /// one. Uniform multisets fold to the exact value ln(count).
  static IndexValue power_mean(const Rat& alpha, std::vector<Rat> proportions) {
    if (proportions.empty()) {
      throw InputError("power mean needs at least one proportion");
    }
    std::sort(proportions.begin(), proportions.end(),
              std::greater<Rat>());
    if (proportions.back() <= 0) {
      throw InputError("power mean proportions must be positive");
    }
    if (proportions.front() == proportions.back()) {
      const long k = static_cast<long>(proportions.size());
      return log_linear(Rat(0), {{Int(k), Rat(1)}});
    }
    if (boost::multiprecision::denominator(alpha) == 1) {
      throw InternalError("integer exponents belong in the log-linear form");
    }
    IndexValue v;
    v.kind_ = Kind::kPowerMean;
    v.alpha_ = alpha;
    v.proportions_ = std::move(proportions);
    return v;
  }

  Kind kind() const { return kind_; }

  /// Exact three-way comparison; throws ResourceError if interval widening
  /// up to the precision cap cannot separate the values.
  friend int compare(const IndexValue& a, const IndexValue& b) {
    if (a.kind_ != Kind::kPowerMean && b.kind_ != Kind::kPowerMean) {
      return compare_log_linear(a, b);
    }
    if (a.kind_ == Kind::kPowerMean && b.kind_ == Kind::kPowerMean &&
        a.alpha_ == b.alpha_ && a.proportions_ == b.proportions_) {
      return 0;
    }
    if (a.kind_ == Kind::kPowerMean && b.kind_ == Kind::kPowerMean &&
        a.alpha_ == b.alpha_) {
      // Same outer coefficient: order by the inner power sums, flipping for
      // alpha > 1 where 1/(1-alpha) < 0.
      const int flip = a.alpha_ > 1 ? -1 : 1;
      return flip * separate_by_interval([&](mpfr_prec_t prec) {
        detail::BigFloatInterval diff = a.power_sum(prec);
        detail::BigFloatInterval neg = b.power_sum(prec);
        neg.scale(Rat(-1), prec);
        diff.add(neg);
        return diff;
      });
    }
    return separate_by_interval([&](mpfr_prec_t prec) {
      detail::BigFloatInterval diff = a.evaluate(prec);
      detail::BigFloatInterval neg = b.evaluate(prec);
      neg.scale(Rat(-1), prec);
      diff.add(neg);
      return diff;
    });
  }

  friend bool operator==(const IndexValue& a, const IndexValue& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const IndexValue& a, const IndexValue& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const IndexValue& a, const IndexValue& b) {
    return compare(a, b) <= 0;
  }

  /// Exact display form.
  std::string exact_string() const {
    switch (kind_) {
      case Kind::kRational:
        return to_string(scalar_);
      case Kind::kLogLinear: {
        std::string out;
        if (scalar_ != 0) out = to_string(scalar_);
        for (const auto& [p, coef] : log_terms_) {
          if (!out.empty()) out += coef > 0 ? " + " : " - ";
          const Rat mag = coef > 0 || out.empty() ? coef : Rat(-coef);
          if (mag != 1) out += to_string(mag) + "*";
          out += "ln(" + p.str() + ")";
        }
        return out;
      }
      case Kind::kPowerMean: {
        std::string sum;
        for (const Rat& p : proportions_) {
          if (!sum.empty()) sum += " + ";
          sum += "(" + to_string(p) + ")^(" + to_string(alpha_) + ")";
        }
        return "(1/(1 - " + to_string(alpha_) + "))*ln(" + sum + ")";
      }
    }
    return "";
  }

  /// Decimal approximation for display only; comparisons never use it.
  std::string approx_string() const {
    if (kind_ == Kind::kRational &&
        boost::multiprecision::denominator(scalar_) == 1) {
      return to_string(scalar_);
    }
    return evaluate(256).midpoint_string();
  }

 private:
  IndexValue() = default;

  detail::BigFloatInterval power_sum(mpfr_prec_t prec) const {
    detail::BigFloatInterval sum(prec);
    for (const Rat& p : proportions_) {
      sum.add(detail::pow_rat(p, alpha_, prec));
    }
    return sum;
  }

  detail::BigFloatInterval evaluate(mpfr_prec_t prec) const {
    switch (kind_) {
      case Kind::kRational:
        return detail::BigFloatInterval::from_rat(scalar_, prec);
      case Kind::kLogLinear: {
        detail::BigFloatInterval sum =
            detail::BigFloatInterval::from_rat(scalar_, prec);
        for (const auto& [p, coef] : log_terms_) {
          detail::BigFloatInterval term =
              detail::BigFloatInterval::from_rat(Rat(p), prec).ln(prec);
          term.scale(coef, prec);
          sum.add(term);
        }
        return sum;
      }
      case Kind::kPowerMean: {
        detail::BigFloatInterval value = power_sum(prec).ln(prec);
        value.scale(Rat(1) / (Rat(1) - alpha_), prec);
        return value;
      }
    }
    throw InternalError("unreachable index value kind");
  }

  template <typename Eval>
  static int separate_by_interval(const Eval& difference) {
    for (mpfr_prec_t prec = 128; prec <= 65536; prec *= 2) {
      const int sign = difference(prec).sign();
      if (sign != 0) return sign;
    }
    throw ResourceError(
        "index values cannot be separated at the precision cap; they may be "
        "equal through a nonstructural identity");
  }

  /// Difference of two rational/log-linear values, decided exactly: with no
  /// log terms it is the rational difference; with log terms and a zero
  /// rational part, sign(sum A_p ln p) = sign(prod p^{A+} - prod p^{A-})
  /// after clearing denominators; a rational part plus logs can never vanish
  /// so intervals always separate it.
  static int compare_log_linear(const IndexValue& a, const IndexValue& b) {
    const Rat scalar = a.scalar_ - b.scalar_;
    std::map<Int, Rat> terms = a.log_terms_;
    for (const auto& [p, coef] : b.log_terms_) terms[p] -= coef;
    for (auto it = terms.begin(); it != terms.end();) {
      it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    if (terms.empty()) {
      return scalar == 0 ? 0 : (scalar > 0 ? 1 : -1);
    }
    if (scalar == 0) {
      Int lcm = 1;
      for (const auto& [p, coef] : terms) {
        lcm = boost::multiprecision::lcm(
            lcm, boost::multiprecision::denominator(coef));
      }
      Int positive = 1, negative = 1;
      for (const auto& [p, coef] : terms) {
        const Rat scaled = coef * lcm;
        Int exponent = boost::multiprecision::numerator(scaled);
        Int& side = exponent > 0 ? positive : negative;
        if (exponent < 0) exponent = -exponent;
        if (exponent > 1'000'000) {
          throw ResourceError("log comparison exponent exceeds the cap");
        }
        side *= boost::multiprecision::pow(
            p, exponent.convert_to<unsigned long>());
      }
      return positive == negative ? 0 : (positive > negative ? 1 : -1);
    }
    return separate_by_interval([&](mpfr_prec_t prec) {
      detail::BigFloatInterval diff = a.evaluate(prec);
      detail::BigFloatInterval neg = b.evaluate(prec);
      neg.scale(Rat(-1), prec);
      diff.add(neg);
      return diff;
    });
  }

  Kind kind_ = Kind::kRational;
  Rat scalar_;                    // rational part
  std::map<Int, Rat> log_terms_;  // prime -> coefficient
  Rat alpha_;                     // power-mean exponent, non-integer
  std::vector<Rat> proportions_;  // descending, positive, non-uniform
};

}  // namespace schur

#endif  // SCHUR_INDEX_VALUE_HPP
