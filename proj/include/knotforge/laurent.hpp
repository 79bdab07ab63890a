#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace knotforge {

using Integer = mpz_class;

/// Integer Laurent polynomial in one variable t, exact coefficients.
///
/// Stored as a dense coefficient vector together with the exponent of its
/// first entry. The zero polynomial is the empty vector with lo() == 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long v) { if (v != 0) { lo_ = 0; c_ = {Integer(v)}; } }
    explicit LaurentPoly(const Integer& v) { if (v != 0) { lo_ = 0; c_ = {v}; } }

    static LaurentPoly monomial(const Integer& coeff, int exp);
    static LaurentPoly t();  // the variable itself

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    /// hi - lo; 0 for constants and for the zero polynomial.
    int span() const { return c_.empty() ? 0 : hi() - lo(); }
    const Integer& coeff(int exp) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by coeff * t^exp.
    LaurentPoly shifted_scaled(const Integer& coeff, int exp) const;

    /// Exact division; throws IntegrityError if the division leaves a remainder.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    /// Canonical representative of the unit-multiple class: lowest exponent
    /// shifted to 0, then sign flipped if the top coefficient is negative.
    LaurentPoly normalized() const;

    /// t -> exponent-reversal (t^k -> t^(span-k) after normalization).
    LaurentPoly reversed() const;

    bool is_palindromic() const;  // normalized() == reversed().normalized()

    /// True for c * t^k with c in {+1, -1}.
    bool is_unit_monomial() const;

    Integer eval(long t0) const;

    std::string str() const;  // human readable, e.g. "1 - 3*t + t^2"
    std::map<int, std::string> coeff_map() const;  // exponent -> decimal coefficient

private:
    void trim();
    int lo_ = 0;
    std::vector<Integer> c_;
};

/// Determinant of a dense square matrix over the Laurent ring, by
/// fraction-free (Bareiss) elimination. Matrix is consumed.
LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m);

/// Determinant of a dense square integer matrix, fraction-free. Consumed.
Integer integer_determinant(std::vector<std::vector<Integer>> m);

} // namespace knotforge
