#include "knotforge/laurent.hpp"

#include "knotforge/util.hpp"

#include <algorithm>
#include <sstream>

namespace knotforge {

namespace {
const Integer kZero(0);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) {
        p.lo_ = exp;
        p.c_ = {coeff};
    }
    return p;
}

LaurentPoly LaurentPoly::t() { return monomial(1, 1); }

const Integer& LaurentPoly::coeff(int exp) const {
    if (c_.empty() || exp < lo_ || exp > hi()) return kZero;
    return c_[static_cast<std::size_t>(exp - lo_)];
}

void LaurentPoly::trim() {
    std::size_t front = 0;
    while (front < c_.size() && c_[front] == 0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = c_.size();
    while (back > front && c_[back - 1] == 0) --back;
    if (front > 0 || back < c_.size()) {
        c_ = std::vector<Integer>(c_.begin() + front, c_.begin() + back);
        lo_ += static_cast<int>(front);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentPoly r;
    r.lo_ = std::min(lo_, o.lo_);
    int top = std::max(hi(), o.hi());
    r.c_.assign(static_cast<std::size_t>(top - r.lo_ + 1), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + (lo_ - r.lo_)] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i + (o.lo_ - r.lo_)] += o.c_[i];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::shifted_scaled(const Integer& coeff, int exp) const {
    if (is_zero() || coeff == 0) return LaurentPoly();
    LaurentPoly r = *this;
    r.lo_ += exp;
    for (auto& v : r.c_) v *= coeff;
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw IntegrityError("laurent: division by zero");
    if (is_zero()) return LaurentPoly();
    // Long division from the top; exactness is asserted at every step.
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const Integer& dlead = divisor.c_.back();
    while (!rem.is_zero() && rem.span() + 1 >= static_cast<int>(divisor.c_.size())) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.c_.back().get_mpz_t(), dlead.get_mpz_t());
        if (r != 0) throw IntegrityError("laurent: inexact division (leading coefficient)");
        int shift = rem.hi() - divisor.hi();
        quot += monomial(q, shift);
        rem -= divisor.shifted_scaled(q, shift);
    }
    if (!rem.is_zero()) throw IntegrityError("laurent: inexact division (remainder)");
    return quot;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return LaurentPoly();
    LaurentPoly r = *this;
    r.lo_ = 0;
    if (r.c_.back() < 0)
        for (auto& v : r.c_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::reversed() const {
    if (is_zero()) return LaurentPoly();
    LaurentPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.lo_ = -hi();
    r.trim();
    return r;
}

bool LaurentPoly::is_palindromic() const {
    return normalized() == reversed().normalized();
}

bool LaurentPoly::is_unit_monomial() const {
    return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

Integer LaurentPoly::eval(long t0) const {
    if (is_zero()) return Integer(0);
    if (lo_ < 0 && t0 != 1 && t0 != -1)
        throw InvalidInput("laurent: cannot evaluate negative exponents at |t| != 1");
    Integer acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    if (lo_ != 0 && (t0 == 1 || t0 == -1)) {
        if (t0 == -1 && (lo_ % 2 != 0)) acc = -acc;
    } else if (lo_ > 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::abs(t0)),
                      static_cast<unsigned long>(lo_));
        if (t0 < 0 && lo_ % 2 != 0) p = -p;
        acc *= p;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = lo(); e <= hi(); ++e) {
        const Integer& a = coeff(e);
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::map<int, std::string> LaurentPoly::coeff_map() const {
    std::map<int, std::string> m;
    for (int e = lo(); e <= hi(); ++e)
        if (coeff(e) != 0) m[e] = coeff(e).get_str();
    return m;
}

LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    for (auto& row : m)
        if (row.size() != n) throw InvalidInput("laurent_determinant: matrix not square");

    LaurentPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot: smallest span among nonzero candidates keeps growth down.
        std::size_t piv = n;
        int best = -1;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            int s = m[i][k].span();
            if (piv == n || s < best) { piv = i; best = s; }
        }
        if (piv == n) return LaurentPoly();  // singular
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divide_exact(prev);
            }
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Integer(1);
    for (auto& row : m)
        if (row.size() != n) throw InvalidInput("integer_determinant: matrix not square");

    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][k] != 0) { piv = i; break; }
        if (piv == n) return Integer(0);
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                Integer q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw IntegrityError("integer_determinant: inexact Bareiss step");
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace knotforge
