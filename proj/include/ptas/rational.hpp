#ifndef PTAS_RATIONAL_HPP
#define PTAS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace ptas {

using Integer = mpz_class;

/// Exact rational scalar, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    Rational(unsigned long value) : q_(value) {}
    Rational(unsigned value) : q_(static_cast<unsigned long>(value)) {}
    Rational(const Integer& value) : q_(value) {}

    Rational(const Integer& num, const Integer& den) {
        if (sgn(den) == 0) throw PreconditionError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Exact binary value of a finite double.
    static Rational from_double(double value) { return Rational(mpq_class(value)); }

    /// Parses "p", "-p" or "p/q" (q > 0).
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto valid_int = [](std::string_view t, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ++i;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw ParseError("invalid rational literal '" + s + "'");
        if (num[0] == '+') num.erase(0, 1);
        Integer d(den);
        if (sgn(d) == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(Integer(num), d);
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& get_mpq() const noexcept { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    /// Always "p/q", including "p/1".
    std::string fraction_str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Six significant digits, for human-readable output only.
    std::string approx_str() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", to_double());
        return buf;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PreconditionError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational pow(const Rational& base, unsigned long exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpq().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_mpq().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer ipow(unsigned long base, unsigned long exponent) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_mpq().get_num_mpz_t(), r.get_mpq().get_den_mpz_t());
    return out;
}

/// Largest integer <= r.
inline Integer floor(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_mpq().get_num_mpz_t(), r.get_mpq().get_den_mpz_t());
    return out;
}

} // namespace ptas

#endif // PTAS_RATIONAL_HPP
