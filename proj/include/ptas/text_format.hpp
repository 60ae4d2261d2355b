#ifndef PTAS_TEXT_FORMAT_HPP
#define PTAS_TEXT_FORMAT_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ptas {

// Grammar:
//   poly   := term (('+'|'-') term)*
//   term   := [coeff '*'] factor ('*' factor)*  |  coeff
//   coeff  := integer | integer '/' positive-integer
//   factor := 'x' index ['^' positive-integer]
// Whitespace is ignored; a leading '-' negates the first term.

namespace detail {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, std::size_t n) : n_(n) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
    }

    HomogeneousPolynomial parse() {
        if (chars_.empty()) fail("empty polynomial");
        std::vector<std::pair<MultiIndex, Rational>> terms;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        terms.push_back(term(negate));
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        const unsigned d = terms.front().first.total();
        HomogeneousPolynomial f(n_, d);
        for (const auto& [beta, c] : terms) {
            if (beta.total() != d)
                throw ParseError("mixed degrees: term " + beta.str() + " has degree " +
                                 std::to_string(beta.total()) + ", first term has degree " + std::to_string(d));
            f.add_term(beta, c);
        }
        return f;
    }

private:
    struct Char {
        char c;
        std::size_t offset;
    };

    bool at_end() const { return pos_ >= chars_.size(); }
    char peek() const { return at_end() ? '\0' : chars_[pos_].c; }
    std::size_t offset() const { return at_end() ? (chars_.empty() ? 0 : chars_.back().offset + 1) : chars_[pos_].offset; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset()); }

    std::optional<Integer> digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += chars_[pos_++].c;
        if (s.empty()) return std::nullopt;
        return Integer(s);
    }

    std::pair<MultiIndex, Rational> term(bool negate) {
        MultiIndex beta(n_);
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = *digits();
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                auto d = digits();
                if (!d) fail("expected denominator");
                if (sgn(*d) == 0) fail("zero denominator");
                den = *d;
            }
            coeff = Rational(num, den);
            if (peek() != '*') return {beta, negate ? -coeff : coeff};
            ++pos_;
        }
        for (;;) {
            factor(beta);
            if (peek() != '*') break;
            ++pos_;
        }
        return {beta, negate ? -coeff : coeff};
    }

    void factor(MultiIndex& beta) {
        if (peek() != 'x') fail("expected variable 'x<index>'");
        ++pos_;
        std::size_t at = offset();
        auto idx = digits();
        if (!idx) fail("expected variable index");
        if (*idx < 1 || *idx > Integer(static_cast<unsigned long>(n_)))
            throw ParseError("variable index x" + idx->get_str() + " out of range 1.." + std::to_string(n_), at);
        unsigned power = 1;
        if (peek() == '^') {
            ++pos_;
            std::size_t eat = offset();
            auto e = digits();
            if (!e) fail("expected exponent");
            if (sgn(*e) == 0 || *e > 1000000) throw ParseError("exponent must be a positive integer", eat);
            power = static_cast<unsigned>(e->get_ui());
        }
        beta.increment(static_cast<std::size_t>(idx->get_ui() - 1), power);
    }

    std::vector<Char> chars_;
    std::size_t pos_ = 0;
    std::size_t n_;
};

template <PolynomialLike P>
std::string format_terms(const P& f) {
    if (f.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [beta, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (beta[i] > 1) mono += "^" + std::to_string(beta[i]);
        }
        if (mono.empty()) out += mag.str();
        else if (mag == Rational(1)) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

} // namespace detail

/// Parses a homogeneous polynomial in the variables x1..xn. Like terms merge
/// and zero coefficients are dropped; the degree comes from the written terms.
inline HomogeneousPolynomial parse_polynomial(std::string_view text, std::size_t n) {
    if (n == 0) throw PreconditionError("dimension must be at least 1");
    return detail::PolynomialParser(text, n).parse();
}

/// Text in the same grammar parse_polynomial accepts.
inline std::string to_string(const HomogeneousPolynomial& f) { return detail::format_terms(f); }
inline std::string to_string(const GeneralPolynomial& f) { return detail::format_terms(f); }

/// Comma-separated rationals, e.g. "1/3,2/3".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty list");
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(Rational::parse(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace ptas

#endif // PTAS_TEXT_FORMAT_HPP
