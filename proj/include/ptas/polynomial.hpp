#ifndef PTAS_POLYNOMIAL_HPP
#define PTAS_POLYNOMIAL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"
#include "rational.hpp"

namespace ptas {

using TermMap = std::map<MultiIndex, Rational>;

namespace detail {

inline void accumulate_term(TermMap& terms, const MultiIndex& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

} // namespace detail

/// Sparse polynomial in n variables with terms of mixed degree. Used for the
/// simplex-restricted forms of Bernstein approximations.
class GeneralPolynomial {
public:
    explicit GeneralPolynomial(std::size_t n) : n_(n) {}

    GeneralPolynomial(std::size_t n, const TermMap& terms) : n_(n) {
        for (const auto& [beta, c] : terms) add_term(beta, c);
    }

    std::size_t dimension() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [beta, c] : terms_) d = std::max(d, beta.total());
        return d;
    }

    Rational coefficient(const MultiIndex& beta) const {
        auto it = terms_.find(beta);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(const MultiIndex& beta, const Rational& coeff) {
        if (beta.size() != n_) throw PreconditionError("term length does not match dimension");
        detail::accumulate_term(terms_, beta, coeff);
    }

    GeneralPolynomial& operator+=(const GeneralPolynomial& other) {
        check_dimension(other.n_);
        for (const auto& [beta, c] : other.terms_) detail::accumulate_term(terms_, beta, c);
        return *this;
    }

    GeneralPolynomial& operator-=(const GeneralPolynomial& other) {
        check_dimension(other.n_);
        for (const auto& [beta, c] : other.terms_) detail::accumulate_term(terms_, beta, -c);
        return *this;
    }

    GeneralPolynomial& operator*=(const Rational& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [beta, c] : terms_) c *= s;
        return *this;
    }

    friend GeneralPolynomial operator+(GeneralPolynomial a, const GeneralPolynomial& b) { return a += b; }
    friend GeneralPolynomial operator-(GeneralPolynomial a, const GeneralPolynomial& b) { return a -= b; }
    friend GeneralPolynomial operator*(GeneralPolynomial a, const Rational& s) { return a *= s; }
    friend GeneralPolynomial operator*(const Rational& s, GeneralPolynomial a) { return a *= s; }

    friend bool operator==(const GeneralPolynomial& a, const GeneralPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_dimension(std::size_t n) const {
        if (n != n_) throw PreconditionError("polynomial dimension mismatch");
    }

    std::size_t n_;
    TermMap terms_;
};

/// Canonical representative on the simplex: x_n replaced by 1 - x_1 - ... - x_{n-1}.
/// Two polynomials agree on the simplex iff their representatives are equal.
inline GeneralPolynomial restrict_to_simplex(const GeneralPolynomial& g) {
    const std::size_t n = g.dimension();
    if (n == 0) return g;
    GeneralPolynomial out(n);
    for (const auto& [beta, c] : g.terms()) {
        MultiIndex rest = beta;
        const unsigned k = beta[n - 1];
        rest.set(n - 1, 0);
        TermMap cur{{rest, c}};
        for (unsigned step = 0; step < k; ++step) {
            TermMap next = cur;
            for (const auto& [m, v] : cur)
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    MultiIndex mi = m;
                    mi.increment(i);
                    detail::accumulate_term(next, mi, -v);
                }
            cur = std::move(next);
        }
        for (const auto& [m, v] : cur) out.add_term(m, v);
    }
    return out;
}

/// Homogeneous polynomial of degree d in n variables with exact rational
/// coefficients. Zero coefficients are never stored; the zero polynomial keeps
/// its declared degree.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(std::size_t n, unsigned d) : n_(n), d_(d) {
        if (n == 0) throw PreconditionError("dimension must be at least 1");
    }

    HomogeneousPolynomial(std::size_t n, unsigned d, const TermMap& terms) : HomogeneousPolynomial(n, d) {
        for (const auto& [beta, c] : terms) add_term(beta, c);
    }

    /// Rejects mixed degrees.
    static HomogeneousPolynomial from_general(const GeneralPolynomial& g, unsigned d) {
        return HomogeneousPolynomial(g.dimension(), d, g.terms());
    }

    std::size_t dimension() const noexcept { return n_; }
    unsigned degree() const noexcept { return d_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const MultiIndex& beta) const {
        auto it = terms_.find(beta);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(const MultiIndex& beta, const Rational& coeff) {
        if (beta.size() != n_) throw PreconditionError("term length does not match dimension");
        if (beta.total() != d_)
            throw PreconditionError("term " + beta.str() + " has degree " + std::to_string(beta.total()) +
                                    ", expected " + std::to_string(d_));
        detail::accumulate_term(terms_, beta, coeff);
    }

    GeneralPolynomial to_general() const { return GeneralPolynomial(n_, terms_); }

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other) {
        if (other.n_ != n_ || other.d_ != d_) throw PreconditionError("polynomial shape mismatch");
        for (const auto& [beta, c] : other.terms_) detail::accumulate_term(terms_, beta, c);
        return *this;
    }

    HomogeneousPolynomial& operator*=(const Rational& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [beta, c] : terms_) c *= s;
        return *this;
    }

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a += b; }
    friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Rational& s) { return a *= s; }
    friend HomogeneousPolynomial operator*(const Rational& s, HomogeneousPolynomial a) { return a *= s; }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a) { return a *= Rational(-1); }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a += -b;
    }

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

private:
    std::size_t n_;
    unsigned d_;
    TermMap terms_;
};

template <typename P>
concept PolynomialLike = requires(const P& p) {
    { p.dimension() } -> std::convertible_to<std::size_t>;
    { p.terms() } -> std::convertible_to<const TermMap&>;
};

/// Exact value sum_beta f_beta x^beta.
template <PolynomialLike P>
Rational evaluate(const P& f, std::span<const Rational> x) {
    if (x.size() != f.dimension())
        throw PreconditionError("point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                                std::to_string(f.dimension()) + " variables");
    std::vector<std::vector<Rational>> powers(x.size());
    auto power = [&](std::size_t i, unsigned e) -> const Rational& {
        auto& p = powers[i];
        if (p.empty()) p.push_back(Rational(1));
        while (p.size() <= e) p.push_back(p.back() * x[i]);
        return p[e];
    };
    Rational sum;
    for (const auto& [beta, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < beta.size(); ++i)
            if (beta[i] != 0) t *= power(i, beta[i]);
        sum += t;
    }
    return sum;
}

template <PolynomialLike P>
Rational evaluate(const P& f, const std::vector<Rational>& x) {
    return evaluate(f, std::span<const Rational>(x));
}

/// Floating-point evaluation; only the Monte Carlo sampler uses this.
template <PolynomialLike P>
double evaluate_double(const P& f, std::span<const double> x) {
    if (x.size() != f.dimension()) throw PreconditionError("point dimension mismatch");
    double sum = 0.0;
    for (const auto& [beta, c] : f.terms()) {
        double t = c.to_double();
        for (std::size_t i = 0; i < beta.size(); ++i)
            for (unsigned e = 0; e < beta[i]; ++e) t *= x[i];
        sum += t;
    }
    return sum;
}

/// Bernstein coefficients f_beta * beta! / d! of the nonzero terms. Absent keys
/// carry coefficient zero.
inline TermMap bernstein_coefficients(const HomogeneousPolynomial& f) {
    const Integer d_fact = factorial(f.degree());
    TermMap out;
    for (const auto& [beta, c] : f.terms()) out.emplace(beta, c * Rational(beta.factorial(), d_fact));
    return out;
}

struct CoefficientRange {
    Rational low;
    Rational high;
};

/// Min and max of the Bernstein coefficients over all of I(n,d), counting
/// monomials absent from f as zero. low <= min f and max f <= high on the simplex.
inline CoefficientRange coefficient_range_bounds(const HomogeneousPolynomial& f) {
    const auto coeffs = bernstein_coefficients(f);
    const Integer monomials = binomial(f.dimension() + f.degree() - 1, f.degree());
    std::optional<Rational> low, high;
    if (Integer(coeffs.size()) < monomials) low = high = Rational();
    for (const auto& [beta, b] : coeffs) {
        if (!low || b < *low) low = b;
        if (!high || b > *high) high = b;
    }
    return {*low, *high};
}

/// binom(2d-1, d) * d^d, the constant bounding the Bernstein coefficient range
/// by the range of function values.
inline Integer ptas_constant(unsigned d) {
    if (d == 0) throw PreconditionError("ptas_constant requires d >= 1");
    return binomial(2 * d - 1, d) * ipow(d, d);
}

inline bool is_square_free(const HomogeneousPolynomial& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& t) { return t.first.is_square_free(); });
}

using AdjacencyMatrix = std::vector<std::vector<int>>;

/// x^T (I + A) x for a simple graph with adjacency matrix A.
inline HomogeneousPolynomial motzkin_straus(const AdjacencyMatrix& adjacency) {
    const std::size_t n = adjacency.size();
    if (n == 0) throw PreconditionError("graph has no vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i].size() != n) throw PreconditionError("adjacency matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            int a = adjacency[i][j];
            if (a != 0 && a != 1) throw PreconditionError("adjacency matrix is not 0/1");
            if (a != adjacency[j][i]) throw PreconditionError("adjacency matrix is not symmetric");
        }
        if (adjacency[i][i] != 0) throw PreconditionError("adjacency matrix has a loop");
    }
    HomogeneousPolynomial f(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        f.add_term(MultiIndex::unit(n, i, 2), 1);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!adjacency[i][j]) continue;
            MultiIndex beta(n);
            beta.set(i, 1);
            beta.set(j, 1);
            f.add_term(beta, 2);
        }
    }
    return f;
}

} // namespace ptas

#endif // PTAS_POLYNOMIAL_HPP
