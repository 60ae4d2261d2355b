#ifndef PTAS_MULTI_INDEX_HPP
#define PTAS_MULTI_INDEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ptas {

/// Exponent vector in N^n. Indexes monomials, grid points and moments alike.
/// Ordered lexicographically on the exponents.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::size_t n) : exps_(n, 0u) {}

    MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) { recount(); }

    explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) { recount(); }

    static MultiIndex unit(std::size_t n, std::size_t i, unsigned power = 1) {
        MultiIndex e(n);
        e.set(i, power);
        return e;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned total() const noexcept { return total_; }

    unsigned operator[](std::size_t i) const { return exps_[i]; }

    void set(std::size_t i, unsigned value) {
        total_ = total_ - exps_[i] + value;
        exps_[i] = value;
    }

    void increment(std::size_t i, unsigned by = 1) { set(i, exps_[i] + by); }

    auto begin() const noexcept { return exps_.begin(); }
    auto end() const noexcept { return exps_.end(); }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    /// Componentwise alpha <= beta.
    bool dominated_by(const MultiIndex& other) const {
        if (size() != other.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// alpha! = prod alpha_i!
    Integer factorial() const {
        Integer out = 1;
        for (unsigned e : exps_) out *= ptas::factorial(e);
        return out;
    }

    /// Indices with a nonzero exponent.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < size(); ++i)
            if (exps_[i] != 0) s.push_back(i);
        return s;
    }

    bool is_square_free() const {
        return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e <= 1; });
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw PreconditionError("multi-index length mismatch");
        MultiIndex out(a);
        for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] += b.exps_[i];
        out.total_ = a.total_ + b.total_;
        return out;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps_ <=> b.exps_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += std::to_string(exps_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& a) { return os << a.str(); }

private:
    void recount() { total_ = std::accumulate(exps_.begin(), exps_.end(), 0u); }

    std::vector<unsigned> exps_;
    unsigned total_ = 0;
};

/// Advances alpha to its lexicographic successor among vectors with the same
/// length and total. Returns false (leaving alpha unchanged) at the last one.
inline bool next_composition(MultiIndex& alpha) {
    const std::size_t n = alpha.size();
    if (n < 2) return false;
    unsigned suffix = alpha[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        if (suffix > 0) {
            alpha.increment(i);
            for (std::size_t j = i + 1; j + 1 < n; ++j) alpha.set(j, 0);
            alpha.set(n - 1, suffix - 1);
            return true;
        }
        suffix += alpha[i];
    }
    return false;
}

/// Lexicographically smallest vector of length n and total r: (0,...,0,r).
inline MultiIndex first_composition(std::size_t n, unsigned r) {
    if (n == 0) throw PreconditionError("dimension must be at least 1");
    return MultiIndex::unit(n, n - 1, r);
}

} // namespace ptas

#endif // PTAS_MULTI_INDEX_HPP
