#ifndef PTAS_COMBINATORICS_HPP
#define PTAS_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"
#include "rational.hpp"

namespace ptas {

/// r (r-1) ... (r-d+1). One for d = 0, zero when d > r.
inline Integer falling_factorial(unsigned long r, unsigned long d) {
    if (d > r) return 0;
    Integer out = 1;
    for (unsigned long j = 0; j < d; ++j) out *= r - j;
    return out;
}

/// Triangular table of Stirling numbers of the second kind S(b, a) for
/// b <= max_b, built bottom-up from S(b+1, a) = S(b, a-1) + a S(b, a).
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_b) : max_b_(max_b), rows_(max_b + 1) {
        rows_[0] = {Integer(1)};
        for (unsigned b = 0; b < max_b; ++b) {
            auto& next = rows_[b + 1];
            next.assign(b + 2, Integer(0));
            for (unsigned a = 1; a <= b + 1; ++a) {
                Integer v = rows_[b][a - 1];
                if (a <= b) v += Integer(a) * rows_[b][a];
                next[a] = v;
            }
        }
    }

    unsigned max_b() const noexcept { return max_b_; }

    const Integer& operator()(unsigned b, unsigned a) const {
        static const Integer zero(0);
        if (b > max_b_) throw PreconditionError("Stirling table extent exceeded");
        return a > b ? zero : rows_[b][a];
    }

private:
    unsigned max_b_;
    std::vector<std::vector<Integer>> rows_;
};

namespace detail {

/// Process-wide table that grows on demand. Readers get an immutable snapshot.
inline std::shared_ptr<const StirlingTable> stirling_table(unsigned min_b) {
    static std::mutex mutex;
    static std::shared_ptr<const StirlingTable> table = std::make_shared<StirlingTable>(32);
    std::lock_guard lock(mutex);
    if (table->max_b() < min_b) table = std::make_shared<StirlingTable>(std::max(min_b, 2 * table->max_b()));
    return table;
}

} // namespace detail

inline Integer stirling2(unsigned b, unsigned a) {
    if (a > b) return 0;
    return (*detail::stirling_table(b))(b, a);
}

/// r! / prod alpha_i!, as a product of binomials C(alpha_1 + ... + alpha_i, alpha_i).
inline Integer multinomial(unsigned r, const MultiIndex& alpha) {
    if (alpha.total() != r)
        throw PreconditionError("multinomial: |alpha| = " + std::to_string(alpha.total()) + " but r = " +
                                std::to_string(r));
    Integer out = 1;
    unsigned long partial = 0;
    for (unsigned a : alpha) {
        partial += a;
        out *= binomial(partial, a);
    }
    return out;
}

/// Counts surjections from a d-set onto a k-set by visiting all k^d maps.
/// Brute force, intended as an oracle: d <= 10.
inline Integer surjection_count(unsigned d, unsigned k) {
    if (d > 10) throw PreconditionError("surjection_count is limited to d <= 10");
    if (k == 0) return d == 0 ? 1 : 0;
    if (d == 0) return 0;
    std::vector<unsigned> map(d, 0);
    std::vector<unsigned> hits(k, 0);
    hits[0] = d;
    unsigned covered = 1;
    unsigned long long count = 0;
    for (;;) {
        if (covered == k) ++count;
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (--hits[map[i]] == 0) --covered;
            if (map[i] + 1 < k) {
                ++map[i];
                if (hits[map[i]]++ == 0) ++covered;
                break;
            }
            map[i] = 0;
            if (hits[0]++ == 0) ++covered;
        }
        if (i == d) break;
    }
    return Integer(static_cast<unsigned long>(count));
}

/// Outcome of an exact identity check; keeps both sides for diagnostics.
struct IdentityCheck {
    bool holds = false;
    Rational lhs;
    Rational rhs;

    explicit operator bool() const noexcept { return holds; }
};

/// sum_{k=1}^{d-1} r^(k falling) S(d,k) == r^d - r^(d falling)
inline IdentityCheck check_identity_falling_sum(unsigned d, unsigned long r) {
    Integer lhs = 0;
    for (unsigned k = 1; k + 1 <= d; ++k) lhs += falling_factorial(r, k) * stirling2(d, k);
    Integer rhs = ipow(r, d) - falling_factorial(r, d);
    return {lhs == rhs, Rational(lhs), Rational(rhs)};
}

/// S(d,k) == (alpha!/k!) sum_{beta in I(n,d)} (d!/beta!) prod_i S(beta_i, alpha_i)
/// for alpha in I(n,k) and d > k.
inline IdentityCheck check_identity_stirling_split(const MultiIndex& alpha, unsigned d) {
    const unsigned k = alpha.total();
    if (d <= k) throw PreconditionError("stirling split identity requires d > |alpha|");
    const std::size_t n = alpha.size();
    Integer sum = 0;
    MultiIndex beta = first_composition(n, d);
    do {
        Integer term = multinomial(d, beta);
        for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= stirling2(beta[i], alpha[i]);
        sum += term;
    } while (next_composition(beta));
    Rational rhs = Rational(alpha.factorial(), factorial(k)) * Rational(sum);
    Rational lhs(stirling2(d, k));
    return {lhs == rhs, lhs, rhs};
}

} // namespace ptas

#endif // PTAS_COMBINATORICS_HPP
