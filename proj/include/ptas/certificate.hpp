#ifndef PTAS_CERTIFICATE_HPP
#define PTAS_CERTIFICATE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "bernstein.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace ptas {

enum class RangeProvenance {
    exact_known,                  ///< caller asserts lower = min f and upper = max f
    bernstein_coefficient_range,  ///< min/max Bernstein coefficient
    grid_surrogate,               ///< fine-grid extrema widened by the certified grid error
};

inline std::string_view provenance_name(RangeProvenance p) {
    switch (p) {
    case RangeProvenance::exact_known: return "exact_known";
    case RangeProvenance::bernstein_coefficient_range: return "bernstein_coefficient_range";
    case RangeProvenance::grid_surrogate: return "grid_surrogate";
    }
    return "unknown";
}

inline RangeProvenance parse_provenance(std::string_view s) {
    if (s == "exact_known") return RangeProvenance::exact_known;
    if (s == "bernstein_coefficient_range") return RangeProvenance::bernstein_coefficient_range;
    if (s == "grid_surrogate") return RangeProvenance::grid_surrogate;
    throw ParseError("unknown range provenance '" + std::string(s) + "'");
}

/// Certified L <= min f and U >= max f over the simplex.
struct RangeInput {
    Rational lower;
    Rational upper;
    RangeProvenance provenance = RangeProvenance::exact_known;

    static RangeInput exact(const Rational& lower, const Rational& upper) {
        if (upper < lower) throw PreconditionError("range lower " + lower.str() + " exceeds upper " + upper.str());
        return {lower, upper, RangeProvenance::exact_known};
    }

    static RangeInput from_coefficients(const HomogeneousPolynomial& f) {
        auto [low, high] = coefficient_range_bounds(f);
        return {low, high, RangeProvenance::bernstein_coefficient_range};
    }

    /// Extrema over Delta(n,R), widened by (1 - R^(d falling)/R^d) times the
    /// Bernstein coefficient range, then intersected with the coefficient range.
    static RangeInput grid_surrogate(const HomogeneousPolynomial& f, unsigned R, const GridOptions& options = {}) {
        auto [low, high] = coefficient_range_bounds(f);
        const unsigned d = f.degree();
        const Rational slack = (Rational(1) - Rational(falling_factorial(R, d), ipow(R, d))) * (high - low);
        Rational lower = std::max(low, grid_minimize(f, R, options).value - slack);
        Rational upper = std::min(high, grid_maximize(f, R, options).value + slack);
        return {lower, upper, RangeProvenance::grid_surrogate};
    }
};

enum class BoundTheorem {
    quadratic,
    cubic,
    squarefree,
    general,
    general_coefficient_range,
};

inline std::string_view theorem_name(BoundTheorem t) {
    switch (t) {
    case BoundTheorem::quadratic: return "quadratic";
    case BoundTheorem::cubic: return "cubic";
    case BoundTheorem::squarefree: return "squarefree";
    case BoundTheorem::general: return "general";
    case BoundTheorem::general_coefficient_range: return "general_coefficient_range";
    }
    return "unknown";
}

inline BoundTheorem parse_theorem(std::string_view s) {
    if (s == "quadratic" || s == "quad") return BoundTheorem::quadratic;
    if (s == "cubic") return BoundTheorem::cubic;
    if (s == "squarefree" || s == "sqfree") return BoundTheorem::squarefree;
    if (s == "general") return BoundTheorem::general;
    if (s == "general_coefficient_range" || s == "coeff") return BoundTheorem::general_coefficient_range;
    throw ParseError("unknown theorem '" + std::string(s) + "'");
}

enum class ReferenceSource {
    range_lower,        ///< exact range: the reference is min f itself
    verification_grid,  ///< best feasible value found on Delta(n,R_verify) and Delta(n,r)
};

inline std::string_view reference_source_name(ReferenceSource s) {
    return s == ReferenceSource::range_lower ? "range_lower" : "verification_grid";
}

/// Record that f_Delta(n,r) - reference <= bound_value, checked exactly.
///
/// With an exact range the reference is min f and the check is the grid error
/// bound itself. With a surrogate range the bound is evaluated on (L, U), which
/// only enlarges it, and the reference is the value of f at a feasible point
/// x_ref; the theorem bounds B_r(f)(x_ref) - f(x_ref), which dominates
/// f_Delta(n,r) - f(x_ref), so a correct theorem never yields a violation.
struct BoundCertificate {
    BoundTheorem theorem = BoundTheorem::general;
    std::size_t n = 0;
    unsigned d = 0;
    unsigned r = 0;
    Rational grid_value;
    GridPoint grid_argmin;
    Rational bound_value;
    /// (1 - r^(d falling)/r^d)(max - min Bernstein coefficient); general theorem only.
    std::optional<Rational> coefficient_range_bound;
    RangeInput range;
    Rational reference;
    ReferenceSource reference_source = ReferenceSource::range_lower;
    std::optional<GridPoint> reference_point;
    /// B_r(f)(x_ref) - f(x_ref), when a reference point exists.
    std::optional<Rational> bernstein_excess;
    Rational gap;
    bool satisfied = false;
    /// (f_Delta - min f)/(max f - min f); exact ranges with upper > lower only.
    std::optional<Rational> ratio;
};

struct CertificateOptions {
    /// Order of the verification grid used when the range is not exact.
    unsigned verify_order = 64;
    GridOptions grid;
};

/// Relative error factor of each theorem at order r, the multiplier of
/// (max f - min f). The quadratic theorem uses (Q_max - min f)/r instead.
inline Rational relative_bound_factor(BoundTheorem theorem, unsigned d, unsigned r) {
    if (r == 0) throw PreconditionError("grid order r must be at least 1");
    const Rational rr(r);
    auto falling_gap = [&] { return Rational(1) - Rational(falling_factorial(r, d), ipow(r, d)); };
    switch (theorem) {
    case BoundTheorem::quadratic: return Rational(1) / rr;
    case BoundTheorem::cubic:
        if (r < 2) throw PreconditionError("cubic bound requires r >= 2");
        return Rational(4) / rr - Rational(4) / (rr * rr);
    case BoundTheorem::squarefree:
    case BoundTheorem::general_coefficient_range: return falling_gap();
    case BoundTheorem::general: return d == 0 ? Rational() : falling_gap() * Rational(ptas_constant(d));
    }
    return Rational();
}

inline bool theorem_applies(BoundTheorem theorem, const HomogeneousPolynomial& f) {
    switch (theorem) {
    case BoundTheorem::quadratic: return f.degree() == 2;
    case BoundTheorem::cubic: return f.degree() == 3;
    case BoundTheorem::squarefree: return is_square_free(f);
    case BoundTheorem::general:
    case BoundTheorem::general_coefficient_range: return true;
    }
    return false;
}

/// Most specific applicable theorem: squarefree, quadratic, cubic, general.
inline BoundTheorem select_theorem(const HomogeneousPolynomial& f) {
    for (auto t : {BoundTheorem::squarefree, BoundTheorem::quadratic, BoundTheorem::cubic})
        if (theorem_applies(t, f)) return t;
    return BoundTheorem::general;
}

namespace detail {

inline BoundCertificate start_certificate(BoundTheorem theorem, const HomogeneousPolynomial& f, unsigned r,
                                          const RangeInput& range, const CertificateOptions& options) {
    if (r == 0) throw PreconditionError("grid order r must be at least 1");
    if (range.upper < range.lower) throw PreconditionError("range lower exceeds upper");
    BoundCertificate c;
    c.theorem = theorem;
    c.n = f.dimension();
    c.d = f.degree();
    c.r = r;
    auto grid = grid_minimize(f, r, options.grid);
    c.grid_value = grid.value;
    c.grid_argmin = grid.argmin;
    c.range = range;
    if (range.provenance == RangeProvenance::exact_known) {
        c.reference = range.lower;
        c.reference_source = ReferenceSource::range_lower;
    } else {
        auto fine = grid_minimize(f, options.verify_order, options.grid);
        GridPoint ref = fine.value < grid.value ? fine.argmin : grid.argmin;
        c.reference = std::min(fine.value, grid.value);
        c.reference_source = ReferenceSource::verification_grid;
        c.bernstein_excess = bernstein_closed_form(f, r).evaluate(ref.coordinates()) - c.reference;
        c.reference_point = std::move(ref);
    }
    c.gap = c.grid_value - c.reference;
    return c;
}

inline void finish_certificate(BoundCertificate& c) {
    c.satisfied = c.gap <= c.bound_value && (!c.coefficient_range_bound || c.gap <= *c.coefficient_range_bound);
    if (c.range.provenance == RangeProvenance::exact_known && c.range.lower < c.range.upper)
        c.ratio = c.gap / (c.range.upper - c.range.lower);
}

} // namespace detail

/// (Q_max - L)/r with Q_max the largest diagonal coefficient.
inline BoundCertificate bound_quadratic(const HomogeneousPolynomial& f, unsigned r, const RangeInput& range,
                                        const CertificateOptions& options = {}) {
    if (f.degree() != 2) throw PreconditionError("quadratic bound requires degree 2");
    auto c = detail::start_certificate(BoundTheorem::quadratic, f, r, range, options);
    Rational q_max = f.coefficient(MultiIndex::unit(f.dimension(), 0, 2));
    for (std::size_t i = 1; i < f.dimension(); ++i)
        q_max = std::max(q_max, f.coefficient(MultiIndex::unit(f.dimension(), i, 2)));
    c.bound_value = (q_max - range.lower) / Rational(r);
    detail::finish_certificate(c);
    return c;
}

/// (4/r - 4/r^2)(U - L), r >= 2.
inline BoundCertificate bound_cubic(const HomogeneousPolynomial& f, unsigned r, const RangeInput& range,
                                    const CertificateOptions& options = {}) {
    if (f.degree() != 3) throw PreconditionError("cubic bound requires degree 3");
    if (r < 2) throw PreconditionError("cubic bound requires r >= 2");
    auto c = detail::start_certificate(BoundTheorem::cubic, f, r, range, options);
    c.bound_value = relative_bound_factor(BoundTheorem::cubic, 3, r) * (range.upper - range.lower);
    detail::finish_certificate(c);
    return c;
}

/// (1 - r^(d falling)/r^d)(U - L) for square-free f.
inline BoundCertificate bound_squarefree(const HomogeneousPolynomial& f, unsigned r, const RangeInput& range,
                                         const CertificateOptions& options = {}) {
    if (!is_square_free(f)) throw PreconditionError("square-free bound requires a square-free polynomial");
    auto c = detail::start_certificate(BoundTheorem::squarefree, f, r, range, options);
    c.bound_value = relative_bound_factor(BoundTheorem::squarefree, f.degree(), r) * (range.upper - range.lower);
    detail::finish_certificate(c);
    return c;
}

/// (1 - r^(d falling)/r^d) C(2d-1,d) d^d (U - L), together with the sharper
/// coefficient-range form; the gap is checked against both.
inline BoundCertificate bound_general(const HomogeneousPolynomial& f, unsigned r, const RangeInput& range,
                                      const CertificateOptions& options = {}) {
    auto c = detail::start_certificate(BoundTheorem::general, f, r, range, options);
    const unsigned d = f.degree();
    c.bound_value = relative_bound_factor(BoundTheorem::general, d, r) * (range.upper - range.lower);
    auto [low, high] = coefficient_range_bounds(f);
    c.coefficient_range_bound = relative_bound_factor(BoundTheorem::general_coefficient_range, d, r) * (high - low);
    detail::finish_certificate(c);
    return c;
}

/// Coefficient-range form alone as the certified bound.
inline BoundCertificate bound_coefficient_range(const HomogeneousPolynomial& f, unsigned r, const RangeInput& range,
                                                const CertificateOptions& options = {}) {
    auto c = detail::start_certificate(BoundTheorem::general_coefficient_range, f, r, range, options);
    auto [low, high] = coefficient_range_bounds(f);
    c.bound_value = relative_bound_factor(BoundTheorem::general_coefficient_range, f.degree(), r) * (high - low);
    detail::finish_certificate(c);
    return c;
}

inline BoundCertificate bound_for(BoundTheorem theorem, const HomogeneousPolynomial& f, unsigned r,
                                  const RangeInput& range, const CertificateOptions& options = {}) {
    switch (theorem) {
    case BoundTheorem::quadratic: return bound_quadratic(f, r, range, options);
    case BoundTheorem::cubic: return bound_cubic(f, r, range, options);
    case BoundTheorem::squarefree: return bound_squarefree(f, r, range, options);
    case BoundTheorem::general: return bound_general(f, r, range, options);
    case BoundTheorem::general_coefficient_range: return bound_coefficient_range(f, r, range, options);
    }
    throw PreconditionError("unknown theorem");
}

/// Re-checks the arithmetic of a certificate without recomputing any grid.
inline bool certificate_consistent(const BoundCertificate& c) {
    if (c.gap != c.grid_value - c.reference) return false;
    if (c.range.upper < c.range.lower) return false;
    if (c.reference_source == ReferenceSource::range_lower && c.reference != c.range.lower) return false;
    bool expect = c.gap <= c.bound_value && (!c.coefficient_range_bound || c.gap <= *c.coefficient_range_bound);
    return expect == c.satisfied;
}

/// Smallest r whose relative bound factor is at most epsilon.
inline unsigned min_grid_order(unsigned d, const Rational& epsilon, BoundTheorem theorem) {
    if (epsilon.sign() <= 0) throw PreconditionError("epsilon must be positive");
    if (theorem == BoundTheorem::quadratic) {
        Integer r = ceil(Rational(1) / epsilon);
        return static_cast<unsigned>(std::max<unsigned long>(1, r.get_ui()));
    }
    // Every factor is non-increasing in r from its smallest admissible order.
    const unsigned lo_order = theorem == BoundTheorem::cubic ? 2 : 1;
    auto ok = [&](unsigned r) { return relative_bound_factor(theorem, d, r) <= epsilon; };
    unsigned hi = lo_order;
    while (!ok(hi)) {
        if (hi > (1u << 30)) throw PreconditionError("epsilon " + epsilon.str() + " needs an unreasonably large grid");
        hi *= 2;
    }
    unsigned lo = std::max(lo_order, hi / 2);
    if (ok(lo)) return lo;
    while (hi - lo > 1) {
        unsigned mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

struct PtasResult {
    BoundTheorem theorem = BoundTheorem::general;
    unsigned r = 1;
    GridPoint point;
    Rational value;
    BoundCertificate certificate;
};

struct PtasOptions {
    std::optional<BoundTheorem> theorem;
    CertificateOptions certificate;
};

/// Grid point whose value is within epsilon (max f - min f) of min f.
inline PtasResult ptas_approximate(const HomogeneousPolynomial& f, const Rational& epsilon, const RangeInput& range,
                                   const PtasOptions& options = {}) {
    if (epsilon.sign() <= 0 || epsilon > Rational(1)) throw PreconditionError("epsilon must lie in (0, 1]");
    const BoundTheorem theorem = options.theorem.value_or(select_theorem(f));
    if (!theorem_applies(theorem, f))
        throw PreconditionError(std::string("theorem '") + std::string(theorem_name(theorem)) +
                                "' does not apply to this polynomial");
    const unsigned r = min_grid_order(f.degree(), epsilon, theorem);
    auto cert = bound_for(theorem, f, r, range, options.certificate);
    PtasResult out;
    out.theorem = theorem;
    out.r = r;
    out.point = cert.grid_argmin;
    out.value = cert.grid_value;
    out.certificate = std::move(cert);
    return out;
}

struct StableSetBound {
    Integer alpha_lower;
    Rational f_grid;
    BoundCertificate certificate;
};

/// floor(1 / min_{Delta(n,r)} x^T (I+A) x), a lower bound on the stability number.
inline StableSetBound stable_set_bounds(const AdjacencyMatrix& adjacency, unsigned r,
                                        const CertificateOptions& options = {}) {
    auto f = motzkin_straus(adjacency);
    auto cert = bound_quadratic(f, r, RangeInput::from_coefficients(f), options);
    StableSetBound out;
    out.f_grid = cert.grid_value;
    out.alpha_lower = floor(Rational(1) / out.f_grid);
    out.certificate = std::move(cert);
    return out;
}

struct ExcessEstimate {
    Rational value;
    GridPoint point;
};

/// Largest B_r(f)(x) - f(x) over x in Delta(n,R): a lower estimate of the
/// maximum over the whole simplex.
inline ExcessEstimate max_bernstein_excess(const HomogeneousPolynomial& f, unsigned r, unsigned R) {
    if (R == 0) throw PreconditionError("verification order must be at least 1");
    GeneralPolynomial excess = *bernstein_closed_form(f, r).reduced - f.to_general();
    std::optional<ExcessEstimate> best;
    for (const MultiIndex& alpha : enumerate_grid(f.dimension(), R)) {
        GridPoint p{alpha, R};
        Rational v = evaluate(excess, p.coordinates());
        if (!best || v > best->value) best = ExcessEstimate{v, p};
    }
    return *best;
}

} // namespace ptas

#endif // PTAS_CERTIFICATE_HPP
