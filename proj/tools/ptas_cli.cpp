// ptas: grid minima, Bernstein approximations and error-bound certificates
// for homogeneous polynomials on the standard simplex.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ptas/json_io.hpp"
#include "ptas/ptas.hpp"

using nlohmann::json;
using namespace ptas;

namespace {

enum ExitCode : int { ok = 0, input_error = 2, precondition_error = 3, invariant_error = 4 };

struct Global {
    bool json = false;
    std::optional<unsigned> threads;
    std::uint64_t seed = 12345;

    unsigned thread_count() const {
        if (threads) return std::max(1u, *threads);
        if (const char* env = std::getenv("SIMPLEX_THREADS")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

struct PolyInput {
    std::string text;
    std::string file;
    std::size_t n = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("poly,--poly", text,
                        "polynomial, e.g. \"2*x1^2 + x2^2 - 5*x1*x2\" (use --poly=-x1*x2 for a leading minus)");
        cmd->add_option("--poly-file", file, "read the polynomial from a file")->check(CLI::ExistingFile);
        cmd->add_option("--n", n, "number of variables")->required()->check(CLI::PositiveNumber);
    }

    HomogeneousPolynomial load() const {
        std::string src = text;
        if (!file.empty()) {
            if (!text.empty()) throw ParseError("give the polynomial inline or with --poly-file, not both");
            std::ifstream in(file);
            if (!in) throw ParseError("cannot read " + file);
            std::ostringstream ss;
            ss << in.rdbuf();
            src = ss.str();
        }
        if (src.empty()) throw ParseError("no polynomial given");
        return parse_polynomial(src, n);
    }
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string exact(const Rational& q) { return q.str() + "  (" + q.approx_str() + ")"; }

std::string point_str(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
    return s + ")";
}

std::string point_str(const GridPoint& p) { return p.alpha.str() + "/" + std::to_string(p.r); }

void row(const std::string& key, const std::string& value) {
    std::printf("%-18s %s\n", key.c_str(), value.c_str());
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void wall(const Clock& clock) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", clock.seconds());
    row("wall time", buf);
}

std::vector<unsigned> parse_index_list(const std::string& text) {
    std::vector<unsigned> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad exponent '" + item + "'");
        }
        if (used != item.size() || item.find('-') != std::string::npos) throw ParseError("bad exponent '" + item + "'");
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw ParseError("empty exponent list");
    return out;
}

RangeInput parse_range(const std::string& spec, const HomogeneousPolynomial& f, unsigned grid_order,
                       const GridOptions& grid) {
    if (spec == "auto" || spec == "coeff") return RangeInput::from_coefficients(f);
    if (spec == "grid") return RangeInput::grid_surrogate(f, grid_order, grid);
    auto values = parse_rational_list(spec);
    if (values.size() != 2) throw ParseError("range must be 'auto', 'grid' or 'L,U'");
    return RangeInput::exact(values[0], values[1]);
}

void print_certificate(const BoundCertificate& c) {
    row("theorem", std::string(theorem_name(c.theorem)));
    row("n, d, r", std::to_string(c.n) + ", " + std::to_string(c.d) + ", " + std::to_string(c.r));
    row("grid value", exact(c.grid_value));
    row("grid argmin", point_str(c.grid_argmin));
    row("range", "[" + c.range.lower.str() + ", " + c.range.upper.str() + "]  " +
                     std::string(provenance_name(c.range.provenance)));
    row("reference", exact(c.reference) + "  " + std::string(reference_source_name(c.reference_source)));
    if (c.reference_point) row("reference point", point_str(*c.reference_point));
    if (c.bernstein_excess) row("B_r(f) - f there", exact(*c.bernstein_excess));
    row("gap", exact(c.gap));
    row("bound", exact(c.bound_value));
    if (c.coefficient_range_bound) row("coeff-range bound", exact(*c.coefficient_range_bound));
    if (c.ratio) row("ratio", exact(*c.ratio));
    row("satisfied", c.satisfied ? "yes" : "NO");
}

// grid-min

struct GridMinArgs {
    PolyInput poly;
    unsigned r = 0;
    bool max = false;
};

int run_grid_min(const Global& g, const GridMinArgs& a) {
    Clock clock;
    auto f = a.poly.load();
    GridOptions opts{g.thread_count()};
    auto res = a.max ? grid_maximize(f, a.r, opts) : grid_minimize(f, a.r, opts);
    if (g.json) {
        emit({{"command", "grid-min"},
              {"objective", a.max ? "max" : "min"},
              {"n", f.dimension()},
              {"d", f.degree()},
              {"r", a.r},
              {"value", to_json(res.value)},
              {"argmin", to_json(res.argmin)},
              {"evaluations", res.evaluations}});
        return ok;
    }
    row("polynomial", to_string(f));
    row(a.max ? "grid maximum" : "grid minimum", exact(res.value));
    row(a.max ? "argmax" : "argmin", res.argmin.alpha.str() + "/" + std::to_string(a.r) + " = " +
                                          point_str(res.argmin.coordinates()));
    row("evaluations", std::to_string(res.evaluations));
    wall(clock);
    return ok;
}

// bernstein

struct BernsteinArgs {
    PolyInput poly;
    unsigned r = 0;
    std::string route = "auto";
    std::string eval;
    std::uint64_t mc_samples = 0;
};

int run_bernstein(const Global& g, const BernsteinArgs& a) {
    Clock clock;
    auto f = a.poly.load();
    BernsteinResult result;
    unsigned verified = 0;
    if (a.route == "def") {
        result = bernstein_definitional(f, a.r);
    } else if (a.route == "closed") {
        result = bernstein_closed_form(f, a.r);
    } else if (a.route == "quad") {
        result = bernstein_quadratic(f, a.r);
    } else if (a.route == "cubic") {
        result = bernstein_cubic(f, a.r);
    } else if (a.route == "sqfree") {
        result = bernstein_squarefree(f, a.r);
    } else {
        auto def = bernstein_definitional(f, a.r);
        result = bernstein_closed_form(f, a.r);
        std::mt19937_64 rng(g.seed);
        for (int i = 0; i < 10; ++i) {
            auto x = random_simplex_point(f.dimension(), rng);
            Rational lhs = def.evaluate(x), rhs = result.evaluate(x);
            if (lhs != rhs)
                throw InvariantError("routes disagree at " + point_str(x) + ": definitional " + lhs.str() +
                                     ", closed form " + rhs.str());
            ++verified;
        }
    }

    std::optional<std::vector<Rational>> x;
    std::optional<Rational> value;
    if (!a.eval.empty()) {
        x = parse_rational_list(a.eval);
        detail::require_simplex_point(f.dimension(), *x);
        value = result.evaluate(*x);
    }
    std::optional<MonteCarloEstimate> mc;
    if (a.mc_samples > 0) {
        if (!x) throw PreconditionError("--mc-samples needs --eval");
        std::vector<double> xd;
        for (const auto& xi : *x) xd.push_back(xi.to_double());
        double s = 0;
        for (double v : xd) s += v;
        for (double& v : xd) v /= s;
        MonteCarloOptions mo;
        mo.threads = g.thread_count();
        mc = monte_carlo_bernstein(f, a.r, xd, a.mc_samples, g.seed, mo);
    }

    const std::string form = result.reduced ? to_string(*result.reduced) : to_string(*result.homogeneous);
    if (g.json) {
        json j = {{"command", "bernstein"},
                  {"route", std::string(route_name(result.source))},
                  {"n", f.dimension()},
                  {"d", f.degree()},
                  {"r", a.r},
                  {"representation", result.reduced ? "reduced" : "homogeneous"},
                  {"form", form}};
        if (a.route == "auto") j["verified_points"] = verified;
        if (x) {
            json pt = json::array();
            for (const auto& xi : *x) pt.push_back(to_json(xi));
            j["point"] = pt;
            j["value"] = to_json(*value);
        }
        if (mc)
            j["monte_carlo"] = {{"estimate", mc->estimate},
                                {"std_error", mc->samples < 2 ? json(nullptr) : json(mc->std_error)},
                                {"samples", mc->samples},
                                {"seed", g.seed}};
        emit(j);
        return ok;
    }
    row("polynomial", to_string(f));
    row("route", std::string(route_name(result.source)));
    row(result.reduced ? "B_r(f) on simplex" : "B_r(f)", form);
    if (a.route == "auto") row("routes agree", "at " + std::to_string(verified) + " random points");
    if (x) row("B_r(f)" + point_str(*x), exact(*value));
    if (mc) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.6g +- %.3g  (%llu samples, seed %llu)", mc->estimate, mc->std_error,
                      static_cast<unsigned long long>(mc->samples), static_cast<unsigned long long>(g.seed));
        row("Monte Carlo", buf);
    }
    wall(clock);
    return ok;
}

// bound

struct BoundArgs {
    PolyInput poly;
    unsigned r = 0;
    std::string theorem = "auto";
    std::string range = "auto";
    unsigned verify_order = 64;
};

int run_bound(const Global& g, const BoundArgs& a) {
    Clock clock;
    auto f = a.poly.load();
    CertificateOptions opts;
    opts.verify_order = a.verify_order;
    opts.grid.threads = g.thread_count();
    const BoundTheorem theorem = a.theorem == "auto" ? select_theorem(f) : parse_theorem(a.theorem);
    if (!theorem_applies(theorem, f))
        throw PreconditionError("theorem '" + std::string(theorem_name(theorem)) + "' does not apply to a degree-" +
                                std::to_string(f.degree()) + (theorem == BoundTheorem::squarefree
                                                                  ? " polynomial that is not square-free"
                                                                  : " polynomial"));
    auto range = parse_range(a.range, f, a.verify_order, opts.grid);
    auto cert = bound_for(theorem, f, a.r, range, opts);
    if (g.json) {
        emit(to_json(cert));
        return ok;
    }
    row("polynomial", to_string(f));
    print_certificate(cert);
    wall(clock);
    return ok;
}

// ptas

struct PtasArgs {
    PolyInput poly;
    std::string epsilon;
    std::string range = "auto";
    std::string theorem = "auto";
    unsigned verify_order = 64;
};

int run_ptas(const Global& g, const PtasArgs& a) {
    Clock clock;
    auto f = a.poly.load();
    const Rational eps = Rational::parse(a.epsilon);
    PtasOptions opts;
    if (a.theorem != "auto") opts.theorem = parse_theorem(a.theorem);
    opts.certificate.verify_order = a.verify_order;
    opts.certificate.grid.threads = g.thread_count();
    auto range = parse_range(a.range, f, a.verify_order, opts.certificate.grid);
    auto res = ptas_approximate(f, eps, range, opts);
    if (g.json) {
        emit({{"command", "ptas"},
              {"epsilon", to_json(eps)},
              {"theorem", std::string(theorem_name(res.theorem))},
              {"r", res.r},
              {"point", to_json(res.point)},
              {"value", to_json(res.value)},
              {"certificate", to_json(res.certificate)}});
        return ok;
    }
    row("polynomial", to_string(f));
    row("epsilon", exact(eps));
    row("theorem", std::string(theorem_name(res.theorem)));
    row("grid order r", std::to_string(res.r));
    row("point", point_str(res.point) + " = " + point_str(res.point.coordinates()));
    row("value", exact(res.value));
    std::printf("certificate\n");
    print_certificate(res.certificate);
    wall(clock);
    return ok;
}

// moments

struct MomentArgs {
    std::size_t n = 0;
    unsigned r = 0;
    std::string beta;
    std::string x;
};

int run_moments(const Global& g, const MomentArgs& a) {
    Clock clock;
    MultiIndex beta(parse_index_list(a.beta));
    auto x = parse_rational_list(a.x);
    if (beta.size() != a.n) throw PreconditionError("beta needs " + std::to_string(a.n) + " entries");
    Rational direct = moment_direct(a.n, a.r, beta, x);
    Rational stirling = moment_stirling(a.n, a.r, beta, x);
    if (direct != stirling)
        throw InvariantError("moment routes disagree: direct " + direct.str() + ", Stirling " + stirling.str());
    if (g.json) {
        emit({{"command", "moments"},
              {"n", a.n},
              {"r", a.r},
              {"beta", beta.exponents()},
              {"direct", to_json(direct)},
              {"stirling", to_json(stirling)},
              {"agree", true}});
        return ok;
    }
    row("beta", beta.str());
    row("x", point_str(x));
    row("direct", exact(direct));
    row("Stirling", exact(stirling));
    row("agree", "yes");
    wall(clock);
    return ok;
}

// stable-set

struct StableArgs {
    std::string file;
    unsigned r = 0;
    bool brute = false;
};

int run_stable_set(const Global& g, const StableArgs& a) {
    Clock clock;
    std::ifstream in(a.file);
    if (!in) throw ParseError("cannot read " + a.file);
    auto adj = read_edge_list(in);
    CertificateOptions opts;
    opts.grid.threads = g.thread_count();
    opts.verify_order = std::max(a.r, 8u);
    auto res = stable_set_bounds(adj, a.r, opts);
    std::optional<unsigned> alpha;
    if (a.brute) alpha = stability_number(adj);
    if (g.json) {
        json j = {{"command", "stable-set"},
                  {"vertices", adj.size()},
                  {"r", a.r},
                  {"f_grid", to_json(res.f_grid)},
                  {"alpha_lower", res.alpha_lower.get_ui()},
                  {"certificate", to_json(res.certificate)}};
        if (alpha) j["alpha"] = *alpha;
        emit(j);
        return ok;
    }
    row("vertices", std::to_string(adj.size()));
    row("f_grid", exact(res.f_grid) + " at " + point_str(res.certificate.grid_argmin));
    row("alpha lower bound", res.alpha_lower.get_str());
    if (alpha) row("alpha (brute force)", std::to_string(*alpha));
    wall(clock);
    return ok;
}

// selftest

int run_selftest(const Global& g, bool deep) {
    Clock clock;
    auto items = ptas::run_selftest(deep ? SelftestRanges::deep() : SelftestRanges{}, g.seed);
    bool all = true;
    for (const auto& it : items) all = all && it.passed;
    if (g.json) {
        json list = json::array();
        for (const auto& it : items) {
            json e = {{"name", it.name}, {"passed", it.passed}, {"cases", it.cases}};
            if (!it.passed) e["failure"] = it.failure;
            list.push_back(e);
        }
        emit({{"command", "selftest"}, {"deep", deep}, {"passed", all}, {"suites", list}});
    } else {
        for (const auto& it : items) {
            std::printf("%-4s %-48s %8llu cases\n", it.passed ? "ok" : "FAIL", it.name.c_str(),
                        static_cast<unsigned long long>(it.cases));
            if (!it.passed) std::printf("     %s\n", it.failure.c_str());
        }
        wall(clock);
    }
    return all ? ok : invariant_error;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid minimization, Bernstein approximation and error-bound certificates on the simplex"};
    app.name("ptas");
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--threads", g.threads, "worker threads (default: $SIMPLEX_THREADS or all cores)");
    app.add_option("--seed", g.seed, "seed for random verification points and Monte Carlo");

    GridMinArgs grid_args;
    auto* grid_cmd = app.add_subcommand("grid-min", "minimum of f over the grid Delta(n,r)");
    grid_args.poly.attach(grid_cmd);
    grid_cmd->add_option("--r", grid_args.r, "grid order")->required();
    grid_cmd->add_flag("--max", grid_args.max, "maximize instead");

    BernsteinArgs bern_args;
    auto* bern_cmd = app.add_subcommand("bernstein", "Bernstein approximation B_r(f)");
    bern_args.poly.attach(bern_cmd);
    bern_cmd->add_option("--r", bern_args.r, "order")->required();
    bern_cmd->add_option("--route", bern_args.route, "def, closed, quad, cubic, sqfree or auto")
        ->check(CLI::IsMember({"def", "closed", "quad", "cubic", "sqfree", "auto"}));
    bern_cmd->add_option("--eval", bern_args.eval, "evaluate at a simplex point, e.g. 1/2,1/2");
    bern_cmd->add_option("--mc-samples", bern_args.mc_samples, "Monte Carlo random-walk estimate at --eval");

    BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand("bound", "error-bound certificate for f_Delta(n,r)");
    bound_args.poly.attach(bound_cmd);
    bound_cmd->add_option("--r", bound_args.r, "grid order")->required();
    bound_cmd->add_option("--theorem", bound_args.theorem, "auto, quad, cubic, sqfree, general or coeff");
    bound_cmd->add_option("--range", bound_args.range, "auto (coefficient range), grid, or exact L,U");
    bound_cmd->add_option("--verify-order", bound_args.verify_order, "order of the verification grid")
        ->check(CLI::PositiveNumber);

    PtasArgs ptas_args;
    auto* ptas_cmd = app.add_subcommand("ptas", "grid point within epsilon of the minimum");
    ptas_args.poly.attach(ptas_cmd);
    ptas_cmd->add_option("--epsilon", ptas_args.epsilon, "relative accuracy p/q in (0,1]")->required();
    ptas_cmd->add_option("--range", ptas_args.range, "auto (coefficient range), grid, or exact L,U");
    ptas_cmd->add_option("--theorem", ptas_args.theorem, "auto, quad, cubic, sqfree, general or coeff");
    ptas_cmd->add_option("--verify-order", ptas_args.verify_order, "order of the verification grid")
        ->check(CLI::PositiveNumber);

    MomentArgs mom_args;
    auto* mom_cmd = app.add_subcommand("moments", "multinomial moment m^beta_(n,r), two ways");
    mom_cmd->add_option("--n", mom_args.n, "number of categories")->required()->check(CLI::PositiveNumber);
    mom_cmd->add_option("--r", mom_args.r, "trials")->required();
    mom_cmd->add_option("--beta", mom_args.beta, "exponents, e.g. 2,0")->required();
    mom_cmd->add_option("--x", mom_args.x, "cell probabilities, e.g. 1/3,2/3")->required();

    StableArgs stable_args;
    auto* stable_cmd = app.add_subcommand("stable-set", "Motzkin-Straus lower bound on the stability number");
    stable_cmd->add_option("graph", stable_args.file, "edge list ('p n m' then 'e i j')")->required();
    stable_cmd->add_option("--r", stable_args.r, "grid order")->required();
    stable_cmd->add_flag("--brute", stable_args.brute, "also compute the stability number exactly (n <= 20)");

    bool deep = false;
    auto* self_cmd = app.add_subcommand("selftest", "identity sweeps and route equivalences");
    self_cmd->add_flag("--deep", deep, "wider ranges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (*grid_cmd) return run_grid_min(g, grid_args);
        if (*bern_cmd) return run_bernstein(g, bern_args);
        if (*bound_cmd) return run_bound(g, bound_args);
        if (*ptas_cmd) return run_ptas(g, ptas_args);
        if (*mom_cmd) return run_moments(g, mom_args);
        if (*stable_cmd) return run_stable_set(g, stable_args);
        if (*self_cmd) return run_selftest(g, deep);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return precondition_error;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return invariant_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return invariant_error;
    }
    return input_error;
}
