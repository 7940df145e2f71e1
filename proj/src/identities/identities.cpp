#include "hooklen/identities.hpp"

#include <array>
#include <chrono>

#include "hooklen/enumerate.hpp"
#include "hooklen/error.hpp"
#include "hooklen/solvers.hpp"

namespace hooklen {

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array kFamilyNames{
    FamilyName{Family::postnikov, "postnikov"},
    FamilyName{Family::lascoux_1_1, "lascoux_1_1"},
    FamilyName{Family::duliu_1_2a, "duliu_1_2a"},
    FamilyName{Family::duliu_1_2b, "duliu_1_2b"},
    FamilyName{Family::forest_1_3a, "forest_1_3a"},
    FamilyName{Family::forest_1_3b, "forest_1_3b"},
    FamilyName{Family::thm1_1_eq1_6, "thm1_1_eq1_6"},
    FamilyName{Family::thm1_1_eq1_7, "thm1_1_eq1_7"},
    FamilyName{Family::thm1_2_eq5_1a, "thm1_2_eq5_1a"},
    FamilyName{Family::thm1_2_eq5_1b, "thm1_2_eq5_1b"},
    FamilyName{Family::cor1_first, "cor1_first"},
    FamilyName{Family::cor1_second, "cor1_second"},
    FamilyName{Family::cor2_first, "cor2_first"},
    FamilyName{Family::cor2_second, "cor2_second"},
    FamilyName{Family::cor2_third, "cor2_third"},
    FamilyName{Family::recurrence_thm1_1, "recurrence_thm1_1"},
    FamilyName{Family::gf_relations, "gf_relations"},
};

BigRational frac(long p, long q) {
    return {BigInt(p), BigInt(q)};
}

/// c0 + c1 x with both coefficients given as p/q over a shared denominator.
std::pair<BigRational, BigRational> factor_over(long c0, long c1, long den) {
    return {frac(c0, den), frac(c1, den)};
}

std::pair<BigRational, BigRational> plus_reciprocal(int h) {
    return {frac(1, h), BigRational(1)};
}

HookFunction standard() {
    return [](const MAryTree& t) { return standard_hooks(t); };
}

HookFunction first_kind() {
    return [](const MAryTree& t) { return first_kind_hooks(t); };
}

HookFunction second_kind(PositionSet s) {
    return [s](const MAryTree& t) { return second_kind_hooks(t, s); };
}

HookFunction forest_via_psi() {
    return [](const MAryTree& t) { return forest_hooks(psi_inverse(t)); };
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ParameterError(message);
    }
}

/// Validates an IdentitySpec and fills in the family's fixed conventions.
IdentitySpec normalize(IdentitySpec spec) {
    const std::string name(to_string(spec.family));
    require(spec.n >= 0, name + ": n must be >= 0");
    switch (spec.family) {
    case Family::postnikov:
    case Family::lascoux_1_1:
        require(spec.n >= 1, name + ": n must be >= 1");
        spec.m = 2;
        spec.subset.reset();
        break;
    case Family::forest_1_3a:
    case Family::forest_1_3b:
        spec.m = 2;
        spec.subset.reset();
        break;
    case Family::duliu_1_2a:
    case Family::duliu_1_2b:
        require(spec.m >= 1, name + ": m must be >= 1 (trees of arity m+1)");
        spec.subset.reset();
        break;
    case Family::thm1_1_eq1_6:
    case Family::thm1_1_eq1_7:
    case Family::cor1_first:
    case Family::cor1_second:
        require(spec.m >= 2, name + ": m must be >= 2");
        spec.subset.reset();
        break;
    case Family::recurrence_thm1_1:
        require(spec.m >= 2, name + ": m must be >= 2");
        require(spec.n >= 1, name + ": n must be >= 1");
        spec.subset.reset();
        break;
    case Family::thm1_2_eq5_1a:
    case Family::thm1_2_eq5_1b:
    case Family::cor2_first:
    case Family::cor2_second:
        require(spec.m >= 1, name + ": m must be >= 1 (trees of arity m+1)");
        if (!spec.subset) {
            spec.subset = PositionSet{};
        }
        require(spec.subset->max() <= spec.m,
                name + ": S = " + spec.subset->to_string() + " is not a subset of [" + std::to_string(spec.m) + "]");
        break;
    case Family::cor2_third:
        require(spec.m >= 1, name + ": m must be >= 1 (trees of arity m+1)");
        if (!spec.subset) {
            spec.subset = PositionSet::first(spec.m);
        }
        require(*spec.subset == PositionSet::first(spec.m), name + ": S must be [m]");
        break;
    case Family::gf_relations:
        require(spec.m >= 1, name + ": m must be >= 1");
        require(spec.n >= 1, name + ": the series order must be >= 1");
        {
            const int s = spec.subset ? spec.subset->size() : 0;
            require(s <= spec.m, name + ": |S| must be <= m");
            spec.subset = PositionSet::first(s);
        }
        break;
    }
    return spec;
}

struct Sides {
    Poly lhs;
    Poly rhs;
    std::uint64_t trees = 0;
    std::string problem;
};

/// Rational closed forms checked against the general RHS evaluated at the special point.
void cross_check(Sides& sides, const BigRational& displayed, const BigRational& via_general) {
    sides.rhs = Poly(displayed);
    if (displayed != via_general) {
        sides.problem = "displayed closed form " + displayed.to_string() +
                        " differs from the general RHS at the special point (" + via_general.to_string() + ")";
    }
}

BigRational fuss_power_term(int base, int m, int n) {
    // base^n (mn+1)^(n-1) / n!
    const long mn1 = static_cast<long>(m) * n + 1;
    return BigRational(base).pow(n) * BigRational(mn1).pow(n - 1) /
           BigRational(factorial(static_cast<unsigned long>(n)));
}

Sides evaluate(const IdentitySpec& spec, const RunOptions& opt) {
    const int m = spec.m;
    const int n = spec.n;
    Sides out;
    auto take = [&](TreeSum sum) {
        out.lhs = std::move(sum.total);
        out.trees = sum.trees;
    };

    switch (spec.family) {
    case Family::postnikov: {
        take(sum_hook_products(2, n, standard(), [](int h) {
            return std::pair{frac(h + 1, h), BigRational(0)};
        }, opt));
        out.lhs *= BigRational(factorial(static_cast<unsigned long>(n))) / BigRational(2).pow(n);
        out.rhs = Poly(BigRational(n + 1).pow(n - 1));
        break;
    }
    case Family::lascoux_1_1: {
        // ((h+1)x - h + 1) / (2h)
        take(sum_hook_products(2, n, standard(), [](int h) { return factor_over(1 - h, h + 1, 2L * h); }, opt));
        out.rhs = rhs_binomial_poly(1, n);
        // Product form of the same sum, same trees.
        const Poly plain = sum_hook_products(2, n, standard(), plus_reciprocal, opt).total;
        Poly product(1);
        for (long i = 0; i < n; ++i) {
            product.multiply_linear(BigRational(n + 1 - i), BigRational(n + 1 + i));
        }
        product *= BigRational(BigInt(1), factorial(static_cast<unsigned long>(n) + 1));
        if (plain != product) {
            out.problem = "product form: sum of prod(x + 1/h) = " + plain.to_string() +
                          " but the product closed form is " + product.to_string();
        }
        break;
    }
    case Family::duliu_1_2a:
        // ((m h + 1)x - h + 1) / ((m+1) h)
        take(sum_hook_products(m + 1, n, standard(), [m](int h) {
            return factor_over(1 - h, static_cast<long>(m) * h + 1, static_cast<long>(m + 1) * h);
        }, opt));
        out.rhs = rhs_binomial_poly(m, n);
        break;
    case Family::duliu_1_2b:
        take(sum_hook_products(m + 1, n, standard(), plus_reciprocal, opt));
        out.rhs = rhs_product_poly(ProductFamily::thm1_2_eq51a, m, 0, n);
        break;
    case Family::forest_1_3a:
        out.lhs = lhs_forests(n, ForestForm::eq1_3a, opt);
        out.trees = count_trees(2, n).get_ui();
        out.rhs = rhs_product_poly(ProductFamily::thm1_1_eq16, 2, 0, n);
        break;
    case Family::forest_1_3b:
        out.lhs = lhs_forests(n, ForestForm::eq1_3b, opt);
        out.trees = count_trees(2, n).get_ui();
        out.rhs = rhs_binomial_poly(2, n);
        break;
    case Family::thm1_1_eq1_6:
        out.lhs = lhs_thm1_1(m, n, Thm11Form::eq1_6, opt);
        out.trees = count_trees(m, n).get_ui();
        out.rhs = rhs_product_poly(ProductFamily::thm1_1_eq16, m, 0, n);
        break;
    case Family::thm1_1_eq1_7:
        out.lhs = lhs_thm1_1(m, n, Thm11Form::eq1_7, opt);
        out.trees = count_trees(m, n).get_ui();
        out.rhs = rhs_binomial_poly(m, n);
        break;
    case Family::thm1_2_eq5_1a:
        out.lhs = lhs_thm1_2(m, *spec.subset, n, Thm12Form::eq5_1a, opt);
        out.trees = count_trees(m + 1, n).get_ui();
        out.rhs = rhs_product_poly(ProductFamily::thm1_2_eq51a, m, spec.subset->size(), n);
        break;
    case Family::thm1_2_eq5_1b:
        out.lhs = lhs_thm1_2(m, *spec.subset, n, Thm12Form::eq5_1b, opt);
        out.trees = count_trees(m + 1, n).get_ui();
        out.rhs = rhs_binomial_poly(m, n);
        break;
    case Family::cor1_first: {
        // x = 0 in eq1_6: sum prod 1/H = m^n/(mn+1) binom((mn+1)/m, n)
        take(sum_hook_products(m, n, first_kind(), [](int h) { return std::pair{frac(1, h), BigRational(0)}; }, opt));
        const BigRational displayed = BigRational(m).pow(n) * rhs_binomial_poly(m, n).eval(frac(1, m));
        cross_check(out, displayed, rhs_product_poly(ProductFamily::thm1_1_eq16, m, 0, n).eval(0));
        break;
    }
    case Family::cor1_second: {
        // x = -m in eq1_6, sign flipped: sum prod (m - 1/H) = (m-1)^n (mn+1)^(n-1) / n!
        take(sum_hook_products(m, n, first_kind(), [m](int h) { return std::pair{frac(static_cast<long>(m) * h - 1, h), BigRational(0)}; }, opt));
        const BigRational general = rhs_product_poly(ProductFamily::thm1_1_eq16, m, 0, n).eval(-m) *
                                    BigRational(n % 2 == 0 ? 1 : -1);
        cross_check(out, fuss_power_term(m - 1, m, n), general);
        break;
    }
    case Family::cor2_first: {
        // x = m-s-1 in eq5_1a: = 1/(mn+1) binom((mn+1)(m-s), n)
        const int s = spec.subset->size();
        take(sum_hook_products(m + 1, n, second_kind(*spec.subset), [m, s](int h) {
            return std::pair{frac(static_cast<long>(m - s - 1) * h + 1, h), BigRational(0)};
        }, opt));
        const BigRational displayed = rhs_binomial_poly(m, n).eval(m - s);
        cross_check(out, displayed, rhs_product_poly(ProductFamily::thm1_2_eq51a, m, s, n).eval(m - s - 1));
        break;
    }
    case Family::cor2_second: {
        // x = m-s in eq5_1a: = (m-s+1)^n (mn+1)^(n-1) / n!
        const int s = spec.subset->size();
        take(sum_hook_products(m + 1, n, second_kind(*spec.subset), [m, s](int h) {
            return std::pair{frac(static_cast<long>(m - s) * h + 1, h), BigRational(0)};
        }, opt));
        cross_check(out, fuss_power_term(m - s + 1, m, n),
                    rhs_product_poly(ProductFamily::thm1_2_eq51a, m, s, n).eval(m - s));
        break;
    }
    case Family::cor2_third:
        // s = m in eq5_1b: factor (x - H + 1) / H
        take(sum_hook_products(m + 1, n, second_kind(*spec.subset), [](int h) { return factor_over(1 - h, 1, h); }, opt));
        out.rhs = rhs_binomial_poly(m, n);
        break;
    case Family::recurrence_thm1_1:
    case Family::gf_relations:
        break; // dispatched separately
    }
    return out;
}

VerificationReport finish(const IdentitySpec& spec, Sides sides, std::chrono::steady_clock::time_point start) {
    VerificationReport r;
    r.spec = spec;
    r.trees_visited = sides.trees;
    r.pass = sides.lhs == sides.rhs && sides.problem.empty();
    if (sides.lhs != sides.rhs) {
        r.detail = "lhs " + sides.lhs.to_string() + " != rhs " + sides.rhs.to_string();
    }
    if (!sides.problem.empty()) {
        r.detail += (r.detail.empty() ? "" : "; ") + sides.problem;
    }
    r.lhs = std::move(sides.lhs);
    r.rhs = std::move(sides.rhs);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

} // namespace

std::string_view to_string(Family family) {
    for (const auto& f : kFamilyNames) {
        if (f.family == family) {
            return f.name;
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& f : kFamilyNames) {
        if (f.name == name) {
            return f.family;
        }
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& f : kFamilyNames) {
            out.push_back(f.family);
        }
        return out;
    }();
    return families;
}

bool uses_subset(Family family) {
    switch (family) {
    case Family::thm1_2_eq5_1a:
    case Family::thm1_2_eq5_1b:
    case Family::cor2_first:
    case Family::cor2_second:
    case Family::cor2_third:
    case Family::gf_relations:
        return true;
    default:
        return false;
    }
}

Poly lhs_thm1_1(int m, int n, Thm11Form form, const RunOptions& options) {
    require(m >= 2, "lhs_thm1_1: m must be >= 2");
    if (form == Thm11Form::eq1_6) {
        return sum_hook_products(m, n, first_kind(), plus_reciprocal, options).total;
    }
    // ((m H - 1) x - H + 1) / ((m-1) H)
    return sum_hook_products(m, n, first_kind(), [m](int h) {
        return factor_over(1 - h, static_cast<long>(m) * h - 1, static_cast<long>(m - 1) * h);
    }, options).total;
}

Poly lhs_thm1_2(int m, PositionSet subset, int n, Thm12Form form, const RunOptions& options) {
    require(m >= 1, "lhs_thm1_2: m must be >= 1");
    require(subset.max() <= m, "lhs_thm1_2: S = " + subset.to_string() + " is not a subset of [" + std::to_string(m) + "]");
    if (form == Thm12Form::eq5_1a) {
        return sum_hook_products(m + 1, n, second_kind(subset), plus_reciprocal, options).total;
    }
    // (((m-s) H + 1) x - H + 1) / ((m-s+1) H)
    const int s = subset.size();
    return sum_hook_products(m + 1, n, second_kind(subset), [m, s](int h) {
        return factor_over(1 - h, static_cast<long>(m - s) * h + 1, static_cast<long>(m - s + 1) * h);
    }, options).total;
}

Poly lhs_forests(int n, ForestForm form, const RunOptions& options) {
    if (form == ForestForm::eq1_3a) {
        return sum_hook_products(2, n, forest_via_psi(), plus_reciprocal, options).total;
    }
    // ((2H - 1) x - H + 1) / H
    return sum_hook_products(2, n, forest_via_psi(), [](int h) { return factor_over(1 - h, 2L * h - 1, h); },
                             options).total;
}

VerificationReport check_postnikov_lascoux(int n, PriorForm form, const RunOptions& options) {
    return check_identity({form == PriorForm::postnikov ? Family::postnikov : Family::lascoux_1_1, 2, n, {}},
                          options);
}

VerificationReport check_identity(const IdentitySpec& raw, const RunOptions& options) {
    const IdentitySpec spec = normalize(raw);
    if (spec.family == Family::recurrence_thm1_1) {
        return check_recurrence_thm1_1(spec.m, spec.n, options);
    }
    if (spec.family == Family::gf_relations) {
        return check_gf_relations(spec.m, spec.subset->size(), spec.n, options);
    }
    const auto start = std::chrono::steady_clock::now();
    return finish(spec, evaluate(spec, options), start);
}

VerificationReport check_recurrence_thm1_1(int m, int n, const RunOptions& options) {
    const IdentitySpec spec = normalize({Family::recurrence_thm1_1, m, n, {}});
    const auto start = std::chrono::steady_clock::now();

    // H_k = sum over (i_1..i_m) |- k-1 of ((mx-1)/(m-1) + (1-x)/((m-1)(i_1+..+i_{m-1}+1))) prod H_{i_j}
    std::vector<Poly> memo{Poly(1)};
    for (int k = 1; k <= n; ++k) {
        Poly total;
        for (const auto& comp : root_compositions(m, k)) {
            const long hook = k - comp.back();
            Poly term = Poly::linear(frac(-1, m - 1) + frac(1, static_cast<long>(m - 1) * hook),
                                     frac(m, m - 1) - frac(1, static_cast<long>(m - 1) * hook));
            for (int part : comp) {
                term *= memo[static_cast<std::size_t>(part)];
            }
            total += term;
        }
        memo.push_back(std::move(total));
    }

    Sides sides;
    sides.lhs = lhs_thm1_1(m, n, Thm11Form::eq1_7, options);
    sides.trees = count_trees(m, n).get_ui();
    sides.rhs = memo.back();

    // The same numbers solve H' = x H^(m+1) + (mx - 1) t H^m H'.
    const PolySeries ode = solve_power_ode(Poly::linear(-1, m), static_cast<unsigned>(m), static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k) {
        if (ode[static_cast<std::size_t>(k)] != memo[static_cast<std::size_t>(k)]) {
            sides.problem = "ODE coefficient t^" + std::to_string(k) + " differs from the recurrence";
            break;
        }
    }
    return finish(spec, std::move(sides), start);
}

VerificationReport check_gf_relations(int m, int s, int order, const RunOptions& options) {
    require(s >= 0, "gf_relations: s must be >= 0");
    const IdentitySpec spec = normalize({Family::gf_relations, m, order, PositionSet::first(s)});
    const auto start = std::chrono::steady_clock::now();
    const auto N = static_cast<std::size_t>(order);
    const PositionSet subset = *spec.subset;

    Sides sides;
    // Coefficient n of each series is a hook sum over trees with n internal vertices.
    auto series = [&](int arity, const HookFunction& hooks) {
        PolySeries out(N);
        for (std::size_t k = 0; k <= N; ++k) {
            TreeSum sum = sum_hook_products(arity, static_cast<int>(k), hooks, plus_reciprocal, options);
            out[k] = std::move(sum.total);
            sides.trees += sum.trees;
        }
        return out;
    };
    const PolySeries pruned = series(m + 1, second_kind(subset));
    const PolySeries empty = s == 0 ? pruned : series(m + 1, second_kind(PositionSet{}));
    const PolySeries skeleton = series(m - s + 1, standard());

    const Poly x_plus_1 = Poly::linear(1, 1);
    // F' - (x+1) F^(m+1) - c t F^m F', through t^(N-1)
    auto ode_residual = [&](const PolySeries& f, const Poly& c) {
        const PolySeries df = derivative(f);
        const PolySeries low = f.truncated(N - 1);
        return df - pow(low, static_cast<unsigned>(m + 1)) * x_plus_1 -
               shift(mul(pow(low, static_cast<unsigned>(m)), df)) * c;
    };
    std::vector<std::string> problems;
    if (!ode_residual(empty, Poly::linear(0, m + 1)).is_zero()) {
        problems.emplace_back("empty-set ODE residual is nonzero");
    }
    // ((m-s+1) x + s (x+1)) = s + (m+1) x
    if (!ode_residual(pruned, Poly::linear(s, m + 1)).is_zero()) {
        problems.emplace_back("pruned ODE residual is nonzero");
    }
    const PolySeries composed = series_compose_scaled(skeleton, pruned, static_cast<unsigned>(s));
    if (composed != pruned) {
        problems.emplace_back("skeleton composition differs from the series");
    }
    for (const auto& p : problems) {
        sides.problem += (sides.problem.empty() ? "" : "; ") + p;
    }
    sides.lhs = pruned[N];
    sides.rhs = composed[N];
    return finish(spec, std::move(sides), start);
}

SuiteResult verify_suite(const std::vector<GridEntry>& grid, const RunOptions& options) {
    SuiteResult suite;
    suite.reports.reserve(grid.size());
    for (const auto& entry : grid) {
        VerificationReport r;
        try {
            r = check_identity(entry.spec, options);
        } catch (const std::exception& e) {
            r.spec = entry.spec;
            r.pass = false;
            r.detail = e.what();
        }
        if (entry.corrupt_rhs) {
            r.rhs += Poly(1);
            r.pass = r.pass && r.lhs == r.rhs;
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("rhs corrupted by test hook");
        }
        (r.pass ? suite.passed : suite.failed) += 1;
        suite.reports.push_back(std::move(r));
    }
    return suite;
}

} // namespace hooklen
