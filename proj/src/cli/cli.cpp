#include "hooklen/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hooklen/enumerate.hpp"
#include "hooklen/error.hpp"
#include "hooklen/hooks.hpp"
#include "hooklen/identities.hpp"
#include "hooklen/report.hpp"
#include "hooklen/solvers.hpp"

namespace hooklen::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("text");
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i == 0 ? "" : sep) + items[i];
    }
    return out;
}

struct CountArgs {
    int arity = 2;
    int internal = 0;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
    out << count_trees(a.arity, a.internal).get_str() << '\n';
    return 0;
}

struct EnumerateArgs {
    int arity = 2;
    int internal = 0;
    long long limit = -1;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    TreeEnumerator trees(a.arity, a.internal);
    long long emitted = 0;
    while ((a.limit < 0 || emitted < a.limit) && trees.next()) {
        out << trees.current().code() << '\n';
        ++emitted;
    }
    return 0;
}

struct HooksArgs {
    int arity = 2;
    std::string code;
    std::string subset;
    bool has_subset = false;
    Format format = Format::text;
};

int cmd_hooks(const HooksArgs& a, std::ostream& out) {
    const MAryTree tree = decode(a.code, a.arity);
    std::vector<PositionSet> sets;
    if (a.has_subset) {
        sets.push_back(PositionSet::parse(a.subset));
    }
    const HookProfile p = hook_profile(tree, sets);
    const std::string hbb_name = a.has_subset ? "hbb" + sets[0].to_string() : "";

    switch (a.format) {
    case Format::json: {
        json rows = json::array();
        for (std::size_t i = 0; i < p.positions.size(); ++i) {
            json row{{"index", p.positions[i]}, {"h", p.standard[i]}, {"hcal", p.first_kind[i]}};
            if (a.has_subset) {
                row["hbb"] = p.second_kind[0].second[i];
            }
            rows.push_back(std::move(row));
        }
        json doc{{"arity", a.arity}, {"code", a.code}, {"vertices", std::move(rows)}};
        if (a.has_subset) {
            doc["S"] = sets[0].to_vector();
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "index,h,hcal" << (a.has_subset ? ",hbb" : "") << '\n';
        for (std::size_t i = 0; i < p.positions.size(); ++i) {
            out << p.positions[i] << ',' << p.standard[i] << ',' << p.first_kind[i];
            if (a.has_subset) {
                out << ',' << p.second_kind[0].second[i];
            }
            out << '\n';
        }
        break;
    case Format::text:
        fmt::print(out, "{:>5} {:>5} {:>5}", "index", "h", "hcal");
        if (a.has_subset) {
            fmt::print(out, " {:>8}", hbb_name);
        }
        out << '\n';
        for (std::size_t i = 0; i < p.positions.size(); ++i) {
            fmt::print(out, "{:>5} {:>5} {:>5}", p.positions[i], p.standard[i], p.first_kind[i]);
            if (a.has_subset) {
                fmt::print(out, " {:>8}", p.second_kind[0].second[i]);
            }
            out << '\n';
        }
        break;
    }
    return 0;
}

struct VerifyArgs {
    std::string family;
    int m = 2;
    int n_min = 1;
    int n_max = 1;
    std::string subset;
    bool has_subset = false;
    Format format = Format::text;
    unsigned threads = 1;
    bool no_timing = false;
};

std::vector<std::optional<PositionSet>> subsets_for(Family family, const VerifyArgs& a) {
    if (!uses_subset(family)) {
        if (a.has_subset) {
            throw CLI::ValidationError("--S", std::string(to_string(family)) + " takes no position set");
        }
        return {std::nullopt};
    }
    if (!a.has_subset) {
        return {std::nullopt};
    }
    if (a.subset != "all") {
        return {PositionSet::parse(a.subset)};
    }
    if (family == Family::cor2_third) {
        return {PositionSet::first(a.m)};
    }
    std::vector<std::optional<PositionSet>> out;
    if (family == Family::gf_relations) {
        // Only |S| matters here; one representative per size.
        for (int s = 0; s <= a.m; ++s) {
            out.emplace_back(PositionSet::first(s));
        }
        return out;
    }
    for (PositionSet s : PositionSet::all_subsets(a.m)) {
        out.emplace_back(s);
    }
    return out;
}

std::string subset_label(const IdentitySpec& spec) {
    return spec.subset ? spec.subset->to_string() : "-";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto family = parse_family(a.family);
    if (!family) {
        std::vector<std::string> names;
        for (Family f : all_families()) {
            names.emplace_back(to_string(f));
        }
        throw CLI::ValidationError("--family", "unknown family '" + a.family + "'; expected one of " + join(names, ", "));
    }
    std::vector<GridEntry> grid;
    for (const auto& s : subsets_for(*family, a)) {
        for (int n = a.n_min; n <= a.n_max; ++n) {
            grid.push_back({IdentitySpec{*family, a.m, n, s}});
        }
    }
    const SuiteResult suite = verify_suite(grid, RunOptions{a.threads});
    const ReportFormat format{!a.no_timing};

    switch (a.format) {
    case Format::json:
        out << to_json(suite, format).dump(2) << '\n';
        break;
    case Format::csv:
        out << to_csv(suite, format);
        break;
    case Format::text:
        for (const auto& r : suite.reports) {
            fmt::print(out, "{} {} m={} n={} S={} trees={}", r.pass ? "PASS" : "FAIL", to_string(r.spec.family),
                       r.spec.m, r.spec.n, subset_label(r.spec), r.trees_visited);
            if (format.include_timing) {
                fmt::print(out, " ({:.1f} ms)", std::chrono::duration<double, std::milli>(r.elapsed).count());
            }
            out << '\n';
            if (!r.pass) {
                fmt::print(out, "    lhs: {}\n    rhs: {}\n    {}\n", r.lhs.to_string(), r.rhs.to_string(), r.detail);
            }
        }
        fmt::print(out, "{}/{} passed\n", suite.passed, suite.reports.size());
        break;
    }
    return suite.failed == 0 ? 0 : kExitFailedCheck;
}

struct SeriesArgs {
    std::string solver = "omega";
    int a = 1;
    int b = 1;
    int s = 0;
    int order = 0;
    Format format = Format::text;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
    const bool phi = a.solver == "phi";
    const PolySeries series = phi ? solve_phi(a.a, a.b, a.s, static_cast<std::size_t>(a.order))
                                  : solve_omega(a.a, a.b, static_cast<std::size_t>(a.order));
    bool all_match = true;
    json rows = json::array();
    std::vector<std::array<std::string, 4>> table;
    for (int n = 0; n <= a.order; ++n) {
        const Poly& coeff = series[static_cast<std::size_t>(n)];
        const Poly closed = phi ? closed_phi(a.a, a.b, a.s, n) : closed_omega(a.a, a.b, n);
        const bool match = coeff == closed;
        all_match = all_match && match;
        rows.push_back({{"n", n}, {"coefficients", coeff.coefficient_strings()},
                        {"closed", closed.coefficient_strings()}, {"match", match}});
        table.push_back({std::to_string(n), coeff.to_string(), closed.to_string(), match ? "true" : "false"});
    }
    switch (a.format) {
    case Format::json: {
        json doc{{"solver", a.solver}, {"a", a.a}, {"b", a.b}, {"order", a.order}, {"rows", std::move(rows)},
                 {"all_match", all_match}};
        if (phi) {
            doc["s"] = a.s;
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "n,coefficients,closed,match\n";
        for (const auto& r : rows) {
            out << r["n"].get<int>() << ',' << join(r["coefficients"].get<std::vector<std::string>>(), ";") << ','
                << join(r["closed"].get<std::vector<std::string>>(), ";") << ',' << (r["match"].get<bool>() ? "true" : "false")
                << '\n';
        }
        break;
    case Format::text: {
        std::size_t w1 = std::string("coefficient").size();
        std::size_t w2 = std::string("closed form").size();
        for (const auto& r : table) {
            w1 = std::max(w1, r[1].size());
            w2 = std::max(w2, r[2].size());
        }
        fmt::print(out, "{:>3}  {:<{}}  {:<{}}  {}\n", "n", "coefficient", w1, "closed form", w2, "match");
        for (const auto& r : table) {
            fmt::print(out, "{:>3}  {:<{}}  {:<{}}  {}\n", r[0], r[1], w1, r[2], w2, r[3]);
        }
        break;
    }
    }
    return all_match ? 0 : kExitFailedCheck;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hook length formulas for complete m-ary trees and plane forests", "hooklen"};
    app.require_subcommand(1, 1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "number of complete m-ary trees with n internal vertices");
    count->add_option("--arity", count_args.arity, "arity m >= 2")->required()->check(CLI::Range(2, 64));
    count->add_option("--internal", count_args.internal, "internal vertices n >= 0")->required()->check(CLI::Range(0, 100000));

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "print every tree as a preorder code, one per line");
    enumerate->add_option("--arity", enum_args.arity, "arity m >= 2")->required()->check(CLI::Range(2, 64));
    enumerate->add_option("--internal", enum_args.internal, "internal vertices n >= 0")->required()->check(CLI::Range(0, 1000));
    enumerate->add_option("--limit", enum_args.limit, "stop after K trees")->check(CLI::NonNegativeNumber);

    HooksArgs hook_args;
    auto* hooks = app.add_subcommand("hooks", "per-vertex hook lengths of one tree");
    hooks->add_option("--arity", hook_args.arity, "arity m >= 2")->required()->check(CLI::Range(2, 64));
    hooks->add_option("--code", hook_args.code, "preorder code, e.g. 11000")->required();
    auto* hooks_subset = hooks->add_option("--S", hook_args.subset, "pruned positions, e.g. \"1,2\"");
    add_format(hooks, hook_args.format);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check an identity family exactly for n = n-min .. n-max");
    verify->add_option("--family", verify_args.family, "identity family")->required();
    verify->add_option("--m", verify_args.m, "family parameter m")->check(CLI::Range(0, 64));
    verify->add_option("--n-min", verify_args.n_min, "first n (default 1)")->check(CLI::Range(0, 1000));
    verify->add_option("--n-max", verify_args.n_max, "last n")->required()->check(CLI::Range(0, 1000));
    auto* verify_subset = verify->add_option("--S", verify_args.subset, "positions \"1,2\" or \"all\"");
    verify->add_option("--threads", verify_args.threads, "workers per summation")->check(CLI::Range(1U, 256U));
    verify->add_flag("--no-timing", verify_args.no_timing, "report elapsed_ms as 0 for reproducible output");
    add_format(verify, verify_args.format);

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "solve the power ODE and compare with its closed form");
    series->add_option("--solver", series_args.solver, "omega or phi")
        ->required()
        ->check(CLI::IsMember({"omega", "phi"}));
    series->add_option("--a", series_args.a, "a")->required();
    series->add_option("--b", series_args.b, "b >= 0")->required()->check(CLI::Range(0, 64));
    series->add_option("--s", series_args.s, "s >= 0 (phi only)")->check(CLI::Range(0, 64));
    series->add_option("--order", series_args.order, "truncation order N")->required()->check(CLI::Range(0, 200));
    add_format(series, series_args.format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) {
            return cmd_count(count_args, out);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(enum_args, out);
        }
        if (hooks->parsed()) {
            hook_args.has_subset = hooks_subset->count() > 0;
            return cmd_hooks(hook_args, out);
        }
        if (verify->parsed()) {
            verify_args.has_subset = verify_subset->count() > 0;
            if (verify_args.n_min > verify_args.n_max) {
                throw CLI::ValidationError("--n-min", "must not exceed --n-max");
            }
            return cmd_verify(verify_args, out);
        }
        if (series->parsed()) {
            return cmd_series(series_args, out);
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DecodeError& e) {
        err << "decode error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hooklen::cli
