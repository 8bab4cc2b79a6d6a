#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "error.hpp"
#include "implicitize.hpp"
#include "io.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "scroll.hpp"

namespace scrollift {

namespace detail {

struct CliOptions {
    std::string curve;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    std::string chart;
    bool with_implicit = false;
    bool with_lift = false;
};

inline void print_check_table(std::ostream& out, const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        out << (c.pass ? "[ ok ] " : "[fail] ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
}

inline Json checks_json(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const CheckResult& c : checks) {
        arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return arr;
}

inline Json criteria_json(const std::vector<CriterionResult>& results) {
    Json arr = Json::array();
    for (const CriterionResult& r : results) {
        arr.push_back(Json{{"index", r.index},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
    }
    return arr;
}

inline void print_criteria_table(std::ostream& out, const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.index << ": " << r.name;
        if (!r.detail.empty()) out << " - " << r.detail;
        out << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
        out.unsetf(std::ios::floatfield);
    }
}

} // namespace detail

// Parses and runs one command line (without the program name). Returns the
// process exit status: 0 on success, 1 on domain errors or failed
// verification/battery runs, 2 on parse errors (bad flags or bad curve
// input). Domain errors print their stable code on the diagnostic stream.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mu-bases, implicit equations, and scroll lifts of rational plane curves"};
    app.require_subcommand(1);
    detail::CliOptions opt;

    const std::string curve_help =
        "curve file, or inline text such as \"[1,0,0];[0,1,0];[0,0,1]\"";
    auto add_common = [&opt, &curve_help](CLI::App* sub, bool needs_curve) {
        if (needs_curve) sub->add_option("curve", opt.curve, curve_help)->required();
        sub->add_flag("--json", opt.json, "emit JSON instead of plain text");
        sub->add_option("--seed", opt.seed, "seed for randomized probes (pinned default)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "splitting type, mu-basis, and second-level data");
    add_common(analyze, true);
    analyze->add_flag("--implicit", opt.with_implicit, "also compute the implicit equation");
    analyze->add_flag("--lift", opt.with_lift, "also compute the scroll lift");

    CLI::App* impl_cmd = app.add_subcommand("implicitize", "implicit equation via the moving-line resultant");
    add_common(impl_cmd, true);

    CLI::App* lift_cmd = app.add_subcommand("lift", "lift the curve to a rational normal scroll in P^(k+1)");
    add_common(lift_cmd, true);
    lift_cmd->add_option("--chart", opt.chart, "force the lift chart: 01, 02, or 12");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite on one curve");
    add_common(verify_cmd, true);

    CLI::App* battery_cmd = app.add_subcommand("battery", "run the acceptance criteria");
    add_common(battery_cmd, false);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("scrollift");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (battery_cmd->parsed()) {
            const std::vector<CriterionResult> results = run_acceptance(opt.seed);
            bool all = true;
            for (const CriterionResult& r : results) all = all && r.pass;
            if (opt.json) {
                out << detail::criteria_json(results).dump(2) << "\n";
            } else {
                detail::print_criteria_table(out, results);
                out << (all ? "all criteria passed" : "some criteria failed") << "\n";
            }
            return all ? 0 : 1;
        }

        const CurveInput input = parse_curve_arg(opt.curve);

        if (verify_cmd->parsed()) {
            const std::vector<CheckResult> checks = verify_curve(input.forms, opt.seed);
            bool all = true;
            for (const CheckResult& c : checks) all = all && c.pass;
            if (opt.json) {
                out << detail::checks_json(checks).dump(2) << "\n";
            } else {
                detail::print_check_table(out, checks);
                out << (all ? "all checks passed" : "some checks failed") << "\n";
            }
            return all ? 0 : 1;
        }

        if (lift_cmd->parsed()) {
            const CurveAnalysis an = analyze_curve(input.forms, opt.seed);
            std::optional<std::array<int, 2>> forced;
            if (!opt.chart.empty()) forced = chart_from_str(opt.chart);
            const LiftedCurve lc = lift_to_scroll(an.build.curve, forced);
            const LiftDiagnostics diag = lift_diagnostics(lc, an.second, an.build.curve, opt.seed);
            if (opt.json) {
                out << lift_json(lc, an.second, diag).dump(2) << "\n";
            } else {
                print_lift(out, lc, an.second, diag);
            }
            return 0;
        }

        // analyze and implicitize share the analysis report.
        const CurveAnalysis an = analyze_curve(input.forms, opt.seed);
        const bool want_implicit = impl_cmd->parsed() || opt.with_implicit;
        Json j = analysis_json(an);
        std::optional<ImplicitResult> ir;
        if (want_implicit) {
            ir = implicitize(an.build.curve, opt.seed);
            j["implicit"] = implicit_json(*ir);
        }
        std::optional<LiftedCurve> lc;
        std::optional<LiftDiagnostics> diag;
        if (opt.with_lift) {
            lc = lift_to_scroll(an.build.curve);
            diag = lift_diagnostics(*lc, an.second, an.build.curve, opt.seed);
            j["lift"] = lift_json(*lc, an.second, *diag);
        }
        if (opt.json) {
            out << j.dump(2) << "\n";
        } else {
            print_analysis(out, an);
            if (ir) print_implicit(out, *ir);
            if (lc) print_lift(out, *lc, an.second, *diag);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "ParseError: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

} // namespace scrollift
