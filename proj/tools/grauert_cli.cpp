// grauert: profile tables, curvature scans, leaf traces and the claim
// registry for Grauert's complete Kahler metrics.
//
// Exit codes: 0 success / all claims pass, 1 claim failure, 2 usage error,
// 3 numeric error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grauert/errors.hpp"
#include "grauert/report.hpp"
#include "grauert/verify.hpp"

namespace {

enum Exit { kOk = 0, kClaimFailure = 1, kUsage = 2, kNumeric = 3 };

std::vector<double> parse_radius_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw grauert::UsageError("cannot parse radius '" + item + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace grauert;

    CLI::App app{"Grauert metrics: curvature profiles, scans and claim checks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string w_text;
    std::string z_text;
    std::string radius_text;
    std::string format = "csv";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Dimension of the punctured space / of pi")->capture_default_str();
        sub->add_option("--N", cfg.N, "Ambient ball dimension")->capture_default_str();
        sub->add_option("--alpha", cfg.alpha, "Exponent of the diagonal field (< 0)")->capture_default_str();
        sub->add_option("--w", w_text, "Slice point in A as re,im pairs (N of them)");
        sub->add_option("--t-min", cfg.t_min, "Smallest squared radius")->capture_default_str();
        sub->add_option("--t-max", cfg.t_max, "Largest squared radius")->capture_default_str();
        sub->add_option("--steps", cfg.steps, "Grid points")->capture_default_str();
        sub->add_option("--radius-list", radius_text, "Comma-separated squared radii");
        sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Absolute quadrature tolerance for v(t)")->capture_default_str();
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--out", cfg.out, "Output path (default: standard output)");
        sub->add_option("--metric", cfg.metric, "grauert, ball or bergman (scan, flow)")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "Random directions for the extremal search")->capture_default_str();
        sub->add_option("--refine-iters", cfg.refine_iters, "Refinement sweeps for the extremal search")
            ->capture_default_str();
        sub->add_option("--z", z_text, "Flow base point as re,im pairs");
        sub->add_option("--T-span", cfg.T_span, "Half-length of the flow time grid")->capture_default_str();
        sub->add_option("--T-angle", cfg.T_angle, "Direction of the flow time grid in the T-plane (radians)")
            ->capture_default_str();
    };

    CLI::App* profiles = app.add_subcommand("profiles", "Tabulate u, v, eta and the curvature profiles");
    CLI::App* claims = app.add_subcommand("claims", "Run the claim registry C1..C12");
    CLI::App* scan = app.add_subcommand("scan", "Extremal HSC estimates per squared radius");
    CLI::App* flow = app.add_subcommand("flow", "Trace a leaf and its curvature");
    for (CLI::App* sub : {profiles, claims, scan, flow}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (!w_text.empty()) cfg.w = parse_complex_list(w_text);
        if (!z_text.empty()) cfg.z = parse_complex_list(z_text);
        if (!radius_text.empty()) cfg.radius_list = parse_radius_list(radius_text);
        cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        cfg.validate();

        std::ofstream file;
        if (!cfg.out.empty()) {
            file.open(cfg.out, std::ios::binary);
            if (!file) throw UsageError("cannot open output file " + cfg.out);
        }
        std::ostream& os = cfg.out.empty() ? std::cout : file;
        const bool json = cfg.format == OutputFormat::Json;

        if (claims->parsed()) {
            const auto results = cmd_claims(cfg);
            json ? report::write_claims_json(os, cfg, results) : report::write_claims_csv(os, results);
            std::string failed;
            for (const auto& r : results)
                if (!r.pass) failed += (failed.empty() ? "" : ",") + r.id;
            if (!failed.empty()) {
                std::cerr << "failing claims: " << failed << '\n';
                return kClaimFailure;
            }
            return kOk;
        }

        Table table;
        if (profiles->parsed()) table = cmd_profiles(cfg);
        else if (scan->parsed()) table = cmd_scan(cfg);
        else table = cmd_flow(cfg);
        for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
        json ? report::write_json(os, cfg, table) : report::write_csv(os, table);
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNumeric;
    } catch (const SearchError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNumeric;
    }
}
