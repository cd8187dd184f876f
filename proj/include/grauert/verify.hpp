#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "grauert/curvature.hpp"

namespace grauert {

/// Invalid command-line configuration (exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    int n = 2;
    int N = 2;
    double alpha = -1.0;
    CVector w;  // empty means the origin of C^N

    double t_min = 1e-6;
    double t_max = 1e3;
    int steps = 37;
    std::vector<double> radius_list = {1e-4, 1e-2, 1.0, 10.0, 100.0};

    std::uint64_t seed = 42;
    double tol = 1e-10;
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // empty: standard output

    // scan / flow
    std::string metric = "grauert";  // grauert | ball | bergman
    int samples = 256;
    int refine_iters = 50;
    std::optional<CVector> z;  // flow base point
    double T_span = 1.0;
    double T_angle = 0.0;

    /// Throws UsageError when the configuration violates a module precondition.
    void validate() const;

    ProfileOptions profile_options() const { return {tol}; }
    /// w padded to N coordinates.
    CVector slice_point() const;
    double r2() const { return 1.0 - slice_point().squaredNorm(); }
    MetricKind metric_kind() const;
};

/// Parses "re,im,re,im,..." into complex coordinates.
CVector parse_complex_list(const std::string& text);

/// One table cell: a number, a string, or missing.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> warnings;
};

struct ClaimResult {
    std::string id;
    std::string description;
    std::vector<std::pair<std::string, double>> computed;
    double threshold = 0.0;
    bool pass = false;
};

/// Profile table (t, u, v, eta, f_cn, f_cstar, f_ball) on a log grid.
Table cmd_profiles(const RunConfig& cfg);

/// The claim registry C1..C12.
std::vector<ClaimResult> cmd_claims(const RunConfig& cfg);

/// Extremal HSC estimates at one S-point per squared radius.
Table cmd_scan(const RunConfig& cfg);

/// Trace of a leaf: Z(T), h(T) and the FD curvature along a T-grid.
Table cmd_flow(const RunConfig& cfg);

}  // namespace grauert
