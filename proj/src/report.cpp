#include "grauert/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace grauert::report {
namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* s = std::get_if<std::string>(&c)) return csv_field(*s);
    return {};
}

ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) return *d == 0.0 ? 0.0 : *d;
        return nullptr;
    }
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    return nullptr;
}

ordered_json complex_list(const CVector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back({v(i).real(), v(i).imag()});
    return arr;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["N"] = cfg.N;
    j["alpha"] = cfg.alpha;
    j["w"] = complex_list(cfg.slice_point());
    j["t_min"] = cfg.t_min;
    j["t_max"] = cfg.t_max;
    j["steps"] = cfg.steps;
    j["radius_list"] = cfg.radius_list;
    j["seed"] = cfg.seed;
    j["tol"] = cfg.tol;
    j["metric"] = cfg.metric;
    j["samples"] = cfg.samples;
    j["refine_iters"] = cfg.refine_iters;
    if (cfg.z) j["z"] = complex_list(*cfg.z);
    j["T_span"] = cfg.T_span;
    j["T_angle"] = cfg.T_angle;
    return j;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << csv_field(table.columns[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << cell_text(row[i]);
        }
        os << '\n';
    }
}

void write_claims_csv(std::ostream& os, const std::vector<ClaimResult>& claims) {
    os << "id,description,status,threshold,computed\n";
    for (const auto& c : claims) {
        std::string computed;
        for (const auto& [name, value] : c.computed) {
            if (!computed.empty()) computed += ';';
            computed += name + '=' + format_number(value);
        }
        os << csv_field(c.id) << ',' << csv_field(c.description) << ',' << (c.pass ? "pass" : "fail") << ','
           << format_number(c.threshold) << ',' << csv_field(computed) << '\n';
    }
}

void write_json(std::ostream& os, const RunConfig& cfg, const Table& table) {
    ordered_json j;
    j["version"] = kVersion;
    j["config"] = config_json(cfg);
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json r;
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (!table.warnings.empty()) j["warnings"] = table.warnings;
    os << j.dump(2) << '\n';
}

void write_claims_json(std::ostream& os, const RunConfig& cfg, const std::vector<ClaimResult>& claims) {
    ordered_json j;
    j["version"] = kVersion;
    j["config"] = config_json(cfg);
    ordered_json arr = ordered_json::array();
    for (const auto& c : claims) {
        ordered_json computed = ordered_json::object();
        for (const auto& [name, value] : c.computed) computed[name] = std::isfinite(value) ? ordered_json(value) : ordered_json(nullptr);
        arr.push_back({{"id", c.id},
                       {"description", c.description},
                       {"computed", computed},
                       {"threshold", c.threshold},
                       {"status", c.pass ? "pass" : "fail"}});
    }
    j["claims"] = std::move(arr);
    os << j.dump(2) << '\n';
}

}  // namespace grauert::report
