// Copyright 2026 The qpol Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON state descriptors, report serialization and the epsilon-sweep CSV
 * format consumed by external plotting tools.
 *
 * Descriptor forms:
 *   {"kind":"thermal","n1":..,"n2":..}
 *   {"kind":"pats","n1":..,"M":..,"n2":..,"S":..}
 *   {"kind":"fock","M":..,"S":..}
 *   {"kind":"custom","xi":[..],"eta":[..]}
 */

#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qpol/degrees.hpp"
#include "qpol/errors.hpp"
#include "qpol/pats.hpp"
#include "qpol/thermal.hpp"

namespace qpol {

struct FockPair {
    unsigned m = 0;
    unsigned s = 0;
};

struct CustomPair {
    std::vector<double> xi;
    std::vector<double> eta;
};

using StateDescriptor = std::variant<ThermalPair, TwoModePats, FockPair, CustomPair>;

namespace detail {

inline double json_nonneg(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ParseError(std::string("descriptor: missing numeric field \"") + key + "\"");
    }
    const double x = j.at(key).get<double>();
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw ParseError(std::string("descriptor: field \"") + key + "\" must be finite and >= 0");
    }
    return x;
}

inline unsigned json_count(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0 ||
        j.at(key).get<long long>() > std::numeric_limits<unsigned>::max()) {
        throw ParseError(std::string("descriptor: field \"") + key + "\" must be a nonnegative integer");
    }
    return j.at(key).get<unsigned>();
}

inline std::vector<double> json_probs(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw ParseError(std::string("descriptor: field \"") + key + "\" must be an array");
    }
    std::vector<double> out;
    for (const auto& x : j.at(key)) {
        if (!x.is_number()) {
            throw ParseError(std::string("descriptor: \"") + key + "\" must contain numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

} // namespace detail

inline StateDescriptor parse_state_descriptor(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw ParseError("descriptor: expected an object with a string \"kind\"");
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "thermal") {
        return ThermalPair{detail::json_nonneg(j, "n1"), detail::json_nonneg(j, "n2")};
    }
    if (kind == "pats") {
        return TwoModePats{PatsSpec{detail::json_nonneg(j, "n1"), detail::json_count(j, "M")},
                           PatsSpec{detail::json_nonneg(j, "n2"), detail::json_count(j, "S")}};
    }
    if (kind == "fock") {
        return FockPair{detail::json_count(j, "M"), detail::json_count(j, "S")};
    }
    if (kind == "custom") {
        // Sequenced so that a throw from the second field cannot leak the first.
        auto xi = detail::json_probs(j, "xi");
        auto eta = detail::json_probs(j, "eta");
        return CustomPair{std::move(xi), std::move(eta)};
    }
    throw ParseError("descriptor: unknown kind \"" + kind + "\"");
}

inline StateDescriptor parse_state_descriptor(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("descriptor: invalid JSON: ") + e.what());
    }
    return parse_state_descriptor(j);
}

inline StateDescriptor parse_state_descriptor(const char* text) { return parse_state_descriptor(std::string(text)); }

/// Dispatches to the family-specific evaluator.
inline PolarizationReport evaluate_descriptor(const StateDescriptor& desc, const TruncationPolicy& policy = {}) {
    struct Visitor {
        const TruncationPolicy& policy;
        PolarizationReport operator()(const ThermalPair& tp) const { return evaluate_thermal(tp, policy); }
        PolarizationReport operator()(const TwoModePats& tp) const { return evaluate_pats(tp, policy); }
        PolarizationReport operator()(const FockPair& f) const { return fock_degrees(f.m, f.s); }
        PolarizationReport operator()(const CustomPair& c) const {
            try {
                return evaluate(TwoModeState::product(ModeDistribution::from_probs(c.xi, std::nullopt, policy),
                                                      ModeDistribution::from_probs(c.eta, std::nullopt, policy)),
                                policy);
            } catch (const InvalidState& e) {
                throw ParseError(std::string("descriptor: ") + e.what());
            }
        }
    };
    return std::visit(Visitor{policy}, desc);
}

inline nlohmann::json report_to_json(const PolarizationReport& r) {
    nlohmann::json j;
    for (const auto& [key, value] : {std::pair{"P1", r.p1}, std::pair{"P2", r.p2}}) {
        if (value) {
            j[key] = *value;
        } else {
            j[key] = nullptr;
            j[std::string(key) + "_reason"] = "vacuum";
        }
    }
    j["P_HS"] = r.p_hs;
    j["P_B"] = r.p_bures;
    j["P_RE"] = r.p_re;
    j["n_max_used"] = r.n_max_used;
    j["tail_bound"] = r.tail_bound;
    return j;
}

/// Shortest decimal form that still round-trips (at most 17 significant digits).
inline std::string format_double(double x) {
    char buf[32];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) {
            break;
        }
    }
    return buf;
}

enum class SweepFamily { Thermal, Pats };

struct SweepConfig {
    SweepFamily family = SweepFamily::Thermal;
    double n2 = 1.0;
    std::vector<double> epsilon_grid;
    unsigned m = 0; ///< photons added to mode H (PATS only)
    unsigned s = 0; ///< photons added to mode V (PATS only)
    std::string output; ///< empty: standard output

    void validate() const {
        if (!(n2 >= 0.0) || !std::isfinite(n2)) {
            throw DomainError("SweepConfig: n2 must be finite and >= 0");
        }
        if (epsilon_grid.empty()) {
            throw DomainError("SweepConfig: empty epsilon grid");
        }
        for (std::size_t i = 0; i < epsilon_grid.size(); ++i) {
            if (!(epsilon_grid[i] >= 0.0) || !std::isfinite(epsilon_grid[i])) {
                throw DomainError("SweepConfig: epsilon values must be finite and >= 0");
            }
            if (i > 0 && !(epsilon_grid[i] > epsilon_grid[i - 1])) {
                throw DomainError("SweepConfig: epsilon grid must be strictly increasing");
            }
        }
    }
};

struct SweepRow {
    double epsilon = 0.0;
    PolarizationReport report;
};

/// `count` points start, start + step, ...; the step is multiplied, not accumulated.
inline std::vector<double> linear_grid(double start, double step, std::size_t count) {
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = start + static_cast<double>(i) * step;
    }
    return g;
}

/// One row with n1 = n2 + epsilon.
inline SweepRow sweep_row(const SweepConfig& cfg, double epsilon, const TruncationPolicy& policy = {}) {
    const double n1 = cfg.n2 + epsilon;
    SweepRow row{epsilon, {}};
    if (cfg.family == SweepFamily::Thermal) {
        row.report = evaluate_thermal(ThermalPair{n1, cfg.n2}, policy);
    } else {
        row.report = evaluate_pats(TwoModePats{PatsSpec{n1, cfg.m}, PatsSpec{cfg.n2, cfg.s}}, policy);
    }
    return row;
}

/// Rows in grid order.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const TruncationPolicy& policy = {}) {
    cfg.validate();
    std::vector<SweepRow> rows;
    rows.reserve(cfg.epsilon_grid.size());
    for (double eps : cfg.epsilon_grid) {
        rows.push_back(sweep_row(cfg, eps, policy));
    }
    return rows;
}

inline constexpr const char* kSweepHeader = "epsilon,P1,P2,P_HS,P_B,P_RE";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepHeader << '\n';
    for (const auto& row : rows) {
        const auto& r = row.report;
        os << format_double(row.epsilon) << ',' << (r.p1 ? format_double(*r.p1) : "") << ','
           << (r.p2 ? format_double(*r.p2) : "") << ',' << format_double(r.p_hs) << ','
           << format_double(r.p_bures) << ',' << format_double(r.p_re) << '\n';
    }
}

namespace detail {

inline std::optional<double> parse_cell(const std::string& cell, std::size_t line) {
    if (cell.empty()) {
        return std::nullopt;
    }
    char* end = nullptr;
    const double x = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) {
        throw ParseError("sweep csv: bad number \"" + cell + "\" on line " + std::to_string(line));
    }
    return x;
}

} // namespace detail

/// Inverse of write_sweep_csv. Truncation diagnostics are not stored.
inline std::vector<SweepRow> read_sweep_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kSweepHeader) {
        throw ParseError("sweep csv: missing header");
    }
    std::vector<SweepRow> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != 6) {
            throw ParseError("sweep csv: expected 6 columns on line " + std::to_string(lineno));
        }
        SweepRow row;
        const auto eps = detail::parse_cell(cells[0], lineno);
        const auto hs = detail::parse_cell(cells[3], lineno);
        const auto b = detail::parse_cell(cells[4], lineno);
        const auto re = detail::parse_cell(cells[5], lineno);
        if (!eps || !hs || !b || !re) {
            throw ParseError("sweep csv: only the Stokes columns may be empty (line " + std::to_string(lineno) +
                             ")");
        }
        row.epsilon = *eps;
        row.report.p1 = detail::parse_cell(cells[1], lineno);
        row.report.p2 = detail::parse_cell(cells[2], lineno);
        row.report.p_hs = *hs;
        row.report.p_bures = *b;
        row.report.p_re = *re;
        rows.push_back(row);
    }
    return rows;
}

} // namespace qpol
