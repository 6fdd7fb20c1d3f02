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

// qpol command-line front end. Argument handling and formatting only.
// Exit codes: 0 ok, 1 verification failure, 2 usage, parse or domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpol/qpol.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

void print_degree_csv(std::ostream& os, const qpol::PolarizationReport& r) {
    os << "P1,P2,P_HS,P_B,P_RE,n_max_used,tail_bound\n"
       << (r.p1 ? qpol::format_double(*r.p1) : "") << ',' << (r.p2 ? qpol::format_double(*r.p2) : "") << ','
       << qpol::format_double(r.p_hs) << ',' << qpol::format_double(r.p_bures) << ','
       << qpol::format_double(r.p_re) << ',' << r.n_max_used << ',' << qpol::format_double(r.tail_bound) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degrees of polarization of two-mode Fock-diagonal states"};
    app.require_subcommand(1);
    app.fallthrough();

    qpol::TruncationPolicy policy;
    std::string format; // default: json for degree, csv for sweep
    app.add_option("--tail-tol", policy.tail_tol, "Maximum discarded probability per mode")->capture_default_str();
    app.add_option("--n-max-cap", policy.n_max_cap, "Maximum photon-number support per mode")
        ->capture_default_str();
    app.add_option("--format", format, "Output format (default: json for degree, csv for sweep)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* degree = app.add_subcommand("degree", "Evaluate all five degrees for one state descriptor");
    std::string state_json;
    degree->add_option("state", state_json,
                       "JSON descriptor, e.g. {\"kind\":\"thermal\",\"n1\":2,\"n2\":1}; read from stdin if omitted");

    auto* sweep = app.add_subcommand("sweep", "Tabulate the degrees along n1 = n2 + eps");
    qpol::SweepConfig cfg;
    std::string family = "thermal";
    std::vector<double> eps;
    double eps_step = 0.0;
    std::size_t eps_count = 0;
    sweep->add_option("--family", family, "State family")
        ->check(CLI::IsMember({"thermal", "pats"}))
        ->capture_default_str();
    sweep->add_option("--n2", cfg.n2, "Fixed mean photon number of mode V")->capture_default_str();
    sweep->add_option("--eps", eps, "Explicit epsilon values (comma separated)")->delimiter(',');
    sweep->add_option("--eps-step", eps_step, "Grid step from 0 (with --eps-count)");
    sweep->add_option("--eps-count", eps_count, "Number of grid points (with --eps-step)");
    sweep->add_option("-M,--M", cfg.m, "Photons added to mode H (pats)")->capture_default_str();
    sweep->add_option("-S,--S", cfg.s, "Photons added to mode V (pats)")->capture_default_str();
    sweep->add_option("-o,--output", cfg.output, "Output file (default: standard output)");

    auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
    std::string level = "fast";
    std::uint64_t seed = 20260101;
    double tol_scale = 1.0;
    verify->add_option("--level", level, "fast: n_max <= 12, full: n_max <= 32")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify->add_option("--seed", seed, "Base seed of the random spectra")->capture_default_str();
    verify->add_option("--tol-scale", tol_scale, "Multiplier applied to every tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (degree->parsed()) {
            if (state_json.empty()) {
                state_json.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
            }
            const auto report = qpol::evaluate_descriptor(qpol::parse_state_descriptor(state_json), policy);
            if (format == "csv") {
                print_degree_csv(std::cout, report);
            } else {
                std::cout << qpol::report_to_json(report).dump(2) << '\n';
            }
            return kOk;
        }

        if (sweep->parsed()) {
            cfg.family = family == "pats" ? qpol::SweepFamily::Pats : qpol::SweepFamily::Thermal;
            if (!eps.empty() && eps_count > 0) {
                std::cerr << "error: use either --eps or --eps-step/--eps-count\n";
                return kUsage;
            }
            cfg.epsilon_grid = eps_count > 0 ? qpol::linear_grid(0.0, eps_step, eps_count) : eps;
            const auto rows = qpol::run_sweep(cfg, policy);
            std::ostringstream buf;
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& row : rows) {
                    auto j = qpol::report_to_json(row.report);
                    j["epsilon"] = row.epsilon;
                    arr.push_back(j);
                }
                buf << arr.dump(2) << '\n';
            } else {
                qpol::write_sweep_csv(buf, rows);
            }
            if (cfg.output.empty()) {
                std::cout << buf.str();
            } else {
                std::ofstream file(cfg.output);
                if (!(file << buf.str())) {
                    std::cerr << "error: cannot write " << cfg.output << '\n';
                    return kUsage;
                }
            }
            return kOk;
        }

        if (verify->parsed()) {
            const auto report = qpol::run_verification(
                level == "full" ? qpol::VerifyLevel::Full : qpol::VerifyLevel::Fast, seed, tol_scale);
            for (const auto& c : report.checks) {
                std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  worst=" << qpol::format_double(c.worst)
                          << "  tol=" << qpol::format_double(c.tolerance);
                if (!c.detail.empty()) {
                    std::cout << "  (" << c.detail << ')';
                }
                std::cout << '\n';
            }
            return report.passed() ? kOk : kVerifyFailed;
        }
    } catch (const qpol::NoConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const qpol::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
