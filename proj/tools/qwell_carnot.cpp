// qwell-carnot: command-line front end for the quantum Carnot cycle library.
//
// Subcommands:
//   cycle    — endpoints, per-leg work, heat intake, efficiency
//   diagram  — P-L loop samples for all four legs
//   sweep    — efficiency across a lambda or L3 list, with the free-particle
//              comparator
//   verify   — closed forms vs quadrature vs literal textbook expressions
//
// stdout carries data, stderr diagnostics. Exit codes: 0 success,
// 2 usage/domain error, 3 numeric failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwell/carnot.hpp"
#include "qwell/model.hpp"
#include "qwell/processes.hpp"

namespace {

enum class OutputFormat { csv, json };

struct RunConfig {
    double l1 = 1.0;
    double l3 = 4.0;
    double lambda = 0.0;
    int samples = 256;
    int precision = 12;
    OutputFormat out = OutputFormat::csv;
    std::string units = "natural";
    double hbar = 1.0;
    double mass = 1.0;
    std::vector<double> lambda_list;
    std::vector<double> l3_list;
};

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

qwell::carnot::CycleSpec to_spec(const RunConfig& cfg) {
    qwell::model::PhysicalParams params;
    if (cfg.units == "si") {
        params = qwell::model::PhysicalParams::si(cfg.hbar, cfg.mass);
    } else {
        params = qwell::model::PhysicalParams::natural();
    }
    return {cfg.l1, cfg.l3, qwell::model::LambdaSpec::frozen(cfg.lambda), params};
}

// Flat key/value emission shared by the cycle subcommand's two formats.
void emit_pairs(const std::vector<std::pair<std::string, double>>& pairs,
                const RunConfig& cfg) {
    if (cfg.out == OutputFormat::csv) {
        std::cout << "key,value\n";
        for (const auto& [key, value] : pairs)
            std::cout << key << ',' << fmt(value, cfg.precision) << '\n';
    } else {
        std::cout << "{";
        bool first = true;
        for (const auto& [key, value] : pairs) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "\"" << key << "\":" << fmt(value, cfg.precision);
        }
        std::cout << "}\n";
    }
}

int cmd_cycle(const RunConfig& cfg) {
    const auto result = qwell::carnot::build(to_spec(cfg));
    emit_pairs({{"L2", result.l2},
                {"L4", result.l4},
                {"E_H", result.e_hot},
                {"E_C", result.e_cold},
                {"W12", result.w_leg[0]},
                {"W23", result.w_leg[1]},
                {"W34", result.w_leg[2]},
                {"W41", result.w_leg[3]},
                {"W_total", result.w_total},
                {"Q_H", result.q_hot},
                {"eta", result.eta}},
               cfg);
    return 0;
}

int cmd_diagram(const RunConfig& cfg) {
    const auto spec = to_spec(cfg);
    const auto geometry = qwell::processes::make_geometry(
        spec.l1, spec.l3, spec.lambda_spec, spec.params);
    const auto legs = qwell::processes::sample_cycle(geometry, spec.lambda_spec,
                                                     spec.params, cfg.samples);
    if (cfg.out == OutputFormat::csv) {
        std::cout << "leg,L,P,E,a1sq\n";
        for (size_t leg = 0; leg < legs.size(); ++leg)
            for (const auto& s : legs[leg])
                std::cout << leg + 1 << ',' << fmt(s.L, cfg.precision) << ','
                          << fmt(s.P, cfg.precision) << ',' << fmt(s.E, cfg.precision)
                          << ',' << fmt(s.a1sq, cfg.precision) << '\n';
    } else {
        std::cout << "[";
        bool first = true;
        for (size_t leg = 0; leg < legs.size(); ++leg) {
            for (const auto& s : legs[leg]) {
                if (!first) std::cout << ",";
                first = false;
                std::cout << "{\"leg\":" << leg + 1 << ",\"L\":" << fmt(s.L, cfg.precision)
                          << ",\"P\":" << fmt(s.P, cfg.precision)
                          << ",\"E\":" << fmt(s.E, cfg.precision)
                          << ",\"a1sq\":" << fmt(s.a1sq, cfg.precision) << "}";
            }
        }
        std::cout << "]\n";
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    const bool sweep_lambda = !cfg.lambda_list.empty();
    const bool sweep_l3 = !cfg.l3_list.empty();
    if (sweep_lambda == sweep_l3)
        throw std::invalid_argument(
            "sweep needs exactly one of --lambda-list or --l3-list");
    const auto& values = sweep_lambda ? cfg.lambda_list : cfg.l3_list;
    if (values.size() > 1) {
        const bool increasing = values[1] > values[0];
        for (size_t i = 1; i < values.size(); ++i)
            if ((values[i] > values[i - 1]) != increasing || values[i] == values[i - 1])
                throw std::invalid_argument("sweep list must be strictly monotone");
    }

    struct Row {
        double lambda, l3, eta, eta_fp, delta;
        bool ok;
    };
    std::vector<Row> rows;
    rows.reserve(values.size());
    for (double v : values) {
        RunConfig point = cfg;
        if (sweep_lambda)
            point.lambda = v;
        else
            point.l3 = v;
        Row row{point.lambda, point.l3, 0.0, 0.0, 0.0, true};
        row.eta_fp = qwell::carnot::free_particle_efficiency(point.l1, point.l3);
        try {
            row.eta = qwell::carnot::efficiency(to_spec(point));
            row.delta = row.eta - row.eta_fp;
        } catch (const std::domain_error&) {
            row.ok = false; // degenerate point; keep sweeping
        }
        rows.push_back(row);
    }

    auto num = [&](double v, bool ok) { return ok ? fmt(v, cfg.precision) : std::string("nan"); };
    if (cfg.out == OutputFormat::csv) {
        std::cout << "lambda,l3,eta,eta_free_particle,delta,status\n";
        for (const auto& r : rows)
            std::cout << fmt(r.lambda, cfg.precision) << ',' << fmt(r.l3, cfg.precision)
                      << ',' << num(r.eta, r.ok) << ',' << fmt(r.eta_fp, cfg.precision)
                      << ',' << num(r.delta, r.ok) << ','
                      << (r.ok ? "ok" : "degenerate") << '\n';
    } else {
        std::cout << "[";
        bool first = true;
        for (const auto& r : rows) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "{\"lambda\":" << fmt(r.lambda, cfg.precision)
                      << ",\"l3\":" << fmt(r.l3, cfg.precision)
                      << ",\"eta\":" << (r.ok ? fmt(r.eta, cfg.precision) : "null")
                      << ",\"eta_free_particle\":" << fmt(r.eta_fp, cfg.precision)
                      << ",\"delta\":" << (r.ok ? fmt(r.delta, cfg.precision) : "null")
                      << ",\"status\":\"" << (r.ok ? "ok" : "degenerate") << "\"}";
        }
        std::cout << "]\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const auto report = qwell::carnot::verify(to_spec(cfg));
    if (cfg.out == OutputFormat::csv) {
        std::cout << "row,label,library,comparand,abs_dev,rel_dev\n";
        for (const auto& r : report.rows)
            std::cout << r.id << ",\"" << r.label << "\","
                      << fmt(r.reference, cfg.precision) << ','
                      << fmt(r.comparand, cfg.precision) << ','
                      << fmt(r.abs_dev, cfg.precision) << ','
                      << fmt(r.rel_dev, cfg.precision) << '\n';
    } else {
        std::cout << "[";
        bool first = true;
        for (const auto& r : report.rows) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "{\"row\":\"" << r.id << "\",\"label\":\"" << r.label
                      << "\",\"library\":" << fmt(r.reference, cfg.precision)
                      << ",\"comparand\":" << fmt(r.comparand, cfg.precision)
                      << ",\"abs_dev\":" << fmt(r.abs_dev, cfg.precision)
                      << ",\"rel_dev\":" << fmt(r.rel_dev, cfg.precision) << "}";
        }
        std::cout << "]\n";
    }
    return 0;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--l1", cfg.l1, "Hot-corner well width L1");
    cmd->add_option("--l3", cfg.l3, "Cold-corner well width L3");
    cmd->add_option("--lambda", cfg.lambda, "Anharmonicity parameter (held fixed in L)");
    cmd->add_option("--precision", cfg.precision, "Significant digits in output")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--units", cfg.units, "Unit system")
        ->check(CLI::IsMember({"natural", "si"}));
    cmd->add_option("--hbar", cfg.hbar, "Reduced Planck constant (si units)");
    cmd->add_option("--mass", cfg.mass, "Particle mass (si units)");
    cmd->add_option_function<std::string>(
           "--out",
           [&cfg](const std::string& v) {
               cfg.out = (v == "json") ? OutputFormat::json : OutputFormat::csv;
           },
           "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Carnot engine in a Poschl-Teller well"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto* cycle = app.add_subcommand("cycle", "Compute the full cycle result");
    add_common_options(cycle, cfg);
    auto* diagram = app.add_subcommand("diagram", "Emit P-L loop samples");
    add_common_options(diagram, cfg);
    diagram->add_option("--samples", cfg.samples, "Samples per leg")
        ->check(CLI::Range(2, 1 << 20));
    auto* sweep = app.add_subcommand("sweep", "Sweep lambda or L3");
    add_common_options(sweep, cfg);
    sweep->add_option("--lambda-list", cfg.lambda_list, "Lambda sweep values")
        ->delimiter(',');
    sweep->add_option("--l3-list", cfg.l3_list, "L3 sweep values")->delimiter(',');
    auto* verify = app.add_subcommand("verify", "Run the oracle comparison report");
    add_common_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cycle->parsed()) return cmd_cycle(cfg);
        if (diagram->parsed()) return cmd_diagram(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const qwell::numerics::NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
