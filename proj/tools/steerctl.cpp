#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "steerkit/adapted.hpp"
#include "steerkit/errors.hpp"
#include "steerkit/io.hpp"
#include "steerkit/reproduce.hpp"
#include "steerkit/steering.hpp"
#include "steerkit/threshold.hpp"

namespace {

using steerkit::format_fixed6;

constexpr int kExitNotSteerable = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitReproduction = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw steerkit::validation_error("cannot write " + out_path);
        out << text;
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_fixed6(steerkit::BlochVector v) {
    return format_fixed6(v.x) + " " + format_fixed6(v.y) + " " + format_fixed6(v.z);
}

std::string render_threshold(const steerkit::ThresholdReport& report, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << steerkit::threshold_report_to_json(report).dump(2) << '\n';
    } else if (format == "csv") {
        os << "f_nst,g_nst,maximizer\n"
           << format_fixed6(report.f_nst) << ',' << format_fixed6(report.g_nst) << ',';
        for (std::size_t i = 0; i < report.maximizer.assignments.size(); ++i)
            os << (i ? ";" : "") << report.maximizer.assignments[i] + 1;
        os << '\n';
    } else {
        os << "f_nst      " << format_fixed6(report.f_nst) << '\n'
           << "g_nst      " << format_fixed6(report.g_nst) << '\n'
           << "maximizer ";
        for (int a : report.maximizer.assignments) os << ' ' << a + 1;
        os << '\n';
    }
    return os.str();
}

std::string render_verdict(const steerkit::SteeringVerdict& v, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << steerkit::verdict_to_json(v).dump(2) << '\n';
    } else if (format == "csv") {
        os << "f_avg,f_nst,g_avg,g_nst,ratio,steerable\n"
           << format_fixed6(v.f_avg) << ',' << format_fixed6(v.f_nst) << ',' << format_fixed6(v.g_avg)
           << ',' << format_fixed6(v.g_nst) << ',' << format_fixed6(v.ratio) << ',' << yes_no(v.steerable)
           << '\n';
    } else {
        os << "f_avg      " << format_fixed6(v.f_avg) << '\n'
           << "f_nst      " << format_fixed6(v.f_nst) << '\n'
           << "g_avg      " << format_fixed6(v.g_avg) << '\n'
           << "g_nst      " << format_fixed6(v.g_nst) << '\n'
           << "ratio      " << format_fixed6(v.ratio) << '\n'
           << "steerable  " << yes_no(v.steerable) << '\n';
    }
    return os.str();
}

std::string render_adapted(const steerkit::AdaptedCriterion& c, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << steerkit::adapted_to_json(c).dump(2) << '\n';
        return os.str();
    }
    if (format == "csv") {
        os << "kind,value,steerable,weights,axes,alice_axes\n"
           << steerkit::criterion_kind_name(c.kind) << ',' << format_fixed6(c.value) << ','
           << yes_no(c.steerable) << ',';
        for (std::size_t i = 0; i < c.optimal_weights.size(); ++i)
            os << (i ? ";" : "") << format_fixed6(c.optimal_weights[i]);
        os << ',';
        for (std::size_t i = 0; i < c.optimal_axes.size(); ++i)
            os << (i ? ";" : "") << vector_fixed6(c.optimal_axes[i]);
        os << ',';
        for (std::size_t i = 0; i < c.optimal_alice_axes.size(); ++i)
            os << (i ? ";" : "") << vector_fixed6(c.optimal_alice_axes[i]);
        os << '\n';
        return os.str();
    }
    os << "kind       " << steerkit::criterion_kind_name(c.kind) << '\n'
       << "value      " << format_fixed6(c.value) << '\n'
       << "steerable  " << yes_no(c.steerable) << '\n';
    for (std::size_t i = 0; i < c.optimal_weights.size(); ++i) {
        os << "weight_" << i + 1 << "   " << format_fixed6(c.optimal_weights[i]) << '\n'
           << "axis_" << i + 1 << "     " << vector_fixed6(c.optimal_axes[i]) << '\n'
           << "alice_" << i + 1 << "    " << vector_fixed6(c.optimal_alice_axes[i]) << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonsteering thresholds and linear steering criteria"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "output format: table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.fallthrough();

    auto* nst = app.add_subcommand("nst", "nonsteering threshold of a measurement file");
    std::string nst_file;
    nst->add_option("measurement-file", nst_file, "measurement-set JSON")->required();

    auto* verdict_cmd = app.add_subcommand("verdict", "steering verdict for a state and measurements");
    std::string verdict_state, verdict_alice, verdict_bob;
    verdict_cmd->add_option("state-file", verdict_state, "state JSON")->required();
    verdict_cmd->add_option("alice-file", verdict_alice, "Alice measurement JSON")->required();
    verdict_cmd->add_option("bob-file", verdict_bob, "Bob measurement JSON")->required();

    auto* adapted = app.add_subcommand("adapted", "state-adapted optimal criterion");
    std::string adapted_state, adapted_kind;
    int resolution = 64;
    adapted->add_option("state-file", adapted_state, "state JSON")->required();
    adapted->add_option("--kind", adapted_kind, "criterion: r2, r3, or rinf")
        ->check(CLI::IsMember({"r2", "r3", "rinf"}))
        ->required();
    adapted->add_option("--resolution", resolution, "quadrature resolution for rinf")
        ->capture_default_str();

    auto* reproduce = app.add_subcommand("reproduce", "regenerate the published tables as CSV");
    std::string repro_dir;
    reproduce->add_option("--out", repro_dir, "output directory for the CSV files")->required();

    auto* oracle = app.add_subcommand("oracle", "randomized lower bound on the threshold");
    std::string oracle_file;
    std::int64_t samples = 10000;
    std::uint64_t seed = 0;
    oracle->add_option("measurement-file", oracle_file, "measurement-set JSON")->required();
    oracle->add_option("--samples", samples, "number of stochastic response tables")
        ->capture_default_str();
    oracle->add_option("--seed", seed, "sampling seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "steerctl: error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (nst->parsed()) {
            const auto assembly = steerkit::load_measurement_file(nst_file);
            const auto report = assembly.dim() == 2 ? steerkit::qubit_nst(assembly)
                                                    : steerkit::general_nst(assembly);
            emit(render_threshold(report, format), out_path);
            return 0;
        }
        if (verdict_cmd->parsed()) {
            const auto w = steerkit::load_state_file(verdict_state);
            const auto alice = steerkit::load_measurement_file(verdict_alice);
            const auto bob = steerkit::load_measurement_file(verdict_bob);
            const auto v = steerkit::verdict(w, alice, bob);
            emit(render_verdict(v, format), out_path);
            return v.steerable ? 0 : kExitNotSteerable;
        }
        if (adapted->parsed()) {
            const auto w = steerkit::load_state_file(adapted_state);
            steerkit::AdaptedCriterion c;
            if (adapted_kind == "r2") c = steerkit::r2_criterion(w);
            else if (adapted_kind == "r3") c = steerkit::r3_criterion(w);
            else c = steerkit::r_infinity_criterion(w, resolution);
            emit(render_adapted(c, format), out_path);
            return 0;
        }
        if (reproduce->parsed()) {
            const auto tables = steerkit::run_reproduction();
            const bool ok = steerkit::write_reproduction_csv(tables, repro_dir);
            std::ostringstream os;
            for (const auto& t : tables)
                os << t.name << ".csv " << (t.ok() ? "ok" : "FAILED") << " (" << t.rows.size()
                   << " rows)\n";
            emit(os.str(), out_path);
            if (!ok) {
                std::cerr << "steerctl: error: reproduction exceeded tolerance\n";
                return kExitReproduction;
            }
            return 0;
        }
        if (oracle->parsed()) {
            const auto assembly = steerkit::load_measurement_file(oracle_file);
            const double value = steerkit::probabilistic_oracle(assembly, samples, seed);
            if (format == "json") {
                emit(nlohmann::json{{"oracle", value}}.dump(2) + "\n", out_path);
            } else {
                emit("oracle     " + format_fixed6(value) + "\n", out_path);
            }
            return 0;
        }
    } catch (const steerkit::budget_error& e) {
        std::cerr << "steerctl: error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "steerctl: error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
