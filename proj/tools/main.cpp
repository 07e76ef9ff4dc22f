// Command-line front end for the variable bandpass filter pipeline:
// design the fixed prototype, derive (alpha, M) for a target band,
// dump response curves, stream signals, and print the gate-cost table.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdf/vdf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;   // bad spec, flags, or files
constexpr int kExitTuning = 3;  // mathematically infeasible tuning request

struct RetunePoint {
    std::size_t sample = 0;
    double center = 0.0;
    double bandwidth = 0.0;
};

RetunePoint parse_retune(const std::string& text) {
    RetunePoint p;
    char extra = 0;
    long long n = -1;
    if (std::sscanf(text.c_str(), "%lld:%lf:%lf%c", &n, &p.center, &p.bandwidth, &extra) != 3 ||
        n < 0) {
        throw vdf::spec_error("bad --retune-at value (expected n:center:bw): " + text);
    }
    p.sample = static_cast<std::size_t>(n);
    return p;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw vdf::spec_error("cannot open output file: " + path);
    return file;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << j.dump(2) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Variable bandpass filter: allpass warping + coefficient decimation"};
    app.require_subcommand(1);

    // --- design ---
    auto* design = app.add_subcommand("design", "Design the fixed bandpass prototype");
    vdf::FilterSpec spec;
    int max_m = 5;
    int max_order = 4096;
    std::string design_out;
    bool design_text = false;
    design->add_option("--center", spec.center, "Passband center, Nyquist-normalized");
    design->add_option("--bandwidth", spec.bandwidth, "Passband width");
    design->add_option("--ripple-db", spec.passband_ripple_db, "Max passband ripple (dB)");
    design->add_option("--atten-db", spec.stopband_atten_db, "Min stopband attenuation (dB)");
    design->add_option("--transition", spec.transition_width, "Transition width");
    design->add_option("--max-m", max_m, "Largest decimation factor the prototype must survive");
    design->add_option("--max-order", max_order, "Order cap for the design search");
    design->add_option("--out", design_out, "Write JSON here instead of stdout");
    design->add_flag("--text", design_text, "Emit plain text, one coefficient per line");

    // --- tune ---
    auto* tune = app.add_subcommand("tune", "Compute (alpha, M) for a target band");
    std::string tune_proto;
    double tune_center = 0.31, tune_bw = 0.02;
    int tune_max_m = vdf::DecimationFactor::kDefaultMax;
    std::string tune_out;
    tune->add_option("--proto", tune_proto, "Prototype JSON file")->required();
    tune->add_option("--center", tune_center, "Target center frequency")->required();
    tune->add_option("--bandwidth", tune_bw, "Target bandwidth")->required();
    tune->add_option("--max-m", tune_max_m, "Largest allowed decimation factor");
    tune->add_option("--out", tune_out, "Write JSON here instead of stdout");

    // --- response ---
    auto* response = app.add_subcommand("response", "Dump a response curve as CSV");
    std::string resp_proto, resp_out;
    std::optional<double> resp_alpha, resp_center, resp_bw;
    std::optional<int> resp_m;
    int resp_grid = vdf::kDefaultGrid;
    int resp_max_m = vdf::DecimationFactor::kDefaultMax;
    response->add_option("--proto", resp_proto, "Prototype JSON file")->required();
    response->add_option("--alpha", resp_alpha, "Warping coefficient (with --m)");
    response->add_option("--m", resp_m, "Decimation factor (with --alpha)");
    response->add_option("--center", resp_center, "Target center (with --bandwidth)");
    response->add_option("--bandwidth", resp_bw, "Target bandwidth (with --center)");
    response->add_option("--grid", resp_grid, "Grid points including both endpoints");
    response->add_option("--max-m", resp_max_m, "Largest allowed decimation factor");
    response->add_option("--out", resp_out, "Write CSV here instead of stdout");

    // --- filter ---
    auto* filter = app.add_subcommand("filter", "Stream a signal through the filter");
    std::string filt_proto, filt_in, filt_out;
    double filt_center = 0.31, filt_bw = 0.02;
    int filt_max_m = vdf::DecimationFactor::kDefaultMax;
    bool filt_binary = false;
    std::vector<std::string> filt_retunes;
    filter->add_option("--proto", filt_proto, "Prototype JSON file")->required();
    filter->add_option("--center", filt_center, "Initial target center")->required();
    filter->add_option("--bandwidth", filt_bw, "Initial target bandwidth")->required();
    filter->add_option("--in", filt_in, "Input signal file")->required();
    filter->add_option("--out", filt_out, "Output signal file")->required();
    filter->add_option("--retune-at", filt_retunes,
                       "Retune point n:center:bw (repeatable, increasing n)");
    filter->add_option("--max-m", filt_max_m, "Largest allowed decimation factor");
    filter->add_flag("--binary", filt_binary, "Signals are raw 64-bit little-endian floats");

    // --- cost ---
    auto* cost = app.add_subcommand("cost", "Print the gate-count comparison table");
    bool cost_json = false;
    cost->add_flag("--json", cost_json, "Emit JSON instead of the text table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    }

    if (design->parsed()) {
        vdf::FilterSpec designed = spec;
        designed.stopband_atten_db += vdf::overdesign_margin(spec.stopband_atten_db, max_m);
        const vdf::PrototypeFilter proto = vdf::design_bandpass(designed, max_order);
        if (design_text) {
            std::ofstream file;
            std::ostream& os = open_output(file, design_out);
            vdf::write_coefficients_text(proto, os);
        } else {
            emit_json(vdf::prototype_to_json(proto), design_out);
        }
        return kExitOk;
    }

    if (tune->parsed()) {
        const vdf::PrototypeFilter proto = vdf::load_prototype(tune_proto);
        const vdf::VariableFilter vf =
            vdf::VariableFilter::build(proto, tune_center, tune_bw, tune_max_m);
        const vdf::VdfConfig& cfg = vf.config();
        const vdf::BandpassMeasurement& m = vf.achieved();
        const double predicted = vdf::center_after_tuning(
            proto.spec.center, cfg.alpha, vdf::DecimationFactor(cfg.m, tune_max_m));
        nlohmann::json j{{"alpha", cfg.alpha.value()},
                         {"m", cfg.m},
                         {"target_center", cfg.target_center},
                         {"target_bandwidth", cfg.target_bandwidth},
                         {"predicted_center", predicted},
                         {"measured_center", m.center},
                         {"measured_bandwidth", m.bandwidth_3db},
                         {"measured_ripple_db", m.passband_ripple_db},
                         {"measured_stopband_atten_db", m.stopband_atten_db},
                         {"measured_peak_db", m.peak_db}};
        emit_json(j, tune_out);
        return kExitOk;
    }

    if (response->parsed()) {
        const bool direct = resp_alpha.has_value() || resp_m.has_value();
        const bool targeted = resp_center.has_value() || resp_bw.has_value();
        if (direct == targeted) {
            std::cerr << "give either --alpha/--m or --center/--bandwidth, not both\n";
            return kExitInput;
        }
        const vdf::PrototypeFilter proto = vdf::load_prototype(resp_proto);
        vdf::ResponseCurve curve;
        if (direct) {
            const double alpha = resp_alpha.value_or(0.0);
            const int m = resp_m.value_or(1);
            const std::vector<double> coeffs =
                vdf::decimate_coefficients(proto, vdf::DecimationFactor(m, resp_max_m));
            curve = vdf::sweep(coeffs, vdf::WarpingCoefficient(alpha), resp_grid);
        } else {
            if (!resp_center || !resp_bw) {
                std::cerr << "--center and --bandwidth must be given together\n";
                return kExitInput;
            }
            const vdf::VariableFilter vf =
                vdf::VariableFilter::build(proto, *resp_center, *resp_bw, resp_max_m);
            curve = vf.response(resp_grid);
        }
        std::ofstream file;
        std::ostream& os = open_output(file, resp_out);
        vdf::write_curve_csv(curve, os);
        return kExitOk;
    }

    if (filter->parsed()) {
        const vdf::PrototypeFilter proto = vdf::load_prototype(filt_proto);
        const vdf::SignalFormat fmt =
            filt_binary ? vdf::SignalFormat::f64le_binary : vdf::SignalFormat::csv_text;
        const std::vector<double> input = vdf::read_signal_file(filt_in, fmt);
        if (input.empty()) throw vdf::spec_error("input signal is empty");

        std::vector<RetunePoint> retunes;
        retunes.reserve(filt_retunes.size());
        for (const std::string& text : filt_retunes) retunes.push_back(parse_retune(text));
        for (std::size_t i = 1; i < retunes.size(); ++i) {
            if (retunes[i].sample <= retunes[i - 1].sample) {
                throw vdf::spec_error("--retune-at samples must be strictly increasing");
            }
        }
        // Validate every retune before producing output so a failure never
        // leaves a partial file behind.
        const double upper_edge =
            proto.spec.center + proto.spec.bandwidth / 2.0 + proto.spec.transition_width;
        for (const RetunePoint& p : retunes) {
            const vdf::DecimationFactor m =
                vdf::choose_m(proto.spec.bandwidth, p.bandwidth, filt_max_m);
            (void)vdf::alpha_for_center(proto.spec.center, p.center, m);
            if (m.value() * upper_edge >= 1.0) {
                throw vdf::tuning_error("retune would push the passband past Nyquist");
            }
        }

        vdf::VariableFilter vf = vdf::VariableFilter::build(proto, filt_center, filt_bw, filt_max_m);
        std::vector<double> output;
        output.reserve(input.size());
        std::size_t pos = 0;
        for (const RetunePoint& p : retunes) {
            if (p.sample >= input.size()) break;
            if (p.sample > pos) {
                const std::span<const double> chunk(input.data() + pos, p.sample - pos);
                const std::vector<double> y = vf.process(chunk);
                output.insert(output.end(), y.begin(), y.end());
                pos = p.sample;
            }
            vf.retune(p.center, p.bandwidth);
        }
        if (pos < input.size()) {
            const std::span<const double> chunk(input.data() + pos, input.size() - pos);
            const std::vector<double> y = vf.process(chunk);
            output.insert(output.end(), y.begin(), y.end());
        }
        vdf::write_signal_file(output, filt_out, fmt);
        return kExitOk;
    }

    if (cost->parsed()) {
        const auto reports = vdf::cost_reports();
        const vdf::UnitGateCosts units = vdf::derive_unit_costs();
        if (cost_json) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : reports) rows.push_back(vdf::cost_report_to_json(r));
            nlohmann::json j{{"unit_gate_costs",
                              {{"mult_gates", units.mult_gates},
                               {"adder_gates", units.adder_gates},
                               {"mux_gates", units.mux_gates},
                               {"memword_gates", units.memword_gates},
                               {"ref4_integer_residual_gates", units.ref4_integer_residual_gates}}},
                             {"architectures", rows}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::printf("%-42s %8s %6s %8s %8s %12s %8s\n", "Architecture", "Mults", "Muxes",
                        "Adders", "MemWords", "TotalGates", "vsProp");
            for (const auto& r : reports) {
                std::printf("%-42s %8d %6d %8d %8d %12.0f %+7d%%\n", r.name.c_str(),
                            r.counts.multipliers, r.counts.multiplexers_4to1, r.counts.adders,
                            r.counts.memory_words, r.total_gates,
                            static_cast<int>(r.delta_vs_proposed_pct));
            }
            std::printf("unit gate costs: multiplier %.0f, adder %.0f, 4:1 mux %.0f, "
                        "memory word %.4f\n",
                        units.mult_gates, units.adder_gates, units.mux_gates,
                        units.memword_gates);
            std::printf("note: the memory-word cost is non-integer; rounding it to the nearest "
                        "integer shifts the [4] total by %.0f gates\n",
                        units.ref4_integer_residual_gates);
        }
        return kExitOk;
    }

    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const vdf::tuning_error& e) {
        std::cerr << "tuning infeasible: " << e.what() << '\n';
        return kExitTuning;
    } catch (const vdf::spec_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
