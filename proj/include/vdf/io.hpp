#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vdf/analyzer.hpp"
#include "vdf/cost.hpp"
#include "vdf/errors.hpp"
#include "vdf/prototype.hpp"

namespace vdf {

inline nlohmann::json spec_to_json(const FilterSpec& s) {
    return nlohmann::json{{"center", s.center},
                          {"bandwidth", s.bandwidth},
                          {"passband_ripple_db", s.passband_ripple_db},
                          {"stopband_atten_db", s.stopband_atten_db},
                          {"transition_width", s.transition_width}};
}

inline FilterSpec spec_from_json(const nlohmann::json& j) {
    FilterSpec s;
    try {
        s.center = j.at("center").get<double>();
        s.bandwidth = j.at("bandwidth").get<double>();
        s.passband_ripple_db = j.at("passband_ripple_db").get<double>();
        s.stopband_atten_db = j.at("stopband_atten_db").get<double>();
        s.transition_width = j.at("transition_width").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw spec_error(std::string("bad filter spec: ") + e.what());
    }
    return s;
}

inline nlohmann::json prototype_to_json(const PrototypeFilter& p) {
    return nlohmann::json{
        {"order", p.order()}, {"coeffs", p.coeffs}, {"spec", spec_to_json(p.spec)}};
}

inline PrototypeFilter prototype_from_json(const nlohmann::json& j) {
    PrototypeFilter p;
    try {
        p.coeffs = j.at("coeffs").get<std::vector<double>>();
        p.spec = spec_from_json(j.at("spec"));
        const int order = j.at("order").get<int>();
        if (order + 1 != static_cast<int>(p.coeffs.size())) {
            throw spec_error("prototype order does not match coefficient count");
        }
    } catch (const nlohmann::json::exception& e) {
        throw spec_error(std::string("bad prototype file: ") + e.what());
    }
    if (p.coeffs.empty()) throw spec_error("prototype has no coefficients");
    p.spec.validate();
    return p;
}

inline PrototypeFilter load_prototype(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open prototype file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw spec_error(std::string("bad prototype file: ") + e.what());
    }
    return prototype_from_json(j);
}

/// Plain-text export: one coefficient per line, round-trip precision.
inline void write_coefficients_text(const PrototypeFilter& p, std::ostream& os) {
    os.precision(17);
    for (double c : p.coeffs) os << c << '\n';
}

inline nlohmann::json measurement_to_json(const BandpassMeasurement& m) {
    return nlohmann::json{{"center", m.center},
                          {"bandwidth_3db", m.bandwidth_3db},
                          {"passband_ripple_db", m.passband_ripple_db},
                          {"stopband_atten_db", m.stopband_atten_db},
                          {"peak_db", m.peak_db}};
}

inline BandpassMeasurement measurement_from_json(const nlohmann::json& j) {
    BandpassMeasurement m;
    m.center = j.at("center").get<double>();
    m.bandwidth_3db = j.at("bandwidth_3db").get<double>();
    m.passband_ripple_db = j.at("passband_ripple_db").get<double>();
    m.stopband_atten_db = j.at("stopband_atten_db").get<double>();
    m.peak_db = j.at("peak_db").get<double>();
    return m;
}

inline nlohmann::json cost_report_to_json(const CostReport& r) {
    return nlohmann::json{{"architecture", r.name},
                          {"multipliers", r.counts.multipliers},
                          {"multiplexers_4to1", r.counts.multiplexers_4to1},
                          {"adders", r.counts.adders},
                          {"memory_words", r.counts.memory_words},
                          {"total_gates", r.total_gates},
                          {"delta_vs_proposed_pct", r.delta_vs_proposed_pct}};
}

enum class SignalFormat {
    csv_text,    // one real per line
    f64le_binary // raw 64-bit little-endian floats
};

inline std::vector<double> read_signal(std::istream& is, SignalFormat fmt) {
    std::vector<double> samples;
    if (fmt == SignalFormat::csv_text) {
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream row(line);
            double v = 0.0;
            if (!(row >> v)) throw spec_error("malformed sample line: " + line);
            samples.push_back(v);
        }
    } else {
        char buf[sizeof(double)];
        while (is.read(buf, sizeof(buf))) {
            double v;
            std::memcpy(&v, buf, sizeof(v));
            samples.push_back(v);
        }
        if (is.gcount() != 0) throw spec_error("binary signal length is not a multiple of 8");
    }
    return samples;
}

inline void write_signal(const std::vector<double>& samples, std::ostream& os,
                         SignalFormat fmt) {
    if (fmt == SignalFormat::csv_text) {
        os.precision(17);
        for (double v : samples) os << v << '\n';
    } else {
        for (double v : samples) {
            char buf[sizeof(double)];
            std::memcpy(buf, &v, sizeof(v));
            os.write(buf, sizeof(buf));
        }
    }
}

inline std::vector<double> read_signal_file(const std::string& path, SignalFormat fmt) {
    std::ifstream in(path, fmt == SignalFormat::f64le_binary ? std::ios::binary : std::ios::in);
    if (!in) throw spec_error("cannot open signal file: " + path);
    return read_signal(in, fmt);
}

inline void write_signal_file(const std::vector<double>& samples, const std::string& path,
                              SignalFormat fmt) {
    std::ofstream out(path, fmt == SignalFormat::f64le_binary ? std::ios::binary : std::ios::out);
    if (!out) throw spec_error("cannot open output file: " + path);
    write_signal(samples, out, fmt);
}

} // namespace vdf
