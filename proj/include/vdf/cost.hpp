#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vdf {

/// The four variable-bandpass architectures compared in the published
/// complexity analysis.
enum class Architecture {
    warped_ref1,          // bank of five warped FIR filters
    warped_2nd_order_ref3, // warped filter, second-order transformation
    warped_memory_ref4,   // warped filter with coefficient memory
    proposed,             // warped filter + coefficient decimation
};

struct ComponentCounts {
    int multipliers = 0;
    int multiplexers_4to1 = 0;
    int adders = 0;
    int memory_words = 0;
};

/// Equivalent two-input-NAND gate cost of each component class.
struct UnitGateCosts {
    double mult_gates = 0.0;
    double adder_gates = 0.0;
    double mux_gates = 0.0;
    double memword_gates = 0.0;

    /// The published memory-word cost is not an integer; the distance of
    /// the reconstructed ref4 total from the nearest integer-cost total,
    /// in gates.
    double ref4_integer_residual_gates = 0.0;
};

struct CostReport {
    Architecture architecture;
    std::string name;
    ComponentCounts counts;
    double total_gates = 0.0;
    double delta_vs_proposed_pct = 0.0;
};

inline const char* architecture_name(Architecture a) {
    switch (a) {
        case Architecture::warped_ref1: return "Warped filter [1]";
        case Architecture::warped_2nd_order_ref3: return "Warped filter, 2nd-order transform [3]";
        case Architecture::warped_memory_ref4: return "Warped filter with memory [4]";
        case Architecture::proposed: return "Proposed VDF";
    }
    throw std::invalid_argument("unknown architecture");
}

/// Published component counts, verbatim.
inline ComponentCounts table1_counts(Architecture a) {
    switch (a) {
        case Architecture::warped_ref1: return {3125, 0, 1750, 0};
        case Architecture::warped_2nd_order_ref3: return {1375, 0, 3300, 0};
        case Architecture::warped_memory_ref4: return {825, 0, 1650, 1275};
        case Architecture::proposed: return {901, 600, 1800, 0};
    }
    throw std::invalid_argument("unknown architecture");
}

/// Published total gate counts, verbatim.
inline double table1_total(Architecture a) {
    switch (a) {
        case Architecture::warped_ref1: return 5706250.0;
        case Architecture::warped_2nd_order_ref3: return 3080000.0;
        case Architecture::warped_memory_ref4: return 1820750.0;
        case Architecture::proposed: return 1957700.0;
    }
    throw std::invalid_argument("unknown architecture");
}

inline double total_gates(const ComponentCounts& c, const UnitGateCosts& u) {
    return c.multipliers * u.mult_gates + c.adders * u.adder_gates +
           c.multiplexers_4to1 * u.mux_gates + c.memory_words * u.memword_gates;
}

/// Per-component gate costs recovered from the published table. The
/// multiplier/adder pair comes from the two memory- and mux-free rows
/// (an exact 2x2 solve), the mux cost from the proposed row, and the
/// memory-word cost from the ref4 row. Each extra unknown appears in
/// exactly one equation, so this is the least-squares solution of the
/// full system with zero residual. The recovered memory-word cost is
/// not an integer, which is recorded as evidence of a rounding
/// inconsistency in the published ref4 row.
inline UnitGateCosts derive_unit_costs() {
    const ComponentCounts r1 = table1_counts(Architecture::warped_ref1);
    const ComponentCounts r3 = table1_counts(Architecture::warped_2nd_order_ref3);
    const ComponentCounts r4 = table1_counts(Architecture::warped_memory_ref4);
    const ComponentCounts rp = table1_counts(Architecture::proposed);
    const double t1 = table1_total(Architecture::warped_ref1);
    const double t3 = table1_total(Architecture::warped_2nd_order_ref3);
    const double t4 = table1_total(Architecture::warped_memory_ref4);
    const double tp = table1_total(Architecture::proposed);

    const double det = static_cast<double>(r1.multipliers) * r3.adders -
                       static_cast<double>(r1.adders) * r3.multipliers;
    if (det == 0.0) throw std::runtime_error("singular gate-cost system");

    UnitGateCosts u;
    u.mult_gates = (t1 * r3.adders - t3 * r1.adders) / det;
    u.adder_gates = (t3 * r1.multipliers - t1 * r3.multipliers) / det;
    u.mux_gates =
        (tp - rp.multipliers * u.mult_gates - rp.adders * u.adder_gates) / rp.multiplexers_4to1;
    u.memword_gates =
        (t4 - r4.multipliers * u.mult_gates - r4.adders * u.adder_gates) / r4.memory_words;
    u.ref4_integer_residual_gates =
        std::abs(u.memword_gates - std::round(u.memword_gates)) * r4.memory_words;
    return u;
}

/// Gate-count saving of the proposed architecture relative to another,
/// as a percentage of the other's total.
inline double savings_vs(double proposed_total, double other_total) {
    if (!(proposed_total > 0.0 && other_total > 0.0)) {
        throw std::invalid_argument("totals must be positive");
    }
    return (other_total - proposed_total) / other_total * 100.0;
}

inline std::array<CostReport, 4> cost_reports() {
    const UnitGateCosts u = derive_unit_costs();
    const double proposed_total = total_gates(table1_counts(Architecture::proposed), u);
    std::array<CostReport, 4> reports{};
    const std::array<Architecture, 4> order = {
        Architecture::warped_ref1,
        Architecture::warped_2nd_order_ref3,
        Architecture::warped_memory_ref4,
        Architecture::proposed,
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        CostReport& r = reports[i];
        r.architecture = order[i];
        r.name = architecture_name(order[i]);
        r.counts = table1_counts(order[i]);
        r.total_gates = total_gates(r.counts, u);
        r.delta_vs_proposed_pct = savings_vs(proposed_total, r.total_gates);
    }
    return reports;
}

} // namespace vdf
