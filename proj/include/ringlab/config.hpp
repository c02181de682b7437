#pragma once

#include <cstdint>

namespace ringlab {

// Construction-time knobs. Every factory takes one; the CLI builds it from
// global flags.
struct Config {
    // Full Cayley tables are materialized at or below this order; larger rings
    // evaluate operations structurally on demand. Must stay <= 65535 because
    // table entries are stored as uint16.
    std::uint64_t table_cap = 4096;

    // Hard ceiling on the order of any constructible ring. Constructions whose
    // element universe would not fit are refused with a size report.
    std::uint64_t structural_cap = std::uint64_t(1) << 62;

    // Operations that must sweep the whole universe (quotients, corners,
    // derived-set scans, label lookups) refuse beyond this order.
    std::uint64_t enumeration_cap = std::uint64_t(1) << 24;

    // Construction-time axiom check: exhaustive at or below this order,
    // deterministic sampling above.
    std::uint64_t axiom_exhaustive_cap = 64;
    std::uint64_t axiom_samples = 2048;
    bool axiom_check_on_build = true;
};

}  // namespace ringlab
