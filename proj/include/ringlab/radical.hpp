#pragma once

#include <cstdint>
#include <string>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Brute-force computations over the full universe. Results are cached on the
// ring (at-most-once initialization), so repeated queries are free. Every
// function refuses rings whose order^2 sweep would exceed `budget`.
struct RadicalOptions {
    std::uint64_t budget = 1'000'000'000;
};

// {u : exists v with uv = vu = 1}; the scan verifies both sides.
const ElemSet& units(const Ring& ring, const RadicalOptions& opt = {});

// {x : 1 - r*x is a unit for every r}. Verified to be a two-sided ideal
// before it is returned; a verification failure is a ConsistencyFault.
const ElemSet& jacobson_radical(const Ring& ring, const RadicalOptions& opt = {});

// {x : x^k = 0 for some k <= order}.
const ElemSet& nilpotents(const Ring& ring, const RadicalOptions& opt = {});

// Membership test that does not need the full radical, only the unit set.
bool in_jacobson_radical(const Ring& ring, Elem x, const RadicalOptions& opt = {});

// Non-units form a two-sided ideal. The one-element ring is not local.
bool is_local(const Ring& ring, const RadicalOptions& opt = {});

struct RadicalReport {
    std::string ring_label;
    std::uint64_t order = 0;
    ElemSet units;
    ElemSet jacobson;
    ElemSet nilpotents;
    bool is_j_semisimple = false;
};

RadicalReport radical_report(const Ring& ring, const RadicalOptions& opt = {});

}  // namespace ringlab
