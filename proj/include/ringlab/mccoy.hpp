#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/poly.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// The three witness conditions share one search: given a zero pair (f, g),
// look for a nonzero r with every coefficient product a_i * r landing in the
// family's target set ({0}, the nilpotents, or the Jacobson radical).
enum class Family { McCoy, NcMcCoy, JMcCoy };
enum class Side { Right, Left };

struct PropertyKind {
    Family family = Family::JMcCoy;
    Side side = Side::Right;
};

std::string family_name(Family f);
std::string side_name(Side s);
std::optional<Family> family_from_name(std::string_view name);
std::optional<Side> side_from_name(std::string_view name);

// Least-index nonzero r with a_i * r in the family target for every
// coefficient a_i of f; nullopt when no such r exists.
std::optional<Elem> witness_right(const Poly& f, Family fam, const RadicalOptions& ropt = {});

// Re-verification along a different code path: multiplies the whole
// polynomial by r and tests every coefficient's membership.
bool witness_admissible(const Poly& f, Elem r, Family fam, const RadicalOptions& ropt = {});
bool left_witness_admissible(const Poly& g, Elem r, Family fam, const RadicalOptions& ropt = {});

// Full scan certifying that no nonzero witness exists.
bool verify_no_witness(const Poly& f, Family fam, const RadicalOptions& ropt = {});
bool verify_no_left_witness(const Poly& g, Family fam, const RadicalOptions& ropt = {});

struct WitnessEntry {
    std::uint64_t fcode = 0, gcode = 0;  // search-order keys
    ZeroPair pair;
    Elem witness;
};

struct Verdict {
    std::string ring_label;
    PropertyKind kind;
    int dmax = 0;
    bool holds = true;
    std::optional<ZeroPair> counterexample;  // polynomials over the checked ring
    std::uint64_t pairs_examined = 0;        // zero pairs up to and including the failure
    std::vector<WitnessEntry> witness_log;
    bool log_truncated = false;
    int workers = 1;
};

struct CheckOptions {
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
    std::size_t witness_log_cap = 64;
    RadicalOptions radical;
    // Invoked for every zero pair in enumeration order with the witness that
    // was chosen (or nullopt on the counterexample). Setting an observer
    // forces the single-threaded path.
    std::function<void(const ZeroPair&, const std::optional<Elem>&)> observer;
};

// Streams the zero pairs of the ring (of the opposite ring for left-side
// checks) and witnesses each one. The first witness-free pair, in
// lexicographic pair order, becomes the counterexample; workers only change
// the schedule, never the verdict. Counterexamples are re-verified by an
// independent product check and a full witness-absence scan.
Verdict check_property(RingPtr ring, PropertyKind kind, int dmax, const CheckOptions& opt = {});

struct AuditReport {
    std::string ring_label;
    int dmax = 0;
    std::uint64_t pairs = 0;
    std::uint64_t mccoy_witnessed = 0;  // pairs with a nonempty admissible set
    std::uint64_t nc_witnessed = 0;
    std::uint64_t j_witnessed = 0;
    bool j_semisimple = false;        // J = 0, so the J and McCoy sets must agree
    bool nil_inside_radical = false;  // N(R) <= J(R); only then is NC <= J forced
    std::uint64_t nc_not_j_pairs = 0; // pairs with an NC witness set exceeding the J set
    bool ok = true;
};

// Per-pair containment audit. The McCoy set always sits inside the NC set.
// The NC-to-J step only follows when the nilpotents lie inside the radical
// (not a theorem in general rings); when they do, it is re-proved per element
// by a direct quasi-regularity scan, and a violation raises ConsistencyFault.
// Otherwise the excess is only counted. For J-semisimple rings the J set must
// equal the McCoy set.
AuditReport implication_audit(RingPtr ring, int dmax, const CheckOptions& opt = {});

}  // namespace ringlab
