#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/mccoy.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// One runnable validation of a ring-theoretic claim over concrete finite
// instances. A failure always carries the reproducing instance; a skip always
// carries its reason. Bounded "holds" verdicts are never read as proofs, so
// only the refutable direction of a claim can fail.
struct Validation {
    enum class Status { Pass, Fail, Skipped };

    std::string name;
    std::string claim;  // one-line statement of what is being checked
    std::vector<std::string> instances;
    Status status = Status::Pass;
    std::string reason;  // failure detail or skip reason
    std::vector<std::string> evidence;
};

struct ValidationOptions {
    int dmax = 2;
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
};

// If I is inside the radical and R/I passes at dmax, R must not fail at dmax.
Validation validate_quotient(RingPtr ring, const Ideal& ideal, int dmax,
                             const ValidationOptions& opt = {});

// Local rings must never produce a J-McCoy counterexample (either side).
Validation validate_local(RingPtr ring, int dmax, const ValidationOptions& opt = {});

// Factors pass at dmax iff their product passes at dmax; the converse
// transfer is only refutable when the complementary factor is J-semisimple.
Validation validate_product(RingPtr r1, RingPtr r2, int dmax, const ValidationOptions& opt = {});

// Corner transfer: R passing forbids an eRe counterexample; the converse is
// audited only for abelian R.
Validation validate_corner(RingPtr ring, Elem e, int dmax, const ValidationOptions& opt = {});

// The full skew triangular ring and its S/T/A/B subrings are right J-McCoy at
// every bound, with E_(1n) admissible for every enumerated pair.
Validation validate_families(RingPtr base, std::uint32_t n, const RingMap& sigma,
                             std::string_view sigma_name, int dmax,
                             const ValidationOptions& opt = {});

// Triangular bimodule ring: verdict transfer in the refutable direction, the
// radical block shape, and the proof's witness constructions.
Validation validate_triangular(const Bimodule& bm, int dmax, const ValidationOptions& opt = {});

struct SeriesExampleOptions {
    int dmax = 1;
    std::uint64_t budget = 1'000'000'000;
    // Budget for the bounded property search over the generated subring; the
    // m = 4 instance deliberately refuses and reports the cost.
    std::uint64_t bounded_search_budget = 50'000'000;
};

// The generated matrix subring over a truncated series ring: normal form of
// the closure, the vanishing product of the two fixed polynomials, the
// radical membership of the coefficient products, and (budget permitting)
// the bounded right J-McCoy check.
Validation validate_series_matrix_example(std::uint32_t truncation,
                                          const SeriesExampleOptions& opt = {});

// Exact integer verification of the fixed 3x3 matrix polynomial identity,
// plus the finite surrogate counterexample search over Mat(Z2,2).
Validation validate_integer_matrix_identity(const ValidationOptions& opt = {});

// Every central regular element of a finite ring is a unit, so localizing at
// any admissible set changes nothing.
Validation validate_central_localization(RingPtr ring, const ValidationOptions& opt = {});

struct SuiteOptions {
    std::uint32_t truncation = 4;
    int dmax = 2;
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
};

// The full built-in suite over the default instances, including explicit
// skipped entries for the claims about infinite rings.
std::vector<Validation> run_builtin_suite(const SuiteOptions& opt = {});

}  // namespace ringlab
