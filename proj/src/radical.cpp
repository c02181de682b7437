#include "ringlab/radical.hpp"

#include <mutex>

namespace ringlab {
namespace {

void require_sweepable(const Ring& ring, const RadicalOptions& opt, const char* what) {
    const std::uint64_t n = ring.order();
    if (n != 0 && n > opt.budget / n)
        throw BudgetRefusal(std::string(what) + " needs an order^2 sweep of " + ring.label(),
                            ~std::uint64_t(0), opt.budget);
    if (n * n > opt.budget)
        throw BudgetRefusal(std::string(what) + " needs an order^2 sweep of " + ring.label(),
                            n * n, opt.budget);
}

ElemSet compute_units(const Ring& ring) {
    const std::uint64_t n = ring.order();
    const Elem one = ring.one(), zero = ring.zero();
    ElemSet out(n);
    for (std::uint64_t u = 0; u < n; ++u) {
        // Fast path: a unit's power sequence returns to 1, and then the
        // previous power is a two-sided inverse. Non-units never reach 1.
        bool found = false;
        Elem p{u};
        for (std::uint64_t k = 0; k < 256 && k < n; ++k) {
            if (p == one) {
                found = true;
                break;
            }
            p = ring.mul(p, Elem{u});
        }
        if (found) {
            out.insert(Elem{u});
            continue;
        }
        for (std::uint64_t v = 0; v < n; ++v) {
            Elem uv = ring.mul(Elem{u}, Elem{v});
            if (uv == one && ring.mul(Elem{v}, Elem{u}) == one) {
                out.insert(Elem{u});
                break;
            }
            // In a finite ring a left zero divisor has no right inverse
            // (left multiplication by u is a self-map, and 1 in its image
            // forces it bijective), so the rest of the scan cannot succeed.
            if (uv == zero && v != zero.v) break;
        }
    }
    return out;
}

// Ideal verification kept local so the radical's consistency check does not
// depend on the construction helpers it is meant to supervise.
bool ideal_check(const Ring& ring, const std::vector<Elem>& members, std::string* why) {
    ElemSet set = ElemSet::from_members(ring.order(), members);
    if (!set.contains(ring.zero())) {
        if (why) *why = "missing 0";
        return false;
    }
    for (Elem a : members) {
        if (!set.contains(ring.neg(a))) {
            if (why) *why = "not closed under negation";
            return false;
        }
        for (Elem b : members)
            if (!set.contains(ring.add(a, b))) {
                if (why) *why = "not closed under addition";
                return false;
            }
        for (std::uint64_t r = 0; r < ring.order(); ++r)
            if (!set.contains(ring.mul(Elem{r}, a)) || !set.contains(ring.mul(a, Elem{r}))) {
                if (why) *why = "not absorbed by ring multiplication";
                return false;
            }
    }
    return true;
}

}  // namespace

const ElemSet& units(const Ring& ring, const RadicalOptions& opt) {
    DerivedSets& d = ring.derived();
    if (d.units_ready.load(std::memory_order_acquire)) return d.units;
    require_sweepable(ring, opt, "unit scan");
    std::call_once(d.units_once, [&] {
        d.units = compute_units(ring);
        d.units_ready.store(true, std::memory_order_release);
    });
    return d.units;
}

const ElemSet& jacobson_radical(const Ring& ring, const RadicalOptions& opt) {
    DerivedSets& d = ring.derived();
    if (d.radical_ready.load(std::memory_order_acquire)) return d.radical;
    const ElemSet& u = units(ring, opt);
    std::call_once(d.radical_once, [&] {
        const std::uint64_t n = ring.order();
        ElemSet j(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            bool quasi_regular = true;
            for (std::uint64_t r = 0; r < n; ++r) {
                Elem y = ring.sub(ring.one(), ring.mul(Elem{r}, Elem{x}));
                if (!u.contains(y)) {
                    quasi_regular = false;
                    break;
                }
            }
            if (quasi_regular) j.insert(Elem{x});
        }
        std::string why;
        if (!ideal_check(ring, j.members(), &why))
            throw ConsistencyFault("radical scan of " + ring.label() +
                                   " produced a non-ideal: " + why);
        d.radical = std::move(j);
        d.radical_ready.store(true, std::memory_order_release);
    });
    return d.radical;
}

const ElemSet& nilpotents(const Ring& ring, const RadicalOptions& opt) {
    DerivedSets& d = ring.derived();
    if (d.nilpotents_ready.load(std::memory_order_acquire)) return d.nilpotents;
    require_sweepable(ring, opt, "nilpotency scan");
    std::call_once(d.nilpotents_once, [&] {
        const std::uint64_t n = ring.order();
        ElemSet out(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            Elem p{x};
            bool nil = ring.is_zero(p);
            // the nilpotency index of any element is at most the ring order
            for (std::uint64_t k = 1; !nil && k < n; ++k) {
                p = ring.mul(p, Elem{x});
                nil = ring.is_zero(p);
            }
            if (nil) out.insert(Elem{x});
        }
        d.nilpotents = std::move(out);
        d.nilpotents_ready.store(true, std::memory_order_release);
    });
    return d.nilpotents;
}

bool in_jacobson_radical(const Ring& ring, Elem x, const RadicalOptions& opt) {
    const ElemSet& u = units(ring, opt);
    for (std::uint64_t r = 0; r < ring.order(); ++r)
        if (!u.contains(ring.sub(ring.one(), ring.mul(Elem{r}, x)))) return false;
    return true;
}

bool is_local(const Ring& ring, const RadicalOptions& opt) {
    if (ring.order() == 1) return false;
    const ElemSet& u = units(ring, opt);
    std::call_once(ring.derived().local_once, [&] {
        std::vector<Elem> non_units;
        for (std::uint64_t x = 0; x < ring.order(); ++x)
            if (!u.contains(Elem{x})) non_units.push_back(Elem{x});
        ring.derived().local = ideal_check(ring, non_units, nullptr);
    });
    return ring.derived().local;
}

RadicalReport radical_report(const Ring& ring, const RadicalOptions& opt) {
    RadicalReport report;
    report.ring_label = ring.label();
    report.order = ring.order();
    report.units = units(ring, opt);
    report.jacobson = jacobson_radical(ring, opt);
    report.nilpotents = nilpotents(ring, opt);
    report.is_j_semisimple = report.jacobson.size() == 1;
    return report;
}

}  // namespace ringlab
