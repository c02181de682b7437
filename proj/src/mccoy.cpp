#include "ringlab/mccoy.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ringlab/constructions.hpp"

namespace ringlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::McCoy: return "mccoy";
        case Family::NcMcCoy: return "nc-mccoy";
        case Family::JMcCoy: return "j-mccoy";
    }
    return "?";
}

std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "mccoy") return Family::McCoy;
    if (name == "nc-mccoy") return Family::NcMcCoy;
    if (name == "j-mccoy") return Family::JMcCoy;
    return std::nullopt;
}

std::optional<Side> side_from_name(std::string_view name) {
    if (name == "right") return Side::Right;
    if (name == "left") return Side::Left;
    return std::nullopt;
}

namespace {

// Membership test for the family's target set; the McCoy target is {0} and
// needs no derived sets at all.
struct Target {
    const Ring& ring;
    Family fam;
    const ElemSet* set = nullptr;

    Target(const Ring& r, Family f, const RadicalOptions& ropt) : ring(r), fam(f) {
        if (fam == Family::NcMcCoy) set = &nilpotents(r, ropt);
        if (fam == Family::JMcCoy) set = &jacobson_radical(r, ropt);
    }

    bool contains(Elem x) const {
        return fam == Family::McCoy ? ring.is_zero(x) : set->contains(x);
    }
};

std::optional<Elem> least_witness(const Ring& R, const std::vector<Elem>& coeffs,
                                  const Target& target) {
    for (std::uint64_t r = 1; r < R.order(); ++r) {
        bool ok = true;
        for (Elem a : coeffs)
            if (!target.contains(R.mul(a, Elem{r}))) {
                ok = false;
                break;
            }
        if (ok) return Elem{r};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Elem> witness_right(const Poly& f, Family fam, const RadicalOptions& ropt) {
    if (f.is_zero()) throw ConstructionError("witness search needs a nonzero polynomial");
    Target target(*f.ring(), fam, ropt);
    return least_witness(*f.ring(), f.coeffs(), target);
}

bool witness_admissible(const Poly& f, Elem r, Family fam, const RadicalOptions& ropt) {
    if (f.ring()->is_zero(r)) return false;
    Target target(*f.ring(), fam, ropt);
    Poly fr = poly_scale_right(f, r);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (!target.contains(fr.coeff(i))) return false;
    return true;
}

bool left_witness_admissible(const Poly& g, Elem r, Family fam, const RadicalOptions& ropt) {
    if (g.ring()->is_zero(r)) return false;
    Target target(*g.ring(), fam, ropt);
    Poly rg = poly_scale_left(r, g);
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
        if (!target.contains(rg.coeff(j))) return false;
    return true;
}

bool verify_no_witness(const Poly& f, Family fam, const RadicalOptions& ropt) {
    for (std::uint64_t r = 1; r < f.ring()->order(); ++r)
        if (witness_admissible(f, Elem{r}, fam, ropt)) return false;
    return true;
}

bool verify_no_left_witness(const Poly& g, Family fam, const RadicalOptions& ropt) {
    for (std::uint64_t r = 1; r < g.ring()->order(); ++r)
        if (left_witness_admissible(g, Elem{r}, fam, ropt)) return false;
    return true;
}

namespace {

struct WorkerResult {
    bool found = false;
    std::uint64_t fcode = 0, gcode = 0;
    std::optional<ZeroPair> pair;
    std::vector<WitnessEntry> log;
    bool log_overflow = false;
    std::uint64_t zero_pairs = 0;
};

struct SharedSearch {
    std::atomic<std::uint64_t> best_fcode{~std::uint64_t(0)};
    std::atomic<bool> aborted{false};
};

// One worker's contiguous slice of the f-code space. Stops early once every
// remaining f-code exceeds the globally best counterexample.
void run_slice(const RingPtr& ring, Family fam, int dmax, std::uint64_t lo, std::uint64_t hi,
               const Target& target, std::size_t log_cap, BudgetCounter& budget,
               SharedSearch& shared, WorkerResult& out) {
    std::uint64_t last_f = ~std::uint64_t(0);
    enumerate_zero_pairs_range(
        ring, dmax, lo, hi, budget,
        [&](const ZeroPair& pair, std::uint64_t fcode, std::uint64_t gcode) {
            if (shared.aborted.load(std::memory_order_relaxed)) return false;
            if (fcode != last_f) {
                last_f = fcode;
                if (fcode > shared.best_fcode.load(std::memory_order_relaxed)) return false;
            }
            ++out.zero_pairs;
            std::optional<Elem> w = least_witness(*ring, pair.f.coeffs(), target);
            if (!w) {
                out.found = true;
                out.fcode = fcode;
                out.gcode = gcode;
                out.pair = pair;
                // publish so other slices can stop past this f
                std::uint64_t cur = shared.best_fcode.load(std::memory_order_relaxed);
                while (fcode < cur &&
                       !shared.best_fcode.compare_exchange_weak(cur, fcode,
                                                                std::memory_order_relaxed)) {
                }
                return false;
            }
            if (!witness_admissible(pair.f, *w, fam))
                throw ConsistencyFault("witness search and verification disagree on " +
                                       poly_to_string(pair.f));
            if (out.log.size() < log_cap)
                out.log.push_back(WitnessEntry{fcode, gcode, pair, *w});
            else
                out.log_overflow = true;
            return true;
        });
}

}  // namespace

Verdict check_property(RingPtr ring, PropertyKind kind, int dmax, const CheckOptions& opt) {
    if (dmax < 0) throw ConstructionError("max degree must be >= 0");

    RingPtr search = ring;
    if (kind.side == Side::Left) {
        Config cfg;
        cfg.axiom_check_on_build = false;  // mirror image of an already-checked ring
        search = make_opposite(ring, cfg);
    }

    // Refuse on the upfront estimate before paying for any derived sets.
    const std::uint64_t fspace = zero_pair_candidate_space(*search, dmax, opt.budget);
    Target target(*search, kind.family, opt.radical);

    int workers = std::max(1, opt.workers);
    if (opt.observer) workers = 1;  // observers see the canonical order
    if (static_cast<std::uint64_t>(workers) > fspace) workers = static_cast<int>(fspace);
    if (workers < 1) workers = 1;

    BudgetCounter budget(opt.budget);
    SharedSearch shared;
    std::vector<WorkerResult> results(static_cast<std::size_t>(workers));

    if (workers == 1) {
        WorkerResult& r = results[0];
        enumerate_zero_pairs_range(
            search, dmax, 0, fspace, budget,
            [&](const ZeroPair& pair, std::uint64_t fcode, std::uint64_t gcode) {
                ++r.zero_pairs;
                std::optional<Elem> w = least_witness(*search, pair.f.coeffs(), target);
                if (opt.observer) opt.observer(pair, w);
                if (!w) {
                    r.found = true;
                    r.fcode = fcode;
                    r.gcode = gcode;
                    r.pair = pair;
                    return false;
                }
                if (!witness_admissible(pair.f, *w, kind.family))
                    throw ConsistencyFault("witness search and verification disagree on " +
                                           poly_to_string(pair.f));
                if (r.log.size() < opt.witness_log_cap)
                    r.log.push_back(WitnessEntry{fcode, gcode, pair, *w});
                else
                    r.log_overflow = true;
                return true;
            });
    } else {
        const std::uint64_t chunk = fspace / static_cast<std::uint64_t>(workers);
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
            std::uint64_t hi = (w + 1 == workers) ? fspace : lo + chunk;
            threads.emplace_back([&, w, lo, hi] {
                try {
                    run_slice(search, kind.family, dmax, lo, hi, target, opt.witness_log_cap,
                              budget, shared, results[static_cast<std::size_t>(w)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                    shared.aborted.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Merge: the least counterexample wins; its f-code slice is unique to one
    // worker, so comparing f-codes is enough.
    const WorkerResult* best = nullptr;
    for (const WorkerResult& r : results)
        if (r.found && (!best || r.fcode < best->fcode)) best = &r;

    Verdict verdict;
    verdict.ring_label = ring->label();
    verdict.kind = kind;
    verdict.dmax = dmax;
    verdict.workers = workers;

    std::vector<WitnessEntry> merged;
    for (WorkerResult& r : results) {
        for (WitnessEntry& e : r.log) merged.push_back(std::move(e));
        verdict.log_truncated = verdict.log_truncated || r.log_overflow;
    }
    std::sort(merged.begin(), merged.end(), [](const WitnessEntry& a, const WitnessEntry& b) {
        return a.fcode != b.fcode ? a.fcode < b.fcode : a.gcode < b.gcode;
    });

    if (best) {
        verdict.holds = false;
        const ZeroPair& cex = *best->pair;

        // Independent re-verification of the counterexample.
        if (!(poly_mul(cex.f, cex.g).is_zero()) || cex.f.is_zero() || cex.g.is_zero())
            throw ConsistencyFault("counterexample pair does not multiply to zero");
        if (!verify_no_witness(cex.f, kind.family, opt.radical))
            throw ConsistencyFault("counterexample has a witness after all: " +
                                   poly_to_string(cex.f));

        // Deterministic rank of the counterexample pair, independent of the
        // worker schedule: recount the zero pairs up to and including it.
        std::uint64_t rank = 0;
        BudgetCounter rank_budget(opt.budget);
        enumerate_zero_pairs_range(search, dmax, 0, best->fcode + 1, rank_budget,
                                   [&](const ZeroPair&, std::uint64_t fc, std::uint64_t gc) {
                                       if (fc < best->fcode ||
                                           (fc == best->fcode && gc <= best->gcode)) {
                                           ++rank;
                                           return true;
                                       }
                                       return false;
                                   });
        verdict.pairs_examined = rank;

        // Only pairs before the counterexample belong in the log.
        std::erase_if(merged, [&](const WitnessEntry& e) {
            return e.fcode > best->fcode || (e.fcode == best->fcode && e.gcode >= best->gcode);
        });

        verdict.counterexample = cex;
    } else {
        verdict.holds = true;
        for (const WorkerResult& r : results) verdict.pairs_examined += r.zero_pairs;
    }

    if (merged.size() > opt.witness_log_cap) {
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(opt.witness_log_cap),
                     merged.end());
        verdict.log_truncated = true;
    }
    verdict.witness_log = std::move(merged);

    // Left-side results are re-expressed over the original ring: the pair
    // (F, G) of the opposite ring is the pair (G, F) of R, and the witness
    // multiplies the second polynomial's coefficients from the left.
    if (kind.side == Side::Left) {
        auto to_ring = [&](const Poly& p) { return Poly(ring, p.coeffs()); };
        if (verdict.counterexample) {
            ZeroPair swapped{to_ring(verdict.counterexample->g), to_ring(verdict.counterexample->f)};
            if (!poly_mul(swapped.f, swapped.g).is_zero())
                throw ConsistencyFault("left counterexample does not multiply to zero over " +
                                       ring->label());
            if (!verify_no_left_witness(swapped.g, kind.family, opt.radical))
                throw ConsistencyFault("left counterexample has a witness over " + ring->label());
            verdict.counterexample = std::move(swapped);
        }
        for (WitnessEntry& e : verdict.witness_log)
            e.pair = ZeroPair{to_ring(e.pair.g), to_ring(e.pair.f)};
    }
    return verdict;
}

AuditReport implication_audit(RingPtr ring, int dmax, const CheckOptions& opt) {
    AuditReport report;
    report.ring_label = ring->label();
    report.dmax = dmax;

    const Ring& R = *ring;
    const ElemSet& nil = nilpotents(R, opt.radical);
    const ElemSet& jac = jacobson_radical(R, opt.radical);
    const ElemSet& u = units(R, opt.radical);
    report.j_semisimple = jac.size() == 1;
    report.nil_inside_radical = true;
    for (Elem x : nil.members())
        if (!jac.contains(x)) {
            report.nil_inside_radical = false;
            break;
        }

    EnumOptions eopt;
    eopt.budget = opt.budget;
    enumerate_zero_pairs(ring, dmax, eopt, [&](const ZeroPair& pair, std::uint64_t, std::uint64_t) {
        ++report.pairs;
        std::vector<bool> mc(R.order(), false), jm(R.order(), false);
        bool any_mc = false, any_nc = false, any_j = false, nc_excess = false;
        for (std::uint64_t r = 1; r < R.order(); ++r) {
            bool is_mc = true, is_nc = true, is_j = true;
            for (Elem a : pair.f.coeffs()) {
                Elem p = R.mul(a, Elem{r});
                if (!R.is_zero(p)) is_mc = false;
                if (!nil.contains(p)) is_nc = false;
                if (!jac.contains(p)) is_j = false;
                if (!is_mc && !is_nc && !is_j) break;
            }
            mc[r] = is_mc;
            jm[r] = is_j;
            any_mc |= is_mc;
            any_nc |= is_nc;
            any_j |= is_j;

            if (is_mc && !is_nc)
                throw ConsistencyFault("audit: a McCoy witness is not an NC witness for " +
                                       poly_to_string(pair.f));
            if (is_nc && !is_j) nc_excess = true;
            if (is_nc && report.nil_inside_radical) {
                // here nilpotents are quasi-regular; re-prove it per element
                // by the definition rather than through the cached radical
                for (Elem a : pair.f.coeffs()) {
                    Elem p = R.mul(a, Elem{r});
                    for (std::uint64_t t = 0; t < R.order(); ++t)
                        if (!u.contains(R.sub(R.one(), R.mul(Elem{t}, p))))
                            throw ConsistencyFault(
                                "audit: nilpotent coefficient product is not quasi-regular in " +
                                R.label());
                }
                if (!is_j)
                    throw ConsistencyFault("audit: an NC witness is not a J witness for " +
                                           poly_to_string(pair.f));
            }
        }
        if (report.j_semisimple && !(mc == jm))
            throw ConsistencyFault("audit: J-semisimple ring but J and McCoy witness sets differ");
        report.mccoy_witnessed += any_mc ? 1 : 0;
        report.nc_witnessed += any_nc ? 1 : 0;
        report.j_witnessed += any_j ? 1 : 0;
        report.nc_not_j_pairs += nc_excess ? 1 : 0;
        return true;
    });
    if (report.nil_inside_radical && report.nc_not_j_pairs != 0)
        throw ConsistencyFault("audit: NC witness sets exceed J witness sets although the "
                               "nilpotents sit inside the radical");
    return report;
}

}  // namespace ringlab
