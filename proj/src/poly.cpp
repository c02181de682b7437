#include "ringlab/poly.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace ringlab {
namespace {

void require_same_ring(const Poly& f, const Poly& g) {
    if (f.ring().get() != g.ring().get())
        throw ConstructionError("polynomial operands live over different rings: " +
                                f.ring()->label() + " vs " + g.ring()->label());
}

}  // namespace

Poly poly_add(const Poly& f, const Poly& g) {
    require_same_ring(f, g);
    const Ring& R = *f.ring();
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), R.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(f.coeff(i), g.coeff(i));
    return Poly(f.ring(), std::move(out));
}

Poly poly_mul(const Poly& f, const Poly& g) {
    require_same_ring(f, g);
    const Ring& R = *f.ring();
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.ring());
    std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] = R.add(out[i + j], R.mul(f.coeffs()[i], g.coeffs()[j]));
    return Poly(f.ring(), std::move(out));
}

Poly poly_neg(const Poly& f) {
    const Ring& R = *f.ring();
    std::vector<Elem> out = f.coeffs();
    for (Elem& c : out) c = R.neg(c);
    return Poly(f.ring(), std::move(out));
}

Poly poly_scale_right(const Poly& f, Elem r) {
    const Ring& R = *f.ring();
    std::vector<Elem> out = f.coeffs();
    for (Elem& c : out) c = R.mul(c, r);
    return Poly(f.ring(), std::move(out));
}

Poly poly_scale_left(Elem r, const Poly& f) {
    const Ring& R = *f.ring();
    std::vector<Elem> out = f.coeffs();
    for (Elem& c : out) c = R.mul(r, c);
    return Poly(f.ring(), std::move(out));
}

Poly poly_shift(const Poly& f, std::size_t k) {
    if (f.is_zero()) return f;
    std::vector<Elem> out(f.coeffs().size() + k, f.ring()->zero());
    std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(f.ring(), std::move(out));
}

Poly pack_coefficients(std::span<const Poly> fs, std::size_t k) {
    if (fs.empty()) throw ConstructionError("pack_coefficients needs at least one polynomial");
    RingPtr ring = fs[0].ring();
    for (const Poly& f : fs) {
        if (f.ring().get() != ring.get())
            throw ConstructionError("pack_coefficients operands live over different rings");
        // degree of the zero polynomial counts as 0 here
        std::size_t deg = f.is_zero() ? 0 : static_cast<std::size_t>(f.degree());
        if (k <= deg)
            throw ConstructionError("pack_coefficients: k = " + std::to_string(k) +
                                    " must exceed every coefficient degree, found " +
                                    std::to_string(deg));
    }
    Poly out = Poly::zero(ring);
    for (std::size_t i = 0; i < fs.size(); ++i)
        out = poly_add(out, poly_shift(fs[i], k * i));
    return out;
}

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Ring& R = *f.ring();
    auto wrap = [](const std::string& s) {
        for (char c : s)
            if (c == '+' || c == '*' || c == ' ') return "(" + s + ")";
        return s;
    };
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Elem c = f.coeffs()[i];
        if (R.is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        out += wrap(R.elem_label(c));
        if (i == 1)
            out += "*x";
        else if (i >= 2)
            out += "*x^" + std::to_string(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zero-pair enumeration
// ---------------------------------------------------------------------------

namespace {

// Lexicographic code of a padded tuple (a_0,...,a_L-1): a_0 is the most
// significant digit, so ascending codes mean ascending tuples.
void code_decode(std::uint64_t code, std::uint64_t base, std::uint32_t len, Elem* out) {
    for (std::uint32_t p = len; p-- > 0;) {
        out[p] = Elem{code % base};
        code /= base;
    }
}

// Right-solution buckets for one pivot: bucket(v) lists, in ascending order,
// every x with pivot * x = v. Stored CSR-style.
struct SolutionBuckets {
    std::vector<std::uint32_t> start;  // size order+1
    std::vector<std::uint64_t> items;  // size order

    SolutionBuckets(const Ring& R, Elem pivot) {
        const std::uint64_t n = R.order();
        std::vector<std::uint32_t> count(n, 0);
        std::vector<std::uint64_t> target(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            target[x] = R.mul(pivot, Elem{x}).v;
            ++count[target[x]];
        }
        start.assign(n + 1, 0);
        for (std::uint64_t v = 0; v < n; ++v) start[v + 1] = start[v] + count[v];
        items.resize(n);
        std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
        for (std::uint64_t x = 0; x < n; ++x) items[cursor[target[x]]++] = x;
    }

    std::span<const std::uint64_t> of(Elem v) const {
        return {items.data() + start[v.v], items.data() + start[v.v + 1]};
    }
};

struct GSearch {
    const Ring& R;
    const std::vector<Elem>& a;  // padded f coefficients
    std::uint32_t L;
    std::uint32_t i0;  // first nonzero coefficient of f
    std::uint32_t df;  // last nonzero coefficient of f
    const SolutionBuckets& sols;
    std::vector<Elem> b;
    std::uint64_t local_ops = 0;
    const std::function<bool(const std::vector<Elem>&)>& emit;

    bool descend(std::uint32_t t) {
        if (t == L) return leaf();
        // c_(t+i0) = pivot * b_t + sum_{i>i0} a_i b_(t+i0-i); solve for b_t
        Elem s = R.zero();
        for (std::uint32_t i = i0 + 1; i <= df && i <= t + i0; ++i) {
            s = R.add(s, R.mul(a[i], b[t + i0 - i]));
            ++local_ops;
        }
        for (std::uint64_t x : sols.of(R.neg(s))) {
            b[t] = Elem{x};
            if (!descend(t + 1)) return false;
        }
        return true;
    }

    bool leaf() {
        bool nonzero = false;
        for (const Elem& c : b)
            if (!R.is_zero(c)) {
                nonzero = true;
                break;
            }
        if (!nonzero) return true;
        // residual convolution coefficients beyond the ones pinned in descend
        for (std::uint32_t k = L + i0; k <= df + L - 1; ++k) {
            Elem c = R.zero();
            std::uint32_t lo = k >= (L - 1) ? k - (L - 1) : 0;
            for (std::uint32_t i = std::max(i0, lo); i <= df && i <= k; ++i) {
                c = R.add(c, R.mul(a[i], b[k - i]));
                ++local_ops;
            }
            if (!R.is_zero(c)) return true;
        }
        return emit(b);
    }
};

}  // namespace

std::uint64_t zero_pair_candidate_space(const Ring& ring, int dmax, std::uint64_t budget) {
    if (dmax < 0) throw ConstructionError("max degree must be >= 0");
    std::uint64_t space = 1;
    for (int i = 0; i <= dmax; ++i) {
        if (ring.order() != 0 && space > budget / ring.order())
            throw BudgetRefusal("candidate space " + ring.label() + "^" + std::to_string(dmax + 1) +
                                    " per side exceeds the search budget",
                                ~std::uint64_t(0), budget);
        space *= ring.order();
    }
    if (space > budget)
        throw BudgetRefusal("candidate space exceeds the search budget", space, budget);
    return space;
}

bool enumerate_zero_pairs_range(const RingPtr& ring, int dmax, std::uint64_t f_lo,
                                std::uint64_t f_hi, BudgetCounter& budget,
                                const PairVisitor& visit) {
    const Ring& R = *ring;
    const std::uint32_t L = static_cast<std::uint32_t>(dmax) + 1;
    const std::uint64_t n = R.order();
    // each visited f needs an order-sized solution table
    if (n > (std::uint64_t(1) << 25))
        throw BudgetRefusal("solution buckets for " + R.label() + " would exhaust memory", n,
                            std::uint64_t(1) << 25);

    std::vector<Elem> a(L);
    std::vector<Elem> gbuf(L);
    std::uint64_t pending_ops = 0;

    // Consecutive f codes mostly share a pivot, so bucket tables are cached
    // per pivot value, bounded to keep the memory for huge rings in check.
    std::unordered_map<std::uint64_t, SolutionBuckets> bucket_cache;
    const std::uint64_t cache_item_cap = std::uint64_t(1) << 22;

    for (std::uint64_t fcode = f_lo; fcode < f_hi; ++fcode) {
        if (fcode == 0) continue;  // zero polynomial
        code_decode(fcode, n, L, a.data());

        std::uint32_t i0 = 0;
        while (R.is_zero(a[i0])) ++i0;
        std::uint32_t df = L - 1;
        while (R.is_zero(a[df])) --df;

        std::optional<SolutionBuckets> local;
        const SolutionBuckets* sols = nullptr;
        if (auto it = bucket_cache.find(a[i0].v); it != bucket_cache.end()) {
            sols = &it->second;
        } else if ((bucket_cache.size() + 1) * n <= cache_item_cap) {
            sols = &bucket_cache.emplace(a[i0].v, SolutionBuckets(R, a[i0])).first->second;
            pending_ops += n;
        } else {
            local.emplace(R, a[i0]);
            sols = &*local;
            pending_ops += n;
        }

        bool keep_going = true;
        auto emit = std::function<bool(const std::vector<Elem>&)>([&](const std::vector<Elem>& b) {
            std::uint64_t gcode = 0;
            for (std::uint32_t p = 0; p < L; ++p) gcode = gcode * n + b[p].v;
            std::vector<Elem> fc(a.begin(), a.begin() + df + 1);
            ZeroPair pair{Poly(ring, std::move(fc)), Poly(ring, b)};
            keep_going = visit(pair, fcode, gcode);
            return keep_going;
        });

        GSearch search{R, a, L, i0, df, *sols, gbuf, 0, emit};
        bool completed = search.descend(0);
        pending_ops += search.local_ops;
        budget.charge(pending_ops);
        pending_ops = 0;
        if (!completed && !keep_going) return false;
    }
    return true;
}

bool enumerate_zero_pairs(const RingPtr& ring, int dmax, const EnumOptions& opt,
                          const PairVisitor& visit) {
    std::uint64_t space = zero_pair_candidate_space(*ring, dmax, opt.budget);
    BudgetCounter budget(opt.budget);
    return enumerate_zero_pairs_range(ring, dmax, 0, space, budget, visit);
}

}  // namespace ringlab
