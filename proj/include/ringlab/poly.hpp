#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Polynomial over a ring with the indeterminate commuting with coefficients.
// Always normalized: no trailing zero coefficients, zero polynomial = empty.
class Poly {
  public:
    Poly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(RingPtr ring) { return Poly(std::move(ring), {}); }
    static Poly constant(RingPtr ring, Elem c) { return Poly(std::move(ring), {c}); }

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ring_.get() == b.ring_.get() && a.coeffs_ == b.coeffs_;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    RingPtr ring_;
    std::vector<Elem> coeffs_;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_neg(const Poly& f);
Poly poly_scale_right(const Poly& f, Elem r);  // coefficientwise f * r
Poly poly_scale_left(Elem r, const Poly& f);
Poly poly_shift(const Poly& f, std::size_t k);  // f * x^k

// Reads fs as the coefficient list of a polynomial in a second variable y
// (entry i = coefficient of y^i, itself a polynomial in x) and substitutes
// y = x^k. Requires k > deg(fs[i]) for every i, so the coefficient blocks
// cannot collide and the multiset of nonzero coefficients is preserved.
Poly pack_coefficients(std::span<const Poly> fs, std::size_t k);

// "a0 + a1*x + a2*x^2"; compound coefficient labels are parenthesized.
std::string poly_to_string(const Poly& f);

struct ZeroPair {
    Poly f, g;
};

// Thread-safe budget meter, charged in units of base-ring multiplications
// ("partial products"). Exceeding the limit raises BudgetRefusal.
class BudgetCounter {
  public:
    explicit BudgetCounter(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t ops) {
        std::uint64_t now = used_.fetch_add(ops, std::memory_order_relaxed) + ops;
        if (now > limit_)
            throw BudgetRefusal("search budget exhausted", now, limit_);
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const { return limit_; }

  private:
    std::atomic<std::uint64_t> used_{0};
    std::uint64_t limit_;
};

struct EnumOptions {
    std::uint64_t budget = 1'000'000'000;
};

// order^(dmax+1): the number of padded coefficient tuples per side. Throws
// BudgetRefusal when this upfront estimate alone exceeds the budget.
std::uint64_t zero_pair_candidate_space(const Ring& ring, int dmax, std::uint64_t budget);

// Visitor gets the normalized pair plus the lexicographic codes of the two
// padded coefficient tuples; returning false stops the enumeration early.
using PairVisitor = std::function<bool(const ZeroPair&, std::uint64_t fcode, std::uint64_t gcode)>;

// Yields every pair of nonzero polynomials f, g with deg f, deg g <= dmax and
// f*g = 0, exactly once, ordered lexicographically by (f, g) tuple codes,
// restricted to f codes in [f_lo, f_hi). Pruning: the first nonzero
// coefficient of f pins each g coefficient through the partial convolution
// sums, so only solutions of pivot * b = target are ever branched on.
// Returns false if the visitor stopped the walk.
bool enumerate_zero_pairs_range(const RingPtr& ring, int dmax, std::uint64_t f_lo,
                                std::uint64_t f_hi, BudgetCounter& budget,
                                const PairVisitor& visit);

bool enumerate_zero_pairs(const RingPtr& ring, int dmax, const EnumOptions& opt,
                          const PairVisitor& visit);

}  // namespace ringlab
