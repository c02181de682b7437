#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/elem.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Lazily computed per-ring sets (filled by the radical functions). Each slot
// is initialized at most once; rings are otherwise immutable, so sharing a
// ring across threads is safe. The ready flags let later callers skip the
// cost guard once a set exists.
struct DerivedSets {
    std::once_flag units_once, radical_once, nilpotents_once, idempotents_once;
    std::once_flag abelian_once, local_once;
    std::atomic<bool> units_ready{false}, radical_ready{false}, nilpotents_ready{false};
    ElemSet units, radical, nilpotents, idempotents;
    bool abelian = false;
    bool local = false;
};

// A finite associative ring with identity over the element universe
// 0 .. order-1. Concrete constructions subclass and provide the structural
// operations; orders at or below the table cap get full Cayley tables.
class Ring {
  public:
    virtual ~Ring() = default;

    std::uint64_t order() const { return order_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const std::string& label() const { return label_; }

    Elem add(Elem a, Elem b) const {
        return add_tab_.empty() ? add_impl(a, b) : Elem{add_tab_[a.v * order_ + b.v]};
    }
    Elem mul(Elem a, Elem b) const {
        return mul_tab_.empty() ? mul_impl(a, b) : Elem{mul_tab_[a.v * order_ + b.v]};
    }
    Elem neg(Elem a) const { return neg_tab_.empty() ? neg_impl(a) : Elem{neg_tab_[a.v]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    bool is_zero(Elem a) const { return a == zero_; }
    bool is_one(Elem a) const { return a == one_; }

    virtual std::string elem_label(Elem a) const = 0;

    bool tables_materialized() const { return !mul_tab_.empty(); }

    DerivedSets& derived() const { return derived_; }

  protected:
    Ring(std::uint64_t order, std::string label) : order_(order), label_(std::move(label)) {
        if (order == 0) throw ConstructionError("ring order must be positive: " + label_);
    }

    void set_constants(Elem zero, Elem one) {
        zero_ = zero;
        one_ = one;
    }

    virtual Elem add_impl(Elem, Elem) const = 0;
    virtual Elem mul_impl(Elem, Elem) const = 0;
    virtual Elem neg_impl(Elem) const = 0;

    // Fills the Cayley tables from the structural operations. Only called by
    // finalize_ring before the ring is shared.
    void materialize_tables();

    friend void finalize_ring_inplace(Ring& ring, const Config& cfg);

  private:
    std::uint64_t order_;
    Elem zero_{0}, one_{0};
    std::string label_;
    std::vector<std::uint16_t> add_tab_, mul_tab_, neg_tab_;
    mutable DerivedSets derived_;
};

// Post-construction step shared by all factories: materializes tables when the
// order is under the cap and runs the configured axiom check.
void finalize_ring_inplace(Ring& ring, const Config& cfg);

template <class R>
RingPtr finalize_ring(std::shared_ptr<R> ring, const Config& cfg) {
    finalize_ring_inplace(*ring, cfg);
    return ring;
}

struct AxiomCheckOptions {
    std::uint64_t exhaustive_cap = 256;
    std::uint64_t samples = 4096;
};

struct AxiomCheck {
    bool ok = true;
    bool exhaustive = false;
    std::uint64_t triples_checked = 0;
    std::string failure;  // first offending law and operands
};

// Checks associativity (both operations), additive commutativity and
// inverses, identities, and distributivity. Exhaustive over all triples up to
// the cap, deterministic fixed-seed sampling above it.
AxiomCheck verify_ring_axioms(const Ring& ring, const AxiomCheckOptions& opt = {});

// Set-theoretic map between two rings, stored as a full image table.
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Elem> table;

    Elem apply(Elem a) const { return table[a.v]; }
};

RingMap make_map(RingPtr source, RingPtr target, const std::function<Elem(Elem)>& fn);
RingMap identity_map(RingPtr ring);

// Preserves +, * and maps 1 to 1.
bool is_homomorphism(const RingMap& m, std::string* why = nullptr);
bool is_isomorphism(const RingMap& m, std::string* why = nullptr);

// True when x*y == y*x for all pairs.
bool is_commutative(const Ring& ring);

// Element lookup by printed label; whitespace-insensitive, also accepts the
// raw index form "#123". Refuses to sweep rings above the enumeration cap.
std::optional<Elem> find_element_by_label(const Ring& ring, std::string_view text,
                                          const Config& cfg = {});

}  // namespace ringlab
