#include "ringlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ringlab {
namespace {

// SplitMix64: deterministic sampling for axiom checks on large rings. The
// stream is fixed so repeated runs check identical triples.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::string law_failure(const Ring& r, const char* law, Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << law << " fails in " << r.label() << " at (" << r.elem_label(a) << ", "
       << r.elem_label(b) << ", " << r.elem_label(c) << ")";
    return os.str();
}

}  // namespace

void Ring::materialize_tables() {
    if (!mul_tab_.empty()) return;
    if (order_ > 65535) throw ConstructionError("table materialization above 65535 elements: " + label_);
    add_tab_.resize(order_ * order_);
    mul_tab_.resize(order_ * order_);
    neg_tab_.resize(order_);
    for (std::uint64_t a = 0; a < order_; ++a) {
        neg_tab_[a] = static_cast<std::uint16_t>(neg_impl(Elem{a}).v);
        for (std::uint64_t b = 0; b < order_; ++b) {
            add_tab_[a * order_ + b] = static_cast<std::uint16_t>(add_impl(Elem{a}, Elem{b}).v);
            mul_tab_[a * order_ + b] = static_cast<std::uint16_t>(mul_impl(Elem{a}, Elem{b}).v);
        }
    }
}

void finalize_ring_inplace(Ring& ring, const Config& cfg) {
    if (ring.order() <= cfg.table_cap && ring.order() <= 65535) ring.materialize_tables();
    if (cfg.axiom_check_on_build) {
        AxiomCheckOptions opt;
        opt.exhaustive_cap = cfg.axiom_exhaustive_cap;
        opt.samples = cfg.axiom_samples;
        AxiomCheck check = verify_ring_axioms(ring, opt);
        if (!check.ok) throw ConsistencyFault("construction produced a non-ring: " + check.failure);
    }
}

AxiomCheck verify_ring_axioms(const Ring& ring, const AxiomCheckOptions& opt) {
    AxiomCheck result;
    const std::uint64_t n = ring.order();
    const Elem zero = ring.zero(), one = ring.one();

    if (n > 1 && zero == one) {
        result.ok = false;
        result.failure = "zero equals one in a ring of order > 1: " + ring.label();
        return result;
    }

    auto check_triple = [&](Elem a, Elem b, Elem c) -> bool {
        ++result.triples_checked;
        if (ring.add(a, b) != ring.add(b, a)) {
            result.failure = law_failure(ring, "additive commutativity", a, b, c);
            return false;
        }
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) {
            result.failure = law_failure(ring, "additive associativity", a, b, c);
            return false;
        }
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) {
            result.failure = law_failure(ring, "multiplicative associativity", a, b, c);
            return false;
        }
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) {
            result.failure = law_failure(ring, "left distributivity", a, b, c);
            return false;
        }
        if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c))) {
            result.failure = law_failure(ring, "right distributivity", a, b, c);
            return false;
        }
        return true;
    };
    auto check_unary = [&](Elem a) -> bool {
        if (ring.add(a, zero) != a || ring.add(zero, a) != a) {
            result.failure = law_failure(ring, "additive identity", a, zero, zero);
            return false;
        }
        if (ring.add(a, ring.neg(a)) != zero) {
            result.failure = law_failure(ring, "additive inverse", a, ring.neg(a), zero);
            return false;
        }
        if (ring.mul(a, one) != a || ring.mul(one, a) != a) {
            result.failure = law_failure(ring, "multiplicative identity", a, one, one);
            return false;
        }
        return true;
    };

    if (n <= opt.exhaustive_cap) {
        result.exhaustive = true;
        for (std::uint64_t a = 0; a < n; ++a) {
            if (!check_unary(Elem{a})) {
                result.ok = false;
                return result;
            }
        }
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                for (std::uint64_t c = 0; c < n; ++c)
                    if (!check_triple(Elem{a}, Elem{b}, Elem{c})) {
                        result.ok = false;
                        return result;
                    }
    } else {
        SplitMix64 rng(0x52494E474C4142ull);  // fixed seed: runs are reproducible
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            Elem a{rng.below(n)}, b{rng.below(n)}, c{rng.below(n)};
            if (!check_unary(a) || !check_triple(a, b, c)) {
                result.ok = false;
                return result;
            }
        }
    }
    return result;
}

RingMap make_map(RingPtr source, RingPtr target, const std::function<Elem(Elem)>& fn) {
    RingMap m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.table.reserve(m.source->order());
    for (std::uint64_t a = 0; a < m.source->order(); ++a) m.table.push_back(fn(Elem{a}));
    return m;
}

RingMap identity_map(RingPtr ring) {
    RingPtr copy = ring;
    return make_map(std::move(copy), std::move(ring), [](Elem a) { return a; });
}

bool is_homomorphism(const RingMap& m, std::string* why) {
    const Ring& s = *m.source;
    const Ring& t = *m.target;
    if (m.table.size() != s.order()) {
        if (why) *why = "map table size does not match source order";
        return false;
    }
    if (m.apply(s.one()) != t.one()) {
        if (why) *why = "map does not send 1 to 1";
        return false;
    }
    for (std::uint64_t a = 0; a < s.order(); ++a) {
        for (std::uint64_t b = 0; b < s.order(); ++b) {
            Elem ea{a}, eb{b};
            if (m.apply(s.add(ea, eb)) != t.add(m.apply(ea), m.apply(eb))) {
                if (why)
                    *why = "map is not additive at (" + s.elem_label(ea) + ", " + s.elem_label(eb) + ")";
                return false;
            }
            if (m.apply(s.mul(ea, eb)) != t.mul(m.apply(ea), m.apply(eb))) {
                if (why)
                    *why = "map is not multiplicative at (" + s.elem_label(ea) + ", " +
                           s.elem_label(eb) + ")";
                return false;
            }
        }
    }
    return true;
}

bool is_isomorphism(const RingMap& m, std::string* why) {
    if (m.source->order() != m.target->order()) {
        if (why) *why = "source and target orders differ";
        return false;
    }
    std::vector<bool> hit(m.target->order(), false);
    for (Elem e : m.table) {
        if (e.v >= m.target->order() || hit[e.v]) {
            if (why) *why = "map is not a bijection";
            return false;
        }
        hit[e.v] = true;
    }
    return is_homomorphism(m, why);
}

bool is_commutative(const Ring& ring) {
    for (std::uint64_t a = 0; a < ring.order(); ++a)
        for (std::uint64_t b = a + 1; b < ring.order(); ++b)
            if (ring.mul(Elem{a}, Elem{b}) != ring.mul(Elem{b}, Elem{a})) return false;
    return true;
}

namespace {
std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}
}  // namespace

std::optional<Elem> find_element_by_label(const Ring& ring, std::string_view text,
                                          const Config& cfg) {
    std::string wanted = strip_spaces(text);
    if (wanted.empty()) return std::nullopt;
    if (wanted[0] == '#') {
        std::uint64_t idx = 0;
        for (std::size_t i = 1; i < wanted.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(wanted[i]))) return std::nullopt;
            idx = idx * 10 + static_cast<std::uint64_t>(wanted[i] - '0');
        }
        if (wanted.size() < 2 || idx >= ring.order()) return std::nullopt;
        return Elem{idx};
    }
    // Accept one layer of redundant parentheses around the label.
    std::string unwrapped;
    if (wanted.size() >= 2 && wanted.front() == '(' && wanted.back() == ')')
        unwrapped = wanted.substr(1, wanted.size() - 2);
    if (ring.order() > cfg.enumeration_cap)
        throw BudgetRefusal("label lookup needs a full sweep of " + ring.label(), ring.order(),
                            cfg.enumeration_cap);
    for (std::uint64_t i = 0; i < ring.order(); ++i) {
        std::string have = strip_spaces(ring.elem_label(Elem{i}));
        if (have == wanted || (!unwrapped.empty() && have == unwrapped)) return Elem{i};
    }
    return std::nullopt;
}

}  // namespace ringlab
