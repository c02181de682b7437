#include "ringlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace ringlab {
namespace {

constexpr std::size_t kMaxMatrixEntries = 64;

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp,
                                         std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) return std::nullopt;
        result *= base;
    }
    return result;
}

std::optional<std::uint64_t> checked_product(const std::vector<std::uint64_t>& xs,
                                             std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::uint64_t x : xs) {
        if (x != 0 && result > cap / x) return std::nullopt;
        result *= x;
    }
    return result;
}

// Mixed-radix codec; the first digit is the most significant one, so index
// order is lexicographic order on the digit tuple.
struct Radix {
    std::uint64_t base = 2;
    std::uint32_t count = 0;
    bool pow2 = false;
    std::uint32_t shift = 0;
    std::uint64_t mask = 0;

    Radix() = default;
    Radix(std::uint64_t q, std::uint32_t k) : base(q), count(k) {
        if (q >= 2 && std::has_single_bit(q)) {
            pow2 = true;
            shift = static_cast<std::uint32_t>(std::countr_zero(q));
            mask = q - 1;
        }
    }

    void decode(std::uint64_t idx, Elem* out) const {
        if (pow2) {
            for (std::uint32_t p = count; p-- > 0;) {
                out[p] = Elem{idx & mask};
                idx >>= shift;
            }
        } else {
            for (std::uint32_t p = count; p-- > 0;) {
                out[p] = Elem{idx % base};
                idx /= base;
            }
        }
    }

    std::uint64_t encode(const Elem* digits) const {
        std::uint64_t idx = 0;
        if (pow2) {
            for (std::uint32_t p = 0; p < count; ++p) idx = (idx << shift) | digits[p].v;
        } else {
            for (std::uint32_t p = 0; p < count; ++p) idx = idx * base + digits[p].v;
        }
        return idx;
    }
};

std::string wrap_if_compound(const std::string& s) {
    for (char c : s)
        if (c == '+' || c == ' ') return "(" + s + ")";
    return s;
}

// ---------------------------------------------------------------------------

class ZmodRing final : public Ring {
  public:
    explicit ZmodRing(std::uint64_t n) : Ring(n, "Z" + std::to_string(n)) {
        set_constants(Elem{0}, Elem{n > 1 ? 1u : 0u});
    }
    std::string elem_label(Elem a) const override { return std::to_string(a.v); }

  protected:
    Elem add_impl(Elem a, Elem b) const override { return Elem{(a.v + b.v) % order()}; }
    Elem mul_impl(Elem a, Elem b) const override { return Elem{(a.v * b.v) % order()}; }
    Elem neg_impl(Elem a) const override { return Elem{(order() - a.v) % order()}; }
};

class TruncSeriesRing final : public Ring {
  public:
    TruncSeriesRing(RingPtr base, std::uint32_t m, std::uint64_t order)
        : Ring(order, "TruncSeries(" + base->label() + "," + std::to_string(m) + ")"),
          base_(std::move(base)),
          m_(m),
          radix_(base_->order(), m) {
        std::array<Elem, kMaxMatrixEntries> digits{};
        for (std::uint32_t i = 0; i < m_; ++i) digits[i] = base_->zero();
        Elem zero{radix_.encode(digits.data())};
        digits[0] = base_->one();
        set_constants(zero, Elem{radix_.encode(digits.data())});
    }

    std::string elem_label(Elem a) const override {
        std::array<Elem, kMaxMatrixEntries> c;
        radix_.decode(a.v, c.data());
        std::string out;
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (base_->is_zero(c[i])) continue;
            std::string coeff = wrap_if_compound(base_->elem_label(c[i]));
            std::string term;
            if (i == 0)
                term = coeff;
            else {
                term = (coeff == "1") ? "" : coeff;
                term += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
            if (!out.empty()) out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

    std::uint32_t truncation() const { return m_; }
    const RingPtr& base() const { return base_; }
    const Radix& radix() const { return radix_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override {
        std::array<Elem, kMaxMatrixEntries> x, y;
        radix_.decode(a.v, x.data());
        radix_.decode(b.v, y.data());
        for (std::uint32_t i = 0; i < m_; ++i) x[i] = base_->add(x[i], y[i]);
        return Elem{radix_.encode(x.data())};
    }
    Elem mul_impl(Elem a, Elem b) const override {
        std::array<Elem, kMaxMatrixEntries> x, y, z;
        radix_.decode(a.v, x.data());
        radix_.decode(b.v, y.data());
        for (std::uint32_t k = 0; k < m_; ++k) {
            Elem acc = base_->zero();
            for (std::uint32_t i = 0; i <= k; ++i) acc = base_->add(acc, base_->mul(x[i], y[k - i]));
            z[k] = acc;
        }
        return Elem{radix_.encode(z.data())};
    }
    Elem neg_impl(Elem a) const override {
        std::array<Elem, kMaxMatrixEntries> x;
        radix_.decode(a.v, x.data());
        for (std::uint32_t i = 0; i < m_; ++i) x[i] = base_->neg(x[i]);
        return Elem{radix_.encode(x.data())};
    }

  private:
    RingPtr base_;
    std::uint32_t m_;
    Radix radix_;
};

class ProductRing final : public Ring {
  public:
    ProductRing(std::vector<RingPtr> factors, std::uint64_t order, std::string label)
        : Ring(order, std::move(label)), factors_(std::move(factors)) {
        std::vector<Elem> zeros, ones;
        for (const auto& f : factors_) {
            zeros.push_back(f->zero());
            ones.push_back(f->one());
        }
        set_constants(encode(zeros), encode(ones));
    }

    std::string elem_label(Elem a) const override {
        std::vector<Elem> c = decode(a);
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += factors_[i]->elem_label(c[i]);
        }
        return out + ")";
    }

    std::vector<Elem> decode(Elem a) const {
        std::vector<Elem> out(factors_.size());
        std::uint64_t idx = a.v;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            out[i] = Elem{idx % factors_[i]->order()};
            idx /= factors_[i]->order();
        }
        return out;
    }
    Elem encode(const std::vector<Elem>& c) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i]->order() + c[i].v;
        return Elem{idx};
    }

    const std::vector<RingPtr>& factors() const { return factors_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override { return zip(a, b, /*mul=*/false); }
    Elem mul_impl(Elem a, Elem b) const override { return zip(a, b, /*mul=*/true); }
    Elem neg_impl(Elem a) const override {
        std::vector<Elem> x = decode(a);
        for (std::size_t i = 0; i < factors_.size(); ++i) x[i] = factors_[i]->neg(x[i]);
        return encode(x);
    }

  private:
    Elem zip(Elem a, Elem b, bool mul) const {
        std::vector<Elem> x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < factors_.size(); ++i)
            x[i] = mul ? factors_[i]->mul(x[i], y[i]) : factors_[i]->add(x[i], y[i]);
        return encode(x);
    }

    std::vector<RingPtr> factors_;
};

class MatrixRing final : public Ring {
  public:
    MatrixRing(RingPtr base, std::uint32_t n, std::uint64_t order)
        : Ring(order, "Mat(" + base->label() + "," + std::to_string(n) + ")"),
          base_(std::move(base)),
          n_(n),
          radix_(base_->order(), n * n) {
        std::array<Elem, kMaxMatrixEntries> e;
        for (std::uint32_t i = 0; i < n_ * n_; ++i) e[i] = base_->zero();
        Elem zero{radix_.encode(e.data())};
        for (std::uint32_t i = 0; i < n_; ++i) e[i * n_ + i] = base_->one();
        set_constants(zero, Elem{radix_.encode(e.data())});
    }

    std::string elem_label(Elem a) const override {
        std::array<Elem, kMaxMatrixEntries> e;
        radix_.decode(a.v, e.data());
        std::string out = "[";
        for (std::uint32_t i = 0; i < n_; ++i) {
            out += i ? ",[" : "[";
            for (std::uint32_t j = 0; j < n_; ++j) {
                if (j) out += ",";
                out += base_->elem_label(e[i * n_ + j]);
            }
            out += "]";
        }
        return out + "]";
    }

    std::uint32_t dim() const { return n_; }
    const RingPtr& base() const { return base_; }
    const Radix& radix() const { return radix_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override {
        std::array<Elem, kMaxMatrixEntries> x, y;
        radix_.decode(a.v, x.data());
        radix_.decode(b.v, y.data());
        for (std::uint32_t i = 0; i < n_ * n_; ++i) x[i] = base_->add(x[i], y[i]);
        return Elem{radix_.encode(x.data())};
    }
    Elem mul_impl(Elem a, Elem b) const override {
        std::array<Elem, kMaxMatrixEntries> x, y, z;
        radix_.decode(a.v, x.data());
        radix_.decode(b.v, y.data());
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (std::uint32_t j = 0; j < n_; ++j) {
                Elem acc = base_->zero();
                for (std::uint32_t k = 0; k < n_; ++k)
                    acc = base_->add(acc, base_->mul(x[i * n_ + k], y[k * n_ + j]));
                z[i * n_ + j] = acc;
            }
        }
        return Elem{radix_.encode(z.data())};
    }
    Elem neg_impl(Elem a) const override {
        std::array<Elem, kMaxMatrixEntries> x;
        radix_.decode(a.v, x.data());
        for (std::uint32_t i = 0; i < n_ * n_; ++i) x[i] = base_->neg(x[i]);
        return Elem{radix_.encode(x.data())};
    }

  private:
    RingPtr base_;
    std::uint32_t n_;
    Radix radix_;
};

class SkewTriRing final : public Ring {
  public:
    SkewTriRing(RingPtr base, std::uint32_t n, const RingMap& sigma, std::string_view sigma_name,
                std::uint64_t order, std::string label)
        : Ring(order, std::move(label)),
          base_(std::move(base)),
          n_(n),
          entries_(n * (n + 1) / 2),
          sigma_name_(sigma_name),
          radix_(base_->order(), entries_) {
        // pos_[i*n+j] = storage slot of entry (i,j), 0-based upper part
        pos_.assign(n_ * n_, 0);
        std::uint32_t slot = 0;
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = i; j < n_; ++j) pos_[i * n_ + j] = slot++;

        // sigma powers 0..n-1 as image tables
        sig_pow_.resize(n_);
        sig_pow_[0].resize(base_->order());
        for (std::uint64_t x = 0; x < base_->order(); ++x) sig_pow_[0][x] = Elem{x};
        for (std::uint32_t p = 1; p < n_; ++p) {
            sig_pow_[p].resize(base_->order());
            for (std::uint64_t x = 0; x < base_->order(); ++x)
                sig_pow_[p][x] = sigma.apply(sig_pow_[p - 1][x]);
        }

        std::array<Elem, kMaxMatrixEntries> e;
        for (std::uint32_t i = 0; i < entries_; ++i) e[i] = base_->zero();
        Elem zero{radix_.encode(e.data())};
        for (std::uint32_t i = 0; i < n_; ++i) e[pos_[i * n_ + i]] = base_->one();
        set_constants(zero, Elem{radix_.encode(e.data())});
    }

    std::string elem_label(Elem a) const override {
        std::array<Elem, kMaxMatrixEntries> e;
        radix_.decode(a.v, e.data());
        std::string zero_label = base_->elem_label(base_->zero());
        std::string out = "[";
        for (std::uint32_t i = 0; i < n_; ++i) {
            out += i ? ",[" : "[";
            for (std::uint32_t j = 0; j < n_; ++j) {
                if (j) out += ",";
                out += j < i ? zero_label : base_->elem_label(e[pos_[i * n_ + j]]);
            }
            out += "]";
        }
        return out + "]";
    }

    std::uint32_t dim() const { return n_; }
    std::uint32_t entry_count() const { return entries_; }
    const RingPtr& base() const { return base_; }
    const Radix& radix() const { return radix_; }
    std::uint32_t slot(std::uint32_t i, std::uint32_t j) const { return pos_[i * n_ + j]; }
    const std::string& sigma_name() const { return sigma_name_; }

    Elem twist(std::uint32_t power, Elem x) const { return sig_pow_[power][x.v]; }

  protected:
    Elem add_impl(Elem a, Elem b) const override {
        std::array<Elem, kMaxMatrixEntries> x, y;
        radix_.decode(a.v, x.data());
        radix_.decode(b.v, y.data());
        for (std::uint32_t i = 0; i < entries_; ++i) x[i] = base_->add(x[i], y[i]);
        return Elem{radix_.encode(x.data())};
    }
    Elem mul_impl(Elem a, Elem b) const override {
        std::array<Elem, kMaxMatrixEntries> x, y, z;
        radix_.decode(a.v, x.data());
        radix_.decode(b.v, y.data());
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (std::uint32_t j = i; j < n_; ++j) {
                Elem acc = base_->zero();
                for (std::uint32_t k = i; k <= j; ++k)
                    acc = base_->add(
                        acc, base_->mul(x[pos_[i * n_ + k]], twist(k - i, y[pos_[k * n_ + j]])));
                z[pos_[i * n_ + j]] = acc;
            }
        }
        return Elem{radix_.encode(z.data())};
    }
    Elem neg_impl(Elem a) const override {
        std::array<Elem, kMaxMatrixEntries> x;
        radix_.decode(a.v, x.data());
        for (std::uint32_t i = 0; i < entries_; ++i) x[i] = base_->neg(x[i]);
        return Elem{radix_.encode(x.data())};
    }

  private:
    RingPtr base_;
    std::uint32_t n_;
    std::uint32_t entries_;
    std::string sigma_name_;
    Radix radix_;
    std::vector<std::uint32_t> pos_;
    std::vector<std::vector<Elem>> sig_pow_;
};

class TriangularRing final : public Ring {
  public:
    TriangularRing(Bimodule bm, std::uint64_t order)
        : Ring(order, "Triangular(" + bm.left_ring->label() + "," + bm.right_ring->label() + "," +
                          bm.name + ")"),
          bm_(std::move(bm)) {
        set_constants(encode(bm_.left_ring->zero(), bm_.module->zero(), bm_.right_ring->zero()),
                      encode(bm_.left_ring->one(), bm_.module->zero(), bm_.right_ring->one()));
    }

    std::string elem_label(Elem a) const override {
        auto [r, m, s] = decode(a);
        return "(" + bm_.left_ring->elem_label(r) + "," + bm_.module->elem_label(m) + "," +
               bm_.right_ring->elem_label(s) + ")";
    }

    Elem encode(Elem r, Elem m, Elem s) const {
        return Elem{(r.v * bm_.module->order() + m.v) * bm_.right_ring->order() + s.v};
    }
    std::tuple<Elem, Elem, Elem> decode(Elem a) const {
        std::uint64_t idx = a.v;
        Elem s{idx % bm_.right_ring->order()};
        idx /= bm_.right_ring->order();
        Elem m{idx % bm_.module->order()};
        idx /= bm_.module->order();
        return {Elem{idx}, m, s};
    }

    const Bimodule& bimodule() const { return bm_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override {
        auto [r1, m1, s1] = decode(a);
        auto [r2, m2, s2] = decode(b);
        return encode(bm_.left_ring->add(r1, r2), bm_.module->add(m1, m2),
                      bm_.right_ring->add(s1, s2));
    }
    Elem mul_impl(Elem a, Elem b) const override {
        auto [r1, m1, s1] = decode(a);
        auto [r2, m2, s2] = decode(b);
        Elem left = bm_.left_act[r1.v * bm_.module->order() + m2.v];
        Elem right = bm_.right_act[m1.v * bm_.right_ring->order() + s2.v];
        return encode(bm_.left_ring->mul(r1, r2), bm_.module->add(left, right),
                      bm_.right_ring->mul(s1, s2));
    }
    Elem neg_impl(Elem a) const override {
        auto [r, m, s] = decode(a);
        return encode(bm_.left_ring->neg(r), bm_.module->neg(m), bm_.right_ring->neg(s));
    }

  private:
    Bimodule bm_;
};

// A subring carved out of a parent universe: family filters, corners,
// generated subrings. Members are parent indices in ascending order, so the
// subring's canonical order is inherited from the parent's.
class SubsetRing final : public Ring {
  public:
    using Labeler = std::function<std::string(const Ring&, Elem)>;

    SubsetRing(RingPtr parent, std::vector<std::uint64_t> members, Elem one, std::string label,
               Labeler labeler)
        : Ring(members.size(), std::move(label)),
          parent_(std::move(parent)),
          members_(std::move(members)),
          labeler_(std::move(labeler)) {
        set_constants(find_or_throw(parent_->zero()), find_or_throw(one));
    }

    std::string elem_label(Elem a) const override {
        Elem p = lift(a);
        return labeler_ ? labeler_(*parent_, p) : parent_->elem_label(p);
    }

    Elem lift(Elem a) const { return Elem{members_[a.v]}; }
    std::optional<Elem> find(Elem parent_elem) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), parent_elem.v);
        if (it == members_.end() || *it != parent_elem.v) return std::nullopt;
        return Elem{static_cast<std::uint64_t>(it - members_.begin())};
    }
    const RingPtr& parent() const { return parent_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override {
        return find_or_throw(parent_->add(lift(a), lift(b)));
    }
    Elem mul_impl(Elem a, Elem b) const override {
        return find_or_throw(parent_->mul(lift(a), lift(b)));
    }
    Elem neg_impl(Elem a) const override { return find_or_throw(parent_->neg(lift(a))); }

  private:
    Elem find_or_throw(Elem parent_elem) const {
        auto found = find(parent_elem);
        if (!found)
            throw ConsistencyFault("subset ring " + label() + " is not closed: left it at " +
                                   parent_->elem_label(parent_elem));
        return *found;
    }

    RingPtr parent_;
    std::vector<std::uint64_t> members_;
    Labeler labeler_;
};

class QuotientRing final : public Ring {
  public:
    QuotientRing(RingPtr parent, std::vector<std::uint64_t> reps, std::vector<std::uint64_t> rep_of,
                 std::string label)
        : Ring(reps.size(), std::move(label)),
          parent_(std::move(parent)),
          reps_(std::move(reps)),
          rep_of_(std::move(rep_of)) {
        set_constants(project(parent_->zero()), project(parent_->one()));
    }

    std::string elem_label(Elem a) const override {
        return "[" + parent_->elem_label(rep(a)) + "]";
    }

    Elem rep(Elem a) const { return Elem{reps_[a.v]}; }
    Elem project(Elem parent_elem) const {
        std::uint64_t r = rep_of_[parent_elem.v];
        auto it = std::lower_bound(reps_.begin(), reps_.end(), r);
        return Elem{static_cast<std::uint64_t>(it - reps_.begin())};
    }
    const RingPtr& parent() const { return parent_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override {
        return project(parent_->add(rep(a), rep(b)));
    }
    Elem mul_impl(Elem a, Elem b) const override {
        return project(parent_->mul(rep(a), rep(b)));
    }
    Elem neg_impl(Elem a) const override { return project(parent_->neg(rep(a))); }

  private:
    RingPtr parent_;
    std::vector<std::uint64_t> reps_;
    std::vector<std::uint64_t> rep_of_;
};

class OppositeRing final : public Ring {
  public:
    explicit OppositeRing(RingPtr parent)
        : Ring(parent->order(), "Opp(" + parent->label() + ")"), parent_(std::move(parent)) {
        set_constants(parent_->zero(), parent_->one());
    }

    std::string elem_label(Elem a) const override { return parent_->elem_label(a); }
    const RingPtr& parent() const { return parent_; }

  protected:
    Elem add_impl(Elem a, Elem b) const override { return parent_->add(a, b); }
    Elem mul_impl(Elem a, Elem b) const override { return parent_->mul(b, a); }
    Elem neg_impl(Elem a) const override { return parent_->neg(a); }

  private:
    RingPtr parent_;
};

// ---------------------------------------------------------------------------

void require_endomorphism(const Ring& base, const RingMap& sigma) {
    if (sigma.source.get() != &base || sigma.target.get() != &base)
        throw ConstructionError("sigma must be an endomorphism of the base ring");
    std::string why;
    if (!is_homomorphism(sigma, &why))
        throw ConstructionError("sigma is not a unital endomorphism: " + why);
}

std::string size_report(const std::string& what, std::uint64_t base, std::uint32_t exp,
                        std::uint64_t cap) {
    std::ostringstream os;
    os << what << " refused: " << base << "^" << exp << " elements exceeds the cap " << cap;
    return os.str();
}

// Shared builder for the S/T/A/B families: filter the parent skew triangular
// ring by the family predicate, verify closure, wrap as a subset ring.
RingPtr make_family(RingPtr base, std::uint32_t n, const RingMap& sigma,
                    std::string_view sigma_name, const Config& cfg, char family) {
    if (family == 'B' && (n < 4 || n % 2 != 0))
        throw ConstructionError("family B requires even n >= 4, got n=" + std::to_string(n));
    if (n < 1) throw ConstructionError("family constructions require n >= 1");

    RingPtr parent = make_skew_tri(base, n, sigma, sigma_name, cfg);
    const auto* tri = dynamic_cast<const SkewTriRing*>(parent.get());
    if (parent->order() > cfg.enumeration_cap)
        throw BudgetRefusal("family filter needs a full sweep of " + parent->label(),
                            parent->order(), cfg.enumeration_cap);

    const std::uint32_t half = n / 2;
    std::array<Elem, kMaxMatrixEntries> e;
    auto keep = [&](std::uint64_t idx) {
        tri->radix().decode(idx, e.data());
        auto at = [&](std::uint32_t i, std::uint32_t j) { return e[tri->slot(i, j)]; };
        switch (family) {
            case 'S':
                for (std::uint32_t i = 1; i < n; ++i)
                    if (at(i, i) != at(0, 0)) return false;
                return true;
            case 'T':
                for (std::uint32_t d = 0; d < n; ++d)
                    for (std::uint32_t i = 1; i + d < n; ++i)
                        if (at(i, i + d) != at(0, d)) return false;
                return true;
            case 'A':
                for (std::uint32_t d = 0; d < half; ++d)
                    for (std::uint32_t i = 1; i + d < n; ++i)
                        if (at(i, i + d) != at(0, d)) return false;
                return true;
            case 'B':
                // like A, but the (1, n/2) entry is free: reference each
                // constrained diagonal from its second entry instead.
                for (std::uint32_t d = 0; d < half; ++d) {
                    const bool skip_first = (d + 1 == half);
                    std::uint32_t ref = skip_first ? 1u : 0u;
                    for (std::uint32_t i = ref + 1; i + d < n; ++i)
                        if (at(i, i + d) != at(ref, ref + d)) return false;
                }
                return true;
            default:
                return false;
        }
    };

    std::vector<std::uint64_t> members;
    for (std::uint64_t idx = 0; idx < parent->order(); ++idx)
        if (keep(idx)) members.push_back(idx);

    if (members.size() * members.size() > cfg.enumeration_cap)
        throw BudgetRefusal("family closure verification too large", members.size() * members.size(),
                            cfg.enumeration_cap);

    // closure verification over the filtered set
    {
        std::unordered_set<std::uint64_t> member_set(members.begin(), members.end());
        auto inside = [&](Elem x) { return member_set.count(x.v) != 0; };
        if (!inside(parent->zero()) || !inside(parent->one()))
            throw ConstructionError("family filter lost 0 or 1");
        for (std::uint64_t a : members) {
            if (!inside(parent->neg(Elem{a})))
                throw ConstructionError("family subset not closed under negation");
            for (std::uint64_t b : members) {
                if (!inside(parent->add(Elem{a}, Elem{b})) ||
                    !inside(parent->mul(Elem{a}, Elem{b})))
                    throw ConstructionError("family subset is not closed under the ring operations");
            }
        }
    }

    std::string label(1, family);
    label += "(" + base->label() + "," + std::to_string(n);
    if (sigma_name != "id") label += std::string(",") + std::string(sigma_name);
    label += ")";

    SubsetRing::Labeler labeler;
    if (family == 'T') {
        // constant-diagonal matrices read off as their first row
        std::uint32_t dim = n;
        const SkewTriRing* tri_raw = tri;
        labeler = [dim, tri_raw](const Ring&, Elem p) {
            std::array<Elem, kMaxMatrixEntries> ent{};
            tri_raw->radix().decode(p.v, ent.data());
            std::string out = "(";
            for (std::uint32_t j = 0; j < dim; ++j) {
                if (j) out += ",";
                out += tri_raw->base()->elem_label(ent[tri_raw->slot(0, j)]);
            }
            return out + ")";
        };
    }

    auto ring = std::make_shared<SubsetRing>(parent, std::move(members), parent->one(),
                                             std::move(label), std::move(labeler));
    return finalize_ring(std::move(ring), cfg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

RingPtr make_zmod(std::uint64_t n, const Config& cfg) {
    if (n == 0) throw ConstructionError("Zmod(0) is not a ring; n must be >= 1");
    if (n > cfg.structural_cap)
        throw ConstructionError("Zmod modulus exceeds the structural cap");
    return finalize_ring(std::make_shared<ZmodRing>(n), cfg);
}

RingPtr make_trunc_series(RingPtr base, std::uint32_t m, const Config& cfg) {
    if (m == 0) throw ConstructionError("truncation order must be >= 1");
    if (m > kMaxMatrixEntries) throw ConstructionError("truncation order too large");
    if (base->order() > cfg.table_cap || !is_commutative(*base))
        throw ConstructionError("truncated series require a small commutative base, got " +
                                base->label());
    auto order = checked_pow(base->order(), m, cfg.structural_cap);
    if (!order) throw ConstructionError(size_report("TruncSeries", base->order(), m, cfg.structural_cap));
    return finalize_ring(std::make_shared<TruncSeriesRing>(std::move(base), m, *order), cfg);
}

RingPtr make_product(std::vector<RingPtr> factors, const Config& cfg) {
    if (factors.empty()) throw ConstructionError("product of an empty family is not supported");
    std::vector<std::uint64_t> orders;
    std::string label = "Prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        orders.push_back(factors[i]->order());
        if (i) label += ",";
        label += factors[i]->label();
    }
    label += ")";
    auto order = checked_product(orders, cfg.structural_cap);
    if (!order) throw ConstructionError("product order exceeds the structural cap");
    return finalize_ring(std::make_shared<ProductRing>(std::move(factors), *order, std::move(label)),
                         cfg);
}

RingPtr make_matrix(RingPtr base, std::uint32_t n, const Config& cfg) {
    if (n == 0) throw ConstructionError("matrix dimension must be >= 1");
    if (static_cast<std::size_t>(n) * n > kMaxMatrixEntries)
        throw ConstructionError("matrix dimension too large");
    auto order = checked_pow(base->order(), n * n, cfg.structural_cap);
    if (!order)
        throw ConstructionError(size_report("Mat(" + base->label() + "," + std::to_string(n) + ")",
                                            base->order(), n * n, cfg.structural_cap));
    return finalize_ring(std::make_shared<MatrixRing>(std::move(base), n, *order), cfg);
}

RingPtr make_skew_tri(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name, const Config& cfg) {
    if (n == 0) throw ConstructionError("triangular dimension must be >= 1");
    if (static_cast<std::size_t>(n) * (n + 1) / 2 > kMaxMatrixEntries)
        throw ConstructionError("triangular dimension too large");
    require_endomorphism(*base, sigma);
    std::uint32_t entries = n * (n + 1) / 2;
    auto order = checked_pow(base->order(), entries, cfg.structural_cap);
    if (!order)
        throw ConstructionError(size_report("triangular ring over " + base->label(), base->order(),
                                            entries, cfg.structural_cap));
    std::string label;
    if (sigma_name == "id")
        label = "Tri(" + base->label() + "," + std::to_string(n) + ")";
    else
        label = "SkewTri(" + base->label() + "," + std::to_string(n) + "," +
                std::string(sigma_name) + ")";
    return finalize_ring(
        std::make_shared<SkewTriRing>(std::move(base), n, sigma, sigma_name, *order, std::move(label)),
        cfg);
}

RingPtr make_upper_tri(RingPtr base, std::uint32_t n, const Config& cfg) {
    RingMap id = identity_map(base);
    return make_skew_tri(std::move(base), n, id, "id", cfg);
}

RingPtr make_family_S(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name, const Config& cfg) {
    return make_family(std::move(base), n, sigma, sigma_name, cfg, 'S');
}
RingPtr make_family_T(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name, const Config& cfg) {
    return make_family(std::move(base), n, sigma, sigma_name, cfg, 'T');
}
RingPtr make_family_A(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name, const Config& cfg) {
    return make_family(std::move(base), n, sigma, sigma_name, cfg, 'A');
}
RingPtr make_family_B(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name, const Config& cfg) {
    return make_family(std::move(base), n, sigma, sigma_name, cfg, 'B');
}

std::optional<std::string> bimodule_violation(const Bimodule& bm) {
    const Ring& R = *bm.left_ring;
    const Ring& S = *bm.right_ring;
    const Ring& M = *bm.module;
    if (bm.left_act.size() != R.order() * M.order()) return "left action table has wrong size";
    if (bm.right_act.size() != M.order() * S.order()) return "right action table has wrong size";
    auto lact = [&](Elem r, Elem m) { return bm.left_act[r.v * M.order() + m.v]; };
    auto ract = [&](Elem m, Elem s) { return bm.right_act[m.v * S.order() + s.v]; };
    auto bad = [&](const char* law, Elem a, Elem b, Elem c) {
        std::ostringstream os;
        os << law << " fails at (" << a.v << "," << b.v << "," << c.v << ")";
        return os.str();
    };

    for (std::uint64_t m = 0; m < M.order(); ++m) {
        if (lact(R.one(), Elem{m}) != Elem{m}) return std::string("1*m != m in the left action");
        if (ract(Elem{m}, S.one()) != Elem{m}) return std::string("m*1 != m in the right action");
    }
    for (std::uint64_t r = 0; r < R.order(); ++r)
        for (std::uint64_t m = 0; m < M.order(); ++m) {
            for (std::uint64_t r2 = 0; r2 < R.order(); ++r2) {
                if (lact(R.mul(Elem{r}, Elem{r2}), Elem{m}) != lact(Elem{r}, lact(Elem{r2}, Elem{m})))
                    return bad("(r r')m = r(r'm)", Elem{r}, Elem{r2}, Elem{m});
                if (lact(R.add(Elem{r}, Elem{r2}), Elem{m}) !=
                    M.add(lact(Elem{r}, Elem{m}), lact(Elem{r2}, Elem{m})))
                    return bad("(r + r')m = rm + r'm", Elem{r}, Elem{r2}, Elem{m});
            }
            for (std::uint64_t m2 = 0; m2 < M.order(); ++m2)
                if (lact(Elem{r}, M.add(Elem{m}, Elem{m2})) !=
                    M.add(lact(Elem{r}, Elem{m}), lact(Elem{r}, Elem{m2})))
                    return bad("r(m + m') = rm + rm'", Elem{r}, Elem{m}, Elem{m2});
        }
    for (std::uint64_t m = 0; m < M.order(); ++m)
        for (std::uint64_t s = 0; s < S.order(); ++s) {
            for (std::uint64_t s2 = 0; s2 < S.order(); ++s2) {
                if (ract(Elem{m}, S.mul(Elem{s}, Elem{s2})) != ract(ract(Elem{m}, Elem{s}), Elem{s2}))
                    return bad("m(s s') = (ms)s'", Elem{m}, Elem{s}, Elem{s2});
                if (ract(Elem{m}, S.add(Elem{s}, Elem{s2})) !=
                    M.add(ract(Elem{m}, Elem{s}), ract(Elem{m}, Elem{s2})))
                    return bad("m(s + s') = ms + ms'", Elem{m}, Elem{s}, Elem{s2});
            }
            for (std::uint64_t m2 = 0; m2 < M.order(); ++m2)
                if (ract(M.add(Elem{m}, Elem{m2}), Elem{s}) !=
                    M.add(ract(Elem{m}, Elem{s}), ract(Elem{m2}, Elem{s})))
                    return bad("(m + m')s = ms + m's", Elem{m}, Elem{m2}, Elem{s});
        }
    for (std::uint64_t r = 0; r < R.order(); ++r)
        for (std::uint64_t m = 0; m < M.order(); ++m)
            for (std::uint64_t s = 0; s < S.order(); ++s)
                if (ract(lact(Elem{r}, Elem{m}), Elem{s}) != lact(Elem{r}, ract(Elem{m}, Elem{s})))
                    return bad("(rm)s = r(ms)", Elem{r}, Elem{m}, Elem{s});
    return std::nullopt;
}

Bimodule regular_bimodule(RingPtr ring) {
    Bimodule bm;
    bm.name = "regular";
    bm.left_ring = ring;
    bm.right_ring = ring;
    bm.module = ring;
    const Ring& R = *ring;
    bm.left_act.reserve(R.order() * R.order());
    for (std::uint64_t r = 0; r < R.order(); ++r)
        for (std::uint64_t m = 0; m < R.order(); ++m)
            bm.left_act.push_back(R.mul(Elem{r}, Elem{m}));
    bm.right_act.reserve(R.order() * R.order());
    for (std::uint64_t m = 0; m < R.order(); ++m)
        for (std::uint64_t s = 0; s < R.order(); ++s)
            bm.right_act.push_back(R.mul(Elem{m}, Elem{s}));
    return bm;
}

Bimodule reduction_bimodule(RingPtr zmod_left, RingPtr zmod_right) {
    if (!dynamic_cast<const ZmodRing*>(zmod_left.get()) ||
        !dynamic_cast<const ZmodRing*>(zmod_right.get()))
        throw ConstructionError("reduction bimodule needs Zmod rings on both sides");
    std::uint64_t n = zmod_left->order(), m = zmod_right->order();
    std::uint64_t g = std::gcd(n, m);
    Bimodule bm;
    bm.name = "reduce";
    bm.left_ring = std::move(zmod_left);
    bm.right_ring = std::move(zmod_right);
    bm.module = make_zmod(g);
    for (std::uint64_t r = 0; r < n; ++r)
        for (std::uint64_t x = 0; x < g; ++x) bm.left_act.push_back(Elem{(r % g) * x % g});
    for (std::uint64_t x = 0; x < g; ++x)
        for (std::uint64_t s = 0; s < m; ++s) bm.right_act.push_back(Elem{x * (s % g) % g});
    return bm;
}

RingPtr make_triangular(const Bimodule& bm, const Config& cfg) {
    if (auto why = bimodule_violation(bm))
        throw ConstructionError("bimodule axioms fail: " + *why);
    std::vector<std::uint64_t> parts = {bm.left_ring->order(), bm.module->order(),
                                        bm.right_ring->order()};
    auto order = checked_product(parts, cfg.structural_cap);
    if (!order) throw ConstructionError("triangular ring order exceeds the structural cap");
    return finalize_ring(std::make_shared<TriangularRing>(bm, *order), cfg);
}

RingPtr make_corner(RingPtr ring, Elem e, const Config& cfg) {
    if (ring->mul(e, e) != e)
        throw ConstructionError("corner ring needs an idempotent, but " + ring->elem_label(e) +
                                " squares to " + ring->elem_label(ring->mul(e, e)));
    if (ring->order() > cfg.enumeration_cap)
        throw BudgetRefusal("corner construction needs a full sweep of " + ring->label(),
                            ring->order(), cfg.enumeration_cap);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> members;
    for (std::uint64_t r = 0; r < ring->order(); ++r) {
        Elem x = ring->mul(ring->mul(e, Elem{r}), e);
        if (seen.insert(x.v).second) members.push_back(x.v);
    }
    std::sort(members.begin(), members.end());
    std::string label = "Corner(" + ring->label() + "," + ring->elem_label(e) + ")";
    auto sr = std::make_shared<SubsetRing>(std::move(ring), std::move(members), e, std::move(label),
                                           SubsetRing::Labeler{});
    return finalize_ring(std::move(sr), cfg);
}

bool is_ideal(const Ring& ring, const std::vector<Elem>& sorted_members, std::string* why) {
    if (sorted_members.empty() || sorted_members.front() != ring.zero()) {
        if (why) *why = "ideal must contain 0";
        return false;
    }
    std::unordered_set<std::uint64_t> set;
    for (Elem e : sorted_members) set.insert(e.v);
    for (Elem a : sorted_members) {
        if (!set.count(ring.neg(a).v)) {
            if (why) *why = "not closed under negation at " + ring.elem_label(a);
            return false;
        }
        for (Elem b : sorted_members)
            if (!set.count(ring.add(a, b).v)) {
                if (why)
                    *why = "not closed under addition at " + ring.elem_label(a) + " + " +
                           ring.elem_label(b);
                return false;
            }
        for (std::uint64_t r = 0; r < ring.order(); ++r) {
            if (!set.count(ring.mul(Elem{r}, a).v) || !set.count(ring.mul(a, Elem{r}).v)) {
                if (why)
                    *why = "not absorbed by multiplication at r=" + ring.elem_label(Elem{r}) +
                           ", x=" + ring.elem_label(a);
                return false;
            }
        }
    }
    return true;
}

Ideal make_ideal(RingPtr ring, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::string why;
    if (!is_ideal(*ring, members, &why))
        throw ConstructionError("subset is not a two-sided ideal of " + ring->label() + ": " + why);
    return Ideal{std::move(ring), std::move(members)};
}

RingPtr make_quotient(RingPtr ring, const Ideal& ideal, const Config& cfg) {
    if (ideal.ring.get() != ring.get())
        throw ConstructionError("ideal belongs to a different ring");
    if (ring->order() > cfg.enumeration_cap)
        throw BudgetRefusal("quotient construction needs a full sweep of " + ring->label(),
                            ring->order(), cfg.enumeration_cap);
    std::string why;
    if (!is_ideal(*ring, ideal.members, &why))
        throw ConstructionError("quotient by a non-ideal: " + why);

    const std::uint64_t missing = ring->order();
    std::vector<std::uint64_t> rep_of(ring->order(), missing);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t x = 0; x < ring->order(); ++x) {
        if (rep_of[x] != missing) continue;
        reps.push_back(x);  // ascending sweep: x is the least member of its coset
        for (Elem i : ideal.members) rep_of[ring->add(Elem{x}, i).v] = x;
        if (rep_of[x] != x)
            throw ConsistencyFault("coset enumeration failed; ideal not additively closed?");
    }

    std::string label = "Quot(" + ring->label() + ",[";
    std::size_t listed = 0;
    for (Elem e : ideal.members) {
        if (e == ring->zero()) continue;
        if (listed == 8) {
            label += ",...";
            break;
        }
        if (listed) label += ",";
        label += ring->elem_label(e);
        ++listed;
    }
    label += "])";
    return finalize_ring(
        std::make_shared<QuotientRing>(std::move(ring), std::move(reps), std::move(rep_of),
                                       std::move(label)),
        cfg);
}

RingMap quotient_projection(RingPtr quotient) {
    const auto* q = dynamic_cast<const QuotientRing*>(quotient.get());
    if (!q) throw ConstructionError("not a quotient ring: " + quotient->label());
    RingPtr parent = q->parent();
    return make_map(parent, quotient, [q](Elem x) { return q->project(x); });
}

RingPtr make_opposite(RingPtr ring, const Config& cfg) {
    return finalize_ring(std::make_shared<OppositeRing>(std::move(ring)), cfg);
}

namespace {

// Additive span maintained incrementally: `gens` keeps only the generators
// that actually enlarged the subgroup, so it stays logarithmic in the span.
struct AdditiveSpan {
    const Ring& ring;
    std::unordered_set<std::uint64_t> members{};
    std::vector<Elem> list{};
    std::vector<Elem> gens{};

    explicit AdditiveSpan(const Ring& r) : ring(r) {
        members.insert(r.zero().v);
        list.push_back(r.zero());
    }

    bool contains(Elem x) const { return members.count(x.v) != 0; }

    void add(Elem x) {
        if (contains(x)) return;
        gens.push_back(x);
        // multiples of x, then all shifts of the previous subgroup
        std::vector<Elem> cyc;
        for (Elem m = x; !ring.is_zero(m); m = ring.add(m, x)) cyc.push_back(m);
        const std::size_t old_size = list.size();
        for (Elem c : cyc)
            for (std::size_t i = 0; i < old_size; ++i) {
                Elem t = ring.add(list[i], c);
                if (members.insert(t.v).second) list.push_back(t);
            }
    }
};

}  // namespace

std::vector<Elem> subring_closure(const Ring& ring, std::span<const Elem> gens, const Config&) {
    AdditiveSpan span(ring);
    span.add(ring.one());
    for (Elem g : gens) span.add(g);

    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Elem> snapshot = span.gens;
        for (Elem x : snapshot)
            for (Elem y : snapshot) {
                Elem p = ring.mul(x, y);
                if (!span.contains(p)) {
                    span.add(p);
                    changed = true;
                }
            }
    }
    std::vector<Elem> out = span.list;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> ideal_closure(const Ring& ring, std::span<const Elem> gens, const Config& cfg) {
    if (ring.order() > cfg.enumeration_cap)
        throw BudgetRefusal("ideal closure needs a full sweep of " + ring.label(), ring.order(),
                            cfg.enumeration_cap);
    AdditiveSpan span(ring);
    for (Elem g : gens) span.add(g);

    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Elem> snapshot = span.gens;
        for (Elem x : snapshot)
            for (std::uint64_t r = 0; r < ring.order(); ++r) {
                for (Elem p : {ring.mul(Elem{r}, x), ring.mul(x, Elem{r})})
                    if (!span.contains(p)) {
                        span.add(p);
                        changed = true;
                    }
            }
    }
    std::vector<Elem> out = span.list;
    std::sort(out.begin(), out.end());
    return out;
}

RingPtr make_subring(RingPtr ring, std::span<const Elem> gens, const Config& cfg) {
    std::vector<Elem> closure = subring_closure(*ring, gens, cfg);
    std::vector<std::uint64_t> members;
    members.reserve(closure.size());
    for (Elem e : closure) members.push_back(e.v);

    std::string label = "Sub(" + ring->label() + ",[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i == 6) {
            label += ",...(" + std::to_string(gens.size()) + " generators)";
            break;
        }
        if (i) label += ",";
        label += ring->elem_label(gens[i]);
    }
    label += "])";
    Elem one = ring->one();
    auto sr = std::make_shared<SubsetRing>(std::move(ring), std::move(members), one,
                                           std::move(label), SubsetRing::Labeler{});
    return finalize_ring(std::move(sr), cfg);
}

const ElemSet& idempotents(const Ring& ring) {
    DerivedSets& d = ring.derived();
    std::call_once(d.idempotents_once, [&] {
        ElemSet out(ring.order());
        for (std::uint64_t x = 0; x < ring.order(); ++x)
            if (ring.mul(Elem{x}, Elem{x}) == Elem{x}) out.insert(Elem{x});
        d.idempotents = std::move(out);
    });
    return d.idempotents;
}

bool is_abelian(const Ring& ring) {
    const ElemSet& idem = idempotents(ring);
    for (Elem e : idem.members())
        for (std::uint64_t r = 0; r < ring.order(); ++r)
            if (ring.mul(e, Elem{r}) != ring.mul(Elem{r}, e)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Structure accessors
// ---------------------------------------------------------------------------

namespace {
template <class T>
const T& cast_ring(const Ring& ring, const char* wanted) {
    const auto* p = dynamic_cast<const T*>(&ring);
    if (!p) throw ConstructionError(ring.label() + " is not a " + wanted);
    return *p;
}
}  // namespace

Elem mat_from_entries(const Ring& ring, std::span<const Elem> entries) {
    const auto& m = cast_ring<MatrixRing>(ring, "matrix ring");
    if (entries.size() != static_cast<std::size_t>(m.dim()) * m.dim())
        throw ConstructionError("wrong number of matrix entries");
    return Elem{m.radix().encode(entries.data())};
}

std::vector<Elem> mat_entries(const Ring& ring, Elem a) {
    const auto& m = cast_ring<MatrixRing>(ring, "matrix ring");
    std::vector<Elem> out(static_cast<std::size_t>(m.dim()) * m.dim());
    m.radix().decode(a.v, out.data());
    return out;
}

std::uint32_t mat_dim(const Ring& ring) { return cast_ring<MatrixRing>(ring, "matrix ring").dim(); }
RingPtr mat_base(const Ring& ring) { return cast_ring<MatrixRing>(ring, "matrix ring").base(); }

Elem tri_from_entries(const Ring& ring, std::span<const Elem> entries) {
    const auto& t = cast_ring<SkewTriRing>(ring, "triangular ring");
    if (entries.size() != t.entry_count())
        throw ConstructionError("wrong number of triangular entries");
    return Elem{t.radix().encode(entries.data())};
}

std::vector<Elem> tri_entries(const Ring& ring, Elem a) {
    const auto& t = cast_ring<SkewTriRing>(ring, "triangular ring");
    std::vector<Elem> out(t.entry_count());
    t.radix().decode(a.v, out.data());
    return out;
}

std::uint32_t tri_dim(const Ring& ring) {
    return cast_ring<SkewTriRing>(ring, "triangular ring").dim();
}
RingPtr tri_base(const Ring& ring) {
    return cast_ring<SkewTriRing>(ring, "triangular ring").base();
}

Elem tri_unit(const Ring& ring, std::uint32_t i, std::uint32_t j) {
    const auto& t = cast_ring<SkewTriRing>(ring, "triangular ring");
    if (i < 1 || j < i || j > t.dim()) throw ConstructionError("matrix unit out of range");
    std::vector<Elem> entries(t.entry_count(), t.base()->zero());
    entries[t.slot(i - 1, j - 1)] = t.base()->one();
    return Elem{t.radix().encode(entries.data())};
}

Elem prod_from_components(const Ring& ring, std::span<const Elem> components) {
    const auto& p = cast_ring<ProductRing>(ring, "product ring");
    if (components.size() != p.factors().size())
        throw ConstructionError("wrong number of product components");
    return p.encode(std::vector<Elem>(components.begin(), components.end()));
}

std::vector<Elem> prod_components(const Ring& ring, Elem a) {
    return cast_ring<ProductRing>(ring, "product ring").decode(a);
}

Elem series_from_coeffs(const Ring& ring, std::span<const Elem> coeffs) {
    const auto& s = cast_ring<TruncSeriesRing>(ring, "truncated series ring");
    if (coeffs.size() != s.truncation())
        throw ConstructionError("wrong number of series coefficients");
    return Elem{s.radix().encode(coeffs.data())};
}

std::vector<Elem> series_coeffs(const Ring& ring, Elem a) {
    const auto& s = cast_ring<TruncSeriesRing>(ring, "truncated series ring");
    std::vector<Elem> out(s.truncation());
    s.radix().decode(a.v, out.data());
    return out;
}

Elem triangular_from_parts(const Ring& ring, Elem r, Elem m, Elem s) {
    return cast_ring<TriangularRing>(ring, "formal triangular ring").encode(r, m, s);
}

bool is_subset_ring(const Ring& ring) { return dynamic_cast<const SubsetRing*>(&ring) != nullptr; }

RingPtr subset_parent(const Ring& ring) {
    return cast_ring<SubsetRing>(ring, "subset ring").parent();
}
Elem subset_lift(const Ring& ring, Elem a) {
    return cast_ring<SubsetRing>(ring, "subset ring").lift(a);
}
std::optional<Elem> subset_find(const Ring& ring, Elem parent_elem) {
    return cast_ring<SubsetRing>(ring, "subset ring").find(parent_elem);
}

RingPtr quotient_parent(const Ring& ring) {
    return cast_ring<QuotientRing>(ring, "quotient ring").parent();
}
Elem quotient_rep(const Ring& ring, Elem a) {
    return cast_ring<QuotientRing>(ring, "quotient ring").rep(a);
}
Elem quotient_project(const Ring& ring, Elem parent_elem) {
    return cast_ring<QuotientRing>(ring, "quotient ring").project(parent_elem);
}

RingPtr opposite_parent(const Ring& ring) {
    return cast_ring<OppositeRing>(ring, "opposite ring").parent();
}

}  // namespace ringlab
