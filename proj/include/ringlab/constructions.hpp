#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Base coefficient rings and derived constructions. Every factory validates
// its preconditions, materializes Cayley tables when the order is under the
// configured cap, and runs the construction-time axiom check.
// ---------------------------------------------------------------------------

// Z/nZ with canonical representatives 0..n-1.
RingPtr make_zmod(std::uint64_t n, const Config& cfg = {});

// Truncated power series base[t]/(t^m): coefficient tuples of length m,
// products truncated at degree m. The base must be commutative.
RingPtr make_trunc_series(RingPtr base, std::uint32_t m, const Config& cfg = {});

// Direct product with componentwise operations.
RingPtr make_product(std::vector<RingPtr> factors, const Config& cfg = {});

// Full n-by-n matrix ring, row-by-column multiplication.
RingPtr make_matrix(RingPtr base, std::uint32_t n, const Config& cfg = {});

// Upper triangular n-by-n matrices where moving a scalar past position (i,j)
// twists it by sigma^(j-i): entry (i,j) of a product is
//   sum_{k=i..j} a_(ik) * sigma^(k-i)(b_(kj)).
// sigma must be a unital endomorphism of the base.
RingPtr make_skew_tri(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name = "id", const Config& cfg = {});

// Ordinary upper triangular matrices (sigma = identity).
RingPtr make_upper_tri(RingPtr base, std::uint32_t n, const Config& cfg = {});

// The four named subrings of the skew triangular ring, realized by filtering
// the parent's universe and verifying closure:
//   S: constant main diagonal;
//   T: constant diagonals (isomorphic to base[x;sigma]/(x^n));
//   A: diagonals 1..floor(n/2) constant, the rest free;
//   B: A plus a free entry at (1, n/2); requires even n >= 4.
RingPtr make_family_S(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name = "id", const Config& cfg = {});
RingPtr make_family_T(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name = "id", const Config& cfg = {});
RingPtr make_family_A(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name = "id", const Config& cfg = {});
RingPtr make_family_B(RingPtr base, std::uint32_t n, const RingMap& sigma,
                      std::string_view sigma_name = "id", const Config& cfg = {});

// (R,S)-bimodule given by explicit action tables over the additive group of
// `module` (a ring whose multiplication is ignored).
struct Bimodule {
    std::string name;
    RingPtr left_ring;   // R, acting from the left
    RingPtr right_ring;  // S, acting from the right
    RingPtr module;      // carrier of M; only its additive structure is used
    std::vector<Elem> left_act;   // index r.v * |M| + m.v
    std::vector<Elem> right_act;  // index m.v * |S| + s.v
};

// Returns a description of the first violated bimodule axiom, or nullopt.
std::optional<std::string> bimodule_violation(const Bimodule& bm);

// Regular bimodule R over R (actions are ring multiplication).
Bimodule regular_bimodule(RingPtr ring);

// Z_n / Z_m acting on Z_gcd(n,m) through residue reduction.
Bimodule reduction_bimodule(RingPtr zmod_left, RingPtr zmod_right);

// Formal 2x2 triangular ring over a bimodule: elements (r, m, s) with
// (r,m,s)(r',m',s') = (rr', rm' + ms', ss').
RingPtr make_triangular(const Bimodule& bm, const Config& cfg = {});

// Corner ring eRe for an idempotent e; its identity is e.
RingPtr make_corner(RingPtr ring, Elem e, const Config& cfg = {});

// Two-sided ideal, stored as its full (sorted) member list.
struct Ideal {
    RingPtr ring;
    std::vector<Elem> members;
};

bool is_ideal(const Ring& ring, const std::vector<Elem>& sorted_members,
              std::string* why = nullptr);
Ideal make_ideal(RingPtr ring, std::vector<Elem> members);

// Two-sided ideal generated by a set.
std::vector<Elem> ideal_closure(const Ring& ring, std::span<const Elem> gens,
                                const Config& cfg = {});

// Coset ring R/I; cosets are represented by their least element index.
RingPtr make_quotient(RingPtr ring, const Ideal& ideal, const Config& cfg = {});

// Projection map R -> R/I.
RingMap quotient_projection(RingPtr quotient);

// Same universe, reversed multiplication.
RingPtr make_opposite(RingPtr ring, const Config& cfg = {});

// Least subset containing gens, 0 and 1, closed under +, - and *.
// Works by additive-span saturation, so the parent may be far larger than the
// enumeration cap as long as the closure itself stays small.
std::vector<Elem> subring_closure(const Ring& ring, std::span<const Elem> gens,
                                  const Config& cfg = {});

// The subring generated by gens, as a ring in its own right.
RingPtr make_subring(RingPtr ring, std::span<const Elem> gens, const Config& cfg = {});

// Element-level predicates, cached on the ring. (is_local lives in
// radical.hpp: it needs the cached unit set.)
const ElemSet& idempotents(const Ring& ring);
bool is_abelian(const Ring& ring);  // every idempotent is central

// ---------------------------------------------------------------------------
// Structure accessors. Each checks that the ring really is the corresponding
// construction and throws ConstructionError otherwise.
// ---------------------------------------------------------------------------

Elem mat_from_entries(const Ring& matrix_ring, std::span<const Elem> entries);  // row-major n*n
std::vector<Elem> mat_entries(const Ring& matrix_ring, Elem a);
std::uint32_t mat_dim(const Ring& matrix_ring);
RingPtr mat_base(const Ring& matrix_ring);

// Upper-triangular entries, row-major: (1,1),(1,2),..,(1,n),(2,2),..,(n,n).
Elem tri_from_entries(const Ring& skew_tri_ring, std::span<const Elem> entries);
std::vector<Elem> tri_entries(const Ring& skew_tri_ring, Elem a);
std::uint32_t tri_dim(const Ring& skew_tri_ring);
RingPtr tri_base(const Ring& skew_tri_ring);
// The matrix unit E_(ij) (1-based, i <= j) as a ring element.
Elem tri_unit(const Ring& skew_tri_ring, std::uint32_t i, std::uint32_t j);

Elem prod_from_components(const Ring& product_ring, std::span<const Elem> components);
std::vector<Elem> prod_components(const Ring& product_ring, Elem a);

Elem series_from_coeffs(const Ring& series_ring, std::span<const Elem> coeffs);
std::vector<Elem> series_coeffs(const Ring& series_ring, Elem a);

Elem triangular_from_parts(const Ring& triangular_ring, Elem r, Elem m, Elem s);

bool is_subset_ring(const Ring& ring);
RingPtr subset_parent(const Ring& subset_ring);
Elem subset_lift(const Ring& subset_ring, Elem a);
std::optional<Elem> subset_find(const Ring& subset_ring, Elem parent_elem);

RingPtr quotient_parent(const Ring& quotient_ring);
Elem quotient_rep(const Ring& quotient_ring, Elem a);       // canonical coset representative
Elem quotient_project(const Ring& quotient_ring, Elem parent_elem);

RingPtr opposite_parent(const Ring& opposite_ring);

}  // namespace ringlab
