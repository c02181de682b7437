#include <doctest.h>

#include <array>

#include "ringlab/constructions.hpp"
#include "ringlab/radical.hpp"

using namespace ringlab;

namespace {

Elem unit_matrix(const Ring& m2, int i, int j) {
    RingPtr base = mat_base(m2);
    std::array<Elem, 4> e = {base->zero(), base->zero(), base->zero(), base->zero()};
    e[static_cast<std::size_t>(i * 2 + j)] = base->one();
    return mat_from_entries(m2, e);
}

}  // namespace

TEST_CASE("zmod basics") {
    RingPtr z2 = make_zmod(2);
    CHECK(z2->order() == 2);
    CHECK(units(*z2).size() == 1);  // every nonzero element of a field is a unit

    RingPtr z4 = make_zmod(4);
    CHECK(z4->mul(Elem{2}, Elem{2}) == z4->zero());

    RingPtr z6 = make_zmod(6);
    CHECK(units(*z6).members() == std::vector<Elem>{Elem{1}, Elem{5}});

    CHECK_THROWS_AS(make_zmod(0), ConstructionError);
}

TEST_CASE("ring axioms verified exhaustively on every small construction") {
    std::vector<RingPtr> rings;
    RingPtr z2 = make_zmod(2), z4 = make_zmod(4);
    rings.push_back(z2);
    rings.push_back(make_zmod(6));
    rings.push_back(make_trunc_series(z2, 3));
    rings.push_back(make_product({z2, z4}));
    rings.push_back(make_matrix(z2, 2));
    rings.push_back(make_upper_tri(z2, 2));
    rings.push_back(make_family_S(z2, 2, identity_map(z2)));
    rings.push_back(make_family_T(z2, 3, identity_map(z2)));
    rings.push_back(make_family_B(z2, 4, identity_map(z2)));
    rings.push_back(make_triangular(regular_bimodule(z2)));
    rings.push_back(make_opposite(make_upper_tri(z2, 2)));
    rings.push_back(make_quotient(z4, make_ideal(z4, {Elem{0}, Elem{2}})));
    for (const RingPtr& r : rings) {
        AxiomCheck check = verify_ring_axioms(*r);
        INFO(r->label());
        CHECK(check.ok);
        CHECK(check.exhaustive);
    }
}

TEST_CASE("truncated series") {
    RingPtr z2 = make_zmod(2);
    RingPtr s2 = make_trunc_series(z2, 2);
    Elem t2 = series_from_coeffs(*s2, std::array<Elem, 2>{z2->zero(), z2->one()});
    CHECK(s2->mul(t2, t2) == s2->zero());

    RingPtr s4 = make_trunc_series(z2, 4);
    Elem t = series_from_coeffs(*s4, std::array<Elem, 4>{z2->zero(), z2->one(), z2->zero(), z2->zero()});
    Elem p = t;
    int k = 1;
    while (!s4->is_zero(p)) {
        p = s4->mul(p, t);
        ++k;
    }
    CHECK(k == 4);  // nilpotency index of t

    CHECK(units(*s4).size() == 8);  // exactly the elements with unit constant term
    CHECK(s4->elem_label(t) == "t");
    CHECK(s4->elem_label(s4->add(s4->one(), t)) == "1+t");

    // noncommutative base rejected
    CHECK_THROWS_AS(make_trunc_series(make_matrix(z2, 2), 2), ConstructionError);
}

TEST_CASE("products factor componentwise") {
    RingPtr z2 = make_zmod(2), z4 = make_zmod(4);
    RingPtr p22 = make_product({z2, z2});
    CHECK(p22->order() == 4);
    CHECK(idempotents(*p22).size() == 4);

    RingPtr p = make_product({z2, z4});
    const ElemSet& j = jacobson_radical(*p);
    std::vector<std::string> labels;
    for (Elem e : j.members()) labels.push_back(p->elem_label(e));
    CHECK(labels == std::vector<std::string>{"(0,0)", "(0,2)"});

    // derived sets factor componentwise
    auto componentwise = [&](const ElemSet& whole, const ElemSet& a, const ElemSet& b) {
        std::vector<Elem> expect;
        for (Elem x : a.members())
            for (Elem y : b.members())
                expect.push_back(prod_from_components(*p, std::array<Elem, 2>{x, y}));
        std::sort(expect.begin(), expect.end());
        return expect == whole.members();
    };
    CHECK(componentwise(jacobson_radical(*p), jacobson_radical(*z2), jacobson_radical(*z4)));
    CHECK(componentwise(units(*p), units(*z2), units(*z4)));
    CHECK(componentwise(idempotents(*p), idempotents(*z2), idempotents(*z4)));
    CHECK(componentwise(nilpotents(*p), nilpotents(*z2), nilpotents(*z4)));

    CHECK(is_abelian(*p));  // products of commutative rings stay abelian
    CHECK_FALSE(is_abelian(*make_product({z2, make_matrix(z2, 2)})));
    CHECK_THROWS_AS(make_product({}), ConstructionError);
}

TEST_CASE("matrix rings") {
    RingPtr z2 = make_zmod(2);
    RingPtr m1 = make_matrix(z2, 1);
    RingMap iso = make_map(z2, m1, [&](Elem a) {
        return mat_from_entries(*m1, std::array<Elem, 1>{a});
    });
    CHECK(is_isomorphism(iso));

    RingPtr m2 = make_matrix(z2, 2);
    CHECK(m2->order() == 16);
    CHECK(jacobson_radical(*m2).members() == std::vector<Elem>{Elem{0}});

    Elem e12 = unit_matrix(*m2, 0, 1), e21 = unit_matrix(*m2, 1, 0);
    CHECK(m2->mul(e12, e21) == unit_matrix(*m2, 0, 0));
    CHECK(m2->mul(e21, e12) == unit_matrix(*m2, 1, 1));
    CHECK_FALSE(is_abelian(*m2));

    // construction refused with a size report once the cap is hit
    Config tiny;
    tiny.structural_cap = 50;
    CHECK_THROWS_WITH_AS(make_matrix(make_zmod(3), 2, tiny),
                         doctest::Contains("exceeds the cap"), ConstructionError);
}

TEST_CASE("skew product examples") {
    RingPtr z2a = make_zmod(2), z2b = make_zmod(2);
    RingPtr p = make_product({z2a, z2b});
    RingMap swap = make_map(p, p, [&](Elem x) {
        std::vector<Elem> c = prod_components(*p, x);
        std::swap(c[0], c[1]);
        return prod_from_components(*p, c);
    });
    RingPtr st = make_skew_tri(p, 2, swap, "swap");

    auto diag = [&](Elem a) { return tri_from_entries(*st, std::array<Elem, 3>{a, p->zero(), a}); };
    auto upper = [&](Elem u) {
        return tri_from_entries(*st, std::array<Elem, 3>{p->zero(), u, p->zero()});
    };
    Elem e12 = tri_unit(*st, 1, 2);

    // diag(a,a) * E12 keeps a; E12 * diag(c,c) twists c by the swap
    Elem c = prod_from_components(*p, std::array<Elem, 2>{z2a->one(), z2b->zero()});  // (1,0)
    Elem swapped = prod_from_components(*p, std::array<Elem, 2>{z2a->zero(), z2b->one()});  // (0,1)
    CHECK(st->mul(diag(c), e12) == upper(c));
    CHECK(st->mul(e12, diag(c)) == upper(swapped));

    // sigma that is not an endomorphism is rejected
    RingMap bad = make_map(p, p, [&](Elem x) { return x == p->one() ? p->zero() : x; });
    CHECK_THROWS_AS(make_skew_tri(p, 2, bad, "bad"), ConstructionError);
}

TEST_CASE("constant-diagonal families") {
    RingPtr z2 = make_zmod(2);
    RingMap id = identity_map(z2);

    RingPtr t22 = make_family_T(z2, 2, id);
    CHECK(t22->order() == 4);
    // (a0,a1)(b0,b1) = (a0 b0, a0 b1 + a1 b0), exhaustively
    RingPtr parent = subset_parent(*t22);
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) {
            auto ea = tri_entries(*parent, subset_lift(*t22, Elem{a}));
            auto eb = tri_entries(*parent, subset_lift(*t22, Elem{b}));
            Elem a0 = ea[0], a1 = ea[1], b0 = eb[0], b1 = eb[1];
            auto ep = tri_entries(*parent, subset_lift(*t22, t22->mul(Elem{a}, Elem{b})));
            CHECK(ep[0] == z2->mul(a0, b0));
            CHECK(ep[1] == z2->add(z2->mul(a0, b1), z2->mul(a1, b0)));
        }

    RingPtr s22 = make_family_S(z2, 2, id);
    CHECK(s22->order() == 4);

    RingPtr t3 = make_family_T(z2, 3, id);
    CHECK(t3->order() == 8);
    // x * x = x^2 and x^3 = 0 in the truncated polynomial reading
    RingPtr par3 = subset_parent(*t3);
    auto from_tuple = [&](Elem a0, Elem a1, Elem a2) {
        std::array<Elem, 6> e = {a0, a1, a2, a0, a1, a0};
        return *subset_find(*t3, tri_from_entries(*par3, e));
    };
    Elem x = from_tuple(z2->zero(), z2->one(), z2->zero());
    Elem x2 = from_tuple(z2->zero(), z2->zero(), z2->one());
    CHECK(t3->mul(x, x) == x2);
    CHECK(t3->mul(t3->mul(x, x), x) == t3->zero());
    CHECK(t3->elem_label(x) == "(0,1,0)");

    RingPtr a4 = make_family_A(z2, 4, id);
    CHECK(a4->order() == 32);
    RingPtr b4 = make_family_B(z2, 4, id);
    CHECK(b4->order() == 64);
    CHECK_THROWS_AS(make_family_B(z2, 2, id), ConstructionError);
    CHECK_THROWS_AS(make_family_B(z2, 5, id), ConstructionError);
}

TEST_CASE("triangular bimodule ring") {
    RingPtr z2 = make_zmod(2);
    Bimodule bm = regular_bimodule(z2);
    RingPtr t = make_triangular(bm);
    CHECK(t->order() == 8);

    // matches the ordinary 2x2 upper triangular ring entrywise
    RingPtr t2 = make_upper_tri(z2, 2);
    RingMap iso = make_map(t, t2, [&](Elem x) { return Elem{x.v}; });
    CHECK(is_isomorphism(iso));

    // strictly upper block squares to zero
    for (std::uint64_t m = 0; m < 2; ++m) {
        Elem a = triangular_from_parts(*t, z2->zero(), Elem{m}, z2->zero());
        CHECK(t->mul(a, a) == t->zero());
    }

    // radical block shape (here J of both diagonals is trivial)
    const ElemSet& j = jacobson_radical(*t);
    std::vector<Elem> expect = {triangular_from_parts(*t, z2->zero(), Elem{0}, z2->zero()),
                                triangular_from_parts(*t, z2->zero(), Elem{1}, z2->zero())};
    std::sort(expect.begin(), expect.end());
    CHECK(j.members() == expect);

    // broken bimodule rejected with the offending law
    Bimodule broken = bm;
    broken.left_act[1 * 2 + 1] = Elem{0};  // 1 * m = m violated
    CHECK_THROWS_AS(make_triangular(broken), ConstructionError);
}

TEST_CASE("corner rings") {
    RingPtr z2 = make_zmod(2), z4 = make_zmod(4);
    RingPtr p = make_product({z2, z4});

    RingPtr whole = make_corner(p, p->one());
    CHECK(whole->order() == p->order());

    Elem e = prod_from_components(*p, std::array<Elem, 2>{z2->one(), z4->zero()});
    RingPtr c = make_corner(p, e);
    CHECK(c->order() == 2);
    RingMap iso = make_map(c, z2, [&](Elem x) { return Elem{x.v}; });
    CHECK(is_isomorphism(iso));  // order-2 corner with identity e is the 2-element field

    RingPtr m2 = make_matrix(z2, 2);
    Elem e11 = unit_matrix(*m2, 0, 0);
    CHECK(make_corner(m2, e11)->order() == 2);

    Elem not_idem = unit_matrix(*m2, 0, 1);
    CHECK_THROWS_AS(make_corner(m2, not_idem), ConstructionError);
}

TEST_CASE("quotients") {
    RingPtr z4 = make_zmod(4);
    RingPtr q = make_quotient(z4, make_ideal(z4, {Elem{0}, Elem{2}}));
    CHECK(q->order() == 2);
    RingMap iso = make_map(q, make_zmod(2), [&](Elem x) { return Elem{x.v}; });
    CHECK(is_isomorphism(iso));

    RingPtr r0 = make_quotient(z4, make_ideal(z4, {Elem{0}}));
    CHECK(r0->order() == 4);
    RingMap same = make_map(r0, z4, [&](Elem x) { return quotient_rep(*r0, x); });
    CHECK(is_isomorphism(same));

    // T2(Z2)/J splits into the two diagonal entries
    RingPtr t2 = make_upper_tri(make_zmod(2), 2);
    Ideal j = make_ideal(t2, jacobson_radical(*t2).members());
    RingPtr tq = make_quotient(t2, j);
    CHECK(tq->order() == 4);
    RingPtr z2 = make_zmod(2);
    RingPtr p22 = make_product({z2, z2});
    RingMap diag = make_map(tq, p22, [&](Elem x) {
        auto entries = tri_entries(*t2, quotient_rep(*tq, x));
        return prod_from_components(*p22, std::array<Elem, 2>{entries[0], entries[2]});
    });
    CHECK(is_isomorphism(diag));

    // projection is a surjective homomorphism with kernel exactly I
    RingMap proj = quotient_projection(tq);
    CHECK(is_homomorphism(proj));
    std::vector<Elem> kernel;
    std::vector<bool> hit(tq->order(), false);
    for (std::uint64_t x = 0; x < t2->order(); ++x) {
        if (proj.apply(Elem{x}) == tq->zero()) kernel.push_back(Elem{x});
        hit[proj.apply(Elem{x}).v] = true;
    }
    CHECK(kernel == j.members);
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));

    CHECK_THROWS_AS(make_ideal(t2, {Elem{0}, Elem{1}}), ConstructionError);
}

TEST_CASE("opposite rings") {
    RingPtr z6 = make_zmod(6);
    RingPtr o6 = make_opposite(z6);
    for (std::uint64_t a = 0; a < 6; ++a)
        for (std::uint64_t b = 0; b < 6; ++b)
            CHECK(o6->mul(Elem{a}, Elem{b}) == z6->mul(Elem{a}, Elem{b}));  // commutative: unchanged

    RingPtr t2 = make_upper_tri(make_zmod(2), 2);
    RingPtr opp = make_opposite(t2);
    RingPtr oppopp = make_opposite(opp);
    for (std::uint64_t a = 0; a < t2->order(); ++a)
        for (std::uint64_t b = 0; b < t2->order(); ++b) {
            CHECK(oppopp->mul(Elem{a}, Elem{b}) == t2->mul(Elem{a}, Elem{b}));
            CHECK(opp->mul(Elem{a}, Elem{b}) == t2->mul(Elem{b}, Elem{a}));
        }

    // the opposite of the upper triangular ring is the lower triangular
    // matrices under entrywise transpose
    RingPtr z2 = make_zmod(2);
    RingPtr m2 = make_matrix(z2, 2);
    std::array<Elem, 3> lower_gens = {unit_matrix(*m2, 0, 0), unit_matrix(*m2, 1, 0),
                                      unit_matrix(*m2, 1, 1)};
    RingPtr lower = make_subring(m2, lower_gens);
    CHECK(lower->order() == 8);
    RingMap transpose = make_map(opp, lower, [&](Elem x) {
        auto e = tri_entries(*t2, x);  // (1,1), (1,2), (2,2) of the upper matrix
        std::array<Elem, 4> flat = {e[0], z2->zero(), e[1], e[2]};
        return *subset_find(*lower, mat_from_entries(*m2, flat));
    });
    CHECK(is_isomorphism(transpose));
}

TEST_CASE("subring closure") {
    RingPtr z2 = make_zmod(2);
    RingPtr m2 = make_matrix(z2, 2);

    // empty generators give the prime subring
    std::vector<Elem> prime = subring_closure(*m2, {});
    CHECK(prime == std::vector<Elem>{m2->zero(), m2->one()});
    CHECK(subring_closure(*make_zmod(4), {}).size() == 4);

    Elem e12 = unit_matrix(*m2, 0, 1);
    std::vector<Elem> c = subring_closure(*m2, std::array<Elem, 1>{e12});
    std::vector<Elem> expect = {m2->zero(), e12, m2->one(), m2->add(m2->one(), e12)};
    std::sort(expect.begin(), expect.end());
    CHECK(c == expect);

    // idempotent and monotone
    CHECK(subring_closure(*m2, c) == c);
    std::vector<Elem> bigger = subring_closure(*m2, std::array<Elem, 2>{e12, unit_matrix(*m2, 0, 0)});
    CHECK(std::includes(bigger.begin(), bigger.end(), c.begin(), c.end()));
}

TEST_CASE("element predicates") {
    RingPtr z6 = make_zmod(6);
    CHECK(idempotents(*z6).members() == std::vector<Elem>{Elem{0}, Elem{1}, Elem{3}, Elem{4}});
    CHECK_FALSE(is_local(*z6));

    RingPtr z5 = make_zmod(5);
    CHECK(idempotents(*z5).size() == 2);
    CHECK(is_abelian(*z5));
    CHECK(is_local(*z5));
    CHECK(is_local(*make_zmod(4)));
    CHECK(is_local(*make_zmod(8)));
    CHECK(is_local(*make_trunc_series(make_zmod(2), 3)));
    CHECK_FALSE(is_local(*make_matrix(make_zmod(2), 2)));
    CHECK_FALSE(is_local(*make_zmod(1)));
}

TEST_CASE("structural constructions agree with the base at size one") {
    RingPtr z6 = make_zmod(6);
    RingPtr m1 = make_matrix(z6, 1);
    RingPtr t1 = make_upper_tri(z6, 1);
    RingMap im = make_map(z6, m1, [&](Elem a) { return mat_from_entries(*m1, std::array<Elem, 1>{a}); });
    RingMap it = make_map(z6, t1, [&](Elem a) { return tri_from_entries(*t1, std::array<Elem, 1>{a}); });
    CHECK(is_isomorphism(im));
    CHECK(is_isomorphism(it));
}

TEST_CASE("degenerate rings") {
    // the one-element ring: zero = one is allowed there
    RingPtr z1 = make_zmod(1);
    CHECK(z1->order() == 1);
    CHECK(z1->zero() == z1->one());
    CHECK(verify_ring_axioms(*z1).ok);
    CHECK(units(*z1).size() == 1);
    CHECK(jacobson_radical(*z1).size() == 1);

    // the corner at the zero idempotent collapses to it
    RingPtr z4 = make_zmod(4);
    RingPtr zero_corner = make_corner(z4, z4->zero());
    CHECK(zero_corner->order() == 1);

    // 1x1 skew triangular ring with the identity twist is the base
    RingPtr z6 = make_zmod(6);
    RingPtr t1 = make_skew_tri(z6, 1, identity_map(z6), "id");
    CHECK(t1->order() == 6);
}

TEST_CASE("element lookup by label") {
    RingPtr p = make_product({make_zmod(2), make_zmod(4)});
    auto e = find_element_by_label(*p, "(1, 0)");
    REQUIRE(e.has_value());
    CHECK(p->elem_label(*e) == "(1,0)");
    CHECK(find_element_by_label(*p, "#5") == Elem{5});
    CHECK_FALSE(find_element_by_label(*p, "(9,9)").has_value());
}
