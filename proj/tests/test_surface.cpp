#include <algorithm>

#include "doctest.h"
#include "gen.hpp"
#include "skein/surface.hpp"

using namespace skein;

namespace {

GlobalCoord gc(std::vector<int> n, std::vector<int> t) { return GlobalCoord{std::move(n), std::move(t)}; }

const std::pair<int, int> kSurfaces[] = {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4}, {2, 0}, {2, 1}};

DTDatum theta_datum() {
    FatGraph g;
    g.vertices = {{0, 2, 4}, {1, 3, 5}};
    g.edges = {{0, 1, 1}, {2, 3, 2}, {4, 5, 3}};
    return DTDatum(g, {{1, 3, 2}, {1, 3, 2}});
}

// Corner count straight from the cyclic orders: +1 for each h in e_a sitting immediately
// clockwise of h' in e_c, -1 for immediately counterclockwise.
std::vector<std::vector<int>> corner_count(const FatGraph& g, int r) {
    std::vector<int> curve_of;
    for (const auto& e : g.edges) {
        int top = std::max(e.h1, e.h2);
        if (static_cast<int>(curve_of.size()) <= top) curve_of.resize(static_cast<std::size_t>(top + 1), -1);
        curve_of[static_cast<std::size_t>(e.h1)] = e.curve - 1;
        curve_of[static_cast<std::size_t>(e.h2)] = e.curve - 1;
    }
    auto curve = [&](int h) { return h < static_cast<int>(curve_of.size()) ? curve_of[static_cast<std::size_t>(h)] : -1; };
    std::vector<std::vector<int>> q(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (const auto& v : g.vertices) {
        for (std::size_t p = 0; p < 3; ++p) {
            int h = v[p];                // counterclockwise successor of h is v[p+1],
            int ccw = v[(p + 1) % 3];  // so h is immediately clockwise of ccw
            int a = curve(h), c = curve(ccw);
            if (a < 0 || c < 0) continue;
            q[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] += 1;
            q[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] -= 1;
        }
    }
    return q;
}

DTDatum rotated(const DTDatum& d, int v) {
    FatGraph g = d.graph();
    auto slots = d.slots();
    auto& vs = g.vertices[static_cast<std::size_t>(v)];
    auto& ss = slots[static_cast<std::size_t>(v)];
    std::rotate(vs.begin(), vs.begin() + 1, vs.end());
    std::rotate(ss.begin(), ss.begin() + 1, ss.end());
    return DTDatum(g, slots);
}

}  // namespace

TEST_CASE("standard datum shapes") {
    auto d04 = standard_datum(0, 4);
    CHECK(d04.curve_count() == 1);
    CHECK(d04.vertex_count() == 2);
    CHECK(d04.face_type(0) == PantsType::P1);
    CHECK(d04.face_type(1) == PantsType::P1);

    auto d20 = standard_datum(2, 0);
    CHECK(d20.curve_count() == 3);
    CHECK(d20.vertex_count() == 2);
    CHECK(d20.face_type(0) == PantsType::P3);
    CHECK(d20.face_type(1) == PantsType::P3);

    CHECK_THROWS(standard_datum(1, 1));
    CHECK_THROWS(standard_datum(1, 0));
    CHECK_THROWS(standard_datum(0, 3));
    CHECK(is_excluded_surface(1, 1));
    CHECK_FALSE(is_excluded_surface(1, 2));

    for (auto [g, m] : kSurfaces) {
        CAPTURE(g);
        CAPTURE(m);
        auto d = standard_datum(g, m);
        CHECK(d.curve_count() == 3 * g - 3 + m);
        CHECK(d.genus() == g);
        CHECK(d.puncture_count() == m);
        for (int v = 0; v < d.vertex_count(); ++v)
            if (d.face_type(v) == PantsType::P2) CHECK(d.curve_at(v, 2) < d.curve_at(v, 1));
    }
}

TEST_CASE("datum validation rejects bad input") {
    FatGraph g = theta_datum().graph();
    // counterclockwise slot order instead of clockwise
    CHECK_THROWS(DTDatum(g, {{1, 2, 3}, {1, 3, 2}}));
    // duplicate slot
    CHECK_THROWS(DTDatum(g, {{1, 1, 2}, {1, 3, 2}}));
    FatGraph bad = g;
    bad.vertices[0].pop_back();
    bad.legs = {};
    CHECK_THROWS(DTDatum(bad, {{1, 2}, {1, 3, 2}}));
    FatGraph renum = g;
    renum.edges[2].curve = 2;
    CHECK_THROWS(DTDatum(renum, {{1, 3, 2}, {1, 3, 2}}));

    // (N1): swap the curves at slots 1 and 2 of a P2 face.
    auto d = standard_datum(0, 5);
    int p2 = -1;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.face_type(v) == PantsType::P2) p2 = v;
    REQUIRE(p2 >= 0);
    FatGraph h = d.graph();
    for (auto& e : h.edges) e.curve = 3 - e.curve;
    CHECK_THROWS(DTDatum(h, d.slots()));
}

TEST_CASE("q_matrix examples and regression constant") {
    CHECK(q_matrix(standard_datum(0, 4)).rows() == std::vector<std::vector<int>>{{0}});
    auto theta = theta_datum();
    CHECK(theta.genus() == 2);
    const std::vector<std::vector<int>> frozen{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
    CHECK(q_matrix(theta).rows() == frozen);
    CHECK(q_matrix(standard_datum(2, 0)).rows() == frozen);
}

TEST_CASE("q_matrix matches corner count, antisymmetry and rotation invariance") {
    for (auto [g, m] : kSurfaces) {
        auto d = standard_datum(g, m);
        auto q = q_matrix(d);
        CHECK(q.rows() == corner_count(d.graph(), d.curve_count()));
        for (int i = 0; i < q.dim(); ++i)
            for (int j = 0; j < q.dim(); ++j) CHECK(q(i, j) == -q(j, i));
        for (int v = 0; v < d.vertex_count(); ++v) {
            auto r = rotated(d, v);
            CHECK(q_matrix(r) == q);
            CHECK(q_matrix(rotated(rotated(r, v), v)) == q);
        }
    }
}

TEST_CASE("tilde_q blocks and pairing formula") {
    CHECK(tilde_q(AntisymMatrix::from_rows({{0}})).rows() == std::vector<std::vector<int>>{{0, 2}, {-2, 0}});
    CHECK(tilde_q(AntisymMatrix(2)).rows() ==
          std::vector<std::vector<int>>{{0, 0, 2, 0}, {0, 0, 0, 2}, {-2, 0, 0, 0}, {0, -2, 0, 0}});
    gen::Rng rng(51);
    for (auto [g, m] : kSurfaces) {
        auto d = standard_datum(g, m);
        auto q = q_matrix(d);
        auto qt = tilde_q(q);
        const int r = d.curve_count();
        for (int it = 0; it < 200; ++it) {
            auto k = gen::exponent(rng, 2 * r), l = gen::exponent(rng, 2 * r);
            Exponent n(k.begin(), k.begin() + r), t(k.begin() + r, k.end());
            Exponent n2(l.begin(), l.begin() + r), t2(l.begin() + r, l.end());
            std::int64_t expect = pairing(q, n, n2);
            for (int i = 0; i < r; ++i) expect += 2LL * n[i] * t2[i] - 2LL * n2[i] * t[i];
            CHECK(pairing(qt, k, l) == expect);
        }
    }
}

TEST_CASE("lambda_global examples and closure") {
    auto d = standard_datum(0, 4);
    CHECK(lambda_global(d, gc({2}, {2})));
    CHECK_FALSE(lambda_global(d, gc({1}, {0})));
    CHECK_FALSE(lambda_global(d, gc({0}, {-1})));
    CHECK(lambda_global(d, gc({0}, {0})));
    CHECK(lambda_global_violation(d, gc({1}, {0})).has_value());

    gen::Rng rng(52);
    for (auto [g, m] : kSurfaces) {
        auto dd = standard_datum(g, m);
        for (int it = 0; it < 300; ++it) {
            auto a = gen::global_member(rng, dd, 4), b = gen::global_member(rng, dd, 4);
            CHECK(lambda_global(dd, GlobalCoord::from_exponent(add_exponents(a.as_exponent(), b.as_exponent()))));
        }
    }
}

TEST_CASE("d_embed examples and injectivity") {
    CHECK(d_embed(standard_datum(0, 4), gc({2}, {2})) == std::vector<std::int64_t>{2, 2});
    auto d5 = standard_datum(0, 5);
    CHECK(d_embed(d5, gc({1, 3}, {0, -1})) == std::vector<std::int64_t>{4, -1, 0, 1});

    gen::Rng rng(53);
    for (auto [g, m] : kSurfaces) {
        auto d = standard_datum(g, m);
        const int r = d.curve_count();
        for (int it = 0; it < 200; ++it) {
            auto k = gen::exponent(rng, 2 * r);
            auto e = d_embed(d, k);
            // reconstruct (n, t) from the embedding
            Exponent back(static_cast<std::size_t>(2 * r));
            std::int64_t sn = e[0], st = e[1];
            for (int i = 0; i + 1 < r; ++i) {
                back[static_cast<std::size_t>(r + i)] = static_cast<int>(e[static_cast<std::size_t>(2 + i)]);
                back[static_cast<std::size_t>(i)] = static_cast<int>(e[static_cast<std::size_t>(2 + (r - 1) + i)]);
                sn -= back[static_cast<std::size_t>(i)];
                st -= back[static_cast<std::size_t>(r + i)];
            }
            back[static_cast<std::size_t>(r - 1)] = static_cast<int>(sn);
            back[static_cast<std::size_t>(2 * r - 1)] = static_cast<int>(st);
            CHECK(back == k);
        }
    }
}

TEST_CASE("face_split examples") {
    auto d = standard_datum(0, 4);
    auto s = face_split(d, gc({2}, {2}));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == PantsCoord{{2}, {1}});
    CHECK(s[1] == PantsCoord{{2}, {1}});

    auto s4 = face_split(d, gc({2}, {4}));
    const int vp = d.prime_side(0).vertex, vpp = d.double_prime_side(0).vertex;
    CHECK(s4[static_cast<std::size_t>(vp)] == PantsCoord{{2}, {3}});
    CHECK(s4[static_cast<std::size_t>(vpp)] == PantsCoord{{2}, {1}});
    auto s4b = face_split(d, gc({2}, {4}), {ResidualSide::DoublePrime});
    CHECK(s4b[static_cast<std::size_t>(vp)] == PantsCoord{{2}, {1}});
    CHECK(s4b[static_cast<std::size_t>(vpp)] == PantsCoord{{2}, {3}});

    CHECK_THROWS(face_split(d, gc({1}, {0})));
}

TEST_CASE("face_split is matched and lands in each face monoid") {
    gen::Rng rng(54);
    for (auto [g, m] : kSurfaces) {
        auto d = standard_datum(g, m);
        for (int it = 0; it < 200; ++it) {
            auto c = gen::global_member(rng, d, 5);
            auto split = face_split(d, c);
            for (int v = 0; v < d.vertex_count(); ++v)
                CHECK(lambda_contains(d.face_type(v), split[static_cast<std::size_t>(v)]));
            for (int cu = 0; cu < d.curve_count(); ++cu) {
                auto p = d.prime_side(cu), pp = d.double_prime_side(cu);
                int np = split[static_cast<std::size_t>(p.vertex)].n[static_cast<std::size_t>(p.slot - 1)];
                int npp = split[static_cast<std::size_t>(pp.vertex)].n[static_cast<std::size_t>(pp.slot - 1)];
                CHECK(np == c.n[static_cast<std::size_t>(cu)]);
                CHECK(npp == c.n[static_cast<std::size_t>(cu)]);
            }
        }
    }
}

TEST_CASE("phi examples") {
    auto d = standard_datum(0, 4);
    auto q = surface_torus(d);
    auto p = phi_lead(d, gc({2}, {2}));
    REQUIRE(p.unique_lead());
    CHECK(p.lead_exponent() == Exponent{2, 2});
    CHECK(p.lead.front().second == GroundRing(1));
    CHECK(p.value.size() > 1);

    auto loop = phi_lead(d, gc({0}, {1}));
    CHECK(loop.value == Torus::monomial(q, {0, 1}, 1) + Torus::monomial(q, {0, -1}, 1));
    CHECK(loop.lead_exponent() == Exponent{0, 1});
    CHECK_THROWS(phi_lead(d, gc({0}, {-1})));
}

TEST_CASE("phi does not depend on the residual twist placement") {
    gen::Rng rng(55);
    for (auto [g, m] : {std::pair{0, 4}, std::pair{0, 5}, std::pair{1, 2}, std::pair{2, 0}}) {
        auto d = standard_datum(g, m);
        auto q = surface_torus(d);
        const auto r = static_cast<std::size_t>(d.curve_count());
        for (int it = 0; it < 40; ++it) {
            auto c = gen::global_member(rng, d, 3);
            auto base = phi_lead(d, q, c);
            std::vector<ResidualSide> other(r, ResidualSide::DoublePrime), mixed(r);
            for (auto& s : mixed) s = gen::uniform(rng, 0, 1) ? ResidualSide::Prime : ResidualSide::DoublePrime;
            CHECK(phi_lead(d, q, c, other).value == base.value);
            CHECK(phi_lead(d, q, c, mixed).value == base.value);
        }
    }
}

TEST_CASE("phi lead on a small box") {
    for (auto [g, m] : {std::pair{0, 4}, std::pair{0, 5}, std::pair{1, 2}}) {
        auto d = standard_datum(g, m);
        auto q = surface_torus(d);
        gen::for_each_nt(d.curve_count(), 2, [&](const std::vector<int>& v) {
            auto c = GlobalCoord::from_exponent(v);
            if (!lambda_global(d, c)) return;
            auto p = phi_lead(d, q, c);
            if (!p.unique_lead() || p.lead_exponent() != v || !(p.lead.front().second == GroundRing(1)))
                FAIL_CHECK("lead mismatch at " << c.to_string());
        });
    }
}

TEST_CASE("lead of a product of phi values") {
    gen::Rng rng(56);
    for (auto [g, m] : {std::pair{0, 5}, std::pair{1, 2}, std::pair{2, 0}}) {
        auto d = standard_datum(g, m);
        auto q = surface_torus(d);
        auto deg = [&d](const Exponent& k) { return d_embed(d, k); };
        for (int it = 0; it < 30; ++it) {
            auto k = gen::global_member(rng, d, 2), l = gen::global_member(rng, d, 2);
            auto prod = phi_lead(d, q, k).value * phi_lead(d, q, l).value;
            auto lead = lead_terms(prod, deg);
            std::int64_t p = pairing(*q, k.as_exponent(), l.as_exponent());
            CHECK(p % 2 == 0);
            REQUIRE(lead.size() == 1);
            CHECK(lead[0].first == add_exponents(k.as_exponent(), l.as_exponent()));
            CHECK(lead[0].second == GroundRing::q_power(static_cast<int>(p)));
        }
    }
}

TEST_CASE("graded_mul examples") {
    auto d = standard_datum(0, 4);
    auto r = graded_mul(d, gc({2}, {0}), gc({0}, {1}), 5);
    CHECK(r.xi_power == 2);
    CHECK(r.sum == gc({2}, {1}));
    REQUIRE(r.xi_value.has_value());
    CHECK(*r.xi_value == specialize(HalfLaurent::q_power(4), 5));

    auto zero = graded_mul(d, gc({4}, {3}), gc({0}, {0}));
    CHECK(zero.xi_power == 0);
    CHECK(zero.sum == gc({4}, {3}));
    auto same = graded_mul(d, gc({2}, {5}), gc({2}, {5}));
    CHECK(same.xi_power == 0);
    CHECK(same.sum == gc({4}, {10}));

    auto odd = AntisymMatrix::from_rows({{0, 1}, {-1, 0}});
    CHECK_THROWS_AS(graded_mul(odd, gc({1}, {0}), gc({0}, {1})), std::domain_error);
}

TEST_CASE("datum JSON round trip is bit exact") {
    for (auto [g, m] : kSurfaces) {
        auto d = standard_datum(g, m);
        auto text = datum_to_json(d);
        auto back = datum_from_json(text);
        CHECK(back == d);
        CHECK(datum_to_json(back) == text);
    }
    auto theta = theta_datum();
    CHECK(datum_from_json(datum_to_json(theta)) == theta);
    CHECK_THROWS(datum_from_json("{"));
    CHECK_THROWS(datum_from_json(R"({"vertices": []})"));
    CHECK_THROWS(load_datum("/nonexistent/datum.json"));
}
