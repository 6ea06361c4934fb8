#include "doctest.h"
#include "gen.hpp"
#include "skein/qtrace.hpp"

using namespace skein;

namespace {

PantsCoord pc(std::vector<int> n, std::vector<int> t) { return PantsCoord{std::move(n), std::move(t)}; }

Torus mono(PantsType type, Exponent k, GroundRing c = 1) { return Torus::monomial(trace_torus(type), std::move(k), std::move(c)); }

constexpr PantsType kTypes[] = {PantsType::P1, PantsType::P2, PantsType::P3};

}  // namespace

TEST_CASE("trace torus commutation") {
    const auto& p3 = *trace_torus(PantsType::P3);
    CHECK(p3(1, 0) == 1);
    CHECK(p3(2, 1) == 1);
    CHECK(p3(0, 2) == 1);
    for (int i = 0; i < 3; ++i) {
        CHECK(p3(3 + i, i) == 2);
        for (int k = 0; k < 3; ++k) {
            CHECK(p3(3 + i, 3 + k) == 0);
            if (k != i) CHECK(p3(3 + i, k) == 0);
        }
    }
    const auto& p2 = *trace_torus(PantsType::P2);
    CHECK(p2(1, 0) == 1);
    CHECK(p2(2, 0) == 2);
    CHECK(p2(3, 1) == 2);
    CHECK(p2(2, 1) == 0);
    CHECK(trace_torus(PantsType::P1)->rows() == std::vector<std::vector<int>>{{0, -2}, {2, 0}});
}

TEST_CASE("pants_degree") {
    CHECK(pants_degree(PantsType::P3, {1, 2, 3, 4, -5, 6}) == std::vector<std::int64_t>{6, 5, 0});
    CHECK(pants_degree(PantsType::P2, {1, 2, 3, 4}) == std::vector<std::int64_t>{3, 7, 4});
    CHECK(pants_degree(PantsType::P1, {2, -1}) == std::vector<std::int64_t>{2, -1, 0});
}

TEST_CASE("utr_component catalog") {
    CHECK(utr_component(PantsType::P3, ComponentSpec::cross(2, 3)) == mono(PantsType::P3, {0, 1, 1, 0, 0, 0}));
    CHECK(utr_component(PantsType::P2, ComponentSpec::ret(2)) ==
          mono(PantsType::P2, {0, 2, -1, 1}) + mono(PantsType::P2, {0, 2, 0, 0}, GroundRing::puncture(0)));
    CHECK(utr_component(PantsType::P2, ComponentSpec::ret(1)) ==
          mono(PantsType::P2, {2, 0, 0, 1}) + mono(PantsType::P2, {2, 0, 1, 0}, GroundRing::puncture(0, -1)));
    CHECK(utr_component(PantsType::P1, ComponentSpec::loop(1)) == mono(PantsType::P1, {0, 1}) + mono(PantsType::P1, {0, -1}));
    CHECK(utr_component(PantsType::P3, ComponentSpec::ret(1)) ==
          mono(PantsType::P3, {2, 0, 0, 0, 1, 0}) + mono(PantsType::P3, {2, 0, 0, 1, 0, -1}));
    // twisted cross arc [u_1^s u_3^t x_1 x_3]
    CHECK(utr_component(PantsType::P3, ComponentSpec::cross(1, 3, 1, 2, -1)) == mono(PantsType::P3, {1, 0, 1, 2, 0, -1}));
}

TEST_CASE("utr_coord examples") {
    auto p1 = utr_coord(PantsType::P1, pc({2}, {1}));
    auto b2b3 = GroundRing::puncture(0) * GroundRing::puncture(1);
    CHECK(p1 == mono(PantsType::P1, {2, 1}) + mono(PantsType::P1, {2, 0}, b2b3));
    CHECK(utr_coord(PantsType::P3, pc({0, 0, 0}, {1, 0, 0})) ==
          mono(PantsType::P3, {0, 0, 0, 1, 0, 0}) + mono(PantsType::P3, {0, 0, 0, -1, 0, 0}));
    auto sq = utr_coord(PantsType::P1, pc({4}, {2}));
    CHECK(sq == reflection_normalize(p1 * p1));
    CHECK(reflect(sq) == sq);
    CHECK_THROWS(utr_coord(PantsType::P1, pc({0}, {-1})));
}

TEST_CASE("lead examples under the pants degree") {
    auto lead_of = [](PantsType type, const PantsCoord& c) {
        auto e = utr_coord(type, c);
        return lead_terms(e, [type](const Exponent& k) { return pants_degree(type, k); });
    };
    auto l3 = lead_of(PantsType::P3, pc({2, 0, 0}, {0, 1, 0}));
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].first == Exponent{2, 0, 0, 0, 1, 0});
    CHECK(pants_degree(PantsType::P3, {2, 0, 0, 1, 0, -1}) == std::vector<std::int64_t>{2, 0, 0});

    auto l2 = lead_of(PantsType::P2, pc({0, 2}, {-1, 1}));
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].first == Exponent{0, 2, -1, 1});
    CHECK(pants_degree(PantsType::P2, {0, 2, -1, 1}) == std::vector<std::int64_t>{2, 0, 1});
    CHECK(pants_degree(PantsType::P2, {0, 2, 0, 0}) == std::vector<std::int64_t>{2, 0, 0});

    auto l1 = lead_of(PantsType::P1, pc({2}, {1}));
    REQUIRE(l1.size() == 1);
    CHECK(l1[0].first == Exponent{2, 1});
}

TEST_CASE("reflection_normalize") {
    auto q = trace_torus(PantsType::P1);
    auto x = Torus::monomial(q, {2, 0}, GroundRing::q_power(3));
    CHECK(reflection_normalize(x) == Torus::monomial(q, {2, 0}, 1));
    auto bad = Torus::monomial(q, {2, 0}, GroundRing(1) + GroundRing::q_power(1));
    CHECK_THROWS(reflection_normalize(bad));
}

TEST_CASE("trace properties over a box") {
    for (auto type : kTypes) {
        CAPTURE(pants_type_name(type));
        const int j = boundary_count(type);
        int checked = 0;
        gen::for_each_nt(j, type == PantsType::P3 ? 3 : 4, [&](const std::vector<int>& v) {
            auto c = PantsCoord::from_exponent(v);
            if (!lambda_contains(type, c)) return;
            ++checked;
            auto rep = check_thmbtr(type, c);
            if (!rep.ok()) FAIL_CHECK(c.to_string() << ": " << rep.failures.front());
        });
        CHECK(checked > 0);
    }
}

TEST_CASE("boundary grading and twist, checked directly") {
    gen::Rng rng(41);
    for (auto type : kTypes) {
        const int j = boundary_count(type);
        for (int it = 0; it < 200; ++it) {
            auto c = gen::pants_member(rng, type, 5);
            auto e = utr_coord(type, c);
            for (const auto& [k, coeff] : e.terms())
                for (int i = 0; i < j; ++i) CHECK(k[static_cast<std::size_t>(i)] == c.n[static_cast<std::size_t>(i)]);
            CHECK(reflect(e) == e);
            // twist property: [u_i * utr(c)] equals utr of the twisted coordinate when n_i > 0
            int i = gen::uniform(rng, 1, j);
            if (c.n[static_cast<std::size_t>(i - 1)] > 0)
                CHECK(e.shifted(unit_exponent(2 * j, j + i - 1)) == utr_coord(type, twist_apply(type, i, c)));
        }
    }
}
