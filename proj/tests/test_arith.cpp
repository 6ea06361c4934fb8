#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"
#include "skein/arith.hpp"

using namespace skein;

namespace {

bool parity_ok(const DTDatum& d, const std::vector<int>& n) {
    for (int v = 0; v < d.vertex_count(); ++v) {
        int s = 0;
        for (int slot = 1; slot <= 3; ++slot) {
            int c = d.curve_at(v, slot);
            if (c >= 0) s += n[static_cast<std::size_t>(c)];
        }
        if (s % 2 != 0) return false;
    }
    return true;
}

// Generators of the Z-span of the monoid: parity-admissible 0/1 vectors, 2e_i, and the t units.
std::vector<Exponent> span_generators(const DTDatum& d) {
    const int r = d.curve_count();
    std::vector<Exponent> gens;
    for (int mask = 1; mask < (1 << r); ++mask) {
        std::vector<int> n(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) n[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        if (!parity_ok(d, n)) continue;
        Exponent k(static_cast<std::size_t>(2 * r), 0);
        std::copy(n.begin(), n.end(), k.begin());
        gens.push_back(k);
    }
    for (int i = 0; i < r; ++i) {
        gens.push_back(unit_exponent(2 * r, i, 2));
        gens.push_back(unit_exponent(2 * r, r + i));
    }
    return gens;
}

}  // namespace

TEST_CASE("orders examples") {
    auto o5 = orders(5);
    CHECK(o5.n == 5);
    CHECK(o5.n_prime == 5);
    CHECK(o5.n_big == 5);
    CHECK(o5.epsilon == EpsilonClass::One);
    auto o6 = orders(6);
    CHECK(o6.n_prime == 3);
    CHECK(o6.n_big == 3);
    CHECK(o6.epsilon == EpsilonClass::MinusOne);
    auto o4 = orders(4);
    CHECK(o4.n_prime == 2);
    CHECK(o4.n_big == 1);
    CHECK(o4.epsilon == EpsilonClass::I);
    // N' even with a real eps
    auto o8 = orders(8);
    CHECK(o8.n_prime == 4);
    CHECK(o8.n_big == 2);
    CHECK(o8.epsilon == EpsilonClass::MinusOne);
    CHECK(orders(16).epsilon == EpsilonClass::One);
    CHECK_THROWS(orders(0));
}

TEST_CASE("orders invariants") {
    for (int n = 1; n <= 200; ++n) {
        auto o = orders(n);
        CHECK((4 * o.epsilon_exponent) % n == 0);
        bool odd = o.n_prime % 2 == 1;
        bool real = o.epsilon == EpsilonClass::One || o.epsilon == EpsilonClass::MinusOne;
        // N' odd forces eps real; the converse holds unless 8 | n.
        if (odd) CHECK(real);
        if (n % 8 != 0) CHECK(odd == real);
        // N = ord(xi^4) computed from the root directly
        CHECK(Cyclotomic::root_power(n, 4).multiplicative_order() == o.n_big);
        CHECK(Cyclotomic::root_power(n, 2).multiplicative_order() == o.n_prime);
    }
}

TEST_CASE("chebyshev examples") {
    CHECK(chebyshev(0) == IntPoly{2});
    CHECK(chebyshev(1) == IntPoly{0, 1});
    CHECK(chebyshev(2) == IntPoly{-2, 0, 1});
    CHECK(chebyshev(3) == IntPoly{0, -3, 0, 1});
    CHECK(threading_coeffs(1) == IntPoly{0, 1});
    CHECK(threading_coeffs(3) == IntPoly{0, -3, 0, 1});
    CHECK(threading_coeffs(5) == IntPoly{0, 5, 0, -5, 0, 1});
    CHECK_THROWS(chebyshev(-1));
}

TEST_CASE("chebyshev oracle T_k(x + 1/x) = x^k + x^-k") {
    for (int k = 0; k <= 64; ++k) {
        CAPTURE(k);
        CHECK(oracle::chebyshev_identity(chebyshev(k), k));
    }
    for (int n = 1; n <= 64; ++n) CHECK(threading_coeffs(n) == chebyshev(n));
}

TEST_CASE("pi_degree examples") {
    CHECK(pi_degree(2, 0, orders(5)) == 125);
    CHECK(pi_degree(1, 2, orders(4)) == 2);
    CHECK(pi_degree(0, 4, orders(6)) == 3);
    CHECK_THROWS(pi_degree(1, 1, orders(5)));
}

TEST_CASE("lambda_hat and even sublattice examples") {
    auto d04 = standard_datum(0, 4);
    CHECK(lambda_hat(d04) == LatticeBasis(IntMatrix::from_columns({{2, 0}, {0, 1}})));
    CHECK(even_sublattice(d04) == lambda_hat(d04));

    auto d20 = standard_datum(2, 0);
    auto z6 = LatticeBasis(IntMatrix::identity(6));
    // Both theta vertices see c1, c2, c3, so there is a single parity condition.
    CHECK(lattice_index(lambda_hat(d20), z6) == 2);
    for (auto [g, m] : {std::pair{0, 5}, std::pair{1, 2}, std::pair{2, 0}, std::pair{2, 1}}) {
        // index = 2^r / #(parity-admissible 0/1 vectors)
        auto d = standard_datum(g, m);
        const int r = d.curve_count();
        int admissible = 0;
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> n(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) n[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            admissible += parity_ok(d, n);
        }
        CHECK(lattice_index(lambda_hat(d), LatticeBasis(IntMatrix::identity(2 * r))) == (1 << r) / admissible);
    }
    CHECK(lattice_index(even_sublattice(d20), lambda_hat(d20)) == 16);
    CHECK(lattice_index(even_sublattice(standard_datum(1, 2)), lambda_hat(standard_datum(1, 2))) == 4);
}

TEST_CASE("kernel lattice examples") {
    auto d = standard_datum(0, 4);
    CHECK(kernel_lattice(d, 5) == lambda_hat(d).scaled(5));
    CHECK(kernel_lattice(d, 1) == lambda_hat(d));
    CHECK(lattice_index(kernel_lattice(d, 5), lambda_hat(d)) == 25);
}

TEST_CASE("kernel lattice agrees with brute-force membership") {
    struct Case {
        int g, m;
        std::vector<int> mods;
    };
    for (const auto& cs : {Case{0, 4, {1, 2, 3, 4, 5, 6, 8, 12}}, Case{0, 5, {2, 3, 4}}, Case{1, 2, {2, 4, 6}}}) {
        auto d = standard_datum(cs.g, cs.m);
        auto qt = tilde_q(q_matrix(d));
        const int r = d.curve_count();
        auto gens = span_generators(d);
        for (int mod : cs.mods) {
            CAPTURE(cs.g);
            CAPTURE(cs.m);
            CAPTURE(mod);
            auto k = kernel_lattice(d, mod);
            const int b = 2 * mod;
            std::vector<int> lo(static_cast<std::size_t>(2 * r), -b), hi(static_cast<std::size_t>(2 * r), b);
            int members = 0, mismatches = 0;
            gen::for_each_in_box(lo, hi, [&](const std::vector<int>& v) {
                bool expect = parity_ok(d, std::vector<int>(v.begin(), v.begin() + r));
                for (std::size_t i = 0; expect && i < gens.size(); ++i)
                    if (pairing(qt, v, gens[i]) % mod != 0) expect = false;
                members += expect;
                if (k.contains(IntVec(v.begin(), v.end())) != expect) ++mismatches;
            });
            CHECK(mismatches == 0);
            CHECK(members > 0);
        }
    }
}

TEST_CASE("kostov genericity examples") {
    CHECK_FALSE(kostov_generic({2.0, 0.0}, 1e-9));
    CHECK_FALSE(kostov_generic({-2.0}, 1e-9));
    CHECK(kostov_generic({3.0}, 1e-9));
    for (double w0 : {0.5, 1.0, 3.0, 7.25})
        CHECK_FALSE(kostov_generic({std::complex<double>(w0, 0.3), std::complex<double>(w0, 0.3)}, 1e-9));
    CHECK_THROWS(kostov_generic({3.0}, 0.0));
}
