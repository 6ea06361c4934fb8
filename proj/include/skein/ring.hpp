#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<std::int64_t>;

// Laurent polynomial in q^{1/2} with integer coefficients.
// Exponents are stored in half-steps: key e means q^{e/2}.
class HalfLaurent {
public:
    using Term = std::pair<int, std::int64_t>;

    HalfLaurent() = default;
    HalfLaurent(std::int64_t constant);  // NOLINT(implicit)

    static HalfLaurent q_power(int half_steps, std::int64_t coeff = 1);
    static HalfLaurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int half_steps) const;
    int min_half_exponent() const;
    int max_half_exponent() const;

    HalfLaurent shifted(int half_steps) const;

    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    HalfLaurent& operator*=(const HalfLaurent& o);
    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    HalfLaurent operator-() const;
    bool operator==(const HalfLaurent&) const = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

HalfLaurent reflect(const HalfLaurent& p);

// Coefficient ring of a face or surface torus: Laurent polynomials in q^{1/2}
// and in one variable per puncture.
class GroundRing {
public:
    struct Monomial {
        int q_half = 0;
        std::vector<int> punctures;  // exponent per puncture variable, trailing zeros trimmed
        auto operator<=>(const Monomial&) const = default;
        bool operator==(const Monomial&) const = default;
    };
    using Term = std::pair<Monomial, std::int64_t>;

    GroundRing() = default;
    GroundRing(std::int64_t constant);  // NOLINT(implicit)
    GroundRing(const HalfLaurent& p);   // NOLINT(implicit)

    static GroundRing q_power(int half_steps, std::int64_t coeff = 1);
    // v_var^exp, var counted from 0.
    static GroundRing puncture(int var, int exp = 1);
    static GroundRing from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True when the element is c*q^{k/2} for a unit c = +-1 and no puncture variables.
    bool is_signed_q_power() const;
    int min_half_exponent() const;
    int max_half_exponent() const;

    GroundRing shifted(int half_steps) const;
    // Renumber puncture variables: variable i becomes var_map[i].
    GroundRing relabeled(const std::vector<int>& var_map) const;

    GroundRing& operator+=(const GroundRing& o);
    GroundRing& operator-=(const GroundRing& o);
    GroundRing& operator*=(const GroundRing& o);
    friend GroundRing operator+(GroundRing a, const GroundRing& b) { return a += b; }
    friend GroundRing operator-(GroundRing a, const GroundRing& b) { return a -= b; }
    friend GroundRing operator*(const GroundRing& a, const GroundRing& b);
    GroundRing operator-() const;
    bool operator==(const GroundRing&) const = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

GroundRing reflect(const GroundRing& p);

// Element of Z[x]/(Phi_d(x)), x standing for a primitive d-th root of unity zeta.
// Stored as the remainder of degree < phi(d).
class Cyclotomic {
public:
    explicit Cyclotomic(int order = 1);
    static Cyclotomic root_power(int order, std::int64_t k, std::int64_t coeff = 1);
    static Cyclotomic one(int order) { return root_power(order, 0); }

    int order() const { return order_; }
    const IntPoly& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    // Multiply by zeta^k.
    Cyclotomic shifted(std::int64_t k) const;
    Cyclotomic pow(std::int64_t e) const;
    // Smallest k > 0 with this^k == 1, or 0 if no such k up to the order of the root.
    int multiplicative_order() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    bool operator==(const Cyclotomic&) const = default;

    std::string to_string() const;

private:
    Cyclotomic(int order, IntPoly reduced) : order_(order), coeffs_(std::move(reduced)) {}
    void reduce(IntPoly p);
    void require_same_order(const Cyclotomic& o) const;

    int order_;
    IntPoly coeffs_;
};

IntPoly cyclotomic_poly(int d);

// Image of p under q^{1/2} -> exp(pi i / n), a primitive 2n-th root of unity.
Cyclotomic specialize(const HalfLaurent& p, int n);

std::string poly_to_string(const IntPoly& p, const std::string& var = "x");

}  // namespace skein
