#pragma once

#include <compare>
#include <string>
#include <vector>

#include "skein/qtorus.hpp"

namespace skein {

// P3, P2, P1: the number of boundary circles; the remaining 3 - j holes are punctures.
enum class PantsType { P1 = 1, P2 = 2, P3 = 3 };

inline int boundary_count(PantsType t) { return static_cast<int>(t); }
PantsType pants_type_from_int(int j);
std::string pants_type_name(PantsType t);

// A number in (1/2)Z, stored doubled.
struct HalfInt {
    int twice = 0;
    static HalfInt from_twice(int v) { return HalfInt{v}; }
    static HalfInt from_int(int v) { return HalfInt{2 * v}; }
    bool is_integer() const { return twice % 2 == 0; }
    auto operator<=>(const HalfInt&) const = default;
    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    std::string to_string() const;
};

inline bool operator>=(int v, HalfInt h) { return 2 * v >= h.twice; }

struct PantsCoord {
    std::vector<int> n;
    std::vector<int> t;

    // (n_1..n_j, t_1..t_j), the exponent layout of the trace torus.
    Exponent as_exponent() const;
    static PantsCoord from_exponent(const Exponent& k);
    bool operator==(const PantsCoord&) const = default;
    std::string to_string() const;
};

// Boundary indices are 1-based throughout this module.
HalfInt add_fn(PantsType type, int i, const std::vector<int>& n);
bool lambda_contains(PantsType type, const PantsCoord& coord);
PantsCoord twist_apply(PantsType type, int i, const PantsCoord& coord, int power = 1);

enum class ComponentKind { Loop, CrossArc, ReturnArc };

struct ComponentSpec {
    ComponentKind kind = ComponentKind::Loop;
    int i = 1;             // loop l_i, return arc a_ii, or first end of a cross arc
    int k = 1;             // second end of a cross arc a_ik, i < k
    int twist_i = 0;       // twist exponent at b_i (arcs only)
    int twist_k = 0;       // twist exponent at b_k (cross arcs only)
    int multiplicity = 1;

    static ComponentSpec loop(int i, int mult = 1) { return {ComponentKind::Loop, i, i, 0, 0, mult}; }
    static ComponentSpec cross(int i, int k, int mult = 1, int s = 0, int t = 0) {
        return {ComponentKind::CrossArc, i, k, s, t, mult};
    }
    static ComponentSpec ret(int i, int mult = 1, int m = 0) { return {ComponentKind::ReturnArc, i, i, m, 0, mult}; }

    bool operator==(const ComponentSpec&) const = default;
    std::string to_string() const;
};

// A canonical diagram: untwisted components plus one twist exponent per boundary,
// applied to the whole diagram (zero where n_i = 0).
struct Decomposition {
    std::vector<ComponentSpec> components;
    std::vector<int> twist;
};

void validate_component(PantsType type, const ComponentSpec& c);
// Coordinates of one copy of c (including its twist exponents), times c.multiplicity.
PantsCoord nu_of_component(PantsType type, const ComponentSpec& c);
Decomposition decompose(PantsType type, const PantsCoord& coord);
PantsCoord nu_of_decomposition(PantsType type, const Decomposition& d);
// t-part of the canonical loop-free, twist-free diagram with length vector n.
std::vector<int> base_twist(PantsType type, const std::vector<int>& n);

}  // namespace skein
