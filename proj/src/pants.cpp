#include "skein/pants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skein {

namespace {

int j_of(PantsType t) { return boundary_count(t); }

void check_coord_shape(PantsType type, const PantsCoord& c) {
    const auto j = static_cast<std::size_t>(j_of(type));
    if (c.n.size() != j || c.t.size() != j) throw std::invalid_argument("pants coordinate has wrong length");
}

void check_index(PantsType type, int i) {
    if (i < 1 || i > j_of(type)) throw std::out_of_range("boundary index out of range");
}

// 1-based cyclic successor on {1,2,3}.
int next3(int i, int step = 1) { return ((i - 1 + step) % 3 + 3) % 3 + 1; }

std::vector<ComponentSpec> arc_system(PantsType type, const std::vector<int>& n) {
    std::vector<ComponentSpec> arcs;
    auto push = [&](ComponentSpec c) {
        if (c.multiplicity > 0) arcs.push_back(c);
    };
    switch (type) {
        case PantsType::P3: {
            int big = 0;
            for (int i = 1; i <= 3; ++i)
                if (n[i - 1] > n[next3(i) - 1] + n[next3(i, 2) - 1]) big = i;
            if (big == 0) {
                // Triangle case: #a_jk = (n_j + n_k - n_l) / 2.
                push(ComponentSpec::cross(1, 2, (n[0] + n[1] - n[2]) / 2));
                push(ComponentSpec::cross(1, 3, (n[0] + n[2] - n[1]) / 2));
                push(ComponentSpec::cross(2, 3, (n[1] + n[2] - n[0]) / 2));
            } else {
                const int a = next3(big), b = next3(big, 2);
                push(ComponentSpec::ret(big, (n[big - 1] - n[a - 1] - n[b - 1]) / 2));
                push(ComponentSpec::cross(std::min(big, a), std::max(big, a), n[a - 1]));
                push(ComponentSpec::cross(std::min(big, b), std::max(big, b), n[b - 1]));
            }
            break;
        }
        case PantsType::P2:
            push(ComponentSpec::cross(1, 2, std::min(n[0], n[1])));
            if (n[0] > n[1]) push(ComponentSpec::ret(1, (n[0] - n[1]) / 2));
            if (n[1] > n[0]) push(ComponentSpec::ret(2, (n[1] - n[0]) / 2));
            break;
        case PantsType::P1:
            push(ComponentSpec::ret(1, n[0] / 2));
            break;
    }
    std::sort(arcs.begin(), arcs.end(), [](const ComponentSpec& x, const ComponentSpec& y) {
        return std::tie(x.kind, x.i, x.k) < std::tie(y.kind, y.i, y.k);
    });
    return arcs;
}

}  // namespace

PantsType pants_type_from_int(int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("pants type must be 1, 2 or 3");
    return static_cast<PantsType>(j);
}

std::string pants_type_name(PantsType t) { return "P" + std::to_string(j_of(t)); }

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

Exponent PantsCoord::as_exponent() const {
    Exponent k = n;
    k.insert(k.end(), t.begin(), t.end());
    return k;
}

PantsCoord PantsCoord::from_exponent(const Exponent& k) {
    if (k.size() % 2 != 0) throw std::invalid_argument("odd-length pants exponent");
    const auto j = static_cast<std::ptrdiff_t>(k.size() / 2);
    return PantsCoord{std::vector<int>(k.begin(), k.begin() + j), std::vector<int>(k.begin() + j, k.end())};
}

std::string PantsCoord::to_string() const { return exponent_to_string(as_exponent()); }

HalfInt add_fn(PantsType type, int i, const std::vector<int>& n) {
    check_index(type, i);
    if (static_cast<int>(n.size()) != j_of(type)) throw std::invalid_argument("length vector has wrong size");
    switch (type) {
        case PantsType::P3: {
            int v = n[next3(i, -1) - 1] - n[i - 1] - n[next3(i) - 1];
            return HalfInt::from_twice(std::max(0, v));
        }
        case PantsType::P2:
            return i == 1 ? HalfInt::from_twice(-n[1]) : HalfInt::from_twice(n[0]);
        case PantsType::P1:
            return HalfInt{};
    }
    return HalfInt{};
}

bool lambda_contains(PantsType type, const PantsCoord& coord) {
    if (static_cast<int>(coord.n.size()) != j_of(type) || static_cast<int>(coord.t.size()) != j_of(type))
        return false;
    int sum = 0;
    for (int v : coord.n) {
        if (v < 0) return false;
        sum += v;
    }
    if (sum % 2 != 0) return false;
    for (int i = 1; i <= j_of(type); ++i)
        if (coord.n[i - 1] == 0 && !(coord.t[i - 1] >= add_fn(type, i, coord.n))) return false;
    return true;
}

PantsCoord twist_apply(PantsType type, int i, const PantsCoord& coord, int power) {
    check_index(type, i);
    check_coord_shape(type, coord);
    PantsCoord out = coord;
    if (out.n[i - 1] > 0) out.t[i - 1] += power;
    return out;
}

std::string ComponentSpec::to_string() const {
    std::string s;
    switch (kind) {
        case ComponentKind::Loop:
            s = "l_" + std::to_string(i);
            break;
        case ComponentKind::CrossArc:
            s = "a_" + std::to_string(i) + std::to_string(k);
            if (twist_k != 0) s = "theta_" + std::to_string(k) + "^" + std::to_string(twist_k) + " " + s;
            if (twist_i != 0) s = "theta_" + std::to_string(i) + "^" + std::to_string(twist_i) + " " + s;
            break;
        case ComponentKind::ReturnArc:
            s = "a_" + std::to_string(i) + std::to_string(i);
            if (twist_i != 0) s = "theta_" + std::to_string(i) + "^" + std::to_string(twist_i) + " " + s;
            break;
    }
    if (multiplicity != 1) s += " x" + std::to_string(multiplicity);
    return s;
}

void validate_component(PantsType type, const ComponentSpec& c) {
    const int j = j_of(type);
    if (c.multiplicity < 1) throw std::invalid_argument("component multiplicity must be positive");
    switch (c.kind) {
        case ComponentKind::Loop:
            if (c.i < 1 || c.i > j) throw std::invalid_argument("loop index out of range");
            if (c.twist_i != 0 || c.twist_k != 0) throw std::invalid_argument("loops carry no twist");
            break;
        case ComponentKind::CrossArc:
            if (type == PantsType::P1) throw std::invalid_argument("P1 has no cross arcs");
            if (c.i < 1 || c.k > j || c.i >= c.k) throw std::invalid_argument("cross arc ends out of range");
            break;
        case ComponentKind::ReturnArc:
            if (c.i < 1 || c.i > j) throw std::invalid_argument("return arc index out of range");
            if (c.twist_k != 0) throw std::invalid_argument("return arcs carry one twist exponent");
            break;
    }
}

PantsCoord nu_of_component(PantsType type, const ComponentSpec& c) {
    validate_component(type, c);
    const auto j = static_cast<std::size_t>(j_of(type));
    PantsCoord v{std::vector<int>(j, 0), std::vector<int>(j, 0)};
    switch (c.kind) {
        case ComponentKind::Loop:
            v.t[c.i - 1] = 1;
            break;
        case ComponentKind::CrossArc:
            v.n[c.i - 1] = 1;
            v.n[c.k - 1] = 1;
            v.t[c.i - 1] = c.twist_i;
            v.t[c.k - 1] = c.twist_k;
            break;
        case ComponentKind::ReturnArc:
            v.n[c.i - 1] = 2;
            switch (type) {
                case PantsType::P3:
                    v.t[next3(c.i) - 1] = 1;
                    break;
                case PantsType::P2:
                    if (c.i == 1) {
                        v.t = {0, 1};
                    } else {
                        v.t = {-1, 1};
                    }
                    break;
                case PantsType::P1:
                    v.t[0] = 1;
                    break;
            }
            v.t[c.i - 1] += c.twist_i;
            break;
    }
    for (auto& x : v.n) x *= c.multiplicity;
    for (auto& x : v.t) x *= c.multiplicity;
    return v;
}

std::vector<int> base_twist(PantsType type, const std::vector<int>& n) {
    if (static_cast<int>(n.size()) != j_of(type)) throw std::invalid_argument("length vector has wrong size");
    std::vector<int> t(n.size(), 0);
    for (const auto& c : arc_system(type, n)) {
        auto v = nu_of_component(type, c);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += v.t[i];
    }
    return t;
}

Decomposition decompose(PantsType type, const PantsCoord& coord) {
    if (!lambda_contains(type, coord)) throw std::invalid_argument("coordinate not in the pants monoid");
    const int j = j_of(type);
    Decomposition d;
    d.components = arc_system(type, coord.n);
    d.twist.assign(static_cast<std::size_t>(j), 0);
    std::vector<int> base = base_twist(type, coord.n);
    for (int i = 1; i <= j; ++i) {
        int residual = coord.t[i - 1] - base[i - 1];
        if (coord.n[i - 1] > 0) {
            d.twist[i - 1] = residual;
        } else {
            if (HalfInt::from_int(base[i - 1]) != add_fn(type, i, coord.n))
                throw std::logic_error("base twist disagrees with Add at an empty boundary");
            if (residual > 0) d.components.push_back(ComponentSpec::loop(i, residual));
        }
    }
    return d;
}

PantsCoord nu_of_decomposition(PantsType type, const Decomposition& d) {
    const auto j = static_cast<std::size_t>(j_of(type));
    if (d.twist.size() != j) throw std::invalid_argument("twist vector has wrong length");
    PantsCoord sum{std::vector<int>(j, 0), d.twist};
    for (const auto& c : d.components) {
        auto v = nu_of_component(type, c);
        for (std::size_t i = 0; i < j; ++i) {
            sum.n[i] += v.n[i];
            sum.t[i] += v.t[i];
        }
    }
    return sum;
}

}  // namespace skein
