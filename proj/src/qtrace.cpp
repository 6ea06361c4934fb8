#include "skein/qtrace.hpp"

#include <stdexcept>

namespace skein {

namespace {

MatrixPtr build_trace_torus(PantsType type) {
    const int j = boundary_count(type);
    AntisymMatrix q(2 * j);
    if (type == PantsType::P3) {
        for (int i = 0; i < 3; ++i) q.set((i + 1) % 3, i, 1);
    } else if (type == PantsType::P2) {
        q.set(1, 0, 1);
    }
    for (int i = 0; i < j; ++i) q.set(j + i, i, 2);
    return make_matrix(std::move(q));
}

int next3(int i, int step = 1) { return ((i - 1 + step) % 3 + 3) % 3 + 1; }

struct Builder {
    PantsType type;
    int j;
    Torus value;

    explicit Builder(PantsType t) : type(t), j(boundary_count(t)), value(trace_torus(t)) {}

    // x_i^{xi} x_k^{xk} ... given as (n-part, t-part) maps with 1-based indices.
    void add(std::vector<std::pair<int, int>> xs, std::vector<std::pair<int, int>> us, GroundRing c) {
        Exponent k(static_cast<std::size_t>(2 * j), 0);
        for (auto [i, e] : xs) k[static_cast<std::size_t>(i - 1)] += e;
        for (auto [i, e] : us) k[static_cast<std::size_t>(j + i - 1)] += e;
        value += Torus::monomial(value.matrix_ptr(), std::move(k), std::move(c));
    }
};

Torus power(const Torus& x, int e) {
    Torus r = Torus::monomial(x.matrix_ptr(), Exponent(static_cast<std::size_t>(x.dim()), 0), GroundRing(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

const MatrixPtr& trace_torus(PantsType type) {
    static const MatrixPtr p1 = build_trace_torus(PantsType::P1);
    static const MatrixPtr p2 = build_trace_torus(PantsType::P2);
    static const MatrixPtr p3 = build_trace_torus(PantsType::P3);
    switch (type) {
        case PantsType::P1:
            return p1;
        case PantsType::P2:
            return p2;
        case PantsType::P3:
            return p3;
    }
    throw std::invalid_argument("bad pants type");
}

PunctureLabels default_labels(PantsType type) {
    if (type == PantsType::P2) return PunctureLabels{-1, 0};
    return PunctureLabels{0, 1};
}

std::vector<std::int64_t> pants_degree(PantsType type, const Exponent& k) {
    const int j = boundary_count(type);
    if (static_cast<int>(k.size()) != 2 * j) throw std::invalid_argument("pants_degree: wrong exponent length");
    std::int64_t sn = 0, st = 0;
    for (int i = 0; i < j; ++i) {
        sn += k[static_cast<std::size_t>(i)];
        st += k[static_cast<std::size_t>(j + i)];
    }
    std::int64_t third = type == PantsType::P2 ? k[3] : 0;
    return {sn, st, third};
}

Torus utr_component(PantsType type, const ComponentSpec& c, const PunctureLabels& labels) {
    validate_component(type, c);
    if (c.multiplicity != 1) {
        ComponentSpec one = c;
        one.multiplicity = 1;
        return reflection_normalize(power(utr_component(type, one, labels), c.multiplicity));
    }
    Builder b(type);
    const int m = c.twist_i;
    switch (c.kind) {
        case ComponentKind::Loop:
            b.add({}, {{c.i, 1}}, 1);
            b.add({}, {{c.i, -1}}, 1);
            break;
        case ComponentKind::CrossArc:
            b.add({{c.i, 1}, {c.k, 1}}, {{c.i, c.twist_i}, {c.k, c.twist_k}}, 1);
            break;
        case ComponentKind::ReturnArc:
            switch (type) {
                case PantsType::P3:
                    b.add({{c.i, 2}}, {{c.i, m}, {next3(c.i), 1}}, 1);
                    b.add({{c.i, 2}}, {{c.i, m + 1}, {next3(c.i, 2), -1}}, 1);
                    break;
                case PantsType::P2:
                    if (c.i == 1) {
                        b.add({{1, 2}}, {{1, m}, {2, 1}}, 1);
                        b.add({{1, 2}}, {{1, m + 1}}, GroundRing::puncture(labels.b3, -1));
                    } else {
                        b.add({{2, 2}}, {{2, m + 1}, {1, -1}}, 1);
                        b.add({{2, 2}}, {{2, m}}, GroundRing::puncture(labels.b3, 1));
                    }
                    break;
                case PantsType::P1:
                    b.add({{1, 2}}, {{1, m + 1}}, 1);
                    b.add({{1, 2}}, {{1, m}}, GroundRing::puncture(labels.b2) * GroundRing::puncture(labels.b3));
                    break;
            }
            break;
    }
    return b.value;
}

Torus reflection_normalize(const Torus& p) {
    if (p.is_zero()) return p;
    const GroundRing& c = p.terms().front().second;
    int sum = c.min_half_exponent() + c.max_half_exponent();
    if (sum % 2 != 0) throw std::logic_error("reflection_normalize: no half-integral q-power normalizes this element");
    Torus out = p.scaled(GroundRing::q_power(-sum / 2));
    if (!(reflect(out) == out)) throw std::logic_error("reflection_normalize: element is not reflection invariant up to a q-power");
    return out;
}

Torus utr_coord(PantsType type, const PantsCoord& coord, const PunctureLabels& labels) {
    Decomposition d = decompose(type, coord);
    const MatrixPtr& q = trace_torus(type);
    const int j = boundary_count(type);
    Torus prod = Torus::monomial(q, Exponent(static_cast<std::size_t>(2 * j), 0), GroundRing(1));
    for (const auto& c : d.components) {
        ComponentSpec one = c;
        one.multiplicity = 1;
        Torus v = utr_component(type, one, labels);
        for (int r = 0; r < c.multiplicity; ++r) prod = prod * v;
    }
    prod = reflection_normalize(prod);
    Exponent shift(static_cast<std::size_t>(2 * j), 0);
    for (int i = 0; i < j; ++i) shift[static_cast<std::size_t>(j + i)] = d.twist[static_cast<std::size_t>(i)];
    return prod.shifted(shift);
}

TraceCheckReport check_thmbtr(PantsType type, const PantsCoord& coord) {
    TraceCheckReport rep;
    const int j = boundary_count(type);
    Torus v = utr_coord(type, coord);

    if (!(reflect(v) == v)) {
        rep.reflection_invariant = false;
        rep.failures.push_back("reflection: value not fixed by reflection");
    }

    for (const auto& [k, c] : v.terms()) {
        for (int i = 0; i < j; ++i) {
            if (k[static_cast<std::size_t>(i)] != coord.n[static_cast<std::size_t>(i)]) {
                rep.boundary_grading = false;
                rep.failures.push_back("grading: monomial " + exponent_to_string(k) + " has x_" +
                                       std::to_string(i + 1) + "-degree " + std::to_string(k[static_cast<std::size_t>(i)]));
                break;
            }
        }
        if (!rep.boundary_grading) break;
    }

    for (int i = 1; i <= j; ++i) {
        if (coord.n[static_cast<std::size_t>(i - 1)] == 0) continue;
        Torus twisted = utr_coord(type, twist_apply(type, i, coord));
        Torus expected = v.shifted(unit_exponent(2 * j, j + i - 1));
        if (!(twisted == expected)) {
            rep.twist_equivariant = false;
            rep.failures.push_back("twist: boundary " + std::to_string(i) + " at " + coord.to_string());
        }
    }

    auto lead = lead_terms(v, [type](const Exponent& k) { return pants_degree(type, k); });
    if (lead.size() != 1) {
        rep.highest_term = false;
        rep.failures.push_back("highest term: " + std::to_string(lead.size()) + " monomials tie, first " +
                               exponent_to_string(lead.front().first));
    } else {
        rep.lead_exponent = lead.front().first;
        if (rep.lead_exponent != coord.as_exponent()) {
            rep.highest_term = false;
            rep.failures.push_back("highest term: lead " + exponent_to_string(rep.lead_exponent) + " differs from " +
                                   coord.to_string());
        } else if (!lead.front().second.is_signed_q_power()) {
            rep.highest_term = false;
            rep.failures.push_back("highest term: lead coefficient " + lead.front().second.to_string() +
                                   " is not a power of q");
        }
    }
    return rep;
}

}  // namespace skein
