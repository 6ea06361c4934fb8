#include "skein/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace skein {

namespace {

[[noreturn]] void bad_datum(const std::string& why) { throw std::invalid_argument("invalid DT datum: " + why); }

}  // namespace

// ---------------------------------------------------------------- DTDatum

DTDatum::DTDatum(FatGraph graph, std::vector<std::vector<int>> slots)
    : graph_(std::move(graph)), slots_(std::move(slots)) {
    const int nv = vertex_count();
    if (nv == 0) bad_datum("no vertices");
    if (static_cast<int>(slots_.size()) != nv) bad_datum("slot table size differs from vertex count");

    int max_id = -1;
    for (const auto& v : graph_.vertices) {
        if (v.size() != 3) bad_datum("vertex is not trivalent");
        for (int h : v) {
            if (h < 0) bad_datum("negative half-edge id");
            max_id = std::max(max_id, h);
        }
    }
    half_.assign(static_cast<std::size_t>(max_id) + 1, HalfEdgeInfo{});
    slot_half_.assign(static_cast<std::size_t>(nv), {-1, -1, -1});
    types_.resize(static_cast<std::size_t>(nv));

    for (int v = 0; v < nv; ++v) {
        const auto& sl = slots_[static_cast<std::size_t>(v)];
        if (sl.size() != 3) bad_datum("slot list is not of length 3");
        for (int p = 0; p < 3; ++p) {
            int h = graph_.vertices[v][p];
            auto& info = half_[static_cast<std::size_t>(h)];
            if (info.vertex != -1) bad_datum("half-edge " + std::to_string(h) + " appears twice");
            int s = sl[static_cast<std::size_t>(p)];
            if (s < 1 || s > 3) bad_datum("slot out of range");
            if (slot_half_[v][s - 1] != -1) bad_datum("repeated slot at a vertex");
            info.vertex = v;
            info.position = p;
            info.slot = s;
            slot_half_[v][s - 1] = h;
        }
    }
    for (const auto& info : half_)
        if (info.vertex == -1) bad_datum("half-edge ids are not contiguous");

    r_ = static_cast<int>(graph_.edges.size());
    if (r_ < 1) bad_datum("no internal curves");
    std::vector<bool> seen_curve(static_cast<std::size_t>(r_), false);
    for (const auto& e : graph_.edges) {
        if (e.curve < 1 || e.curve > r_ || seen_curve[static_cast<std::size_t>(e.curve - 1)])
            bad_datum("curve numbers must be a permutation of 1..r");
        seen_curve[static_cast<std::size_t>(e.curve - 1)] = true;
        for (int h : {e.h1, e.h2}) {
            if (h < 0 || h > max_id) bad_datum("edge refers to unknown half-edge");
            auto& info = half_[static_cast<std::size_t>(h)];
            if (info.curve != -1 || info.leg != -1) bad_datum("half-edge used twice");
            info.curve = e.curve - 1;
        }
        if (e.h1 == e.h2) bad_datum("edge with identical half-edges");
    }
    for (std::size_t i = 0; i < graph_.legs.size(); ++i) {
        int h = graph_.legs[i];
        if (h < 0 || h > max_id) bad_datum("leg refers to unknown half-edge");
        auto& info = half_[static_cast<std::size_t>(h)];
        if (info.curve != -1 || info.leg != -1) bad_datum("half-edge used twice");
        info.leg = static_cast<int>(i);
    }
    for (const auto& info : half_)
        if (info.curve == -1 && info.leg == -1) bad_datum("half-edge is neither edge nor leg");

    for (int v = 0; v < nv; ++v) {
        int legs = 0;
        for (int h : graph_.vertices[v]) legs += half_[static_cast<std::size_t>(h)].leg != -1;
        if (legs > 2) bad_datum("vertex with three legs");
        types_[static_cast<std::size_t>(v)] = pants_type_from_int(3 - legs);
        const int j = 3 - legs;
        for (int s = 1; s <= 3; ++s) {
            bool is_leg = half_[static_cast<std::size_t>(slot_half_[v][s - 1])].leg != -1;
            if (is_leg != (s > j)) bad_datum("legs must fill the highest slots");
        }
        for (int h : graph_.vertices[v]) {
            int next = cw_next(h);
            if (half_[static_cast<std::size_t>(next)].slot != half_[static_cast<std::size_t>(h)].slot % 3 + 1)
                bad_datum("slots must increase clockwise around each vertex");
        }
    }

    // Connectivity over internal edges.
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& e : graph_.edges)
        parent[static_cast<std::size_t>(find(half_[static_cast<std::size_t>(e.h1)].vertex))] =
            find(half_[static_cast<std::size_t>(e.h2)].vertex);
    for (int v = 0; v < nv; ++v)
        if (find(v) != find(0)) bad_datum("fatgraph is not connected");

    // Each pair of pants has Euler characteristic -1, and the dual graph has Euler characteristic 1 - g.
    g_ = 1 - (nv - r_);
    if (g_ < 0) bad_datum("inconsistent Euler characteristic");

    sides_.resize(static_cast<std::size_t>(r_));
    for (const auto& e : graph_.edges) {
        const auto& a = half_[static_cast<std::size_t>(e.h1)];
        const auto& b = half_[static_cast<std::size_t>(e.h2)];
        Side sa{a.vertex, a.slot}, sb{b.vertex, b.slot};
        if (std::tie(sb.slot, sb.vertex) < std::tie(sa.slot, sa.vertex)) std::swap(sa, sb);
        sides_[static_cast<std::size_t>(e.curve - 1)] = {sa, sb};
    }

    for (int v = 0; v < nv; ++v) {
        if (types_[static_cast<std::size_t>(v)] != PantsType::P2) continue;
        if (!(curve_at(v, 2) < curve_at(v, 1)))
            bad_datum("P2 face " + std::to_string(v) + " violates (N1): curve at b2 must precede curve at b1");
    }
}

int DTDatum::half_edge_at(int v, int slot) const {
    if (v < 0 || v >= vertex_count() || slot < 1 || slot > 3) throw std::out_of_range("half_edge_at");
    return slot_half_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot - 1)];
}

int DTDatum::curve_at(int v, int slot) const { return half_[static_cast<std::size_t>(half_edge_at(v, slot))].curve; }

int DTDatum::leg_at(int v, int slot) const { return half_[static_cast<std::size_t>(half_edge_at(v, slot))].leg; }

int DTDatum::cw_next(int h) const {
    const auto& info = half_.at(static_cast<std::size_t>(h));
    return graph_.vertices[static_cast<std::size_t>(info.vertex)][static_cast<std::size_t>((info.position + 2) % 3)];
}

// ---------------------------------------------------------------- GlobalCoord

Exponent GlobalCoord::as_exponent() const {
    Exponent k = n;
    k.insert(k.end(), t.begin(), t.end());
    return k;
}

GlobalCoord GlobalCoord::from_exponent(const Exponent& k) {
    if (k.size() % 2 != 0) throw std::invalid_argument("odd-length global exponent");
    const auto r = static_cast<std::ptrdiff_t>(k.size() / 2);
    return GlobalCoord{std::vector<int>(k.begin(), k.begin() + r), std::vector<int>(k.begin() + r, k.end())};
}

std::string GlobalCoord::to_string() const { return exponent_to_string(as_exponent()); }

// ---------------------------------------------------------------- standard data

bool is_excluded_surface(int g, int m) {
    if (g < 0 || m < 0) return true;
    if (g == 1 && m <= 1) return true;
    if (g == 0 && m <= 3) return true;
    return 3 * g - 3 + m < 1;
}

namespace {

// Slot contents: a 1-based curve number, or 0 for a leg.
using SlotSpec = std::array<int, 3>;

DTDatum build_from_slots(const std::vector<SlotSpec>& faces) {
    FatGraph g;
    std::vector<std::vector<int>> slots;
    std::map<int, std::vector<int>> curve_halves;
    for (std::size_t v = 0; v < faces.size(); ++v) {
        const int base = static_cast<int>(3 * v);
        // Counterclockwise order b1, b3, b2 makes b1 -> b2 -> b3 clockwise.
        g.vertices.push_back({base, base + 2, base + 1});
        slots.push_back({1, 3, 2});
        for (int s = 0; s < 3; ++s) {
            int c = faces[v][static_cast<std::size_t>(s)];
            if (c == 0)
                g.legs.push_back(base + s);
            else
                curve_halves[c].push_back(base + s);
        }
    }
    for (const auto& [c, hs] : curve_halves) {
        if (hs.size() != 2) throw std::logic_error("standard datum: curve not glued twice");
        g.edges.push_back({hs[0], hs[1], c});
    }
    return DTDatum(std::move(g), std::move(slots));
}

}  // namespace

DTDatum standard_datum(int g, int m) {
    if (is_excluded_surface(g, m)) throw std::invalid_argument("excluded surface");
    std::vector<SlotSpec> faces;
    if (g == 0) {
        // Chain P1 - P2 - ... - P2 - P1 along c_1..c_{m-3}.
        const int r = m - 3;
        faces.push_back({1, 0, 0});
        for (int i = 1; i <= m - 4; ++i) faces.push_back({i + 1, i, 0});
        faces.push_back({r, 0, 0});
    } else if (g == 1) {
        // Cycle of m P2 faces; e_i joins p_i and p_{i+1}, e_m closes the cycle.
        faces.push_back({m, 1, 0});
        for (int i = 2; i <= m; ++i) faces.push_back({i, i - 1, 0});
    } else {
        // Core: bigons (v_{2i-1}, v_{2i}) on edges A_i, B_i, joined in a cycle by connectors D_i,
        // D_i from v_{2i} to v_{2i+1} and D_{g-1} from v_{2g-2} back to v_1. The m punctured faces
        // are spliced into D_{g-1} and their edges are numbered first.
        const int nb = g - 1;
        int next_curve = 1;
        std::vector<int> splice;
        if (m > 0)
            for (int i = 0; i <= m; ++i) splice.push_back(next_curve++);
        std::vector<int> a(static_cast<std::size_t>(nb)), b(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i) {
            a[static_cast<std::size_t>(i)] = next_curve++;
            b[static_cast<std::size_t>(i)] = next_curve++;
        }
        std::vector<int> dconn(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i) {
            if (i == nb - 1 && m > 0) {
                dconn[static_cast<std::size_t>(i)] = -1;  // replaced by the spliced chain
            } else {
                dconn[static_cast<std::size_t>(i)] = next_curve++;
            }
        }
        // Connector attached at v_{2i-1} (incoming) and v_{2i} (outgoing), 0-based bigon i.
        auto incoming = [&](int i) {
            int prev = (i + nb - 1) % nb;
            if (prev == nb - 1 && m > 0) return splice.back();
            return dconn[static_cast<std::size_t>(prev)];
        };
        auto outgoing = [&](int i) {
            if (i == nb - 1 && m > 0) return splice.front();
            return dconn[static_cast<std::size_t>(i)];
        };
        for (int i = 0; i < nb; ++i) {
            // Counterclockwise order (A_i, B_i, D) corresponds to slots b1 = A_i, b2 = D, b3 = B_i.
            faces.push_back({a[static_cast<std::size_t>(i)], incoming(i), b[static_cast<std::size_t>(i)]});
            faces.push_back({a[static_cast<std::size_t>(i)], outgoing(i), b[static_cast<std::size_t>(i)]});
        }
        for (int i = 0; i < m; ++i)
            faces.push_back({splice[static_cast<std::size_t>(i + 1)], splice[static_cast<std::size_t>(i)], 0});
    }
    DTDatum d = build_from_slots(faces);
    if (d.genus() != g || d.puncture_count() != m || d.curve_count() != 3 * g - 3 + m)
        throw std::logic_error("standard datum has the wrong topology");
    return d;
}

// ---------------------------------------------------------------- matrices

AntisymMatrix q_matrix(const DTDatum& d) {
    const int r = d.curve_count();
    std::vector<std::vector<int>> q(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int v = 0; v < d.vertex_count(); ++v) {
        for (int s = 1; s <= 3; ++s) {
            int hc = d.half_edge_at(v, s);
            int ha = d.cw_next(hc);
            int c = d.curve_at(v, s);
            int a = -1;
            for (int s2 = 1; s2 <= 3; ++s2)
                if (d.half_edge_at(v, s2) == ha) a = d.curve_at(v, s2);
            if (a < 0 || c < 0) continue;
            // h_a is immediately clockwise of h_c: +1 to Q(a,c), and the reverse pair gives -1 to Q(c,a).
            q[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] += 1;
            q[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] -= 1;
        }
    }
    return AntisymMatrix::from_rows(q);
}

AntisymMatrix tilde_q(const AntisymMatrix& q) {
    const int r = q.dim();
    AntisymMatrix t(2 * r);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) t.set(i, j, q(i, j));
        t.set(i, r + i, 2);
    }
    return t;
}

MatrixPtr surface_torus(const DTDatum& d) { return make_matrix(tilde_q(q_matrix(d))); }

// ---------------------------------------------------------------- monoid

namespace {

std::vector<int> face_lengths(const DTDatum& d, int v, const std::vector<int>& n) {
    const int j = boundary_count(d.face_type(v));
    std::vector<int> fn(static_cast<std::size_t>(j));
    for (int s = 1; s <= j; ++s) fn[static_cast<std::size_t>(s - 1)] = n[static_cast<std::size_t>(d.curve_at(v, s))];
    return fn;
}

void check_coord_size(const DTDatum& d, const GlobalCoord& c) {
    const auto r = static_cast<std::size_t>(d.curve_count());
    if (c.n.size() != r || c.t.size() != r) throw std::invalid_argument("coordinate length differs from curve count");
}

}  // namespace

std::optional<std::string> lambda_global_violation(const DTDatum& d, const GlobalCoord& coord) {
    check_coord_size(d, coord);
    for (int c = 0; c < d.curve_count(); ++c)
        if (coord.n[static_cast<std::size_t>(c)] < 0) return "n(c" + std::to_string(c + 1) + ") is negative";
    for (int v = 0; v < d.vertex_count(); ++v) {
        auto fn = face_lengths(d, v, coord.n);
        int sum = std::accumulate(fn.begin(), fn.end(), 0);
        if (sum % 2 != 0) return "parity: n-sum " + std::to_string(sum) + " at vertex " + std::to_string(v) + " is odd";
    }
    for (int c = 0; c < d.curve_count(); ++c) {
        if (coord.n[static_cast<std::size_t>(c)] != 0) continue;
        HalfInt bound{};
        for (auto side : {d.prime_side(c), d.double_prime_side(c)})
            bound = bound + add_fn(d.face_type(side.vertex), side.slot, face_lengths(d, side.vertex, coord.n));
        if (!(coord.t[static_cast<std::size_t>(c)] >= bound))
            return "Add: t(c" + std::to_string(c + 1) + ") = " + std::to_string(coord.t[static_cast<std::size_t>(c)]) +
                   " is below " + bound.to_string();
    }
    return std::nullopt;
}

bool lambda_global(const DTDatum& d, const GlobalCoord& coord) {
    const auto r = static_cast<std::size_t>(d.curve_count());
    if (coord.n.size() != r || coord.t.size() != r) return false;
    return !lambda_global_violation(d, coord).has_value();
}

std::vector<std::int64_t> d_embed(const DTDatum& d, const GlobalCoord& coord) {
    check_coord_size(d, coord);
    const int r = d.curve_count();
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(2 * r));
    out.push_back(std::accumulate(coord.n.begin(), coord.n.end(), std::int64_t{0}));
    out.push_back(std::accumulate(coord.t.begin(), coord.t.end(), std::int64_t{0}));
    for (int i = 0; i + 1 < r; ++i) out.push_back(coord.t[static_cast<std::size_t>(i)]);
    for (int i = 0; i + 1 < r; ++i) out.push_back(coord.n[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<std::int64_t> d_embed(const DTDatum& d, const Exponent& k) {
    return d_embed(d, GlobalCoord::from_exponent(k));
}

// ---------------------------------------------------------------- splitting and phi

std::vector<PantsCoord> face_split(const DTDatum& d, const GlobalCoord& coord, const std::vector<ResidualSide>& placement) {
    if (auto why = lambda_global_violation(d, coord)) throw std::invalid_argument("coordinate not in the monoid: " + *why);
    if (!placement.empty() && static_cast<int>(placement.size()) != d.curve_count())
        throw std::invalid_argument("placement vector length differs from curve count");
    const int nv = d.vertex_count();
    std::vector<PantsCoord> faces(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        auto& f = faces[static_cast<std::size_t>(v)];
        f.n = face_lengths(d, v, coord.n);
        f.t = base_twist(d.face_type(v), f.n);
    }
    for (int c = 0; c < d.curve_count(); ++c) {
        auto p = d.prime_side(c), pp = d.double_prime_side(c);
        auto& tp = faces[static_cast<std::size_t>(p.vertex)].t[static_cast<std::size_t>(p.slot - 1)];
        auto& tpp = faces[static_cast<std::size_t>(pp.vertex)].t[static_cast<std::size_t>(pp.slot - 1)];
        int residual = coord.t[static_cast<std::size_t>(c)] - tp - tpp;
        bool to_double = !placement.empty() && placement[static_cast<std::size_t>(c)] == ResidualSide::DoublePrime;
        (to_double ? tpp : tp) += residual;
    }
    for (int v = 0; v < nv; ++v)
        if (!lambda_contains(d.face_type(v), faces[static_cast<std::size_t>(v)]))
            throw std::logic_error("face_split produced a face coordinate outside its monoid");
    return faces;
}

PunctureLabels face_labels(const DTDatum& d, int v) {
    switch (d.face_type(v)) {
        case PantsType::P3:
            return PunctureLabels{-1, -1};
        case PantsType::P2:
            return PunctureLabels{-1, d.leg_at(v, 3)};
        case PantsType::P1:
            return PunctureLabels{d.leg_at(v, 2), d.leg_at(v, 3)};
    }
    return {};
}

PhiResult phi_lead(const DTDatum& d, const GlobalCoord& coord, const std::vector<ResidualSide>& placement) {
    return phi_lead(d, surface_torus(d), coord, placement);
}

PhiResult phi_lead(const DTDatum& d, const MatrixPtr& torus, const GlobalCoord& coord,
                   const std::vector<ResidualSide>& placement) {
    const int r = d.curve_count();
    if (torus->dim() != 2 * r) throw std::invalid_argument("torus dimension differs from 2r");
    auto faces = face_split(d, coord, placement);

    std::unordered_map<Exponent, GroundRing, ExponentHash> acc;
    Exponent start(static_cast<std::size_t>(2 * r), 0);
    for (int c = 0; c < r; ++c) start[static_cast<std::size_t>(c)] = coord.n[static_cast<std::size_t>(c)];
    acc.emplace(start, GroundRing(1));

    for (int v = 0; v < d.vertex_count(); ++v) {
        const PantsType type = d.face_type(v);
        const int j = boundary_count(type);
        Torus fv = utr_coord(type, faces[static_cast<std::size_t>(v)], face_labels(d, v));
        std::vector<std::pair<std::vector<int>, const GroundRing*>> contrib;
        contrib.reserve(fv.size());
        for (const auto& [k, c] : fv.terms()) {
            std::vector<int> dt(static_cast<std::size_t>(r), 0);
            for (int s = 1; s <= j; ++s) {
                int curve = d.curve_at(v, s);
                if (k[static_cast<std::size_t>(s - 1)] != coord.n[static_cast<std::size_t>(curve)])
                    throw std::logic_error("face value is not matched along curve c" + std::to_string(curve + 1));
                dt[static_cast<std::size_t>(curve)] += k[static_cast<std::size_t>(j + s - 1)];
            }
            contrib.emplace_back(std::move(dt), &c);
        }
        std::unordered_map<Exponent, GroundRing, ExponentHash> next;
        next.reserve(acc.size() * contrib.size());
        for (const auto& [e, c] : acc) {
            for (const auto& [dt, fc] : contrib) {
                Exponent k = e;
                for (int i = 0; i < r; ++i) k[static_cast<std::size_t>(r + i)] += dt[static_cast<std::size_t>(i)];
                GroundRing p = c * *fc;
                auto [it, fresh] = next.try_emplace(std::move(k), p);
                if (!fresh) it->second += p;
            }
        }
        acc = std::move(next);
    }

    std::vector<Torus::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc) terms.emplace_back(k, std::move(c));
    PhiResult res{Torus::from_terms(torus, std::move(terms)), {}};
    if (res.value.is_zero()) throw std::logic_error("phi value vanished");
    res.lead = lead_terms(res.value, [&d](const Exponent& k) { return d_embed(d, k); });
    return res;
}

GradedProduct graded_mul(const DTDatum& d, const GlobalCoord& k, const GlobalCoord& l, std::optional<int> xi_order) {
    check_coord_size(d, k);
    check_coord_size(d, l);
    return graded_mul(tilde_q(q_matrix(d)), k, l, xi_order);
}

GradedProduct graded_mul(const AntisymMatrix& qt, const GlobalCoord& k, const GlobalCoord& l, std::optional<int> xi_order) {
    std::int64_t p = pairing(qt, k.as_exponent(), l.as_exponent());
    if (p % 2 != 0)
        throw std::domain_error("odd pairing " + std::to_string(p) + " between " + k.to_string() + " and " + l.to_string());
    GradedProduct out;
    out.xi_power = p / 2;
    out.sum = GlobalCoord::from_exponent(add_exponents(k.as_exponent(), l.as_exponent()));
    if (xi_order) {
        // xi = q, whose square root is the primitive 2n-th root used by specialize.
        out.xi_value = specialize(HalfLaurent::q_power(checked_int(2 * out.xi_power)), *xi_order);
    }
    return out;
}

}  // namespace skein
