#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skein/pants.hpp"
#include "skein/qtorus.hpp"
#include "skein/qtrace.hpp"
#include "skein/ring.hpp"

namespace skein {

// Trivalent ribbon graph. Half-edges at a vertex are listed counterclockwise.
struct FatGraph {
    struct Edge {
        int h1 = 0;
        int h2 = 0;
        int curve = 1;  // 1-based curve number
        bool operator==(const Edge&) const = default;
    };

    std::vector<std::vector<int>> vertices;
    std::vector<Edge> edges;
    std::vector<int> legs;  // leg order fixes the puncture variable order

    bool operator==(const FatGraph&) const = default;
};

// Pants decomposition with its dual fatgraph and slot assignment.
// Slot convention: going clockwise around a vertex visits b1, b2, b3 in that order.
class DTDatum {
public:
    struct Side {
        int vertex = 0;
        int slot = 1;
        bool operator==(const Side&) const = default;
    };

    // slots[v][p] is the boundary slot (1..3) of graph.vertices[v][p]. Throws on any invalid input.
    DTDatum(FatGraph graph, std::vector<std::vector<int>> slots);

    const FatGraph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& slots() const { return slots_; }

    int curve_count() const { return r_; }
    int genus() const { return g_; }
    int puncture_count() const { return static_cast<int>(graph_.legs.size()); }
    int vertex_count() const { return static_cast<int>(graph_.vertices.size()); }

    PantsType face_type(int v) const { return types_[static_cast<std::size_t>(v)]; }
    // 0-based curve glued at (v, slot), or -1 for a leg.
    int curve_at(int v, int slot) const;
    // Index into graph().legs of the leg at (v, slot), or -1.
    int leg_at(int v, int slot) const;
    int half_edge_at(int v, int slot) const;
    int cw_next(int h) const;

    // The two sides of curve c (0-based): c' has the smaller slot, ties go to the smaller vertex.
    Side prime_side(int c) const { return sides_[static_cast<std::size_t>(c)].first; }
    Side double_prime_side(int c) const { return sides_[static_cast<std::size_t>(c)].second; }

    bool operator==(const DTDatum& o) const { return graph_ == o.graph_ && slots_ == o.slots_; }

private:
    struct HalfEdgeInfo {
        int vertex = -1;
        int position = -1;
        int slot = 0;
        int curve = -1;
        int leg = -1;
    };

    FatGraph graph_;
    std::vector<std::vector<int>> slots_;
    int r_ = 0;
    int g_ = 0;
    std::vector<PantsType> types_;
    std::vector<HalfEdgeInfo> half_;             // indexed by half-edge id
    std::vector<std::array<int, 3>> slot_half_;  // slot_half_[v][s-1] = half-edge id
    std::vector<std::pair<Side, Side>> sides_;
};

// Coordinates (n, t) indexed by curve number c_1..c_r.
struct GlobalCoord {
    std::vector<int> n;
    std::vector<int> t;

    Exponent as_exponent() const;
    static GlobalCoord from_exponent(const Exponent& k);
    bool operator==(const GlobalCoord&) const = default;
    std::string to_string() const;
};

bool is_excluded_surface(int g, int m);
DTDatum standard_datum(int g, int m);

AntisymMatrix q_matrix(const DTDatum& d);
AntisymMatrix tilde_q(const AntisymMatrix& q);
// T(tilde Q) on (y_1..y_r, u_1..u_r).
MatrixPtr surface_torus(const DTDatum& d);

// Empty when coord is in the monoid; otherwise a description of the first violated constraint.
std::optional<std::string> lambda_global_violation(const DTDatum& d, const GlobalCoord& coord);
bool lambda_global(const DTDatum& d, const GlobalCoord& coord);

std::vector<std::int64_t> d_embed(const DTDatum& d, const GlobalCoord& coord);
std::vector<std::int64_t> d_embed(const DTDatum& d, const Exponent& k);

enum class ResidualSide { Prime, DoublePrime };

// Per-face coordinates, indexed by vertex. `placement` chooses, per curve, which side
// carries the residual twist; empty means c' for every curve.
std::vector<PantsCoord> face_split(const DTDatum& d, const GlobalCoord& coord,
                                   const std::vector<ResidualSide>& placement = {});

// Ground-ring variables of the face at v: legs are numbered in graph().legs order.
PunctureLabels face_labels(const DTDatum& d, int v);

struct PhiResult {
    Torus value;
    std::vector<Torus::Term> lead;  // full maximal class under the d-order
    bool unique_lead() const { return lead.size() == 1; }
    const Exponent& lead_exponent() const { return lead.front().first; }
};

PhiResult phi_lead(const DTDatum& d, const GlobalCoord& coord, const std::vector<ResidualSide>& placement = {});
PhiResult phi_lead(const DTDatum& d, const MatrixPtr& torus, const GlobalCoord& coord,
                   const std::vector<ResidualSide>& placement = {});

struct GradedProduct {
    std::int64_t xi_power = 0;  // the product picks up xi^{xi_power}
    GlobalCoord sum;
    std::optional<Cyclotomic> xi_value;  // xi^{xi_power} when a root order was given
};

// Throws std::domain_error if <k,l> is odd.
GradedProduct graded_mul(const DTDatum& d, const GlobalCoord& k, const GlobalCoord& l,
                         std::optional<int> xi_order = std::nullopt);
GradedProduct graded_mul(const AntisymMatrix& qt, const GlobalCoord& k, const GlobalCoord& l,
                         std::optional<int> xi_order = std::nullopt);

// Datum file format (JSON). Serialization is canonical: parse(serialize(d)) == d and
// serialize(parse(s)) == s for every s produced by serialize.
std::string datum_to_json(const DTDatum& d);
DTDatum datum_from_json(const std::string& text);
DTDatum load_datum(const std::string& path);

}  // namespace skein
