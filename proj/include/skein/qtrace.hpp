#pragma once

#include <string>
#include <vector>

#include "skein/pants.hpp"
#include "skein/qtorus.hpp"

namespace skein {

// Commutation matrix of the trace torus on (x_1..x_j, u_1..u_j):
// x_{i+1} x_i = q x_i x_{i+1} (cyclic for P3), u_i x_i = q^2 x_i u_i.
const MatrixPtr& trace_torus(PantsType type);

// Which ground-ring variable stands for the puncture scalars b2 (P1 only) and b3 (P1, P2).
struct PunctureLabels {
    int b2 = 0;
    int b3 = 1;
};

PunctureLabels default_labels(PantsType type);

std::vector<std::int64_t> pants_degree(PantsType type, const Exponent& k);

Torus utr_component(PantsType type, const ComponentSpec& c, const PunctureLabels& labels);
inline Torus utr_component(PantsType type, const ComponentSpec& c) {
    return utr_component(type, c, default_labels(type));
}

Torus utr_coord(PantsType type, const PantsCoord& coord, const PunctureLabels& labels);
inline Torus utr_coord(PantsType type, const PantsCoord& coord) { return utr_coord(type, coord, default_labels(type)); }

// The unique q^{k/2} p that is fixed by reflection. Throws if none exists.
Torus reflection_normalize(const Torus& p);

struct TraceCheckReport {
    bool reflection_invariant = true;
    bool boundary_grading = true;
    bool twist_equivariant = true;
    bool highest_term = true;
    Exponent lead_exponent;
    std::vector<std::string> failures;  // each names the property and a witness

    bool ok() const { return reflection_invariant && boundary_grading && twist_equivariant && highest_term; }
};

TraceCheckReport check_thmbtr(PantsType type, const PantsCoord& coord);

}  // namespace skein
