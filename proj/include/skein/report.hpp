#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "skein/pants.hpp"
#include "skein/surface.hpp"

namespace skein::report {

using Json = nlohmann::ordered_json;

// A report and whether every verdict in it passed.
struct Result {
    Json json;
    bool pass = true;
};

DTDatum resolve_datum(std::optional<int> genus, std::optional<int> punctures, const std::optional<std::string>& file);
std::vector<int> parse_int_list(const std::string& text);
GlobalCoord parse_global_coord(const std::string& text, int r);
PantsCoord parse_pants_coord(const std::string& text, PantsType type);

Result analyze(const DTDatum& d, int xi_order);
Result coords(const DTDatum& d, const GlobalCoord& c);
Result trace(const DTDatum& d, const GlobalCoord& c);
Result trace_pants(PantsType type, const PantsCoord& c);

struct CheckOptions {
    int rmax = 4;
    int nmax = 12;
    std::uint64_t seed = 1;
    int samples = 2000;
    bool inject_fault = false;  // corrupts tilde Q in the product suite
};

// Parses "rmax=4,nmax=12" style specs on top of `base`.
CheckOptions parse_grid(const std::string& text, CheckOptions base);
Result check(const CheckOptions& opts);

Json torus_json(const Torus& e);
std::string to_text(const Json& j);

}  // namespace skein::report
