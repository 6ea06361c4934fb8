#include "skein/report.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "skein/arith.hpp"
#include "skein/qtrace.hpp"

namespace skein::report {

namespace {

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

Json matrix_json(const AntisymMatrix& m) { return m.rows(); }

Json lattice_json(const LatticeBasis& l) { return l.hnf_rows().to_rows(); }

Json coord_json(const GlobalCoord& c) {
    Json j;
    j["n"] = c.n;
    j["t"] = c.t;
    return j;
}

Json decomposition_json(PantsType type, const PantsCoord& c) {
    Decomposition d = decompose(type, c);
    Json comps = Json::array();
    for (const auto& comp : d.components) comps.push_back(comp.to_string());
    Json j;
    j["components"] = comps;
    j["twist"] = d.twist;
    return j;
}

Json trace_check_json(const TraceCheckReport& rep) {
    Json j;
    j["reflection_invariant"] = verdict(rep.reflection_invariant);
    j["boundary_grading"] = verdict(rep.boundary_grading);
    j["twist"] = verdict(rep.twist_equivariant);
    j["highest_term"] = verdict(rep.highest_term);
    j["lead"] = rep.lead_exponent;
    if (!rep.failures.empty()) j["failures"] = rep.failures;
    return j;
}

Json surface_json(const DTDatum& d) {
    Json j;
    j["genus"] = d.genus();
    j["punctures"] = d.puncture_count();
    j["curves"] = d.curve_count();
    Json faces = Json::array();
    for (int v = 0; v < d.vertex_count(); ++v) faces.push_back(pants_type_name(d.face_type(v)));
    j["faces"] = faces;
    return j;
}

// Coordinates with |n|, |t| <= bound drawn uniformly and filtered by membership.
template <class Member>
std::vector<int> sample_member(std::mt19937_64& rng, int len, int bound, Member&& member) {
    std::uniform_int_distribution<int> nd(0, bound), td(-bound, bound);
    for (int tries = 0; tries < 100000; ++tries) {
        std::vector<int> k(static_cast<std::size_t>(2 * len));
        for (int i = 0; i < len; ++i) k[static_cast<std::size_t>(i)] = nd(rng);
        for (int i = 0; i < len; ++i) k[static_cast<std::size_t>(len + i)] = td(rng);
        if (member(k)) return k;
    }
    throw std::runtime_error("sampler could not find a monoid member");
}

std::vector<std::pair<int, int>> surfaces_up_to(int rmax) {
    std::vector<std::pair<int, int>> out;
    for (int g = 0; 3 * g - 3 <= rmax; ++g)
        for (int m = 0; 3 * g - 3 + m <= rmax; ++m)
            if (!is_excluded_surface(g, m)) out.emplace_back(g, m);
    return out;
}

}  // namespace

DTDatum resolve_datum(std::optional<int> genus, std::optional<int> punctures, const std::optional<std::string>& file) {
    if (file) {
        DTDatum d = load_datum(*file);
        if ((genus && *genus != d.genus()) || (punctures && *punctures != d.puncture_count()))
            throw std::invalid_argument("datum file does not match --genus/--punctures");
        return d;
    }
    if (!genus || !punctures) throw std::invalid_argument("need --genus and --punctures, or --datum");
    if (is_excluded_surface(*genus, *punctures)) throw std::invalid_argument("excluded surface");
    return standard_datum(*genus, *punctures);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer in list: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer in list: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

GlobalCoord parse_global_coord(const std::string& text, int r) {
    auto v = parse_int_list(text);
    if (static_cast<int>(v.size()) != 2 * r)
        throw std::invalid_argument("coordinate needs " + std::to_string(2 * r) + " entries (n then t)");
    return GlobalCoord::from_exponent(v);
}

PantsCoord parse_pants_coord(const std::string& text, PantsType type) {
    auto v = parse_int_list(text);
    if (static_cast<int>(v.size()) != 2 * boundary_count(type))
        throw std::invalid_argument("pants coordinate needs " + std::to_string(2 * boundary_count(type)) + " entries");
    return PantsCoord::from_exponent(v);
}

Json torus_json(const Torus& e) {
    Json terms = Json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        Json t;
        t["exponent"] = it->first;
        t["coefficient"] = it->second.to_string();
        terms.push_back(t);
    }
    return terms;
}

Result analyze(const DTDatum& d, int xi_order) {
    RootOrders o = orders(xi_order);
    AntisymMatrix q = q_matrix(d);
    LatticeBasis lam = lambda_hat(d);
    LatticeBasis ev = even_sublattice(d);
    LatticeBasis ker = kernel_lattice(d, o.n);
    std::int64_t index = lattice_index(ker, lam);
    std::int64_t even_index = lattice_index(ev, lam);
    std::int64_t deg = pi_degree(d.genus(), d.puncture_count(), o);
    LatticeBasis expected = (o.n_prime % 2 == 1 ? lam : ev).scaled(o.n_big);

    Result r;
    r.json["surface"] = surface_json(d);
    Json xi;
    xi["order"] = o.n;
    xi["N''"] = o.n;
    xi["N'"] = o.n_prime;
    xi["N"] = o.n_big;
    xi["epsilon"] = epsilon_name(o.epsilon);
    r.json["xi"] = xi;
    r.json["Q"] = matrix_json(q);
    r.json["Q_tilde"] = matrix_json(tilde_q(q));
    r.json["lambda_hat"] = lattice_json(lam);
    r.json["even_sublattice"] = lattice_json(ev);
    r.json["even_index"] = even_index;
    r.json["kernel"] = lattice_json(ker);
    r.json["kernel_index"] = index;
    r.json["pi_degree"] = deg;

    const bool k_ok = ker == expected;
    const bool i_ok = index == deg * deg;
    std::int64_t four_g = 1;
    for (int i = 0; i < d.genus(); ++i) four_g *= 4;
    const bool e_ok = even_index == four_g;
    Json v;
    v["kernel_equals_N_lattice"] = verdict(k_ok);
    v["index_equals_pi_degree_squared"] = verdict(i_ok);
    v["even_index_equals_4_pow_genus"] = verdict(e_ok);
    r.json["verdicts"] = v;
    r.pass = k_ok && i_ok && e_ok;
    return r;
}

Result coords(const DTDatum& d, const GlobalCoord& c) {
    Result r;
    r.json["surface"] = surface_json(d);
    r.json["coord"] = coord_json(c);
    auto why = lambda_global_violation(d, c);
    r.json["member"] = !why.has_value();
    if (why) {
        r.json["witness"] = *why;
        Json v;
        v["member"] = verdict(false);
        r.json["verdicts"] = v;
        r.pass = false;
        return r;
    }
    r.json["d_embed"] = d_embed(d, c);
    Json split = Json::array();
    auto faces = face_split(d, c);
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& fc = faces[static_cast<std::size_t>(v)];
        Json f;
        f["vertex"] = v;
        f["type"] = pants_type_name(d.face_type(v));
        f["coord"] = fc.as_exponent();
        f["decomposition"] = decomposition_json(d.face_type(v), fc);
        split.push_back(f);
    }
    r.json["split"] = split;
    Json v;
    v["member"] = verdict(true);
    r.json["verdicts"] = v;
    return r;
}

Result trace(const DTDatum& d, const GlobalCoord& c) {
    if (auto why = lambda_global_violation(d, c)) throw std::invalid_argument("coordinate not in the monoid: " + *why);
    Result r;
    r.json["surface"] = surface_json(d);
    r.json["coord"] = coord_json(c);
    PhiResult phi = phi_lead(d, c);
    Json p;
    p["terms"] = torus_json(phi.value);
    p["lead"] = phi.lead_exponent();
    p["lead_unique"] = phi.unique_lead();
    r.json["phi"] = p;

    bool faces_ok = true;
    Json faces = Json::array();
    auto split = face_split(d, c);
    for (int v = 0; v < d.vertex_count(); ++v) {
        const PantsType type = d.face_type(v);
        const auto& fc = split[static_cast<std::size_t>(v)];
        TraceCheckReport rep = check_thmbtr(type, fc);
        faces_ok = faces_ok && rep.ok();
        Json f;
        f["vertex"] = v;
        f["type"] = pants_type_name(type);
        f["coord"] = fc.as_exponent();
        f["trace_properties"] = trace_check_json(rep);
        faces.push_back(f);
    }
    r.json["faces"] = faces;
    const bool lead_ok = phi.unique_lead() && phi.lead_exponent() == c.as_exponent();
    Json v;
    v["lead_equals_coord"] = verdict(lead_ok);
    v["face_traces"] = verdict(faces_ok);
    r.json["verdicts"] = v;
    r.pass = lead_ok && faces_ok;
    return r;
}

Result trace_pants(PantsType type, const PantsCoord& c) {
    if (!lambda_contains(type, c)) throw std::invalid_argument("coordinate not in the pants monoid");
    Result r;
    r.json["type"] = pants_type_name(type);
    r.json["coord"] = c.as_exponent();
    r.json["decomposition"] = decomposition_json(type, c);
    r.json["utr"] = torus_json(utr_coord(type, c));
    TraceCheckReport rep = check_thmbtr(type, c);
    r.json["trace_properties"] = trace_check_json(rep);
    Json v;
    v["trace_properties"] = verdict(rep.ok());
    r.json["verdicts"] = v;
    r.pass = rep.ok();
    return r;
}

CheckOptions parse_grid(const std::string& text, CheckOptions base) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("grid entry needs key=value: '" + item + "'");
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("grid value is not an integer: '" + item + "'");
        }
        if (value < 1) throw std::invalid_argument("grid values must be positive");
        if (key == "rmax")
            base.rmax = value;
        else if (key == "nmax")
            base.nmax = value;
        else if (key == "samples")
            base.samples = value;
        else
            throw std::invalid_argument("unknown grid key '" + key + "'");
    }
    return base;
}

Result check(const CheckOptions& opts) {
    Result r;
    Json grid;
    grid["rmax"] = opts.rmax;
    grid["nmax"] = opts.nmax;
    grid["samples"] = opts.samples;
    r.json["grid"] = grid;
    r.json["seed"] = opts.seed;
    Json suites;
    std::mt19937_64 rng(opts.seed);
    const auto surfaces = surfaces_up_to(opts.rmax);

    // Center and PI-degree over the (surface, root order) grid.
    {
        Json s;
        int cells = 0;
        bool ok = true;
        Json witness;
        for (auto [g, m] : surfaces) {
            DTDatum d = standard_datum(g, m);
            for (int n = 1; n <= opts.nmax; ++n) {
                ++cells;
                Result a = analyze(d, n);
                if (!a.pass && ok) {
                    ok = false;
                    witness["genus"] = g;
                    witness["punctures"] = m;
                    witness["xi_order"] = n;
                    witness["verdicts"] = a.json["verdicts"];
                }
            }
        }
        s["verdict"] = verdict(ok);
        s["cases"] = cells;
        if (!ok) s["witness"] = witness;
        suites["center"] = s;
        r.pass = r.pass && ok;
    }

    // Pants trace properties on random monoid members.
    {
        Json s;
        bool ok = true;
        int cases = 0;
        for (int j = 1; j <= 3 && ok; ++j) {
            PantsType type = pants_type_from_int(j);
            for (int i = 0; i < opts.samples; ++i) {
                auto k = sample_member(rng, j, 6, [&](const std::vector<int>& e) {
                    return lambda_contains(type, PantsCoord::from_exponent(e));
                });
                ++cases;
                TraceCheckReport rep = check_thmbtr(type, PantsCoord::from_exponent(k));
                if (!rep.ok()) {
                    ok = false;
                    s["witness"] = {{"type", pants_type_name(type)}, {"coord", k}, {"failures", rep.failures}};
                    break;
                }
            }
        }
        s["verdict"] = verdict(ok);
        s["cases"] = cases;
        suites["pants_trace"] = s;
        r.pass = r.pass && ok;
    }

    // Monoid closure, lead terms and graded products per surface.
    {
        Json closure, lead, product;
        bool c_ok = true, l_ok = true, p_ok = true;
        int c_cases = 0, l_cases = 0, p_cases = 0;
        for (auto [g, m] : surfaces) {
            DTDatum d = standard_datum(g, m);
            const int rr = d.curve_count();
            AntisymMatrix qt = tilde_q(q_matrix(d));
            if (opts.inject_fault) qt.set(0, rr, 1);
            MatrixPtr torus = make_matrix(qt);
            auto member = [&](const std::vector<int>& e) { return lambda_global(d, GlobalCoord::from_exponent(e)); };
            const std::string name = "(" + std::to_string(g) + "," + std::to_string(m) + ")";
            for (int i = 0; i < opts.samples; ++i) {
                GlobalCoord k = GlobalCoord::from_exponent(sample_member(rng, rr, 4, member));
                GlobalCoord l = GlobalCoord::from_exponent(sample_member(rng, rr, 4, member));
                GlobalCoord sum = GlobalCoord::from_exponent(add_exponents(k.as_exponent(), l.as_exponent()));
                ++c_cases;
                if (c_ok && !lambda_global(d, sum)) {
                    c_ok = false;
                    closure["witness"] = {{"surface", name}, {"k", k.as_exponent()}, {"l", l.as_exponent()}};
                }
                if (i % 10 != 0) continue;
                ++l_cases;
                PhiResult pk = phi_lead(d, torus, k);
                if (l_ok && !(pk.unique_lead() && pk.lead_exponent() == k.as_exponent())) {
                    l_ok = false;
                    lead["witness"] = {{"surface", name}, {"coord", k.as_exponent()}, {"lead_candidates", pk.lead.size()}};
                }
                ++p_cases;
                std::int64_t pr = pairing(qt, k.as_exponent(), l.as_exponent());
                if (pr % 2 != 0) {
                    if (p_ok)
                        product["witness"] = {{"surface", name}, {"k", k.as_exponent()}, {"l", l.as_exponent()},
                                              {"pairing", pr}, {"reason", "odd pairing"}};
                    p_ok = false;
                    continue;
                }
                PhiResult pl = phi_lead(d, torus, l);
                auto top = lead_terms(pk.value * pl.value, [&d](const Exponent& e) { return d_embed(d, e); });
                bool good = top.size() == 1 && top[0].first == sum.as_exponent() &&
                            top[0].second == GroundRing::q_power(checked_int(pr));
                if (!good && p_ok) {
                    product["witness"] = {{"surface", name}, {"k", k.as_exponent()}, {"l", l.as_exponent()},
                                          {"pairing", pr}, {"reason", "lead of product differs"}};
                }
                p_ok = p_ok && good;
            }
        }
        closure["verdict"] = verdict(c_ok);
        closure["cases"] = c_cases;
        lead["verdict"] = verdict(l_ok);
        lead["cases"] = l_cases;
        product["verdict"] = verdict(p_ok);
        product["cases"] = p_cases;
        suites["monoid_closure"] = closure;
        suites["lead_term"] = lead;
        suites["graded_product"] = product;
        r.pass = r.pass && c_ok && l_ok && p_ok;
    }

    r.json["suites"] = suites;
    r.json["verdict"] = verdict(r.pass);
    return r;
}

namespace {

void text_into(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_structured() && !(val.is_array() && !val.empty() && val.front().is_primitive())) {
                os << pad << key << ":\n";
                text_into(os, val, indent + 2);
            } else {
                os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& val : j) {
            if (val.is_object()) {
                os << pad << "-\n";
                text_into(os, val, indent + 2);
            } else {
                os << pad << "- " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string to_text(const Json& j) {
    std::ostringstream os;
    text_into(os, j, 0);
    return os.str();
}

}  // namespace skein::report
