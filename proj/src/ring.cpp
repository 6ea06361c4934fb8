#include "skein/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skein/checked.hpp"

namespace skein {

namespace {

template <class Key>
std::vector<std::pair<Key, std::int64_t>> combine_terms(std::vector<std::pair<Key, std::int64_t>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Key, std::int64_t>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = checked_add(out.back().second, t.second);
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.second == 0; }), out.end());
    return out;
}

// Merge two sorted term lists, with sign applied to the second.
template <class Key>
std::vector<std::pair<Key, std::int64_t>> merge_terms(const std::vector<std::pair<Key, std::int64_t>>& a,
                                                      const std::vector<std::pair<Key, std::int64_t>>& b,
                                                      int sign) {
    std::vector<std::pair<Key, std::int64_t>> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : checked_sub(0, j->second));
            ++j;
        } else {
            std::int64_t c = sign > 0 ? checked_add(i->second, j->second) : checked_sub(i->second, j->second);
            if (c != 0) out.emplace_back(i->first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

std::string q_factor(int half) {
    if (half == 0) return "";
    if (half % 2 == 0) {
        int e = half / 2;
        return e == 1 ? "q" : "q^" + std::to_string(e);
    }
    return "q^(" + std::to_string(half) + "/2)";
}

void append_signed(std::ostringstream& os, bool first, std::int64_t c, const std::string& mono) {
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (mono.empty()) {
        os << a;
    } else {
        if (a != 1) os << a << "*";
        os << mono;
    }
}

}  // namespace

// ---------------------------------------------------------------- HalfLaurent

HalfLaurent::HalfLaurent(std::int64_t constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
}

HalfLaurent HalfLaurent::q_power(int half_steps, std::int64_t coeff) {
    HalfLaurent p;
    if (coeff != 0) p.terms_.emplace_back(half_steps, coeff);
    return p;
}

HalfLaurent HalfLaurent::from_terms(std::vector<Term> terms) {
    HalfLaurent p;
    p.terms_ = combine_terms(std::move(terms));
    return p;
}

std::int64_t HalfLaurent::coeff(int half_steps) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), half_steps,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == half_steps) ? it->second : 0;
}

int HalfLaurent::min_half_exponent() const {
    if (terms_.empty()) throw std::domain_error("min exponent of zero polynomial");
    return terms_.front().first;
}

int HalfLaurent::max_half_exponent() const {
    if (terms_.empty()) throw std::domain_error("max exponent of zero polynomial");
    return terms_.back().first;
}

HalfLaurent HalfLaurent::shifted(int half_steps) const {
    HalfLaurent p = *this;
    for (auto& t : p.terms_) t.first = checked_int(static_cast<std::int64_t>(t.first) + half_steps);
    return p;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    std::vector<HalfLaurent::Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            raw.emplace_back(checked_int(static_cast<std::int64_t>(ea) + eb), checked_mul(ca, cb));
    return HalfLaurent::from_terms(std::move(raw));
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) { return *this = *this * o; }

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent p = *this;
    for (auto& t : p.terms_) t.second = checked_sub(0, t.second);
    return p;
}

std::string HalfLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_signed(os, first, it->second, q_factor(it->first));
        first = false;
    }
    return os.str();
}

HalfLaurent reflect(const HalfLaurent& p) {
    std::vector<HalfLaurent::Term> t;
    t.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) t.emplace_back(-e, c);
    return HalfLaurent::from_terms(std::move(t));
}

// ---------------------------------------------------------------- GroundRing

namespace {

void trim(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

GroundRing::Monomial mono_product(const GroundRing::Monomial& a, const GroundRing::Monomial& b) {
    GroundRing::Monomial m;
    m.q_half = checked_int(static_cast<std::int64_t>(a.q_half) + b.q_half);
    if (b.punctures.empty()) {
        m.punctures = a.punctures;
        return m;
    }
    if (a.punctures.empty()) {
        m.punctures = b.punctures;
        return m;
    }
    m.punctures.assign(std::max(a.punctures.size(), b.punctures.size()), 0);
    for (std::size_t i = 0; i < a.punctures.size(); ++i) m.punctures[i] += a.punctures[i];
    for (std::size_t i = 0; i < b.punctures.size(); ++i) m.punctures[i] += b.punctures[i];
    trim(m.punctures);
    return m;
}

}  // namespace

GroundRing::GroundRing(std::int64_t constant) {
    if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

GroundRing::GroundRing(const HalfLaurent& p) {
    for (const auto& [e, c] : p.terms()) terms_.emplace_back(Monomial{e, {}}, c);
}

GroundRing GroundRing::q_power(int half_steps, std::int64_t coeff) {
    GroundRing r;
    if (coeff != 0) r.terms_.emplace_back(Monomial{half_steps, {}}, coeff);
    return r;
}

GroundRing GroundRing::puncture(int var, int exp) {
    if (var < 0) throw std::invalid_argument("negative puncture variable index");
    Monomial m;
    m.punctures.assign(static_cast<std::size_t>(var) + 1, 0);
    m.punctures[static_cast<std::size_t>(var)] = exp;
    trim(m.punctures);
    GroundRing r;
    r.terms_.emplace_back(std::move(m), 1);
    return r;
}

GroundRing GroundRing::from_terms(std::vector<Term> terms) {
    for (auto& t : terms) trim(t.first.punctures);
    GroundRing r;
    r.terms_ = combine_terms(std::move(terms));
    return r;
}

bool GroundRing::is_one() const {
    return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

bool GroundRing::is_signed_q_power() const {
    return terms_.size() == 1 && terms_[0].first.punctures.empty() &&
           (terms_[0].second == 1 || terms_[0].second == -1);
}

int GroundRing::min_half_exponent() const {
    if (terms_.empty()) throw std::domain_error("min exponent of zero element");
    int m = terms_.front().first.q_half;
    for (const auto& t : terms_) m = std::min(m, t.first.q_half);
    return m;
}

int GroundRing::max_half_exponent() const {
    if (terms_.empty()) throw std::domain_error("max exponent of zero element");
    int m = terms_.front().first.q_half;
    for (const auto& t : terms_) m = std::max(m, t.first.q_half);
    return m;
}

GroundRing GroundRing::shifted(int half_steps) const {
    if (half_steps == 0) return *this;
    GroundRing r = *this;
    // Sorting is by (q_half, punctures); a uniform shift preserves order.
    for (auto& t : r.terms_) t.first.q_half = checked_int(static_cast<std::int64_t>(t.first.q_half) + half_steps);
    return r;
}

GroundRing GroundRing::relabeled(const std::vector<int>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial n{m.q_half, {}};
        for (std::size_t i = 0; i < m.punctures.size(); ++i) {
            if (m.punctures[i] == 0) continue;
            if (i >= var_map.size() || var_map[i] < 0) throw std::out_of_range("puncture variable not mapped");
            auto target = static_cast<std::size_t>(var_map[i]);
            if (n.punctures.size() <= target) n.punctures.resize(target + 1, 0);
            n.punctures[target] += m.punctures[i];
        }
        out.emplace_back(std::move(n), c);
    }
    return from_terms(std::move(out));
}

GroundRing& GroundRing::operator+=(const GroundRing& o) {
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

GroundRing& GroundRing::operator-=(const GroundRing& o) {
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

GroundRing operator*(const GroundRing& a, const GroundRing& b) {
    if (a.terms_.size() == 1 && a.terms_[0].first.punctures.empty() && a.terms_[0].second == 1)
        return b.shifted(a.terms_[0].first.q_half);
    if (b.terms_.size() == 1 && b.terms_[0].first.punctures.empty() && b.terms_[0].second == 1)
        return a.shifted(b.terms_[0].first.q_half);
    std::vector<GroundRing::Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) raw.emplace_back(mono_product(ma, mb), checked_mul(ca, cb));
    GroundRing r;
    r.terms_ = combine_terms(std::move(raw));
    return r;
}

GroundRing& GroundRing::operator*=(const GroundRing& o) { return *this = *this * o; }

GroundRing GroundRing::operator-() const {
    GroundRing r = *this;
    for (auto& t : r.terms_) t.second = checked_sub(0, t.second);
    return r;
}

std::string GroundRing::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono = q_factor(it->first.q_half);
        for (std::size_t i = 0; i < it->first.punctures.size(); ++i) {
            int e = it->first.punctures[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "v" + std::to_string(i + 1);
            if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
        append_signed(os, first, it->second, mono);
        first = false;
    }
    return os.str();
}

GroundRing reflect(const GroundRing& p) {
    std::vector<GroundRing::Term> t;
    t.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) t.emplace_back(GroundRing::Monomial{-m.q_half, m.punctures}, c);
    return GroundRing::from_terms(std::move(t));
}

// ---------------------------------------------------------------- Cyclotomic

namespace {

// Exact division of a by monic b; throws if the remainder is nonzero.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("cyclotomic division: degree too small");
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_sub(a[i - db + j], checked_mul(c, b[j]));
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic division: nonzero remainder");
    return q;
}

}  // namespace

IntPoly cyclotomic_poly(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    IntPoly p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = exact_divide(std::move(p), cyclotomic_poly(e));
    return p;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
}

void Cyclotomic::reduce(IntPoly p) {
    IntPoly phi = cyclotomic_poly(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        std::int64_t c = p[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] = checked_sub(p[i - deg + j], checked_mul(c, phi[j]));
    }
    p.resize(std::min(p.size(), deg));
    while (!p.empty() && p.back() == 0) p.pop_back();
    coeffs_ = std::move(p);
}

Cyclotomic Cyclotomic::root_power(int order, std::int64_t k, std::int64_t coeff) {
    Cyclotomic c(order);
    std::int64_t e = ((k % order) + order) % order;
    IntPoly p(static_cast<std::size_t>(e) + 1, 0);
    p[static_cast<std::size_t>(e)] = coeff;
    c.reduce(std::move(p));
    return c;
}

bool Cyclotomic::is_zero() const { return coeffs_.empty(); }

bool Cyclotomic::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

void Cyclotomic::require_same_order(const Cyclotomic& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: mismatched root orders");
}

Cyclotomic Cyclotomic::shifted(std::int64_t k) const { return *this * root_power(order_, k); }

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
    if (e < 0) {
        // Only roots of unity are inverted.
        int k = multiplicative_order();
        if (k == 0) throw std::domain_error("Cyclotomic::pow: negative power of a non-root of unity");
        return pow(((e % k) + k) % k);
    }
    Cyclotomic result = one(order_);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

int Cyclotomic::multiplicative_order() const {
    Cyclotomic p = *this;
    for (int k = 1; k <= 2 * order_; ++k) {
        if (p.is_one()) return k;
        p = p * *this;
    }
    return 0;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_order(o);
    IntPoly p = coeffs_;
    if (p.size() < o.coeffs_.size()) p.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) p[i] = checked_add(p[i], o.coeffs_[i]);
    while (!p.empty() && p.back() == 0) p.pop_back();
    coeffs_ = std::move(p);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_order(o);
    IntPoly p = coeffs_;
    if (p.size() < o.coeffs_.size()) p.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) p[i] = checked_sub(p[i], o.coeffs_[i]);
    while (!p.empty() && p.back() == 0) p.pop_back();
    coeffs_ = std::move(p);
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.require_same_order(b);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Cyclotomic(a.order_);
    IntPoly p(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p[i + j] = checked_add(p[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    Cyclotomic c(a.order_);
    c.reduce(std::move(p));
    return c;
}

std::string Cyclotomic::to_string() const { return poly_to_string(coeffs_, "z" + std::to_string(order_)); }

Cyclotomic specialize(const HalfLaurent& p, int n) {
    if (n < 1) throw std::invalid_argument("specialize: root order must be positive");
    const int order = 2 * n;
    IntPoly acc(static_cast<std::size_t>(order), 0);
    for (const auto& [e, c] : p.terms()) {
        int k = ((e % order) + order) % order;
        acc[static_cast<std::size_t>(k)] = checked_add(acc[static_cast<std::size_t>(k)], c);
    }
    Cyclotomic out(order);
    for (int k = 0; k < order; ++k)
        if (acc[static_cast<std::size_t>(k)] != 0) out += Cyclotomic::root_power(order, k, acc[static_cast<std::size_t>(k)]);
    return out;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        append_signed(os, first, p[i], mono);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace skein
