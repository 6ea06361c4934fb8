#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein/checked.hpp"
#include "skein/ring.hpp"

namespace skein {

using Exponent = std::vector<int>;

struct ExponentHash {
    std::size_t operator()(const Exponent& k) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ k.size();
        for (int v : k) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(v))) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

// Integer antisymmetric matrix defining x_i x_j = q^{Q_ij} x_j x_i.
class AntisymMatrix {
public:
    AntisymMatrix() = default;
    explicit AntisymMatrix(int dim);
    static AntisymMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int dim() const { return dim_; }
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
    // Sets entry (i, j) to v and (j, i) to -v.
    void set(int i, int j, int v);
    std::vector<std::vector<int>> rows() const;
    bool operator==(const AntisymMatrix&) const = default;

private:
    int dim_ = 0;
    std::vector<int> entries_;
};

using MatrixPtr = std::shared_ptr<const AntisymMatrix>;

inline MatrixPtr make_matrix(AntisymMatrix m) { return std::make_shared<const AntisymMatrix>(std::move(m)); }

// <k, l> = sum_{i,j} Q_ij k_i l_j.
std::int64_t pairing(const AntisymMatrix& q, const Exponent& k, const Exponent& l);

Exponent add_exponents(const Exponent& a, const Exponent& b);
Exponent unit_exponent(int dim, int i, int value = 1);

std::string exponent_to_string(const Exponent& k);

// Finite sum of Weyl-normalized monomials x^k with coefficients in Coeff.
// Coeff needs +=, *, ==, is_zero() and shifted(h) (multiplication by q^{h/2}).
template <class Coeff>
class TorusElement {
public:
    using Term = std::pair<Exponent, Coeff>;

    explicit TorusElement(MatrixPtr q) : q_(std::move(q)) {
        if (!q_) throw std::invalid_argument("TorusElement: null matrix");
    }

    static TorusElement monomial(MatrixPtr q, Exponent k, Coeff c) {
        TorusElement e(std::move(q));
        e.check_dim(k);
        if (!c.is_zero()) e.terms_.emplace_back(std::move(k), std::move(c));
        return e;
    }

    static TorusElement from_terms(MatrixPtr q, std::vector<Term> terms) {
        TorusElement e(std::move(q));
        std::unordered_map<Exponent, Coeff, ExponentHash> acc;
        for (auto& [k, c] : terms) {
            e.check_dim(k);
            auto [it, fresh] = acc.try_emplace(std::move(k), c);
            if (!fresh) it->second += c;
        }
        e.assign_from(acc);
        return e;
    }

    const AntisymMatrix& matrix() const { return *q_; }
    const MatrixPtr& matrix_ptr() const { return q_; }
    int dim() const { return q_->dim(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coeff coeff(const Exponent& k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const Exponent& e) { return t.first < e; });
        if (it != terms_.end() && it->first == k) return it->second;
        return Coeff{};
    }

    TorusElement& operator+=(const TorusElement& o) {
        require_same_torus(o);
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
                out.push_back(*i++);
            } else if (i == terms_.end() || j->first < i->first) {
                out.push_back(*j++);
            } else {
                Coeff c = i->second;
                c += j->second;
                if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }

    TorusElement scaled(const Coeff& c) const {
        TorusElement out(q_);
        for (const auto& [k, v] : terms_) {
            Coeff p = v * c;
            if (!p.is_zero()) out.terms_.emplace_back(k, std::move(p));
        }
        return out;
    }

    friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
        a.require_same_torus(b);
        TorusElement out(a.q_);
        if (a.is_zero() || b.is_zero()) return out;
        std::unordered_map<Exponent, Coeff, ExponentHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        Exponent sum(static_cast<std::size_t>(a.dim()));
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                int half = checked_int(pairing(*a.q_, ka, kb));
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ka[i] + kb[i];
                Coeff c = (ca * cb).shifted(half);
                auto [it, fresh] = acc.try_emplace(sum, c);
                if (!fresh) it->second += c;
            }
        }
        out.assign_from(acc);
        return out;
    }

    // Termwise Weyl product: [x^w x^k] = x^{w+k}.
    TorusElement shifted(const Exponent& w) const {
        check_dim(w);
        TorusElement out(q_);
        out.terms_.reserve(terms_.size());
        for (const auto& [k, c] : terms_) out.terms_.emplace_back(add_exponents(k, w), c);
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return out;
    }

    bool operator==(const TorusElement& o) const {
        return (q_ == o.q_ || *q_ == *o.q_) && terms_ == o.terms_;
    }

    std::string to_string(const std::string& var = "Y") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            std::string c = it->second.to_string();
            os << "(" << c << ")" << var << exponent_to_string(it->first);
        }
        return os.str();
    }

private:
    void check_dim(const Exponent& k) const {
        if (static_cast<int>(k.size()) != q_->dim()) throw std::invalid_argument("exponent dimension mismatch");
    }

    void require_same_torus(const TorusElement& o) const {
        if (q_ != o.q_ && !(*q_ == *o.q_)) throw std::invalid_argument("elements of different quantum tori");
    }

    void assign_from(std::unordered_map<Exponent, Coeff, ExponentHash>& acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (!c.is_zero()) terms_.emplace_back(k, std::move(c));
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    }

    MatrixPtr q_;
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

using Torus = TorusElement<GroundRing>;

// x^k * x^l = q^{<k,l>/2} x^{k+l}; returns the half-step count and k+l.
std::pair<std::int64_t, Exponent> mono_mul_exponent(const AntisymMatrix& q, const Exponent& k, const Exponent& l);
Torus mono_mul(const MatrixPtr& q, const Exponent& k, const Exponent& l);

// Weyl-normalized product of monomials [x^{k_1} ... x^{k_m}].
Torus weyl_normalize(const MatrixPtr& q, const std::vector<Exponent>& factors);
// Same, with factors given as generator powers (index, power).
Torus weyl_normalize(const MatrixPtr& q, const std::vector<std::pair<int, int>>& generator_powers);

// Coefficientwise reflection q^{1/2} -> q^{-1/2}; fixes every x^k.
template <class Coeff>
TorusElement<Coeff> reflect(const TorusElement<Coeff>& e) {
    std::vector<typename TorusElement<Coeff>::Term> t;
    t.reserve(e.size());
    for (const auto& [k, c] : e.terms()) t.emplace_back(k, reflect(c));
    return TorusElement<Coeff>::from_terms(e.matrix_ptr(), std::move(t));
}

using DegreeMap = std::function<std::vector<std::int64_t>(const Exponent&)>;

// All terms whose degree is lexicographically maximal. Ties are returned, not broken.
template <class Coeff>
std::vector<typename TorusElement<Coeff>::Term> lead_terms(const TorusElement<Coeff>& e, const DegreeMap& degree) {
    if (e.is_zero()) throw std::domain_error("lead term of zero element");
    std::vector<typename TorusElement<Coeff>::Term> best;
    std::vector<std::int64_t> best_deg;
    for (const auto& term : e.terms()) {
        auto d = degree(term.first);
        if (best.empty() || d > best_deg) {
            best.clear();
            best_deg = std::move(d);
            best.push_back(term);
        } else if (d == best_deg) {
            best.push_back(term);
        }
    }
    return best;
}

template <class Coeff>
bool subalgebra_contains(const std::function<bool(const Exponent&)>& in_monoid, const TorusElement<Coeff>& e) {
    return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return in_monoid(t.first); });
}

}  // namespace skein
