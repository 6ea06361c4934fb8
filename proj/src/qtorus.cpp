#include "skein/qtorus.hpp"

namespace skein {

AntisymMatrix::AntisymMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim), 0) {
    if (dim < 0) throw std::invalid_argument("AntisymMatrix: negative dimension");
}

AntisymMatrix AntisymMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    AntisymMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim_; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.dim_)
            throw std::invalid_argument("AntisymMatrix: not square");
        for (int j = 0; j < m.dim_; ++j) m.entries_[static_cast<std::size_t>(i * m.dim_ + j)] = rows[i][j];
    }
    for (int i = 0; i < m.dim_; ++i)
        for (int j = 0; j < m.dim_; ++j)
            if (m(i, j) != -m(j, i)) throw std::invalid_argument("AntisymMatrix: not antisymmetric");
    return m;
}

void AntisymMatrix::set(int i, int j, int v) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("AntisymMatrix::set");
    if (i == j && v != 0) throw std::invalid_argument("AntisymMatrix: nonzero diagonal");
    entries_[static_cast<std::size_t>(i * dim_ + j)] = v;
    entries_[static_cast<std::size_t>(j * dim_ + i)] = -v;
}

std::vector<std::vector<int>> AntisymMatrix::rows() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(dim_), std::vector<int>(static_cast<std::size_t>(dim_)));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

std::int64_t pairing(const AntisymMatrix& q, const Exponent& k, const Exponent& l) {
    const int n = q.dim();
    if (static_cast<int>(k.size()) != n || static_cast<int>(l.size()) != n)
        throw std::invalid_argument("pairing: dimension mismatch");
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
        if (k[i] == 0) continue;
        std::int64_t row = 0;
        for (int j = 0; j < n; ++j) row += static_cast<std::int64_t>(q(i, j)) * l[j];
        s = checked_add(s, checked_mul(k[i], row));
    }
    return s;
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
    Exponent s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = checked_int(static_cast<std::int64_t>(a[i]) + b[i]);
    return s;
}

Exponent unit_exponent(int dim, int i, int value) {
    if (i < 0 || i >= dim) throw std::out_of_range("unit_exponent");
    Exponent e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = value;
    return e;
}

std::string exponent_to_string(const Exponent& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + "]";
}

std::pair<std::int64_t, Exponent> mono_mul_exponent(const AntisymMatrix& q, const Exponent& k, const Exponent& l) {
    return {pairing(q, k, l), add_exponents(k, l)};
}

Torus mono_mul(const MatrixPtr& q, const Exponent& k, const Exponent& l) {
    auto [half, sum] = mono_mul_exponent(*q, k, l);
    return Torus::monomial(q, std::move(sum), GroundRing::q_power(checked_int(half)));
}

Torus weyl_normalize(const MatrixPtr& q, const std::vector<Exponent>& factors) {
    Torus prod = Torus::monomial(q, Exponent(static_cast<std::size_t>(q->dim()), 0), GroundRing(1));
    std::int64_t correction = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        prod = prod * Torus::monomial(q, factors[i], GroundRing(1));
        for (std::size_t j = 0; j < i; ++j) correction = checked_add(correction, pairing(*q, factors[j], factors[i]));
    }
    return prod.scaled(GroundRing::q_power(checked_int(-correction)));
}

Torus weyl_normalize(const MatrixPtr& q, const std::vector<std::pair<int, int>>& generator_powers) {
    std::vector<Exponent> factors;
    factors.reserve(generator_powers.size());
    for (const auto& [i, p] : generator_powers) factors.push_back(unit_exponent(q->dim(), i, p));
    return weyl_normalize(q, factors);
}

}  // namespace skein
