#include "skein/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skein/checked.hpp"

namespace skein {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative size");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) { return from_rows(cols).transpose(); }

IntVec IntMatrix::row(int i) const {
    IntVec v(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v[static_cast<std::size_t>(j)] = (*this)(i, j);
    return v;
}

IntVec IntMatrix::column(int j) const {
    IntVec v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
}

std::vector<IntVec> IntMatrix::to_rows() const {
    std::vector<IntVec> r;
    for (int i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
}

std::vector<IntVec> IntMatrix::to_columns() const {
    std::vector<IntVec> c;
    for (int j = 0; j < cols_; ++j) c.push_back(column(j));
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::scaled(std::int64_t k) const {
    IntMatrix m = *this;
    for (auto& x : m.a_) x = checked_mul(x, k);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: size mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            std::int64_t x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
        }
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m(dst, j) = checked_sub(m(dst, j), checked_mul(q, m(src, j)));
}

void col_axpy(IntMatrix& m, int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m(i, dst) = checked_sub(m(i, dst), checked_mul(q, m(i, src)));
}

void negate_row(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Floor division, so remainders land in [0, |b|).
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::vector<std::int64_t> SmithForm::diagonal() const {
    std::vector<std::int64_t> out;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = s.d;
    for (int t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // Bring the smallest nonzero entry of the trailing block to (t, t).
            int bi = -1, bj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (d(i, j) != 0 && (bi < 0 || abs64(d(i, j)) < abs64(d(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) return s;
            swap_rows(d, t, bi);
            swap_rows(s.u, t, bi);
            swap_cols(d, t, bj);
            swap_cols(s.v, t, bj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                std::int64_t q = d(i, t) / d(t, t);
                row_axpy(d, i, t, q);
                row_axpy(s.u, i, t, q);
                if (d(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                std::int64_t q = d(t, j) / d(t, t);
                col_axpy(d, j, t, q);
                col_axpy(s.v, j, t, q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad >= 0) {
                row_axpy(d, t, bad, -1);
                row_axpy(s.u, t, bad, -1);
                continue;
            }
            if (d(t, t) < 0) {
                negate_row(d, t);
                negate_row(s.u, t);
            }
            break;
        }
    }
    return s;
}

// ---------------------------------------------------------------- Hermite form

IntMatrix row_hnf(const IntMatrix& a) {
    IntMatrix h = a;
    const int m = h.rows(), n = h.cols();
    int pr = 0;
    for (int c = 0; c < n && pr < m; ++c) {
        while (true) {
            int best = -1;
            for (int i = pr; i < m; ++i)
                if (h(i, c) != 0 && (best < 0 || abs64(h(i, c)) < abs64(h(best, c)))) best = i;
            if (best < 0) break;
            swap_rows(h, pr, best);
            bool done = true;
            for (int i = pr + 1; i < m; ++i) {
                if (h(i, c) == 0) continue;
                row_axpy(h, i, pr, h(i, c) / h(pr, c));
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(pr, c) == 0) continue;
        if (h(pr, c) < 0) negate_row(h, pr);
        for (int i = 0; i < pr; ++i) row_axpy(h, i, pr, floor_div(h(i, c), h(pr, c)));
        ++pr;
    }
    IntMatrix out(pr, n);
    for (int i = 0; i < pr; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = h(i, j);
    return out;
}

std::int64_t determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination in 128-bit arithmetic.
    std::vector<__int128> m(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] = a(i, j);
    auto at = [&](int i, int j) -> __int128& { return m[static_cast<std::size_t>(i * n + j)]; };
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    __int128 det = sign * at(n - 1, n - 1);
    if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant exceeds int64");
    return static_cast<std::int64_t>(det);
}

IntMatrix congruence_kernel(const IntMatrix& a, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("congruence_kernel: modulus must be positive");
    const int n = a.cols();
    SmithForm s = smith_normal_form(a);
    auto diag = s.diagonal();
    IntMatrix scale(n, n);
    for (int i = 0; i < n; ++i) {
        std::int64_t di = i < static_cast<int>(diag.size()) ? diag[static_cast<std::size_t>(i)] : 0;
        scale(i, i) = modulus / std::gcd(di, modulus);
    }
    return s.v * scale;
}

// ---------------------------------------------------------------- LatticeBasis

LatticeBasis::LatticeBasis(const IntMatrix& columns) : dim_(columns.rows()), hnf_(row_hnf(columns.transpose())) {}

IntVec LatticeBasis::coordinates(const IntVec& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension differs from lattice");
    IntVec rest = v;
    IntVec coords(static_cast<std::size_t>(rank()), 0);
    int row = 0;
    for (int c = 0; c < dim_; ++c) {
        if (row < rank() && hnf_(row, c) != 0) {
            std::int64_t p = hnf_(row, c);
            if (rest[static_cast<std::size_t>(c)] % p != 0) throw std::domain_error("vector not in lattice");
            std::int64_t q = rest[static_cast<std::size_t>(c)] / p;
            coords[static_cast<std::size_t>(row)] = q;
            for (int j = c; j < dim_; ++j)
                rest[static_cast<std::size_t>(j)] = checked_sub(rest[static_cast<std::size_t>(j)], checked_mul(q, hnf_(row, j)));
            ++row;
        } else if (rest[static_cast<std::size_t>(c)] != 0) {
            throw std::domain_error("vector not in lattice");
        }
    }
    return coords;
}

bool LatticeBasis::contains(const IntVec& v) const {
    try {
        coordinates(v);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool LatticeBasis::contains(const LatticeBasis& sub) const {
    if (sub.dim_ != dim_) return false;
    for (int i = 0; i < sub.rank(); ++i)
        if (!contains(sub.hnf_.row(i))) return false;
    return true;
}

LatticeBasis LatticeBasis::scaled(std::int64_t k) const { return LatticeBasis(hnf_.transpose().scaled(k)); }

std::int64_t lattice_index(const LatticeBasis& sub, const LatticeBasis& sup) {
    if (!sub.full_rank() || !sup.full_rank()) throw std::domain_error("lattice_index needs full-rank lattices");
    if (sub.ambient_dim() != sup.ambient_dim()) throw std::domain_error("lattice_index: dimension mismatch");
    const int n = sub.ambient_dim();
    IntMatrix coords(n, n);
    for (int i = 0; i < n; ++i) {
        IntVec c = sup.coordinates(sub.hnf_rows().row(i));
        for (int j = 0; j < n; ++j) coords(i, j) = c[static_cast<std::size_t>(j)];
    }
    std::int64_t det = determinant(coords);
    return det < 0 ? -det : det;
}

}  // namespace skein
