#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skein {

using IntVec = std::vector<std::int64_t>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix from_columns(const std::vector<IntVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    IntVec row(int i) const;
    IntVec column(int j) const;
    std::vector<IntVec> to_rows() const;
    std::vector<IntVec> to_columns() const;
    IntMatrix transpose() const;
    IntMatrix scaled(std::int64_t k) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<std::int64_t> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of a: echelon rows with
// positive pivots and entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix row_hnf(const IntMatrix& a);

std::int64_t determinant(const IntMatrix& a);

// Basis of {y in Z^n : A y = 0 mod m} as the columns of an n x n matrix.
IntMatrix congruence_kernel(const IntMatrix& a, std::int64_t m);

// Sublattice of Z^d spanned by integer columns, stored canonically (HNF).
class LatticeBasis {
public:
    LatticeBasis() = default;
    explicit LatticeBasis(const IntMatrix& columns);

    int ambient_dim() const { return dim_; }
    int rank() const { return hnf_.rows(); }
    bool full_rank() const { return rank() == dim_; }
    // Canonical basis vectors as columns.
    IntMatrix basis() const { return hnf_.transpose(); }
    const IntMatrix& hnf_rows() const { return hnf_; }

    bool contains(const IntVec& v) const;
    bool contains(const LatticeBasis& sub) const;
    // Coordinates of v in the canonical basis; throws std::domain_error if v is not a member.
    IntVec coordinates(const IntVec& v) const;
    LatticeBasis scaled(std::int64_t k) const;

    bool operator==(const LatticeBasis&) const = default;

private:
    int dim_ = 0;
    IntMatrix hnf_;
};

// [sup : sub]; throws std::domain_error when sub is not contained in sup or either is not full rank.
std::int64_t lattice_index(const LatticeBasis& sub, const LatticeBasis& sup);

}  // namespace skein
