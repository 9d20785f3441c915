#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "coeff/rational.hpp"

namespace coeff {

using RatVector = std::vector<Rational>;

bool is_zero(const RatVector& v);
RatVector unit_vector(int dim, int index);

/// Sparse rational matrix in sorted coordinate form: at most one entry per
/// (row, col), no explicit zeros.
class RatMatrix {
public:
    struct Entry {
        int row;
        int col;
        Rational value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMatrix from_dense_rows(const std::vector<RatVector>& rows, int cols);
    /// Each vector becomes one column; all must have length `rows`.
    static RatMatrix from_columns(int rows, const std::vector<RatVector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Inserts, overwrites, or (for zero) erases the entry at (r, c).
    void set(int r, int c, const Rational& v);
    Rational at(int r, int c) const;

    bool is_zero() const { return entries_.empty(); }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatVector apply(const RatVector& x) const;
    RatVector column(int c) const;
    std::vector<RatVector> to_dense_rows() const;
    std::vector<RatVector> columns() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;  // sorted by (row, col)
};

struct RankKernelImage {
    int rank = 0;
    std::vector<RatVector> kernel;  // exact null-space basis, M*v = 0
    std::vector<RatVector> image;   // original pivot columns of M
};

/// Exact Gaussian elimination with first-nonzero pivoting. The pivot rule is
/// positional, not magnitude-based, so repeated runs give identical bases.
RankKernelImage rank_kernel_image(const RatMatrix& M);

int rank(const RatMatrix& M);

/// One exact solution of M*x = b (free variables set to zero), or nullopt
/// when b is outside the column space.
std::optional<RatVector> solve(const RatMatrix& M, const RatVector& b);

/// Solves M*x = b for every right-hand side with a single elimination pass.
std::vector<std::optional<RatVector>> solve_many(const RatMatrix& M,
                                                 const std::vector<RatVector>& rhs);

/// dim span(big) - dim span(small). Requires span(small) within span(big);
/// a violation means the caller's cocycle bookkeeping is broken, so it throws.
int quotient_dim(const std::vector<RatVector>& big, const std::vector<RatVector>& small);

/// Incremental row-echelon span tracker used for rank extension, basis
/// deduplication, and membership tests.
class EchelonBasis {
public:
    explicit EchelonBasis(int dim) : dim_(dim) {}

    /// Returns true (and keeps the vector) iff it enlarges the span.
    bool insert(RatVector v);
    bool contains(RatVector v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    void reduce(RatVector& v) const;

    int dim_;
    std::vector<std::pair<int, RatVector>> rows_;  // (pivot position, monic row), sorted
};

}  // namespace coeff
