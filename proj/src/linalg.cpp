#include "coeff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace coeff {

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RatVector unit_vector(int dim, int index) {
    RatVector v(dim);
    v[index] = Rational(1);
    return v;
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<RatVector> dense;
    int cols = 0;
    for (const auto& r : rows) {
        dense.emplace_back(r);
        cols = std::max(cols, static_cast<int>(dense.back().size()));
    }
    return from_dense_rows(dense, cols);
}

RatMatrix RatMatrix::from_dense_rows(const std::vector<RatVector>& rows, int cols) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (static_cast<int>(rows[i].size()) > cols)
            throw std::invalid_argument("row longer than declared column count");
        for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
            if (!rows[i][j].is_zero()) m.entries_.push_back({i, j, rows[i][j]});
    }
    return m;
}

RatMatrix RatMatrix::from_columns(int rows, const std::vector<RatVector>& cols) {
    RatMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < rows; ++i)
            if (!cols[j][i].is_zero()) m.set(i, j, cols[j][i]);
    }
    return m;
}

void RatMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const Entry& e, const std::pair<int, int>& key) {
                                   return std::pair{e.row, e.col} < key;
                               });
    if (it != entries_.end() && it->row == r && it->col == c) {
        if (v.is_zero())
            entries_.erase(it);
        else
            it->value = v;
    } else if (!v.is_zero()) {
        entries_.insert(it, {r, c, v});
    }
}

Rational RatMatrix::at(int r, int c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const Entry& e, const std::pair<int, int>& key) {
                                   return std::pair{e.row, e.col} < key;
                               });
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return Rational(0);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (const auto& e : entries_) m.entries_.push_back({e.col, e.row, e.value});
    std::sort(m.entries_.begin(), m.entries_.end(), [](const Entry& a, const Entry& b) {
        return std::pair{a.row, a.col} < std::pair{b.row, b.col};
    });
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    // Group rhs entries by row for the sparse accumulation.
    std::vector<std::vector<const Entry*>> rhs_by_row(rhs.rows_);
    for (const auto& e : rhs.entries_) rhs_by_row[e.row].push_back(&e);
    RatMatrix out(rows_, rhs.cols_);
    std::vector<Rational> acc(rhs.cols_);
    std::vector<int> touched;
    int current_row = -1;
    auto flush = [&] {
        std::sort(touched.begin(), touched.end());
        for (int c : touched) {
            if (!acc[c].is_zero()) out.entries_.push_back({current_row, c, acc[c]});
            acc[c] = Rational(0);
        }
        touched.clear();
    };
    for (const auto& e : entries_) {
        if (e.row != current_row) {
            if (current_row >= 0) flush();
            current_row = e.row;
        }
        for (const Entry* re : rhs_by_row[e.col]) {
            if (std::find(touched.begin(), touched.end(), re->col) == touched.end())
                touched.push_back(re->col);
            acc[re->col] += e.value * re->value;
        }
    }
    if (current_row >= 0) flush();
    return out;
}

RatVector RatMatrix::apply(const RatVector& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    RatVector y(rows_);
    for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
    return y;
}

RatVector RatMatrix::column(int c) const {
    RatVector v(rows_);
    for (const auto& e : entries_)
        if (e.col == c) v[e.row] = e.value;
    return v;
}

std::vector<RatVector> RatMatrix::to_dense_rows() const {
    std::vector<RatVector> rows(rows_, RatVector(cols_));
    for (const auto& e : entries_) rows[e.row][e.col] = e.value;
    return rows;
}

std::vector<RatVector> RatMatrix::columns() const {
    std::vector<RatVector> cols(cols_, RatVector(rows_));
    for (const auto& e : entries_) cols[e.col][e.row] = e.value;
    return cols;
}

namespace {

// Reduced row echelon form in place. Pivots are chosen as the first row with
// a nonzero entry in the leftmost unresolved column, which fixes the output
// for a given entry order. Returns the pivot columns in ascending order.
// Only the first `elim_cols` columns are eligible as pivots; trailing columns
// ride along as augmented data.
std::vector<int> rref(std::vector<RatVector>& a, int elim_cols) {
    const int nrows = static_cast<int>(a.size());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < elim_cols && row < nrows; ++col) {
        int pr = -1;
        for (int r = row; r < nrows; ++r) {
            if (!a[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        const Rational inv = Rational(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Rational factor = a[r][col];
            for (std::size_t j = col; j < a[r].size(); ++j) a[r][j] -= factor * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RankKernelImage rank_kernel_image(const RatMatrix& M) {
    std::vector<RatVector> a = M.to_dense_rows();
    const std::vector<int> pivots = rref(a, M.cols());
    RankKernelImage out;
    out.rank = static_cast<int>(pivots.size());

    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free_col = 0; free_col < M.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVector v(M.cols());
        v[free_col] = Rational(1);
        for (int k = 0; k < out.rank; ++k) v[pivots[k]] = -a[k][free_col];
        out.kernel.push_back(std::move(v));
    }
    for (int c : pivots) out.image.push_back(M.column(c));
    return out;
}

int rank(const RatMatrix& M) {
    std::vector<RatVector> a = M.to_dense_rows();
    return static_cast<int>(rref(a, M.cols()).size());
}

std::vector<std::optional<RatVector>> solve_many(const RatMatrix& M,
                                                 const std::vector<RatVector>& rhs) {
    const int n = M.rows();
    const int k = static_cast<int>(rhs.size());
    for (const auto& b : rhs)
        if (static_cast<int>(b.size()) != n)
            throw std::invalid_argument("solve: right-hand side length mismatch");

    std::vector<RatVector> a = M.to_dense_rows();
    for (int i = 0; i < n; ++i) {
        a[i].resize(M.cols() + k);
        for (int j = 0; j < k; ++j) a[i][M.cols() + j] = rhs[j][i];
    }
    const std::vector<int> pivots = rref(a, M.cols());
    const int r = static_cast<int>(pivots.size());

    std::vector<std::optional<RatVector>> out(k);
    for (int j = 0; j < k; ++j) {
        bool consistent = true;
        for (int i = r; i < n && consistent; ++i)
            if (!a[i][M.cols() + j].is_zero()) consistent = false;
        if (!consistent) continue;
        RatVector x(M.cols());
        for (int t = 0; t < r; ++t) x[pivots[t]] = a[t][M.cols() + j];
        out[j] = std::move(x);
    }
    return out;
}

std::optional<RatVector> solve(const RatMatrix& M, const RatVector& b) {
    return solve_many(M, {b})[0];
}

int quotient_dim(const std::vector<RatVector>& big, const std::vector<RatVector>& small) {
    int dim = -1;
    for (const auto& v : big) dim = static_cast<int>(v.size());
    for (const auto& v : small) {
        if (dim < 0) dim = static_cast<int>(v.size());
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("quotient_dim: mixed vector lengths");
    }
    if (dim < 0) return 0;

    EchelonBasis big_span(dim);
    for (const auto& v : big) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("quotient_dim: mixed vector lengths");
        big_span.insert(v);
    }
    const int big_rank = big_span.rank();

    EchelonBasis small_span(dim);
    for (const auto& v : small) {
        if (big_span.insert(v))
            throw std::invalid_argument(
                "quotient_dim: small span is not contained in big span");
        small_span.insert(v);
    }
    return big_rank - small_span.rank();
}

void EchelonBasis::reduce(RatVector& v) const {
    for (const auto& [pivot, row] : rows_) {
        if (v[pivot].is_zero()) continue;
        const Rational factor = v[pivot];
        for (int j = pivot; j < dim_; ++j) v[j] -= factor * row[j];
    }
}

bool EchelonBasis::insert(RatVector v) {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("echelon basis: vector length mismatch");
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j) {
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    const Rational inv = Rational(1) / v[pivot];
    for (int j = pivot; j < dim_; ++j) v[j] *= inv;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const auto& row, int p) { return row.first < p; });
    rows_.insert(it, {pivot, std::move(v)});
    return true;
}

bool EchelonBasis::contains(RatVector v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("echelon basis: vector length mismatch");
    reduce(v);
    return is_zero(v);
}

}  // namespace coeff
