#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ymh {

using Scalar = mpq_class;

// sorted by index, no explicit zeros
using SparseVector = std::vector<std::pair<int, Scalar>>;

std::string to_string(const Scalar& q);
Scalar parse_scalar(const std::string& s);

Scalar coeff(const SparseVector& v, int i);
// y + a*x
SparseVector axpy(const SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Scalar& a);
SparseVector unit_vector(int i);
// sorts, merges duplicates, drops zeros
void canonicalize(SparseVector& v);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    static SparseMatrix identity(int n);
    static SparseMatrix from_columns(int rows, std::vector<SparseVector> cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const;

    Scalar at(int r, int c) const;
    void set(int r, int c, const Scalar& v);
    const SparseVector& column(int c) const { return data_[c]; }
    void set_column(int c, SparseVector v);

    SparseMatrix transpose() const;
    SparseVector apply(const SparseVector& v) const;
    std::vector<SparseVector> row_vectors() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix scaled(const Scalar& a) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVector> data_;
};

// Column accumulator for building a matrix entry by entry.
class MatrixBuilder {
public:
    MatrixBuilder(int rows, int cols);
    void add(int r, int c, const Scalar& v);
    void add_column(int c, const SparseVector& v, const Scalar& a = 1);
    SparseMatrix build();

private:
    int rows_, cols_;
    std::vector<SparseVector> cols_data_;
};

// stack blocks: result = [blocks[0]; blocks[1]; ...] (same column count)
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);

int rank(const SparseMatrix& m);
int rank_of_vectors(const std::vector<SparseVector>& vecs);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

// Same rank, computed by eliminating along the transpose with a plain
// lowest-index pivot rule. Used as an independent second opinion.
int rank_transposed(const SparseMatrix& m);

std::optional<std::vector<Scalar>> solve_in_span(const std::vector<SparseVector>& basis,
                                                 const SparseVector& target);

// Incremental echelon form over Q. Rows are normalized so that the pivot
// entry is 1. Each row carries a tag vector recording it as a combination
// of the caller's labels.
class Echelon {
public:
    enum class Pivot { First, Last };

    explicit Echelon(int dim, Pivot rule = Pivot::First);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const SparseVector& row(int k) const { return rows_[k]; }
    const SparseVector& row_tag(int k) const { return tags_[k]; }

    // Returns true when v was independent of the stored rows.
    bool insert(const SparseVector& v, const SparseVector& tag = {});

    // v = residual + sum c_k row_k; returns residual, writes the tag
    // combination sum c_k tag_k when requested.
    SparseVector reduce(const SparseVector& v, SparseVector* tag_out = nullptr) const;

private:
    int dim_;
    Pivot rule_;
    std::vector<SparseVector> rows_;
    std::vector<SparseVector> tags_;
    std::vector<int> pivots_;
    std::vector<int> pivot_row_;
};

// sub/quot with deterministic lifts. Coordinates are split over the
// connected components of the union of supports.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(int ambient_dim, const std::vector<SparseVector>& sub,
                const std::vector<SparseVector>& quot);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(lifts_.size()); }
    const std::vector<SparseVector>& lifts() const { return lifts_; }

    // coordinates of the class of v; throws if v is not in sub
    SparseVector reduce(const SparseVector& v) const;
    bool in_sub(const SparseVector& v) const;

private:
    struct Block {
        std::vector<int> coords;  // global coordinates of this block
        Echelon quot{0};
        Echelon full{0};          // quot rows first, then lift rows (tagged)
        std::vector<int> lift_ids;
    };
    SparseVector localize(const SparseVector& v, const Block& b) const;

    int ambient_ = 0;
    std::vector<SparseVector> lifts_;
    std::vector<Block> blocks_;
    std::vector<int> block_of_;
    std::vector<int> local_of_;
};

Subquotient subquotient_basis(int ambient_dim, const std::vector<SparseVector>& sub,
                              const std::vector<SparseVector>& quot);

// rank + nullity == cols, every kernel vector is annihilated
bool check_rank_nullity(const SparseMatrix& m);

}  // namespace ymh
