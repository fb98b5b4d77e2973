#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qb2/cyclotomic.hpp"

namespace qb2 {

// Dense matrix over Q(zeta_L), row-major. Generator matrices in this project
// are extremely sparse (one or two entries per row), so the multiplication
// kernel skips zero entries instead of using a blocked dense product.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), level_(1) {}
    CycMatrix(long rows, long cols, long level)
        : rows_(rows), cols_(cols), level_(level),
          data_(static_cast<size_t>(rows * cols), Cyc::zero(level)) {}

    static CycMatrix identity(long n, long level);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long level() const { return level_; }

    Cyc& at(long i, long j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const Cyc& at(long i, long j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

    const std::vector<Cyc>& data() const { return data_; }

    bool is_zero() const;
    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && level_ == o.level_ && data_ == o.data_;
    }
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix& operator+=(const CycMatrix& o);
    CycMatrix& operator-=(const CycMatrix& o);
    CycMatrix& operator*=(const Cyc& s);

    friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
    friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
    friend CycMatrix operator*(const Cyc& s, CycMatrix m) { return m *= s; }

    // Row-major flattening, used to view a matrix as a vector in C^(d*d).
    std::vector<Cyc> vectorized() const { return data_; }

private:
    long rows_, cols_, level_;
    std::vector<Cyc> data_;
};

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b);
CycMatrix matpow(const CycMatrix& a, long e);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<long> rref_in_place(CycMatrix& m);

long rank(CycMatrix m);

// Basis of { x : m x = 0 } (column vectors returned as flat vectors of
// length m.cols()). Deterministic: one basis vector per free column, in
// column order, with unit entry at the free column.
std::vector<std::vector<Cyc>> nullspace(const CycMatrix& m);

// Exact inverse; empty when singular.
std::optional<CycMatrix> inverse(const CycMatrix& m);

// Incrementally maintained row space in reduced echelon form, for span
// closure computations. Rows are normalized to a unit leading entry.
class EchelonSpan {
public:
    EchelonSpan(long width, long level) : width_(width), level_(level) {}

    // Reduces v against the current basis; if a nonzero remainder is left it
    // joins the basis and insert returns true.
    bool insert(std::vector<Cyc> v);

    long dim() const { return static_cast<long>(rows_.size()); }
    long width() const { return width_; }

private:
    long width_, level_;
    // (pivot column, row) sorted by pivot column.
    std::vector<std::pair<long, std::vector<Cyc>>> rows_;
};

} // namespace qb2
