#include "qb2/matrix.hpp"

#include <algorithm>

namespace qb2 {

CycMatrix CycMatrix::identity(long n, long level) {
    CycMatrix m(n, n, level);
    for (long i = 0; i < n; ++i) m.at(i, i) = Cyc::one(level);
    return m;
}

bool CycMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Cyc& x) { return x.is_zero(); });
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    for (size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
    for (size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    return *this;
}

CycMatrix& CycMatrix::operator*=(const Cyc& s) {
    if (s.is_zero()) {
        for (auto& x : data_) x = Cyc::zero(level_);
        return *this;
    }
    for (auto& x : data_)
        if (!x.is_zero()) x *= s;
    return *this;
}

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch in matmul");
    CycMatrix c(a.rows(), b.cols(), a.level());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            const Cyc& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (long k = 0; k < b.cols(); ++k) {
                const Cyc& bjk = b.at(j, k);
                if (bjk.is_zero()) continue;
                c.at(i, k) += aij * bjk;
            }
        }
    }
    return c;
}

CycMatrix matpow(const CycMatrix& a, long e) {
    if (a.rows() != a.cols()) throw Error("matpow on non-square matrix");
    CycMatrix acc = CycMatrix::identity(a.rows(), a.level());
    CycMatrix base = a;
    while (e > 0) {
        if (e & 1) acc = matmul(acc, base);
        e >>= 1;
        if (e) base = matmul(base, base);
    }
    return acc;
}

std::vector<long> rref_in_place(CycMatrix& m) {
    std::vector<long> pivots;
    long r = 0;
    for (long c = 0; c < m.cols() && r < m.rows(); ++c) {
        long sel = -1;
        for (long i = r; i < m.rows(); ++i) {
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        // Normalize the pivot row and remember its support to keep the
        // elimination sparse.
        Cyc scale = m.at(r, c).inv();
        std::vector<long> support;
        for (long j = c; j < m.cols(); ++j) {
            if (m.at(r, j).is_zero()) continue;
            m.at(r, j) *= scale;
            support.push_back(j);
        }
        for (long i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyc f = m.at(i, c);
            for (long j : support) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

long rank(CycMatrix m) { return static_cast<long>(rref_in_place(m).size()); }

std::vector<std::vector<Cyc>> nullspace(const CycMatrix& m) {
    CycMatrix red = m;
    std::vector<long> pivots = rref_in_place(red);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<Cyc>> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Cyc> v(static_cast<size_t>(m.cols()), Cyc::zero(m.level()));
        v[static_cast<size_t>(f)] = Cyc::one(m.level());
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -red.at(static_cast<long>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<CycMatrix> inverse(const CycMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const long n = m.rows();
    CycMatrix aug(n, 2 * n, m.level());
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Cyc::one(m.level());
    }
    std::vector<long> pivots = rref_in_place(aug);
    if (static_cast<long>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] != n - 1)
        return std::nullopt;
    CycMatrix inv(n, n, m.level());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

bool EchelonSpan::insert(std::vector<Cyc> v) {
    if (static_cast<long>(v.size()) != width_) throw Error("span vector width mismatch");
    for (const auto& [pc, row] : rows_) {
        const Cyc& coef = v[static_cast<size_t>(pc)];
        if (coef.is_zero()) continue;
        Cyc f = coef; // row has unit pivot
        for (long j = pc; j < width_; ++j)
            if (!row[static_cast<size_t>(j)].is_zero()) v[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    }
    long pivot = -1;
    for (long j = 0; j < width_; ++j) {
        if (!v[static_cast<size_t>(j)].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    Cyc scale = v[static_cast<size_t>(pivot)].inv();
    for (long j = pivot; j < width_; ++j)
        if (!v[static_cast<size_t>(j)].is_zero()) v[static_cast<size_t>(j)] *= scale;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const auto& rw, long p) { return rw.first < p; });
    rows_.insert(pos, {pivot, std::move(v)});
    return true;
}

} // namespace qb2
