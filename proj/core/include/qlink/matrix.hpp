#pragma once

#include "qlink/errors.hpp"

#include <map>
#include <utility>

namespace qlink {

/// Sparse matrix over an exact scalar ring.  Zero entries are never
/// stored; `zero` is the ring's additive identity (scalar types carry
/// their ring context, so a sample value is required).
template <typename S>
class SparseMatrix {
public:
    using Entries = std::map<std::pair<long, long>, S>;

    SparseMatrix() = default;
    SparseMatrix(long rows, long cols, S zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)) {}

    static SparseMatrix identity(long n, const S& zero, const S& one) {
        SparseMatrix m(n, n, zero);
        for (long i = 0; i < n; ++i) m.set(i, i, one);
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const S& zero() const { return zero_; }
    const Entries& entries() const { return entries_; }

    void set(long r, long c, const S& v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw ValidationError("matrix index out of range");
        if (v == zero_)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add(long r, long c, const S& v) {
        auto it = entries_.find({r, c});
        if (it == entries_.end())
            set(r, c, v);
        else {
            S sum = it->second + v;
            if (sum == zero_)
                entries_.erase(it);
            else
                it->second = std::move(sum);
        }
    }

    const S& at(long r, long c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? zero_ : it->second;
    }

    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    SparseMatrix operator+(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError("matrix sum dimension mismatch");
        SparseMatrix out = *this;
        for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, v);
        return out;
    }

    SparseMatrix operator*(const SparseMatrix& o) const {
        if (cols_ != o.rows_)
            throw ValidationError("matrix product dimension mismatch");
        SparseMatrix out(rows_, o.cols_, zero_);
        // group the right factor by row for the sparse pass
        std::map<long, std::map<long, const S*>> by_row;
        for (const auto& [rc, v] : o.entries_) by_row[rc.first][rc.second] = &v;
        for (const auto& [rc, v] : entries_) {
            auto it = by_row.find(rc.second);
            if (it == by_row.end()) continue;
            for (const auto& [c2, v2] : it->second) out.add(rc.first, c2, v * (*v2));
        }
        return out;
    }

    SparseMatrix kron(const SparseMatrix& o) const {
        SparseMatrix out(rows_ * o.rows_, cols_ * o.cols_, zero_);
        for (const auto& [rc, v] : entries_)
            for (const auto& [rc2, v2] : o.entries_)
                out.set(rc.first * o.rows_ + rc2.first, rc.second * o.cols_ + rc2.second, v * v2);
        return out;
    }

    SparseMatrix transposed() const {
        SparseMatrix out(cols_, rows_, zero_);
        for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
        return out;
    }

    SparseMatrix scaled(const S& c) const {
        SparseMatrix out(rows_, cols_, zero_);
        for (const auto& [rc, v] : entries_) out.set(rc.first, rc.second, v * c);
        return out;
    }

    template <typename T, typename F>
    SparseMatrix<T> mapped(F&& f, const T& zero2) const {
        SparseMatrix<T> out(rows_, cols_, zero2);
        for (const auto& [rc, v] : entries_) out.set(rc.first, rc.second, f(v));
        return out;
    }

    /// The unique entry of a 1x1 matrix.
    S scalar() const {
        if (rows_ != 1 || cols_ != 1)
            throw ValidationError("matrix is not 1x1");
        return at(0, 0);
    }

private:
    long rows_ = 0;
    long cols_ = 0;
    S zero_{};
    Entries entries_;
};

} // namespace qlink
