#pragma once

#include "qlink/laurent.hpp"
#include "qlink/matrix.hpp"
#include "qlink/tangle.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qlink {

/// Supplies generator matrices for word evaluation.  `dim` gives the
/// vector-space dimension of a strand from its metadata; `matrix` the
/// image of a generator given the strand metadata entering and leaving
/// it.  Providers must be pure: evaluation may call them repeatedly.
template <typename S>
struct GeneratorProvider {
    S zero;
    S one;
    std::function<long(const StrandInfo&)> dim;
    std::function<SparseMatrix<S>(const Gen&, const std::vector<StrandInfo>&,
                                  const std::vector<StrandInfo>&)>
        matrix;
};

namespace detail {

/// State vector that switches to a sparse map past a size threshold.
template <typename S>
struct StateVec {
    long size = 1;
    bool dense = true;
    std::vector<S> d;
    std::map<long, S> sp;

    static StateVec unit(long size, long index, const S& zero, const S& one, long threshold) {
        StateVec v;
        v.size = size;
        v.dense = size <= threshold;
        if (v.dense) {
            v.d.assign(size, zero);
            v.d[index] = one;
        } else {
            v.sp[index] = one;
        }
        return v;
    }

    template <typename F>
    void for_each(F&& f) const {
        if (dense) {
            for (long i = 0; i < size; ++i) f(i, d[i]);
        } else {
            for (const auto& [i, v] : sp) f(i, v);
        }
    }

    void add(long i, const S& v, const S& zero) {
        if (dense) {
            d[i] = d[i] + v;
        } else {
            auto it = sp.find(i);
            if (it == sp.end()) {
                if (!(v == zero)) sp[i] = v;
            } else {
                S sum = it->second + v;
                if (sum == zero)
                    sp.erase(it);
                else
                    it->second = std::move(sum);
            }
        }
    }
};

} // namespace detail

/// Evaluates a tangle word as the composite of slice maps, propagating a
/// state vector through Kronecker factors one generator at a time.
/// Returns the full matrix of the word (1x1 for closed words).  The
/// state stays dense while its length is at most `dense_threshold`.
template <typename S>
SparseMatrix<S> eval_word(const TangleWord& w, const GeneratorProvider<S>& p,
                          long dense_threshold = 1 << 14) {
    w.validate();
    long in_dim = 1;
    for (const auto& s : w.levels.front()) in_dim *= p.dim(s);
    long out_dim = 1;
    for (const auto& s : w.levels.back()) out_dim *= p.dim(s);

    SparseMatrix<S> result(out_dim, in_dim, p.zero);
    for (long col = 0; col < in_dim; ++col) {
        auto vec = detail::StateVec<S>::unit(in_dim, col, p.zero, p.one, dense_threshold);
        std::vector<long> dims;
        for (const auto& s : w.levels.front()) dims.push_back(p.dim(s));

        for (size_t k = 0; k < w.slices.size(); ++k) {
            size_t strand_pos = 0; // index into dims
            size_t in_pos = 0;     // index into levels[k]
            size_t out_pos = 0;    // index into levels[k+1]
            for (const auto& g : w.slices[k]) {
                const int ain = g.arity_in();
                const int aout = g.arity_out();
                if (g.kind == GenKind::Id) {
                    ++strand_pos;
                    ++in_pos;
                    ++out_pos;
                    continue;
                }
                std::vector<StrandInfo> gin(w.levels[k].begin() + in_pos,
                                            w.levels[k].begin() + in_pos + ain);
                std::vector<StrandInfo> gout(w.levels[k + 1].begin() + out_pos,
                                             w.levels[k + 1].begin() + out_pos + aout);
                SparseMatrix<S> m = p.matrix(g, gin, gout);

                long left = 1, mid_in = 1, right = 1;
                for (size_t i = 0; i < strand_pos; ++i) left *= dims[i];
                for (int i = 0; i < ain; ++i) mid_in *= dims[strand_pos + i];
                for (size_t i = strand_pos + ain; i < dims.size(); ++i) right *= dims[i];
                if (m.cols() != mid_in)
                    throw ValidationError("generator dimension mismatch at slice " +
                                          std::to_string(k));
                const long mid_out = m.rows();

                // group matrix entries by column
                std::map<long, std::vector<std::pair<long, const S*>>> by_col;
                for (const auto& [rc, v] : m.entries())
                    by_col[rc.second].emplace_back(rc.first, &v);

                detail::StateVec<S> next;
                next.size = left * mid_out * right;
                next.dense = next.size <= dense_threshold;
                if (next.dense) next.d.assign(next.size, p.zero);

                vec.for_each([&](long idx, const S& val) {
                    if (val == p.zero) return;
                    const long r = idx % right;
                    const long c = (idx / right) % mid_in;
                    const long l = idx / (right * mid_in);
                    auto it = by_col.find(c);
                    if (it == by_col.end()) return;
                    for (const auto& [row, mv] : it->second)
                        next.add((l * mid_out + row) * right + r, *mv * val, p.zero);
                });
                vec = std::move(next);

                std::vector<long> new_dims(dims.begin(), dims.begin() + strand_pos);
                for (const auto& s : gout) new_dims.push_back(p.dim(s));
                new_dims.insert(new_dims.end(), dims.begin() + strand_pos + ain, dims.end());
                dims = std::move(new_dims);
                strand_pos += aout;
                in_pos += ain;
                out_pos += aout;
            }
        }
        vec.for_each([&](long row, const S& v) {
            if (!(v == p.zero)) result.add(row, col, v);
        });
    }
    return result;
}

/// Generator matrices of the bracket functor on a two-dimensional
/// strand space, plus any coupon matrices by name.
struct BracketTable {
    SparseMatrix<Laurent> over;
    SparseMatrix<Laurent> under;
    SparseMatrix<Laurent> cup;
    SparseMatrix<Laurent> cap;
    std::map<std::string, SparseMatrix<Laurent>> coupons;
};

/// The standard table: crossings act on V tensor V by the A-weighted
/// smoothing sum, cups and caps by the rank-one pairing.
BracketTable bracket_table();

/// Matrix assigned to a single generator by the standard table.
SparseMatrix<Laurent> bracket_generator_matrix(GenKind g);

GeneratorProvider<Laurent> bracket_provider(const BracketTable& t);

struct RelationReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_passed() const;
    std::string summary() const;
};

/// Verifies the tangle presentation relations (framed Reidemeister
/// moves and the monoidal interchange laws) as exact matrix identities
/// for the given table.  Failures are reported, not thrown.
RelationReport check_relations(const BracketTable& t);

} // namespace qlink
