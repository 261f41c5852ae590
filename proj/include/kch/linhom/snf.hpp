#pragma once

#include "kch/errors.hpp"

#include <algorithm>
#include <vector>

namespace kch {

/// Dense row-major matrix over a target ring context R.
template <class R> struct DenseMatrix {
    using Value = typename R::Value;
    int rows = 0, cols = 0;
    std::vector<Value> data;

    DenseMatrix() = default;
    DenseMatrix(const R &ring, int r, int c)
        : rows(r), cols(c), data(static_cast<size_t>(r) * c, ring.zero()) {}

    static DenseMatrix identity(const R &ring, int n) {
        DenseMatrix m(ring, n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = ring.one();
        return m;
    }

    Value &operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Value &operator()(int i, int j) const {
        return data[static_cast<size_t>(i) * cols + j];
    }
    bool operator==(const DenseMatrix &) const = default;
};

template <class R>
DenseMatrix<R> mat_product(const R &ring, const DenseMatrix<R> &a, const DenseMatrix<R> &b) {
    if (a.cols != b.rows)
        throw DomainError("matrix dimension mismatch in product");
    DenseMatrix<R> out(ring, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (ring.is_zero(a(i, k)))
                continue;
            for (int j = 0; j < b.cols; ++j)
                out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return out;
}

template <class R> bool is_zero_matrix(const R &ring, const DenseMatrix<R> &m) {
    return std::all_of(m.data.begin(), m.data.end(),
                       [&](const auto &x) { return ring.is_zero(x); });
}

/// left * m * right = diag(factors, 0, ...), with left and right invertible
/// and each factor dividing the next.
template <class R> struct SmithForm {
    std::vector<typename R::Value> factors;
    int rank = 0;
    DenseMatrix<R> diagonal, left, right;
};

template <class R> SmithForm<R> smith_normal_form(const R &ring, const DenseMatrix<R> &m) {
    using Value = typename R::Value;
    DenseMatrix<R> a = m;
    DenseMatrix<R> L = DenseMatrix<R>::identity(ring, m.rows);
    DenseMatrix<R> Rt = DenseMatrix<R>::identity(ring, m.cols);

    auto swap_rows = [&](int i, int j) {
        if (i == j)
            return;
        for (int c = 0; c < a.cols; ++c)
            std::swap(a(i, c), a(j, c));
        for (int c = 0; c < L.cols; ++c)
            std::swap(L(i, c), L(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j)
            return;
        for (int r = 0; r < a.rows; ++r)
            std::swap(a(r, i), a(r, j));
        for (int r = 0; r < Rt.rows; ++r)
            std::swap(Rt(r, i), Rt(r, j));
    };
    // row_i -= q row_j
    auto row_op = [&](int i, int j, const Value &q) {
        for (int c = 0; c < a.cols; ++c)
            a(i, c) = ring.sub(a(i, c), ring.mul(q, a(j, c)));
        for (int c = 0; c < L.cols; ++c)
            L(i, c) = ring.sub(L(i, c), ring.mul(q, L(j, c)));
    };
    auto col_op = [&](int i, int j, const Value &q) {
        for (int r = 0; r < a.rows; ++r)
            a(r, i) = ring.sub(a(r, i), ring.mul(q, a(r, j)));
        for (int r = 0; r < Rt.rows; ++r)
            Rt(r, i) = ring.sub(Rt(r, i), ring.mul(q, Rt(r, j)));
    };

    SmithForm<R> out;
    int t = 0;
    for (; t < std::min(a.rows, a.cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        auto place_min = [&](int r0, int c0) {
            int bi = -1, bj = -1;
            for (int i = r0; i < a.rows; ++i)
                for (int j = c0; j < a.cols; ++j)
                    if (!ring.is_zero(a(i, j)) &&
                        (bi < 0 || ring.size(a(i, j)) < ring.size(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0)
                return false;
            swap_rows(t, bi);
            swap_cols(t, bj);
            return true;
        };
        if (!place_min(t, t))
            break;
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < a.rows; ++i) {
                if (ring.is_zero(a(i, t)))
                    continue;
                Value q, r;
                ring.divmod(a(i, t), a(t, t), q, r);
                row_op(i, t, q);
                if (!ring.is_zero(a(i, t)))
                    clean = false;
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (ring.is_zero(a(t, j)))
                    continue;
                Value q, r;
                ring.divmod(a(t, j), a(t, t), q, r);
                col_op(j, t, q);
                if (!ring.is_zero(a(t, j)))
                    clean = false;
            }
            if (!clean) {
                // A smaller remainder sits in row or column t; move it to the pivot.
                int bi = t, bj = t;
                for (int i = t + 1; i < a.rows; ++i)
                    if (!ring.is_zero(a(i, t)) && ring.size(a(i, t)) < ring.size(a(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (int j = t + 1; j < a.cols; ++j)
                    if (!ring.is_zero(a(t, j)) && ring.size(a(t, j)) < ring.size(a(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < a.rows && bad < 0; ++i)
                for (int j = t + 1; j < a.cols; ++j) {
                    Value q, r;
                    ring.divmod(a(i, j), a(t, t), q, r);
                    if (!ring.is_zero(r)) {
                        bad = i;
                        break;
                    }
                }
            if (bad < 0)
                break;
            // row_t += row_bad
            row_op(t, bad, ring.neg(ring.one()));
        }
        Value u;
        Value normal = ring.unit_normal(a(t, t), u);
        if (!(normal == a(t, t))) {
            Value inv = ring.inverse(u);
            for (int c = 0; c < a.cols; ++c)
                a(t, c) = ring.mul(inv, a(t, c));
            for (int c = 0; c < L.cols; ++c)
                L(t, c) = ring.mul(inv, L(t, c));
        }
        out.factors.push_back(a(t, t));
    }
    out.rank = t;
    out.diagonal = std::move(a);
    out.left = std::move(L);
    out.right = std::move(Rt);
    return out;
}

/// Checks left * m * right == diagonal and the divisibility chain.
template <class R> bool verify_smith_form(const R &ring, const DenseMatrix<R> &m,
                                          const SmithForm<R> &s) {
    if (!(mat_product(ring, mat_product(ring, s.left, m), s.right) == s.diagonal))
        return false;
    for (int i = 0; i < s.diagonal.rows; ++i)
        for (int j = 0; j < s.diagonal.cols; ++j) {
            bool on = i == j && i < s.rank;
            if (on != !ring.is_zero(s.diagonal(i, j)))
                return false;
        }
    for (size_t k = 0; k + 1 < s.factors.size(); ++k) {
        typename R::Value q, r;
        ring.divmod(s.factors[k + 1], s.factors[k], q, r);
        if (!ring.is_zero(r))
            return false;
    }
    return true;
}

} // namespace kch
