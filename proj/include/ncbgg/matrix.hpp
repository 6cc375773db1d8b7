#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncbgg/errors.hpp"
#include "ncbgg/field.hpp"

namespace ncbgg {

/// Dense row-major matrix over a field F.  Vectors are rows; a linear map
/// k^m -> k^n is an m x n matrix acting by v |-> v * M.
template <class F>
struct Mat {
    using Elt = typename F::Elt;

    F field;
    std::size_t rows = 0, cols = 0;
    std::vector<Elt> a;

    Mat() = default;
    Mat(F f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), a(r * c, f.zero()) {}

    Elt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Elt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(F f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!field.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!field.eq(a[i], o.a[i])) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(field, cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Elt> row(std::size_t i) const {
        return std::vector<Elt>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
    void set_row(std::size_t i, const std::vector<Elt>& v) {
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
    }
};

template <class F>
Mat<F> mat_mul(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw precondition_error("matrix product shape mismatch");
    const F& k = x.field;
    Mat<F> z(k, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            const auto& xv = x.at(i, l);
            if (k.is_zero(xv)) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) = k.add(z.at(i, j), k.mul(xv, y.at(l, j)));
        }
    return z;
}

template <class F>
Mat<F> mat_add(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw precondition_error("matrix sum shape mismatch");
    Mat<F> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.field.add(z.a[i], y.a[i]);
    return z;
}

template <class F>
Mat<F> mat_scale(const Mat<F>& x, const typename F::Elt& c) {
    Mat<F> z = x;
    for (auto& v : z.a) v = x.field.mul(v, c);
    return z;
}

/// Stack y below x.
template <class F>
Mat<F> vstack(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.cols && x.rows != 0 && y.rows != 0)
        throw precondition_error("vstack width mismatch");
    std::size_t c = x.rows ? x.cols : y.cols;
    Mat<F> z(x.field, x.rows + y.rows, c);
    std::copy(x.a.begin(), x.a.end(), z.a.begin());
    std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
    return z;
}

template <class F>
struct RrefResult {
    std::size_t rank = 0;
    Mat<F> rref;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.  Exact; pivot
/// columns come out strictly increasing.
template <class F>
RrefResult<F> rank_and_rref(const Mat<F>& m) {
    const F& k = m.field;
    RrefResult<F> res;
    res.rref = m;
    Mat<F>& r = res.rref;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
        std::size_t piv = lead;
        while (piv < r.rows && k.is_zero(r.at(piv, col))) ++piv;
        if (piv == r.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        const auto pinv = k.inv(r.at(lead, col));
        for (std::size_t j = col; j < r.cols; ++j) r.at(lead, j) = k.mul(r.at(lead, j), pinv);
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (i == lead || k.is_zero(r.at(i, col))) continue;
            const auto f = r.at(i, col);
            for (std::size_t j = col; j < r.cols; ++j)
                r.at(i, j) = k.sub(r.at(i, j), k.mul(f, r.at(lead, j)));
        }
        res.pivot_columns.push_back(col);
        ++lead;
    }
    res.rank = res.pivot_columns.size();
    // drop the all-zero tail rows so rref rows form a basis of the row span
    Mat<F> trimmed(k, res.rank, m.cols);
    std::copy(r.a.begin(), r.a.begin() + res.rank * m.cols, trimmed.a.begin());
    res.rref = std::move(trimmed);
    return res;
}

/// Basis of { v : m * v^T = 0 }, one vector per row.  Row count is
/// cols(m) - rank(m).
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    const F& k = m.field;
    auto rr = rank_and_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<F> ker(k, free_cols.size(), m.cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        ker.at(i, fc) = k.one();
        for (std::size_t r = 0; r < rr.rank; ++r)
            ker.at(i, rr.pivot_columns[r]) = k.neg(rr.rref.at(r, fc));
    }
    return ker;
}

template <class F>
struct QuotientData {
    Mat<F> section;    ///< q x n, rows are ambient representatives of the quotient basis
    Mat<F> projection; ///< q x n, ambient -> quotient as v |-> v * projection^T
    std::size_t dim() const { return section.rows; }
};

/// Quotient of k^ambient_dim by the row span of `subspace`.
/// projection * section^T = identity; kernel of projection = row span.
template <class F>
QuotientData<F> quotient_basis(const Mat<F>& subspace, std::size_t ambient_dim) {
    const F& k = subspace.field;
    if (subspace.rows > 0 && subspace.cols != ambient_dim)
        throw precondition_error("quotient_basis: subspace rows have length " +
                                 std::to_string(subspace.cols) + ", ambient dimension is " +
                                 std::to_string(ambient_dim));
    Mat<F> sub = subspace;
    sub.cols = ambient_dim;
    if (sub.rows == 0) sub.a.assign(0, k.zero());
    auto rr = rank_and_rref(sub);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QuotientData<F> q;
    q.section = Mat<F>(k, free_cols.size(), ambient_dim);
    q.projection = Mat<F>(k, free_cols.size(), ambient_dim);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        q.section.at(i, free_cols[i]) = k.one();
        // v mod span = sum over free columns of (v_j - sum_r v_{p_r} R[r][j]) e_j
        q.projection.at(i, free_cols[i]) = k.one();
        for (std::size_t r = 0; r < rr.rank; ++r)
            q.projection.at(i, rr.pivot_columns[r]) = k.neg(rr.rref.at(r, free_cols[i]));
    }
    return q;
}

/// Coordinates of the rows of v in the row basis `basis` (rows must be
/// linearly independent).  Throws if some row is not in the span.
template <class F>
Mat<F> coords_in_basis(const Mat<F>& basis, const Mat<F>& v) {
    const F& k = basis.field;
    if (v.rows == 0) return Mat<F>(k, 0, basis.rows);
    if (basis.cols != v.cols) throw precondition_error("coords_in_basis width mismatch");
    // eliminate [basis | I] to read coordinates off the transform
    Mat<F> aug(k, basis.rows, basis.cols + basis.rows);
    for (std::size_t i = 0; i < basis.rows; ++i) {
        for (std::size_t j = 0; j < basis.cols; ++j) aug.at(i, j) = basis.at(i, j);
        aug.at(i, basis.cols + i) = k.one();
    }
    auto rr = rank_and_rref(aug);
    // pivots of the left block; basis independent => one per row
    std::vector<std::size_t> piv;
    for (auto c : rr.pivot_columns)
        if (c < basis.cols) piv.push_back(c);
    if (piv.size() != basis.rows)
        throw precondition_error("coords_in_basis: basis rows are dependent");
    Mat<F> out(k, v.rows, basis.rows);
    for (std::size_t i = 0; i < v.rows; ++i) {
        std::vector<typename F::Elt> c(basis.rows, k.zero());
        for (std::size_t r = 0; r < basis.rows; ++r) c[r] = v.at(i, piv[r]);
        // candidate coords in rref basis; translate through the transform
        for (std::size_t j = 0; j < basis.rows; ++j) {
            auto s = k.zero();
            for (std::size_t r = 0; r < basis.rows; ++r)
                s = k.add(s, k.mul(c[r], rr.rref.at(r, basis.cols + j)));
            out.at(i, j) = s;
        }
        // verify membership
        for (std::size_t j = 0; j < basis.cols; ++j) {
            auto s = k.zero();
            for (std::size_t r = 0; r < basis.rows; ++r)
                s = k.add(s, k.mul(out.at(i, r), basis.at(r, j)));
            if (!k.eq(s, v.at(i, j)))
                throw precondition_error("coords_in_basis: vector not in span");
        }
    }
    return out;
}

/// Solve A x = b (x a column vector); returns nothing when inconsistent.
/// Free variables are set to zero.
template <class F>
std::optional<std::vector<typename F::Elt>> solve_linear(const Mat<F>& a,
                                                         const std::vector<typename F::Elt>& b) {
    const F& k = a.field;
    Mat<F> aug(k, a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto rr = rank_and_rref(aug);
    std::vector<typename F::Elt> x(a.cols, k.zero());
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivot_columns[r] == a.cols) return std::nullopt; // pivot in the rhs
        x[rr.pivot_columns[r]] = rr.rref.at(r, a.cols);
    }
    return x;
}

template <class F>
bool row_span_equal(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.cols) return false;
    auto rx = rank_and_rref(x);
    auto ry = rank_and_rref(y);
    return rx.rref == ry.rref;
}

/// Intersection of the row spans, one basis vector per row.
template <class F>
Mat<F> row_span_intersection(const Mat<F>& x, const Mat<F>& y) {
    const F& k = x.field;
    if (x.rows == 0 || y.rows == 0) return Mat<F>(k, 0, x.cols);
    // null space of [x^T ; y^T]-style Zassenhaus: rows (u,v) with u*x + v*y = 0
    Mat<F> stacked = vstack(x, y);
    Mat<F> ker = kernel_basis(stacked.transpose());
    Mat<F> out(k, ker.rows, x.cols);
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            auto s = k.zero();
            for (std::size_t r = 0; r < x.rows; ++r)
                s = k.add(s, k.mul(ker.at(i, r), x.at(r, j)));
            out.at(i, j) = s;
        }
    auto rr = rank_and_rref(out);
    return rr.rref;
}

} // namespace ncbgg
