#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ncbgg/presentation.hpp"

namespace ncbgg {

/// Degreewise realization of a quadratic algebra up to degree N.
///
/// Components are built iteratively: A_{n+1} = (V (x) A_n) / im(R (x) A_{n-1}),
/// which agrees with the quotient of V^(x)(n+1) by all position shifts of R but
/// only ever eliminates matrices of size (dim R * dim A_{n-1}) x (g * dim A_n).
/// Each step keeps its section/projection pair, and multiplication tensors
/// A_m (x) A_n -> A_{m+n} are materialized for every m + n <= N.
template <class F>
class TruncAlgebra {
public:
    using Elt = typename F::Elt;

    TruncAlgebra(const Presentation<F>& pres, int N) : pres_(pres), N_(N) {
        if (N < 0) throw precondition_error("truncation degree must be >= 0");
        const F& k = pres.field;
        std::size_t g = pres.gen_count();
        dims_.push_back(1);
        if (N >= 1) {
            // degree 1 is V itself
            steps_.push_back(quotient_basis(Mat<F>(k, 0, g), g));
            dims_.push_back(steps_.back().dim());
        }
        for (int n = 1; n < N; ++n) {
            std::size_t dn = dims_[n], dprev = dims_[n - 1];
            const Mat<F>& mul1 = mult(1, n - 1); // V (x) A_{n-1} -> A_n
            Mat<F> span(k, pres.relations.rows * dprev, g * dn);
            std::size_t row = 0;
            for (std::size_t r = 0; r < pres.relations.rows; ++r) {
                for (std::size_t t = 0; t < dprev; ++t, ++row) {
                    for (std::size_t a = 0; a < g; ++a)
                        for (std::size_t b = 0; b < g; ++b) {
                            const Elt& c = pres.relations.at(r, a * g + b);
                            if (k.is_zero(c)) continue;
                            // e_a (x) (e_b * t) placed in the V (x) A_n coordinates
                            for (std::size_t u = 0; u < dn; ++u) {
                                const Elt& m = mul1.at(b * dprev + t, u);
                                if (k.is_zero(m)) continue;
                                span.at(row, a * dn + u) = k.add(span.at(row, a * dn + u), k.mul(c, m));
                            }
                        }
                }
            }
            steps_.push_back(quotient_basis(span, g * dn));
            dims_.push_back(steps_.back().dim());
        }
        // materialize all multiplication tensors inside the window
        for (int total = 0; total <= N_; ++total)
            for (int m = 0; m <= total; ++m) mult(m, total - m);
    }

    const Presentation<F>& presentation() const { return pres_; }
    const F& field() const { return pres_.field; }
    int trunc_degree() const { return N_; }
    std::size_t gen_count() const { return pres_.gen_count(); }

    /// dim A_n; zero outside [0, N] (positive degrees beyond the window are
    /// not knowable and must be guarded by the caller via trunc_degree()).
    std::size_t dim(int n) const {
        if (n < 0 || n > N_) return 0;
        return dims_[static_cast<std::size_t>(n)];
    }

    std::vector<std::size_t> hilbert_function() const {
        return std::vector<std::size_t>(dims_.begin(), dims_.end());
    }

    /// True once some component vanishes inside the window; degree-1
    /// generation then forces all later components to vanish too.
    bool finite_within_window() const {
        for (auto d : dims_)
            if (d == 0) return true;
        return false;
    }

    /// Largest degree with a nonzero component (only meaningful when
    /// finite_within_window()).
    int top_degree() const {
        int t = 0;
        for (int n = 0; n <= N_; ++n)
            if (dim(n) > 0) t = n;
        return t;
    }

    /// Multiplication tensor A_m (x) A_n -> A_{m+n}, shape
    /// (dim A_m * dim A_n) x dim A_{m+n}; row index a * dim A_n + b.
    const Mat<F>& mult(int m, int n) const {
        if (m < 0 || n < 0 || m + n > N_)
            throw window_error("multiplication tensor (" + std::to_string(m) + "," +
                               std::to_string(n) + ") outside truncation window [0," +
                               std::to_string(N_) + "]");
        auto key = std::make_pair(m, n);
        auto it = mult_.find(key);
        if (it != mult_.end()) return it->second;
        const F& k = field();
        Mat<F> t;
        if (m == 0) {
            t = Mat<F>::identity(k, dim(n));
        } else if (n == 0) {
            t = Mat<F>::identity(k, dim(m));
        } else if (m == 1) {
            t = steps_[static_cast<std::size_t>(n)].projection.transpose();
        } else {
            // a*b = sum over the section of a in V (x) A_{m-1}
            const Mat<F>& sec = steps_[static_cast<std::size_t>(m - 1)].section;
            const Mat<F>& inner = mult(m - 1, n);
            const Mat<F>& outer = mult(1, m + n - 1);
            std::size_t g = gen_count(), dm = dim(m), dn = dim(n), dmn1 = dim(m - 1);
            t = Mat<F>(k, dm * dn, dim(m + n));
            for (std::size_t a = 0; a < dm; ++a)
                for (std::size_t al = 0; al < g; ++al)
                    for (std::size_t u = 0; u < dmn1; ++u) {
                        const Elt& s = sec.at(a, al * dmn1 + u);
                        if (k.is_zero(s)) continue;
                        for (std::size_t b = 0; b < dn; ++b) {
                            // (e_al (x) u) * b = e_al * (u*b)
                            for (std::size_t w = 0; w < dim(m - 1 + n); ++w) {
                                const Elt& iw = inner.at(u * dn + b, w);
                                if (k.is_zero(iw)) continue;
                                const Elt sw = k.mul(s, iw);
                                for (std::size_t out = 0; out < dim(m + n); ++out) {
                                    const Elt& ow = outer.at(al * dim(m + n - 1) + w, out);
                                    if (k.is_zero(ow)) continue;
                                    t.at(a * dn + b, out) = k.add(t.at(a * dn + b, out), k.mul(sw, ow));
                                }
                            }
                        }
                    }
        }
        return mult_.emplace(key, std::move(t)).first->second;
    }

    /// Matrix of right multiplication by h in A_m, as a map A_n -> A_{n+m}.
    Mat<F> right_mult(const std::vector<Elt>& h, int m, int n) const {
        const F& k = field();
        const Mat<F>& t = mult(n, m);
        Mat<F> out(k, dim(n), dim(n + m));
        for (std::size_t a = 0; a < dim(n); ++a)
            for (std::size_t b = 0; b < dim(m); ++b) {
                if (k.is_zero(h[b])) continue;
                for (std::size_t w = 0; w < dim(n + m); ++w)
                    out.at(a, w) = k.add(out.at(a, w), k.mul(h[b], t.at(a * dim(m) + b, w)));
            }
        return out;
    }

    /// Matrix of left multiplication by h in A_m, as a map A_n -> A_{n+m}.
    Mat<F> left_mult(const std::vector<Elt>& h, int m, int n) const {
        const F& k = field();
        const Mat<F>& t = mult(m, n);
        Mat<F> out(k, dim(n), dim(n + m));
        for (std::size_t b = 0; b < dim(n); ++b)
            for (std::size_t a = 0; a < dim(m); ++a) {
                if (k.is_zero(h[a])) continue;
                for (std::size_t w = 0; w < dim(n + m); ++w)
                    out.at(b, w) = k.add(out.at(b, w), k.mul(h[a], t.at(a * dim(n) + b, w)));
            }
        return out;
    }

    /// Section of the quotient V (x) A_n -> A_{n+1}: rows are representatives
    /// of the A_{n+1} basis inside V (x) A_n (coordinates a * dim A_n + t).
    const Mat<F>& step_section(int n) const {
        if (n < 0 || n >= N_) throw window_error("step section outside window");
        return steps_[static_cast<std::size_t>(n)].section;
    }
    const Mat<F>& step_projection(int n) const {
        if (n < 0 || n >= N_) throw window_error("step projection outside window");
        return steps_[static_cast<std::size_t>(n)].projection;
    }

    bool same_algebra(const TruncAlgebra& o) const {
        return pres_ == o.pres_;
    }

private:
    Presentation<F> pres_;
    int N_;
    std::vector<std::size_t> dims_;
    std::vector<QuotientData<F>> steps_; // steps_[n]: V (x) A_n -> A_{n+1}
    mutable std::map<std::pair<int, int>, Mat<F>> mult_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const TruncAlgebra<F>>;

template <class F>
AlgebraPtr<F> truncate_algebra(const Presentation<F>& pres, int N) {
    return std::make_shared<const TruncAlgebra<F>>(pres, N);
}

/// Check associativity of the materialized tensors on all basis triples with
/// m + n + l <= N.  Construction makes this automatic; tests call it anyway.
template <class F>
bool multiplication_associative(const TruncAlgebra<F>& alg) {
    const F& k = alg.field();
    int N = alg.trunc_degree();
    for (int m = 1; m < N; ++m)
        for (int n = 1; m + n < N; ++n)
            for (int l = 1; m + n + l <= N; ++l) {
                const Mat<F>& mn = alg.mult(m, n);
                const Mat<F>& mn_l = alg.mult(m + n, l);
                const Mat<F>& nl = alg.mult(n, l);
                const Mat<F>& m_nl = alg.mult(m, n + l);
                std::size_t dm = alg.dim(m), dn = alg.dim(n), dl = alg.dim(l);
                std::size_t dout = alg.dim(m + n + l);
                for (std::size_t a = 0; a < dm; ++a)
                    for (std::size_t b = 0; b < dn; ++b)
                        for (std::size_t c = 0; c < dl; ++c)
                            for (std::size_t w = 0; w < dout; ++w) {
                                auto lhs = k.zero();
                                for (std::size_t u = 0; u < alg.dim(m + n); ++u)
                                    lhs = k.add(lhs, k.mul(mn.at(a * dn + b, u),
                                                           mn_l.at(u * dl + c, w)));
                                auto rhs = k.zero();
                                for (std::size_t v = 0; v < alg.dim(n + l); ++v)
                                    rhs = k.add(rhs, k.mul(nl.at(b * dl + c, v),
                                                           m_nl.at(a * alg.dim(n + l) + v, w)));
                                if (!k.eq(lhs, rhs)) return false;
                            }
            }
    return true;
}

} // namespace ncbgg
