#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncbgg/algebra.hpp"

namespace ncbgg {

enum class TermKind { free_terms, cofree_terms };

/// A cohomologically indexed complex whose terms are finite sums of shifts
/// of the regular module B(s) (free) or of the cogenerator E(s) = B'(s)
/// (cofree).  A term B(s) has its generator in degree -s; E(s) has pieces
/// E(s)_n = (B_{-n-s})' and its (one-dimensional) socle in degree -s.
///
/// Differentials are matrices of homogeneous algebra entries; the entry from
/// a source term of shift s to a target term of shift t lives in B_{t-s}.
/// Free entries act by right multiplication; cofree entries act by
/// f |-> f(h . -), the transpose of left multiplication.  Both compose by
/// source-entry-first products, so d^2 = 0 is a statement about entry
/// products checked degreewise.
template <class F>
struct GradedComplex {
    using Elt = typename F::Elt;
    using Entry = std::vector<Elt>; // coefficients in the basis of B_deg; empty = zero

    AlgebraPtr<F> alg;
    TermKind kind = TermKind::free_terms;
    int pos_lo = 0;
    std::vector<std::vector<int>> shifts;            // per stored position
    std::vector<std::vector<std::vector<Entry>>> diffs; // diffs[p][src][dst]

    GradedComplex() = default;
    GradedComplex(AlgebraPtr<F> a, TermKind k) : alg(std::move(a)), kind(k) {}

    int pos_hi() const { return pos_lo + static_cast<int>(shifts.size()) - 1; }
    bool stored(int ell) const { return ell >= pos_lo && ell <= pos_hi(); }
    const std::vector<int>& shifts_at(int ell) const {
        static const std::vector<int> none;
        return stored(ell) ? shifts[static_cast<std::size_t>(ell - pos_lo)] : none;
    }

    std::size_t piece_dim(int shift, int n) const {
        return kind == TermKind::free_terms ? alg->dim(n + shift) : alg->dim(-n - shift);
    }

    std::size_t term_dim(int ell, int n) const {
        std::size_t t = 0;
        for (int s : shifts_at(ell)) t += piece_dim(s, n);
        return t;
    }

    /// Whether every piece at (ell, n) lies inside the algebra's window.
    bool computable(int ell, int n) const {
        if (kind == TermKind::cofree_terms) return true; // finite algebra assumed
        for (int s : shifts_at(ell))
            if (n + s > alg->trunc_degree()) return false;
        return true;
    }

    /// The differential at internal degree n as one block matrix.
    Mat<F> eval_diff(int ell, int n) const {
        const F& k = alg->field();
        if (!computable(ell, n) || !computable(ell + 1, n))
            throw window_error("complex evaluation at degree " + std::to_string(n) +
                               " exceeds the algebra truncation window");
        const auto& src = shifts_at(ell);
        const auto& dst = shifts_at(ell + 1);
        Mat<F> out(k, term_dim(ell, n), term_dim(ell + 1, n));
        if (!stored(ell) || !stored(ell + 1)) return out;
        const auto& d = diffs[static_cast<std::size_t>(ell - pos_lo)];
        std::vector<std::size_t> roff(src.size() + 1, 0), coff(dst.size() + 1, 0);
        for (std::size_t a = 0; a < src.size(); ++a) roff[a + 1] = roff[a] + piece_dim(src[a], n);
        for (std::size_t b = 0; b < dst.size(); ++b) coff[b + 1] = coff[b] + piece_dim(dst[b], n);
        for (std::size_t a = 0; a < src.size(); ++a)
            for (std::size_t b = 0; b < dst.size(); ++b) {
                if (a >= d.size() || b >= d[a].size() || d[a][b].empty()) continue;
                int m = dst[b] - src[a];
                if (m < 0) continue;
                Mat<F> block;
                if (kind == TermKind::free_terms) {
                    if (piece_dim(src[a], n) == 0 || piece_dim(dst[b], n) == 0) continue;
                    block = alg->right_mult(d[a][b], m, n + src[a]);
                } else {
                    if (piece_dim(src[a], n) == 0 || piece_dim(dst[b], n) == 0) continue;
                    block = alg->left_mult(d[a][b], m, -n - dst[b]).transpose();
                }
                for (std::size_t r = 0; r < block.rows; ++r)
                    for (std::size_t c = 0; c < block.cols; ++c)
                        out.at(roff[a] + r, coff[b] + c) = block.at(r, c);
            }
        return out;
    }

    std::size_t cohomology_dim(int ell, int n) const {
        std::size_t dim = term_dim(ell, n);
        std::size_t rk_out = 0, rk_in = 0;
        if (stored(ell) && stored(ell + 1)) rk_out = rank_and_rref(eval_diff(ell, n)).rank;
        if (stored(ell - 1) && stored(ell)) rk_in = rank_and_rref(eval_diff(ell - 1, n)).rank;
        return dim - rk_out - rk_in;
    }

    bool d_squared_zero(int n_lo, int n_hi) const {
        for (int ell = pos_lo; ell + 2 <= pos_hi(); ++ell)
            for (int n = n_lo; n <= n_hi; ++n) {
                if (!computable(ell, n) || !computable(ell + 1, n) || !computable(ell + 2, n))
                    continue;
                if (!mat_mul(eval_diff(ell, n), eval_diff(ell + 1, n)).is_zero()) return false;
            }
        return true;
    }
};

/// Cohomology dims over a rectangle of positions and internal degrees.
template <class F>
std::map<std::pair<int, int>, std::size_t> cohomology_table(const GradedComplex<F>& c, int p_lo,
                                                            int p_hi, int n_lo, int n_hi) {
    std::map<std::pair<int, int>, std::size_t> t;
    for (int ell = p_lo; ell <= p_hi; ++ell)
        for (int n = n_lo; n <= n_hi; ++n) {
            std::size_t h = c.cohomology_dim(ell, n);
            if (h) t[{ell, n}] = h;
        }
    return t;
}

/// Suspension: (Sigma^i X)^ell = X^{i+ell}, differentials scaled by (-1)^i.
template <class F>
GradedComplex<F> suspend(const GradedComplex<F>& x, int i) {
    GradedComplex<F> out = x;
    out.pos_lo = x.pos_lo - i;
    if (i % 2 != 0) {
        const F& k = x.alg->field();
        for (auto& pos : out.diffs)
            for (auto& row : pos)
                for (auto& e : row)
                    for (auto& c : e) c = k.neg(c);
    }
    return out;
}

/// Twist: (X(m))^ell = X^ell(m); every term shift moves by m, entries are
/// untouched.
template <class F>
GradedComplex<F> twist(const GradedComplex<F>& x, int m) {
    GradedComplex<F> out = x;
    for (auto& sh : out.shifts)
        for (auto& s : sh) s += m;
    return out;
}

template <class F>
GradedComplex<F> direct_sum_complex(const GradedComplex<F>& x, const GradedComplex<F>& y) {
    if (x.kind != y.kind) throw precondition_error("cannot sum free with cofree");
    GradedComplex<F> out(x.alg, x.kind);
    out.pos_lo = std::min(x.pos_lo, y.pos_lo);
    int hi = std::max(x.pos_hi(), y.pos_hi());
    for (int ell = out.pos_lo; ell <= hi; ++ell) {
        std::vector<int> sh = x.shifts_at(ell);
        const auto& sy = y.shifts_at(ell);
        sh.insert(sh.end(), sy.begin(), sy.end());
        out.shifts.push_back(std::move(sh));
    }
    for (int ell = out.pos_lo; ell <= hi; ++ell) {
        std::size_t nx = x.shifts_at(ell).size(), ny = y.shifts_at(ell).size();
        std::size_t mx = x.shifts_at(ell + 1).size(), my = y.shifts_at(ell + 1).size();
        std::vector<std::vector<typename GradedComplex<F>::Entry>> d(
            nx + ny, std::vector<typename GradedComplex<F>::Entry>(mx + my));
        if (x.stored(ell) && x.stored(ell + 1)) {
            const auto& dx = x.diffs[static_cast<std::size_t>(ell - x.pos_lo)];
            for (std::size_t a = 0; a < dx.size(); ++a)
                for (std::size_t b = 0; b < dx[a].size(); ++b) d[a][b] = dx[a][b];
        }
        if (y.stored(ell) && y.stored(ell + 1)) {
            const auto& dy = y.diffs[static_cast<std::size_t>(ell - y.pos_lo)];
            for (std::size_t a = 0; a < dy.size(); ++a)
                for (std::size_t b = 0; b < dy[a].size(); ++b) d[nx + a][mx + b] = dy[a][b];
        }
        out.diffs.push_back(std::move(d));
    }
    return out;
}

/// One term B (free) or E (cofree) concentrated in a single position.
template <class F>
GradedComplex<F> single_term_complex(AlgebraPtr<F> alg, TermKind kind, int position, int shift) {
    GradedComplex<F> c(std::move(alg), kind);
    c.pos_lo = position;
    c.shifts.push_back({shift});
    c.diffs.emplace_back(1, std::vector<typename GradedComplex<F>::Entry>{});
    return c;
}

/// The Koszul complex of the dual pair (A, A!): position -i carries
/// A(-i)^{dim A!_i}, and the differential is right multiplication with
/// sum_a x_a (x) y_a, realized by the structure constants of right
/// multiplication in A!.  For Koszul A this is the minimal free resolution
/// of k within the window.
template <class F>
GradedComplex<F> koszul_complex(AlgebraPtr<F> algA, AlgebraPtr<F> algAd) {
    if (!(koszul_dual(algA->presentation()) == algAd->presentation()))
        throw precondition_error("second algebra is not the Koszul dual of the first");
    const F& k = algA->field();
    std::size_t g = algA->gen_count();
    int depth = algAd->trunc_degree();
    while (depth > 0 && algAd->dim(depth) == 0) --depth;
    GradedComplex<F> c(algA, TermKind::free_terms);
    c.pos_lo = -depth;
    for (int i = depth; i >= 0; --i) {
        std::vector<int> sh(algAd->dim(i), -i);
        c.shifts.push_back(std::move(sh));
    }
    for (int i = depth; i >= 0; --i) {
        std::size_t nsrc = algAd->dim(i), ndst = i > 0 ? algAd->dim(i - 1) : 0;
        std::vector<std::vector<typename GradedComplex<F>::Entry>> d(
            nsrc, std::vector<typename GradedComplex<F>::Entry>(ndst));
        if (i > 0) {
            const Mat<F>& t = algAd->mult(i - 1, 1); // (c, y_a) -> A!_i coefficients
            for (std::size_t b = 0; b < nsrc; ++b)
                for (std::size_t cc = 0; cc < ndst; ++cc) {
                    typename GradedComplex<F>::Entry h(g, k.zero());
                    bool nonzero = false;
                    for (std::size_t a = 0; a < g; ++a) {
                        h[a] = t.at(cc * g + a, b);
                        if (!k.is_zero(h[a])) nonzero = true;
                    }
                    if (nonzero) d[b][cc] = std::move(h);
                }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

struct KoszulnessReport {
    bool reciprocity_ok = true;
    std::optional<int> first_reciprocity_failure;
    int koszul_complex_exact_up_to = 0;
};

/// Numerical Koszulness probe: Hilbert reciprocity
/// sum dim A_n t^n * sum dim A!_n (-t)^n = 1 through degree N, plus the
/// largest internal degree up to which the Koszul complex is exact.  Evidence
/// within the window, not proof.
template <class F>
KoszulnessReport koszulness_probe(const Presentation<F>& pres, int N) {
    if (N < 2) throw precondition_error("koszulness probe needs N >= 2");
    KoszulnessReport rep;
    auto algA = truncate_algebra(pres, N);
    auto algAd = truncate_algebra(koszul_dual(pres), N);
    for (int n = 0; n <= N; ++n) {
        long long conv = 0;
        for (int i = 0; i <= n; ++i) {
            long long term = static_cast<long long>(algA->dim(i)) *
                             static_cast<long long>(algAd->dim(n - i));
            conv += (n - i) % 2 == 0 ? term : -term;
        }
        if (conv != (n == 0 ? 1 : 0)) {
            rep.reciprocity_ok = false;
            rep.first_reciprocity_failure = n;
            break;
        }
    }
    auto L = koszul_complex(algA, algAd);
    int good = -1;
    for (int n = 0; n <= N; ++n) {
        bool ok = true;
        for (int ell = L.pos_lo; ell <= 0 && ok; ++ell) {
            if (!L.computable(ell, n)) continue;
            std::size_t h = L.cohomology_dim(ell, n);
            std::size_t expect = (ell == 0 && n == 0) ? 1 : 0;
            if (h != expect) ok = false;
        }
        if (!ok) break;
        good = n;
    }
    rep.koszul_complex_exact_up_to = good;
    return rep;
}

} // namespace ncbgg
