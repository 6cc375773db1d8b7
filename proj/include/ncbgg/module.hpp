#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncbgg/algebra.hpp"

namespace ncbgg {

/// A graded left module over a truncated algebra, stored as a finite window
/// of pieces with degree-1 action matrices.
///
/// Vectors in M_j are rows; the action of generator x_a is v |-> v * action(a, j).
/// For a product, the rightmost factor acts first: (x_a x_b) m = x_a (x_b m),
/// so relation rows sum_{a,b} c_{ab} x_a (x) x_b annihilate M exactly when
/// sum_{a,b} c_{ab} action(b, j) * action(a, j+1) = 0 for every j.
template <class F>
struct GradedModule {
    using Elt = typename F::Elt;

    AlgebraPtr<F> algebra;
    int lo = 0;
    std::vector<std::size_t> dims;            // dims[j - lo]
    std::vector<std::vector<Mat<F>>> actions; // actions[a][j - lo] : M_j -> M_{j+1}

    GradedModule() = default;
    GradedModule(AlgebraPtr<F> alg, int lo_, std::vector<std::size_t> dims_)
        : algebra(std::move(alg)), lo(lo_), dims(std::move(dims_)) {
        const F& k = algebra->field();
        std::size_t g = algebra->gen_count();
        actions.assign(g, {});
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t i = 0; i < dims.size(); ++i)
                actions[a].push_back(Mat<F>(k, dims[i], i + 1 < dims.size() ? dims[i + 1] : 0));
    }

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    const F& field() const { return algebra->field(); }

    std::size_t piece_dim(int j) const {
        if (j < lo || j > hi()) return 0;
        return dims[static_cast<std::size_t>(j - lo)];
    }

    /// Action matrix of generator a in degree j, including the zero maps just
    /// outside the window.
    Mat<F> action(std::size_t a, int j) const {
        const F& k = field();
        if (j < lo || j > hi()) return Mat<F>(k, piece_dim(j), piece_dim(j + 1));
        std::size_t i = static_cast<std::size_t>(j - lo);
        const Mat<F>& m = actions[a][i];
        if (m.cols == piece_dim(j + 1)) return m;
        Mat<F> padded(k, m.rows, piece_dim(j + 1));
        return padded;
    }

    void set_action(std::size_t a, int j, Mat<F> m) {
        actions[a][static_cast<std::size_t>(j - lo)] = std::move(m);
    }

    bool is_zero() const {
        for (auto d : dims)
            if (d) return false;
        return true;
    }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto d : dims) t += d;
        return t;
    }
};

/// Drop zero pieces at both ends of the window.
template <class F>
GradedModule<F> trim(const GradedModule<F>& m) {
    int a = m.lo, b = m.hi();
    while (a <= b && m.piece_dim(a) == 0) ++a;
    while (b >= a && m.piece_dim(b) == 0) --b;
    if (a > b) return GradedModule<F>(m.algebra, 0, {});
    GradedModule<F> out(m.algebra, a, {});
    for (int j = a; j <= b; ++j) out.dims.push_back(m.piece_dim(j));
    std::size_t g = m.algebra->gen_count();
    out.actions.assign(g, {});
    for (std::size_t al = 0; al < g; ++al)
        for (int j = a; j <= b; ++j) out.actions[al].push_back(m.action(al, j));
    return out;
}

/// Degree shift: (M(s))_j = M_{j+s}.
template <class F>
GradedModule<F> shift_module(const GradedModule<F>& m, int s) {
    GradedModule<F> out = m;
    out.lo = m.lo - s;
    return out;
}

template <class F>
GradedModule<F> direct_sum(const GradedModule<F>& x, const GradedModule<F>& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const F& k = x.field();
    int lo = std::min(x.lo, y.lo), hi = std::max(x.hi(), y.hi());
    GradedModule<F> out(x.algebra, lo, {});
    out.dims.clear();
    for (int j = lo; j <= hi; ++j) out.dims.push_back(x.piece_dim(j) + y.piece_dim(j));
    std::size_t g = x.algebra->gen_count();
    out.actions.assign(g, {});
    for (std::size_t a = 0; a < g; ++a)
        for (int j = lo; j <= hi; ++j) {
            Mat<F> block(k, out.dims[j - lo], j < hi ? out.dims[j - lo + 1] : 0);
            auto xa = x.action(a, j);
            auto ya = y.action(a, j);
            for (std::size_t r = 0; r < xa.rows; ++r)
                for (std::size_t c = 0; c < xa.cols; ++c) block.at(r, c) = xa.at(r, c);
            for (std::size_t r = 0; r < ya.rows; ++r)
                for (std::size_t c = 0; c < ya.cols; ++c)
                    block.at(x.piece_dim(j) + r, x.piece_dim(j + 1) + c) = ya.at(r, c);
            out.actions[a].push_back(std::move(block));
        }
    return out;
}

/// The simple module k = B/B_{>=1} concentrated in degree 0.
template <class F>
GradedModule<F> simple_module(AlgebraPtr<F> alg) {
    return GradedModule<F>(alg, 0, {1});
}

/// B as a left module over itself, on the full truncation window.
template <class F>
GradedModule<F> regular_module(AlgebraPtr<F> alg) {
    const F& k = alg->field();
    int top = alg->trunc_degree();
    GradedModule<F> m(alg, 0, {});
    for (int j = 0; j <= top; ++j) m.dims.push_back(alg->dim(j));
    std::size_t g = alg->gen_count();
    m.actions.assign(g, {});
    for (std::size_t a = 0; a < g; ++a)
        for (int j = 0; j <= top; ++j) {
            Mat<F> act(k, alg->dim(j), j < top ? alg->dim(j + 1) : 0);
            if (j < top) {
                const Mat<F>& t = alg->mult(1, j);
                for (std::size_t b = 0; b < alg->dim(j); ++b)
                    for (std::size_t w = 0; w < alg->dim(j + 1); ++w)
                        act.at(b, w) = t.at(a * alg->dim(j) + b, w);
            }
            m.actions[a].push_back(std::move(act));
        }
    return trim(m);
}

/// The Matlis dual B' of the regular bimodule, as a left module: E_j = (B_{-j})',
/// with (x.f)(u) = f(u x).  This is the cofree cogenerator; its socle is
/// one-dimensional in degree 0.
template <class F>
GradedModule<F> cogenerator_module(AlgebraPtr<F> alg) {
    if (!alg->finite_within_window())
        throw precondition_error("cogenerator needs a finite algebra within the window");
    int top = alg->top_degree();
    GradedModule<F> m(alg, -top, {});
    for (int j = -top; j <= 0; ++j) m.dims.push_back(alg->dim(-j));
    std::size_t g = alg->gen_count();
    m.actions.assign(g, {});
    for (std::size_t a = 0; a < g; ++a)
        for (int j = -top; j <= 0; ++j) {
            // transpose of right multiplication B_{-j-1} -> B_{-j}
            std::size_t dsrc = alg->dim(-j), ddst = alg->dim(-j - 1);
            Mat<F> act(alg->field(), dsrc, ddst);
            if (ddst > 0) {
                const Mat<F>& t = alg->mult(-j - 1, 1);
                for (std::size_t u = 0; u < ddst; ++u)
                    for (std::size_t w = 0; w < dsrc; ++w)
                        act.at(w, u) = t.at(u * g + a, w);
            }
            m.actions[a].push_back(std::move(act));
        }
    return m;
}

/// Matrix of the left action of h in B_m as a map M_j -> M_{j+m}.
template <class F>
Mat<F> module_act(const GradedModule<F>& mod, const std::vector<typename F::Elt>& h, int m, int j) {
    const F& k = mod.field();
    const TruncAlgebra<F>& alg = *mod.algebra;
    if (m == 0) {
        Mat<F> id = Mat<F>::identity(k, mod.piece_dim(j));
        return mat_scale(id, h[0]);
    }
    if (m == 1) {
        Mat<F> out(k, mod.piece_dim(j), mod.piece_dim(j + 1));
        for (std::size_t a = 0; a < alg.gen_count(); ++a) {
            if (k.is_zero(h[a])) continue;
            out = mat_add(out, mat_scale(mod.action(a, j), h[a]));
        }
        return out;
    }
    // lift through V (x) B_{m-1} and recurse
    const Mat<F>& sec = alg.step_section(m - 1);
    std::size_t dprev = alg.dim(m - 1), g = alg.gen_count();
    Mat<F> out(k, mod.piece_dim(j), mod.piece_dim(j + m));
    for (std::size_t hb = 0; hb < alg.dim(m); ++hb) {
        if (k.is_zero(h[hb])) continue;
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t t = 0; t < dprev; ++t) {
                const auto& s = sec.at(hb, a * dprev + t);
                if (k.is_zero(s)) continue;
                std::vector<typename F::Elt> unit(dprev, k.zero());
                unit[t] = k.one();
                Mat<F> inner = module_act(mod, unit, m - 1, j);
                Mat<F> step = mat_mul(inner, mod.action(a, j + m - 1));
                out = mat_add(out, mat_scale(step, k.mul(h[hb], s)));
            }
    }
    return out;
}

/// Rows u (basis of B_m) acting on a fixed vector v of M_j; shape dim B_m x dim M_{j+m}.
template <class F>
Mat<F> act_matrix_on_vector(const GradedModule<F>& mod, int m, int j,
                            const std::vector<typename F::Elt>& v) {
    const F& k = mod.field();
    const TruncAlgebra<F>& alg = *mod.algebra;
    if (m == 0) {
        Mat<F> out(k, 1, v.size());
        out.set_row(0, v);
        return out;
    }
    Mat<F> prev = act_matrix_on_vector(mod, m - 1, j, v); // dim B_{m-1} x M_{j+m-1}
    std::size_t g = alg.gen_count(), dprev = alg.dim(m - 1);
    Mat<F> out(k, alg.dim(m), mod.piece_dim(j + m));
    const Mat<F>& sec = alg.step_section(m - 1);
    std::vector<Mat<F>> stepped;
    for (std::size_t a = 0; a < g; ++a) stepped.push_back(mat_mul(prev, mod.action(a, j + m - 1)));
    for (std::size_t u = 0; u < alg.dim(m); ++u)
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t t = 0; t < dprev; ++t) {
                const auto& s = sec.at(u, a * dprev + t);
                if (k.is_zero(s)) continue;
                for (std::size_t c = 0; c < out.cols; ++c)
                    out.at(u, c) = k.add(out.at(u, c), k.mul(s, stepped[a].at(t, c)));
            }
    return out;
}

/// Verify the quadratic relations of the acting algebra annihilate M.
template <class F>
bool relations_annihilate(const GradedModule<F>& m) {
    const F& k = m.field();
    const auto& rels = m.algebra->presentation().relations;
    std::size_t g = m.algebra->gen_count();
    for (int j = m.lo; j <= m.hi(); ++j)
        for (std::size_t r = 0; r < rels.rows; ++r) {
            Mat<F> sum(k, m.piece_dim(j), m.piece_dim(j + 2));
            for (std::size_t a = 0; a < g; ++a)
                for (std::size_t b = 0; b < g; ++b) {
                    const auto& c = rels.at(r, a * g + b);
                    if (k.is_zero(c)) continue;
                    sum = mat_add(sum, mat_scale(mat_mul(m.action(b, j), m.action(a, j + 1)), c));
                }
            if (!sum.is_zero()) return false;
        }
    return true;
}

/// Socle basis rows per degree: the joint kernel of all generator actions.
/// kernel_basis solves wide^T v^T = 0, which is v * wide = 0.
template <class F>
std::vector<Mat<F>> socle_rows(const GradedModule<F>& m) {
    const F& k = m.field();
    std::vector<Mat<F>> out;
    std::size_t g = m.algebra->gen_count();
    for (int j = m.lo; j <= m.hi(); ++j) {
        Mat<F> wide(k, m.piece_dim(j), g * m.piece_dim(j + 1));
        std::size_t off = 0;
        for (std::size_t a = 0; a < g; ++a) {
            auto act = m.action(a, j);
            for (std::size_t r = 0; r < act.rows; ++r)
                for (std::size_t c = 0; c < act.cols; ++c) wide.at(r, off + c) = act.at(r, c);
            off += act.cols;
        }
        out.push_back(kernel_basis(wide.transpose()));
    }
    return out;
}

template <class F>
std::vector<std::size_t> socle_dims(const GradedModule<F>& m) {
    auto rows = socle_rows(m);
    std::vector<std::size_t> d;
    for (auto& r : rows) d.push_back(r.rows);
    return d;
}

/// Radical rows per degree: the span of all generator images.
template <class F>
std::vector<Mat<F>> radical_rows(const GradedModule<F>& m) {
    const F& k = m.field();
    std::size_t g = m.algebra->gen_count();
    std::vector<Mat<F>> out;
    for (int j = m.lo; j <= m.hi(); ++j) {
        Mat<F> span(k, 0, m.piece_dim(j));
        for (std::size_t a = 0; a < g; ++a) span = vstack(span, m.action(a, j - 1));
        out.push_back(rank_and_rref(span).rref);
    }
    return out;
}

/// Submodule spanned by the given rows (must be action-closed); induced actions.
template <class F>
GradedModule<F> submodule(const GradedModule<F>& m, const std::vector<Mat<F>>& rows) {
    GradedModule<F> out(m.algebra, m.lo, {});
    out.dims.clear();
    for (auto& r : rows) out.dims.push_back(r.rows);
    std::size_t g = m.algebra->gen_count();
    const F& k = m.field();
    out.actions.assign(g, {});
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t i = 0; i < rows.size(); ++i) {
            int j = m.lo + static_cast<int>(i);
            Mat<F> mapped = mat_mul(rows[i], m.action(a, j));
            if (i + 1 < rows.size())
                out.actions[a].push_back(coords_in_basis(rows[i + 1], mapped));
            else {
                if (!mapped.is_zero())
                    throw precondition_error("submodule rows not action-closed at window edge");
                out.actions[a].push_back(Mat<F>(k, rows[i].rows, 0));
            }
        }
    return trim(out);
}

/// Quotient of M by the row spans (must be action-closed); induced actions.
template <class F>
GradedModule<F> quotient_module(const GradedModule<F>& m, const std::vector<Mat<F>>& sub_rows) {
    std::vector<QuotientData<F>> q;
    for (std::size_t i = 0; i < sub_rows.size(); ++i)
        q.push_back(quotient_basis(sub_rows[i], m.piece_dim(m.lo + static_cast<int>(i))));
    GradedModule<F> out(m.algebra, m.lo, {});
    out.dims.clear();
    for (auto& qd : q) out.dims.push_back(qd.dim());
    std::size_t g = m.algebra->gen_count();
    const F& k = m.field();
    out.actions.assign(g, {});
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t i = 0; i < q.size(); ++i) {
            int j = m.lo + static_cast<int>(i);
            if (i + 1 < q.size()) {
                Mat<F> act = mat_mul(mat_mul(q[i].section, m.action(a, j)),
                                     q[i + 1].projection.transpose());
                out.actions[a].push_back(std::move(act));
            } else {
                out.actions[a].push_back(Mat<F>(k, q[i].dim(), 0));
            }
        }
    return trim(out);
}

/// A degree-0 module homomorphism, one matrix per degree of the common window.
template <class F>
struct HomElement {
    int lo = 0;
    std::vector<Mat<F>> comps; // comps[j - lo] : M_j -> N_j
};

/// Basis of Hom_{Gr}(M, N)_0 over the window union, by solving the
/// intertwining equations exactly.
template <class F>
std::vector<HomElement<F>> hom_space(const GradedModule<F>& m, const GradedModule<F>& n) {
    const F& k = m.field();
    int lo = std::min(m.lo, n.lo), hi = std::max(m.hi(), n.hi());
    // unknowns: entries of F_j (dim M_j x dim N_j)
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int j = lo; j <= hi; ++j) {
        offset.push_back(total);
        total += m.piece_dim(j) * n.piece_dim(j);
    }
    std::vector<std::vector<typename F::Elt>> eqs;
    std::size_t g = m.algebra->gen_count();
    for (int j = lo; j < hi; ++j)
        for (std::size_t a = 0; a < g; ++a) {
            auto xm = m.action(a, j);
            auto xn = n.action(a, j);
            // X^M F_{j+1} - F_j X^N = 0, one equation per (r, c)
            for (std::size_t r = 0; r < m.piece_dim(j); ++r)
                for (std::size_t c = 0; c < n.piece_dim(j + 1); ++c) {
                    std::vector<typename F::Elt> eq(total, k.zero());
                    for (std::size_t u = 0; u < m.piece_dim(j + 1); ++u) {
                        auto v = xm.at(r, u);
                        if (k.is_zero(v)) continue;
                        std::size_t idx = offset[j + 1 - lo] + u * n.piece_dim(j + 1) + c;
                        eq[idx] = k.add(eq[idx], v);
                    }
                    for (std::size_t u = 0; u < n.piece_dim(j); ++u) {
                        auto v = xn.at(u, c);
                        if (k.is_zero(v)) continue;
                        std::size_t idx = offset[j - lo] + r * n.piece_dim(j) + u;
                        eq[idx] = k.sub(eq[idx], v);
                    }
                    eqs.push_back(std::move(eq));
                }
        }
    Mat<F> sys(k, eqs.size(), total);
    for (std::size_t i = 0; i < eqs.size(); ++i) sys.set_row(i, eqs[i]);
    Mat<F> ker = total == 0 ? Mat<F>(k, 0, 0) : kernel_basis(sys);
    std::vector<HomElement<F>> basis;
    for (std::size_t b = 0; b < ker.rows; ++b) {
        HomElement<F> h;
        h.lo = lo;
        for (int j = lo; j <= hi; ++j) {
            Mat<F> comp(k, m.piece_dim(j), n.piece_dim(j));
            for (std::size_t r = 0; r < comp.rows; ++r)
                for (std::size_t c = 0; c < comp.cols; ++c)
                    comp.at(r, c) = ker.at(b, offset[j - lo] + r * comp.cols + c);
            h.comps.push_back(std::move(comp));
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

template <class F>
bool hom_is_bijective(const GradedModule<F>& m, const GradedModule<F>& n, const HomElement<F>& h) {
    int lo = h.lo;
    for (std::size_t i = 0; i < h.comps.size(); ++i) {
        int j = lo + static_cast<int>(i);
        if (m.piece_dim(j) != n.piece_dim(j)) return false;
        if (rank_and_rref(h.comps[i]).rank != m.piece_dim(j)) return false;
    }
    // degrees outside the stored comps must be zero on both sides
    return true;
}

enum class IsoVerdict { yes, no, inconclusive };

inline const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::yes: return "yes";
        case IsoVerdict::no: return "no";
        default: return "inconclusive";
    }
}

/// Randomized graded-isomorphism test with invariant prescreening.
/// Deterministic for a fixed seed; honest "inconclusive" after `trials`
/// failed samples.
template <class F>
IsoVerdict module_isomorphic(const GradedModule<F>& m_in, const GradedModule<F>& n_in,
                             std::size_t trials = 32, std::uint64_t seed = 0) {
    if (!m_in.algebra->same_algebra(*n_in.algebra)) return IsoVerdict::no;
    GradedModule<F> m = trim(m_in), n = trim(n_in);
    if (m.is_zero() && n.is_zero()) return IsoVerdict::yes;
    if (m.lo != n.lo || m.dims != n.dims) return IsoVerdict::no;
    if (socle_dims(m) != socle_dims(n)) return IsoVerdict::no;
    {
        auto rm = radical_rows(m);
        auto rn = radical_rows(n);
        for (std::size_t i = 0; i < rm.size(); ++i)
            if (rm[i].rows != rn[i].rows) return IsoVerdict::no;
    }
    auto basis = hom_space(m, n);
    if (basis.empty()) return IsoVerdict::no;
    const F& k = m.field();
    std::mt19937_64 rng(seed);
    // try single basis elements first, then random combinations
    for (const auto& h : basis)
        if (hom_is_bijective(m, n, h)) return IsoVerdict::yes;
    for (std::size_t t = 0; t < trials; ++t) {
        HomElement<F> h;
        h.lo = basis[0].lo;
        std::vector<typename F::Elt> coef;
        for (std::size_t b = 0; b < basis.size(); ++b) coef.push_back(k.random(rng));
        for (std::size_t i = 0; i < basis[0].comps.size(); ++i) {
            Mat<F> comp(k, basis[0].comps[i].rows, basis[0].comps[i].cols);
            for (std::size_t b = 0; b < basis.size(); ++b)
                comp = mat_add(comp, mat_scale(basis[b].comps[i], coef[b]));
            h.comps.push_back(std::move(comp));
        }
        if (hom_is_bijective(m, n, h)) return IsoVerdict::yes;
    }
    return IsoVerdict::inconclusive;
}

/// Matlis dual M' with (M')_j = (M_{-j})' and transposed actions.  The result
/// is a left module over the opposite presentation's algebra; when the
/// relation span is flip-stable (exterior, commutative) that algebra has the
/// same presentation and the dual lives over the original algebra again.
template <class F>
GradedModule<F> matlis_dual(const GradedModule<F>& m,
                            AlgebraPtr<F> opposite_algebra = nullptr) {
    AlgebraPtr<F> target = opposite_algebra;
    if (!target) {
        auto op = opposite_presentation(m.algebra->presentation());
        if (op == m.algebra->presentation())
            target = m.algebra;
        else
            target = truncate_algebra(op, m.algebra->trunc_degree());
    }
    GradedModule<F> out(target, -m.hi(), {});
    out.dims.clear();
    for (int j = -m.hi(); j <= -m.lo; ++j) out.dims.push_back(m.piece_dim(-j));
    std::size_t g = m.algebra->gen_count();
    out.actions.assign(g, {});
    for (std::size_t a = 0; a < g; ++a)
        for (int j = -m.hi(); j <= -m.lo; ++j)
            out.actions[a].push_back(m.action(a, -j - 1).transpose());
    return trim(out);
}

} // namespace ncbgg
