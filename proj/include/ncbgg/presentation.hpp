#pragma once

#include <string>
#include <vector>

#include "ncbgg/matrix.hpp"

namespace ncbgg {

/// A quadratic algebra T(V)/(R).  `generators` is the chosen basis of V;
/// `relations` rows span R inside V (x) V, column index i*g + j standing for
/// e_i (x) e_j.  Rows are kept in reduced form (rref) so presentation
/// equality is matrix equality.
template <class F>
struct Presentation {
    F field;
    std::vector<std::string> generators;
    Mat<F> relations;

    std::size_t gen_count() const { return generators.size(); }

    Presentation(F f, std::vector<std::string> gens, const Mat<F>& rels)
        : field(f), generators(std::move(gens)), relations(rank_and_rref(rels).rref) {
        std::size_t g = generators.size();
        if (relations.rows > 0 && relations.cols != g * g)
            throw precondition_error("relations need " + std::to_string(g * g) + " columns");
        relations.cols = g * g;
    }

    bool operator==(const Presentation& o) const {
        return field == o.field && generators.size() == o.generators.size() &&
               relations == o.relations;
    }
};

/// Reverse both tensor factors of every relation: R -> flip(R).  The result
/// presents the opposite algebra.
template <class F>
Presentation<F> opposite_presentation(const Presentation<F>& p) {
    std::size_t g = p.gen_count();
    Mat<F> flipped(p.field, p.relations.rows, g * g);
    for (std::size_t r = 0; r < p.relations.rows; ++r)
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                flipped.at(r, j * g + i) = p.relations.at(r, i * g + j);
    return Presentation<F>(p.field, p.generators, flipped);
}

/// Koszul dual T(V')/(R^perp).  R^perp is the annihilator of R under the
/// pairing <a(x)b, x(x)y> = a(y)b(x); concretely the kernel of the flipped
/// relation matrix.  This is the convention under which sum_a x_a (x) y_a
/// squares to zero in A_2 (x) A!_2 for every quadratic R, which the Koszul
/// complex and the dual functors rely on; for flip-stable R (commutative,
/// exterior) it agrees with the unflipped pairing.
template <class F>
Presentation<F> koszul_dual(const Presentation<F>& p) {
    std::size_t g = p.gen_count();
    Mat<F> flipped(p.field, p.relations.rows, g * g);
    for (std::size_t r = 0; r < p.relations.rows; ++r)
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                flipped.at(r, j * g + i) = p.relations.at(r, i * g + j);
    Mat<F> perp = kernel_basis(flipped);
    std::vector<std::string> dual_names;
    dual_names.reserve(g);
    for (const auto& n : p.generators) dual_names.push_back(n + "'");
    return Presentation<F>(p.field, std::move(dual_names), perp);
}

// ---- stock presentations used throughout the tests and the CLI ----

template <class F>
Presentation<F> polynomial_presentation(F f, std::size_t g) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g; ++i) names.push_back("x" + std::to_string(i + 1));
    Mat<F> rels(f, g * (g - 1) / 2, g * g);
    std::size_t r = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            rels.at(r, i * g + j) = f.one();
            rels.at(r, j * g + i) = f.neg(f.one());
            ++r;
        }
    return Presentation<F>(f, std::move(names), rels);
}

template <class F>
Presentation<F> exterior_presentation(F f, std::size_t g) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g; ++i) names.push_back("y" + std::to_string(i + 1));
    Mat<F> rels(f, g * (g + 1) / 2, g * g);
    std::size_t r = 0;
    for (std::size_t i = 0; i < g; ++i) {
        rels.at(r++, i * g + i) = f.one();
        for (std::size_t j = i + 1; j < g; ++j) {
            rels.at(r, i * g + j) = f.one();
            rels.at(r, j * g + i) = f.one();
            ++r;
        }
    }
    return Presentation<F>(f, std::move(names), rels);
}

/// k<x,y>/(xy - q yx).
template <class F>
Presentation<F> quantum_plane_presentation(F f, const typename F::Elt& q) {
    Mat<F> rels(f, 1, 4);
    rels.at(0, 0 * 2 + 1) = f.one();
    rels.at(0, 1 * 2 + 0) = f.neg(q);
    return Presentation<F>(f, {"x", "y"}, rels);
}

/// Three-generator Sklyanin-type presentation with coefficients (a, b, c):
///   a yz + b zy + c x^2,  a zx + b xz + c y^2,  a xy + b yx + c z^2.
template <class F>
Presentation<F> sklyanin_presentation(F f, const typename F::Elt& a, const typename F::Elt& b,
                                      const typename F::Elt& c) {
    Mat<F> rels(f, 3, 9);
    auto put = [&](std::size_t r, std::size_t i, std::size_t j, const typename F::Elt& v) {
        rels.at(r, i * 3 + j) = v;
    };
    put(0, 1, 2, a); put(0, 2, 1, b); put(0, 0, 0, c);
    put(1, 2, 0, a); put(1, 0, 2, b); put(1, 1, 1, c);
    put(2, 0, 1, a); put(2, 1, 0, b); put(2, 2, 2, c);
    return Presentation<F>(f, {"x", "y", "z"}, rels);
}

} // namespace ncbgg
