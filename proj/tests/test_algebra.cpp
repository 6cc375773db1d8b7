#include <doctest.h>

#include "ncbgg/algebra.hpp"

using namespace ncbgg;

namespace {

// Independent oracle: dim A_n straight from the definition, as
// g^n - rank of the span of all V^(x)i (x) R (x) V^(x)(n-2-i) inside V^(x)n.
template <class F>
std::size_t brute_force_dim(const Presentation<F>& p, int n) {
    const F& k = p.field;
    std::size_t g = p.gen_count();
    if (n == 0) return 1;
    if (n == 1) return g;
    std::size_t gn = 1;
    for (int i = 0; i < n; ++i) gn *= g;
    std::size_t left_words = 1;
    std::vector<std::vector<typename F::Elt>> rows;
    for (int pos = 0; pos + 2 <= n; ++pos) {
        std::size_t right_words = gn / (left_words * g * g);
        for (std::size_t r = 0; r < p.relations.rows; ++r)
            for (std::size_t u = 0; u < left_words; ++u)
                for (std::size_t w = 0; w < right_words; ++w) {
                    std::vector<typename F::Elt> row(gn, k.zero());
                    for (std::size_t a = 0; a < g; ++a)
                        for (std::size_t b = 0; b < g; ++b) {
                            const auto& c = p.relations.at(r, a * g + b);
                            if (k.is_zero(c)) continue;
                            std::size_t idx = ((u * g + a) * g + b) * right_words + w;
                            row[idx] = k.add(row[idx], c);
                        }
                    rows.push_back(std::move(row));
                }
        left_words *= g;
    }
    Mat<F> span(k, rows.size(), gn);
    for (std::size_t i = 0; i < rows.size(); ++i) span.set_row(i, rows[i]);
    return gn - rank_and_rref(span).rank;
}

template <class F>
void check_dims(const Presentation<F>& p, int N, const std::vector<std::size_t>& expect) {
    auto alg = truncate_algebra(p, N);
    CHECK(alg->hilbert_function() == expect);
    for (int n = 0; n <= N; ++n) CHECK(alg->dim(n) == brute_force_dim(p, n));
}

} // namespace

TEST_CASE("truncation dims: commutative, exterior, quantum plane") {
    Rationals q;
    check_dims(polynomial_presentation(q, 2), 3, {1, 2, 3, 4});
    check_dims(exterior_presentation(q, 2), 3, {1, 2, 1, 0});
    check_dims(exterior_presentation(q, 3), 4, {1, 3, 3, 1, 0});
    PrimeField f7(7);
    check_dims(quantum_plane_presentation(f7, f7.from_int(2)), 3, {1, 2, 3, 4});
}

TEST_CASE("truncation dims: Sklyanin over F_7") {
    PrimeField f7(7);
    auto p = sklyanin_presentation(f7, f7.from_int(1), f7.from_int(2), f7.from_int(3));
    check_dims(p, 3, {1, 3, 6, 10});
}

TEST_CASE("koszul dual of the polynomial algebra is the exterior algebra") {
    Rationals q;
    for (std::size_t d = 2; d <= 4; ++d) {
        auto dual = koszul_dual(polynomial_presentation(q, d));
        auto ext = exterior_presentation(q, d);
        CHECK(dual.relations == ext.relations);
        CHECK(dual.generators[0] == "x1'");
    }
}

TEST_CASE("double dual returns the original relation span") {
    PrimeField f7(7);
    auto skl = sklyanin_presentation(f7, f7.from_int(1), f7.from_int(2), f7.from_int(3));
    auto dd = koszul_dual(koszul_dual(skl));
    CHECK(dd.relations == skl.relations);
    Rationals q;
    auto qp = quantum_plane_presentation(PrimeField(11), PrimeField(11).from_int(5));
    CHECK(koszul_dual(koszul_dual(qp)).relations == qp.relations);
    // free algebra: dual has the full g^2 relation space
    Mat<Rationals> none(q, 0, 4);
    Presentation<Rationals> free_alg(q, {"x", "y"}, none);
    CHECK(koszul_dual(free_alg).relations.rows == 4);
}

TEST_CASE("dim R + dim R_perp = g^2") {
    PrimeField f13(13);
    auto skl = sklyanin_presentation(f13, f13.from_int(1), f13.from_int(5), f13.from_int(2));
    auto dual = koszul_dual(skl);
    CHECK(skl.relations.rows + dual.relations.rows == 9);
}

TEST_CASE("Sklyanin dual truncates to [1,3,3,1,0]") {
    PrimeField f7(7);
    auto skl = sklyanin_presentation(f7, f7.from_int(1), f7.from_int(2), f7.from_int(3));
    auto dual = truncate_algebra(koszul_dual(skl), 4);
    CHECK(dual->hilbert_function() == std::vector<std::size_t>{1, 3, 3, 1, 0});
    CHECK(dual->finite_within_window());
    CHECK(dual->top_degree() == 3);
}

TEST_CASE("multiplication is associative and degree-1 generating") {
    PrimeField f7(7);
    auto skl = sklyanin_presentation(f7, f7.from_int(1), f7.from_int(2), f7.from_int(3));
    auto alg = truncate_algebra(skl, 4);
    CHECK(multiplication_associative(*alg));
    for (int n = 0; n + 1 <= 4; ++n)
        CHECK(rank_and_rref(alg->mult(1, n)).rank == alg->dim(n + 1));

    Rationals q;
    auto ext = truncate_algebra(exterior_presentation(q, 3), 4);
    CHECK(multiplication_associative(*ext));
}

TEST_CASE("left and right multiplication agree with the tensors") {
    PrimeField f7(7);
    auto alg = truncate_algebra(exterior_presentation(f7, 2), 3);
    // (y1 + y2) * y1 = y2 y1, and y1 * (y1 + y2) = y1 y2 = -y2 y1
    std::vector<PrimeField::Elt> h = {1, 1};
    auto rm = alg->right_mult(h, 1, 1); // A_1 -> A_2
    auto lm = alg->left_mult(h, 1, 1);
    CHECK(rm.rows == 2);
    CHECK(rm.cols == 1);
    // in the exterior square y1y2 = -y2y1, so right-by-(y1+y2) of y1 equals
    // minus left-by-(y1+y2) of y1
    for (std::size_t j = 0; j < rm.cols; ++j)
        CHECK(rm.at(0, j) == f7.neg(lm.at(0, j)));
}
