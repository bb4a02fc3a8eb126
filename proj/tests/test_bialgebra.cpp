#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <qmat/matrix_bialgebra.hpp>
#include <qmat/scalar.hpp>

using namespace qmat;

namespace {

using R = Rational;

const R p2 = R::from_string("2");

long table_mult(const std::vector<std::pair<Partition, long>>& row,
                const Partition& shape) {
    for (const auto& [mu, l] : row)
        if (mu == shape) return l;
    return 0;
}

Vec<R> random_vec(std::mt19937_64& rng, std::size_t size) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vec<R> v(size, R::zero());
    for (R& x : v) x = R(coeff(rng));
    return v;
}

}  // namespace

TEST_CASE("realized components reproduce the graded dimensions") {
    HeckeOp<R> op = make_standard(2, p2);
    HeckeOp<R> s11 = make_super(1, 1, p2);

    RealizedAlgebra<R> E = realize(op, op, "E", 3);
    QuadraticAlgebra<R> Eq = end_algebra(op);
    for (int n = 0; n <= 3; ++n)
        CHECK(E.component(n).dim() == graded_dimension(Eq, n));

    RealizedAlgebra<R> F = realize(op, op, "F", 3);
    QuadraticAlgebra<R> Fq = fend_algebra(op);
    for (int n = 0; n <= 3; ++n)
        CHECK(F.component(n).dim() == graded_dimension(Fq, n));

    RealizedAlgebra<R> M = realize(s11, op, "M", 3);
    QuadraticAlgebra<R> Mq = hom_algebra(s11, op);
    for (int n = 0; n <= 3; ++n)
        CHECK(M.component(n).dim() == graded_dimension(Mq, n));

    RealizedAlgebra<R> N = realize(s11, op, "N", 3);
    QuadraticAlgebra<R> Nq = fhom_algebra(s11, op);
    for (int n = 0; n <= 3; ++n)
        CHECK(N.component(n).dim() == graded_dimension(Nq, n));
}

TEST_CASE("the alternating hom relations are the primed hom relations") {
    HeckeOp<R> op = make_standard(2, p2);
    HeckeOp<R> s11 = make_super(1, 1, p2);
    CHECK(fhom_algebra(op, op).relations == hom_algebra(prime_operator(op), op).relations);
    CHECK(fhom_algebra(s11, op).relations == hom_algebra(prime_operator(s11), op).relations);
}

TEST_CASE("block dimensions are products of the factor multiplicities") {
    HeckeOp<R> op = make_standard(2, p2);
    HeckeOp<R> s11 = make_super(1, 1, p2);
    struct Pair {
        HeckeOp<R> S, T;
    };
    for (const Pair& pr : {Pair{op, op}, Pair{s11, op}}) {
        RealizedAlgebra<R> A = realize(pr.S, pr.T, "M", 3);
        auto mult_dual = multiplicity_table(A.dual_op, 3);
        auto mult_vec = multiplicity_table(A.vec_op, 3);
        for (int n = 1; n <= 3; ++n) {
            std::size_t total = 0;
            for (const BlockComponent<R>& blk : block_split(A, n)) {
                long ld = table_mult(mult_dual[static_cast<std::size_t>(n - 1)], blk.shape);
                long lv = table_mult(mult_vec[static_cast<std::size_t>(n - 1)], blk.shape);
                CHECK(blk.space.dim() == static_cast<std::size_t>(ld * lv));
                total += blk.space.dim();
            }
            CHECK(total == A.component(n).dim());
        }
    }
}

TEST_CASE("degree-one products span the degree-two component") {
    HeckeOp<R> op = make_standard(2, p2);
    RealizedAlgebra<R> A = realize(op, op, "E", 2);
    const std::size_t g = A.generator_dim();
    std::vector<Vec<R>> products;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            Vec<R> a(g, R::zero()), b(g, R::zero());
            a[i] = R::one();
            b[j] = R::one();
            products.push_back(realized_product(A, a, 1, b, 1));
        }
    CHECK(Subspace<R>::from_span(products, g * g) == A.component(2));
}

TEST_CASE("the transferred product is associative and unital") {
    std::mt19937_64 rng(20240817);
    HeckeOp<R> op = make_standard(2, p2);
    HeckeOp<R> s11 = make_super(1, 1, p2);
    for (const std::string& kind : {"E", "F", "M"}) {
        RealizedAlgebra<R> A = realize(s11, op, kind, 3);
        const std::size_t g = A.generator_dim();
        for (int trial = 0; trial < 8; ++trial) {
            Vec<R> a = random_vec(rng, g);
            Vec<R> b = random_vec(rng, g);
            Vec<R> c = random_vec(rng, g);
            Vec<R> ab_c = realized_product(A, realized_product(A, a, 1, b, 1), 2, c, 1);
            Vec<R> a_bc = realized_product(A, a, 1, realized_product(A, b, 1, c, 1), 2);
            CHECK(ab_c == a_bc);
        }
        // scalars act by plain scaling on either side
        Vec<R> unit(1, R::from_string("2"));
        Vec<R> x = random_vec(rng, g);
        Vec<R> lhs = realized_product(A, unit, 0, x, 1);
        Vec<R> rhs = realized_product(A, x, 1, unit, 0);
        for (std::size_t i = 0; i < g; ++i) {
            CHECK(lhs[i] == p2 * x[i]);
            CHECK(rhs[i] == p2 * x[i]);
        }
    }
}

TEST_CASE("operands outside their component are rejected") {
    HeckeOp<R> op = make_standard(2, p2);
    RealizedAlgebra<R> A = realize(op, op, "E", 2);
    const std::size_t g = A.generator_dim();
    Vec<R> a(g, R::zero());
    a[0] = R::one();
    Vec<R> bad(g * g, R::zero());
    bad[1] = R::one();  // z^{00}_{01} alone is not in the degree-2 component
    if (!A.component(2).contains(bad))
        CHECK_THROWS_AS(realized_product(A, a, 1, bad, 2), Error);
    CHECK_THROWS_AS(realize(op, op, "Q", 2), Error);
    HeckeOp<R> other = make_standard(2, R::from_string("3"));
    CHECK_THROWS_AS(realize(op, other, "E", 2), Error);
}

TEST_CASE("matrix coefficients form a bialgebra on the relation ideal") {
    CHECK(coproduct_check(make_standard(2, p2)).ok);
    CHECK(coproduct_check(make_super(1, 1, p2)).ok);
    CHECK(coproduct_check(make_flip<R>(2)).ok);
    // a span that is not a coideal must be flagged
    const std::size_t dd = 4;
    Matrix<R> one_row(1, dd * dd);
    one_row.at(0, 1) = R::one();  // z^{(0,0)}_{(0,1)} alone
    CheckResult bad = detail::biideal_check(Subspace<R>::from_rows(std::move(one_row)), 2);
    CHECK(!bad.ok);
}
