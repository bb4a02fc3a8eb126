#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <qmat/invariant_theory.hpp>
#include <qmat/scalar.hpp>

using namespace qmat;

namespace {

using R = Rational;

const R p2 = R::from_string("2");

bool contains_text(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("scalar middle operator: ranks, kernels, and the rectangle ideal") {
    HeckeOp<R> T = make_standard(2, p2);
    HeckeOp<R> mid = make_standard(1, p2);
    MuStarInstance<R> inst = make_mu_star(T, mid, T, false, 3);

    MuStarComponent<R> c1 = mu_star_component(inst, 1);
    CHECK(c1.rank == 4);
    CHECK(c1.kernel.dim() == 0);
    MuStarComponent<R> c2 = mu_star_component(inst, 2);
    CHECK(c2.rank == 9);
    CHECK(c2.kernel.dim() == 1);
    MuStarComponent<R> c3 = mu_star_component(inst, 3);
    CHECK(c3.kernel.dim() == 4);
    CHECK(c3.rank + static_cast<long>(c3.kernel.dim()) ==
          static_cast<long>(inst.TS.component(3).dim()));

    // birank (1,0) makes the kernel the ideal of the 2x1 rectangle block
    for (int n = 1; n <= 3; ++n) {
        CheckResult r = kernel_vs_rectangle(inst, n);
        CHECK(r.ok);
        CHECK(contains_text(r.detail, "birank of R = (1,0)"));
        CHECK(block_injectivity_check(inst, n).ok);
    }
}

TEST_CASE("classical middle operator is injective through degree 3") {
    HeckeOp<R> T = make_standard(2, p2);
    MuStarInstance<R> inst = make_mu_star(T, T, T, false, 3);
    for (int n = 1; n <= 3; ++n) {
        MuStarComponent<R> c = mu_star_component(inst, n);
        CHECK(c.kernel.dim() == 0);
        CHECK(kernel_vs_rectangle(inst, n).ok);
        CHECK(block_injectivity_check(inst, n).ok);
    }
}

TEST_CASE("super pair at q = 1: kernel equals the non-hook blocks") {
    HeckeOp<R> T = make_superflip<R>(1, 1);
    HeckeOp<R> mid = make_standard(1, R::one());
    MuStarInstance<R> inst = make_mu_star(T, mid, T, false, 3);
    for (int n = 2; n <= 3; ++n) {
        CheckResult r = kernel_vs_rectangle(inst, n);
        CHECK(r.ok);
        CHECK(contains_text(r.detail, "birank of R = (1,0)"));
        CHECK(block_injectivity_check(inst, n).ok);
    }
}

TEST_CASE("twisted and plain versions agree at q = 1") {
    HeckeOp<R> T = make_superflip<R>(1, 1);
    HeckeOp<R> mid = make_flip<R>(2);
    MuStarInstance<R> plain = make_mu_star(T, mid, T, false, 3);
    MuStarInstance<R> twisted = make_mu_star(T, mid, T, true, 3);
    for (int n = 1; n <= 3; ++n) {
        MuStarComponent<R> a = mu_star_component(plain, n);
        MuStarComponent<R> b = mu_star_component(twisted, n);
        CHECK(a.rank == b.rank);
        CHECK(a.kernel == b.kernel);
    }
    // at q = 1 the flip conjugate is the operator itself
    CheckResult r = twisted_relation_check(twisted);
    CHECK(r.ok);
    CHECK(contains_text(r.detail, "R-hat = R"));
}

TEST_CASE("twisted classical pair factors up to basis reversal") {
    HeckeOp<R> T = make_standard(2, p2);
    MuStarInstance<R> plain = make_mu_star(T, T, T, false, 2);
    CheckResult rp = twisted_relation_check(plain);
    CHECK(rp.ok);
    CHECK(!contains_text(rp.detail, "R-hat"));

    MuStarInstance<R> inst = make_mu_star(T, T, T, true, 2);
    CheckResult r = twisted_relation_check(inst);
    CHECK(r.ok);
    CHECK(contains_text(r.detail, "up to basis reversal"));
    for (int n = 1; n <= 2; ++n) {
        CHECK(kernel_vs_rectangle(inst, n).ok);
        CHECK(block_injectivity_check(inst, n).ok);
    }
}

TEST_CASE("the optimized composite equals the explicit theta route") {
    HeckeOp<R> T = make_standard(2, p2);
    HeckeOp<R> mid = make_standard(1, p2);
    MuStarInstance<R> inst = make_mu_star(T, mid, T, false, 3);
    for (int n = 2; n <= 3; ++n) {
        Matrix<R> theta = theta_matrix(inst, n);
        Matrix<R> joint = Matrix<R>::kronecker(inst.TR.bundle(n).normalized,
                                               inst.RS.bundle(n).normalized);
        const Subspace<R>& dom = inst.TS.component(n);
        for (std::size_t j = 0; j < dom.dim(); ++j) {
            Vec<R> v = dom.basis_vector(j);
            CHECK(detail::mu_apply_full(inst, n, v) == joint.apply(theta.apply(v)));
        }
    }
}

TEST_CASE("mismatched parameters are rejected") {
    HeckeOp<R> T = make_standard(2, p2);
    HeckeOp<R> other = make_standard(1, R::from_string("3"));
    CHECK_THROWS_AS(make_mu_star(T, other, T, false, 2), Error);
}
