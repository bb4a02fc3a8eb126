#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qmat/determinantal.hpp>
#include <qmat/hecke_algebra.hpp>
#include <qmat/invariant_theory.hpp>
#include <qmat/matrix_bialgebra.hpp>
#include <qmat/operator_io.hpp>
#include <qmat/projectors.hpp>
#include <qmat/quadratic_algebra.hpp>
#include <qmat/ratfunc.hpp>
#include <qmat/rational.hpp>
#include <qmat/report.hpp>

using namespace qmat;

TEST_CASE("every module instantiates on the rational backend") {
    auto op = make_standard(2, Rational(2));
    CHECK(validate_operator(op).ok);

    auto S = sym_algebra(op);
    CHECK(graded_dimension(S, 2) == 3);

    auto E = realize(op, op, "E", 2);
    CHECK(E.component(2).dim() == 10);

    auto sigma = Partition::from_string("1,1");
    CHECK(ideal_component(E, sigma, 2).dim() == 1);

    auto inst = make_mu_star(op, op, op, false, 2);
    CHECK(mu_star_component(inst, 2).kernel.dim() == 0);
}

TEST_CASE("every module instantiates on the symbolic backend") {
    RatFunc p = RatFunc::var();
    auto op = make_standard(2, p);
    CHECK(validate_operator(op).ok);
    auto S = sym_algebra(op);
    CHECK(graded_dimension(S, 2) == 3);
}

TEST_CASE("report emits deterministic rows") {
    Report rep;
    rep.add({{"degree", 1}, {"dim", 2}}, true);
    CHECK(rep.exit_code() == 0);
    rep.add({{"degree", 2}, {"dim", 3}}, false);
    CHECK(rep.exit_code() == 2);
    CHECK(rep.failures() == 1);
}
