#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <qmat/hecke_operator.hpp>
#include <qmat/invariant_theory.hpp>
#include <qmat/scalar.hpp>

using namespace qmat;

namespace {

using R = Rational;

Partition P(const std::string& s) { return Partition::from_string(s); }

const R p2 = R::from_string("2");

long mult_of(const std::vector<std::pair<Partition, long>>& row, const Partition& lam) {
    for (const auto& [shape, m] : row)
        if (shape == lam) return m;
    FAIL("shape missing from multiplicity row");
    return -1;
}

}  // namespace

TEST_CASE("builtin operators pass validation") {
    for (int d = 1; d <= 4; ++d)
        CHECK(validate_operator(make_standard(d, p2)).ok);
    CHECK(validate_operator(make_super(1, 1, p2)).ok);
    CHECK(validate_operator(make_super(2, 1, p2)).ok);
    CHECK(validate_operator(make_flip<R>(2)).ok);
    CHECK(validate_operator(make_flip<R>(3)).ok);
    CHECK(validate_operator(make_superflip<R>(1, 1)).ok);
    CHECK(validate_operator(make_superflip<R>(2, 1)).ok);
}

TEST_CASE("validation rejects corrupted operators") {
    HeckeOp<R> op = make_standard(2, p2);
    // scaling shifts the eigenvalues off {q, -1}
    HeckeOp<R> scaled = operator_from_matrix(2, op.q, p2 * op.R, "scaled");
    CheckResult bad = validate_operator(scaled);
    CHECK(!bad.ok);
    CHECK(!bad.detail.empty());
    // a single corrupted entry breaks the braid identity
    Matrix<R> m = op.R;
    m.at(0, 3) = m.at(0, 3) + R::one();
    CHECK(!validate_operator(operator_from_matrix(2, op.q, std::move(m), "dented")).ok);
    // q = 0 is rejected outright
    HeckeOp<R> degenerate = op;
    degenerate.q = R::zero();
    CHECK(!validate_operator(degenerate).ok);
}

TEST_CASE("the prime partner is an involution and shares validity") {
    for (const HeckeOp<R>& op : {make_standard(2, p2), make_super(1, 1, p2),
                                 make_standard(3, p2)}) {
        HeckeOp<R> prime = prime_operator(op);
        // -q S^{-1} trades the eigenvalues q and -1, keeping the parameter
        CHECK(validate_operator(prime).ok);
        CHECK(prime.q == op.q);
        HeckeOp<R> back = prime_operator(prime);
        CHECK(back.R == op.R);
    }
}

TEST_CASE("the flip conjugate preserves validity and is involutive") {
    for (const HeckeOp<R>& op : {make_standard(2, p2), make_super(2, 1, p2)}) {
        HeckeOp<R> hat = hat_operator(op);
        CHECK(hat.q == op.q);
        CHECK(validate_operator(hat).ok);
        CHECK(hat_operator(hat).R == op.R);
    }
}

TEST_CASE("tensor representation respects the algebra product") {
    HeckeOp<R> op = make_standard(2, p2);
    const int n = 3;
    TensorRep<R> rep(op, n);
    HeckeAlgebra<R> h(n, op.q);
    // rho(ab) = rho(a) rho(b) on structured elements
    Vec<R> a = h.gen_mul(0, h.one());
    Vec<R> b = h.murphy(3);
    Vec<R> c = h.casimir_element();
    for (const auto& [x, y] : {std::pair{a, b}, {b, c}, {c, a}})
        CHECK(rep.elem_matrix(h.mul(x, y)) == rep.elem_matrix(x) * rep.elem_matrix(y));
    // two reduced words of the longest element give the same action
    Vec<R> v(rep.dim(), R::zero());
    v[5] = R::one();
    v[2] = -p2;
    CHECK(rep.apply_word({0, 1, 0}, v) == rep.apply_word({1, 0, 1}, v));
    // the Murphy action agrees with the generic element action
    for (int k = 2; k <= n; ++k) {
        Matrix<R> direct = rep.elem_matrix(h.murphy(k));
        Matrix<R> routed(rep.dim(), rep.dim());
        for (std::size_t col = 0; col < rep.dim(); ++col) {
            Vec<R> e(rep.dim(), R::zero());
            e[col] = R::one();
            Vec<R> out = rep.apply_murphy(k, e);
            for (std::size_t row = 0; row < rep.dim(); ++row)
                routed.at(row, col) = std::move(out[row]);
        }
        CHECK(direct == routed);
    }
}

TEST_CASE("dual structure maps reverse products") {
    HeckeOp<R> op = make_standard(2, p2);
    const int n = 3;
    HeckeAlgebra<R> h(n, op.q);
    Vec<R> a = h.gen_mul(1, h.one());
    Vec<R> b = h.murphy(2);
    Vec<R> ab = h.mul(a, b);
    CHECK(sigma_matrix(op, n, ab) == sigma_matrix(op, n, b) * sigma_matrix(op, n, a));
    CHECK(tau_matrix(op, n, ab) == tau_matrix(op, n, b) * tau_matrix(op, n, a));
}

TEST_CASE("standard operator multiplicities count semistandard tableaux") {
    for (int d = 1; d <= 4; ++d) {
        HeckeOp<R> op = make_standard(d, p2);
        int depth = (d <= 3) ? 4 : 3;
        auto table = multiplicity_table(op, depth);
        for (int n = 1; n <= depth; ++n)
            for (const auto& [lam, mult] : table[static_cast<std::size_t>(n - 1)])
                CHECK(static_cast<std::uint64_t>(mult) == ssyt_count(lam, d));
    }
}

TEST_CASE("super operator multiplicities count hook tableaux") {
    {
        HeckeOp<R> op = make_super(1, 1, p2);
        auto table = multiplicity_table(op, 4);
        for (const auto& row : table)
            for (const auto& [lam, mult] : row)
                CHECK(static_cast<std::uint64_t>(mult) == hook_ssyt_count(lam, 1, 1));
    }
    {
        HeckeOp<R> op = make_super(2, 1, p2);
        auto table = multiplicity_table(op, 3);
        CHECK(mult_of(table[0], P("1")) == 3);
        CHECK(mult_of(table[1], P("2")) == 5);
        CHECK(mult_of(table[1], P("1,1")) == 4);
        CHECK(mult_of(table[2], P("3")) == 7);
        CHECK(mult_of(table[2], P("2,1")) == 8);
        CHECK(mult_of(table[2], P("1,1,1")) == 4);
        for (const auto& row : table)
            for (const auto& [lam, mult] : row)
                CHECK(static_cast<std::uint64_t>(mult) == hook_ssyt_count(lam, 2, 1));
    }
}

TEST_CASE("single-shape multiplicity agrees with the table") {
    HeckeOp<R> op = make_standard(2, p2);
    CHECK(multiplicity(op, P("2,1")) == 2);
    CHECK(multiplicity(op, P("1,1,1")) == 0);
    CHECK(multiplicity(op, P("3")) == 4);
}

TEST_CASE("biranks of the builtin families") {
    auto br = [](const HeckeOp<R>& op) { return birank_auto(op); };
    Birank b = br(make_standard(2, p2));
    CHECK(b.r == 2);
    CHECK(b.s == 0);
    b = br(make_standard(3, p2));
    CHECK(b.r == 3);
    CHECK(b.s == 0);
    b = br(make_super(1, 1, p2));
    CHECK(b.r == 1);
    CHECK(b.s == 1);
    b = br(make_super(2, 1, p2));
    CHECK(b.r == 2);
    CHECK(b.s == 1);
    b = br(make_flip<R>(2));
    CHECK(b.r == 2);
    CHECK(b.s == 0);
    b = br(make_superflip<R>(1, 1));
    CHECK(b.r == 1);
    CHECK(b.s == 1);
}
