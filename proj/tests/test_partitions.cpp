#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qmat/error.hpp>
#include <qmat/partitions.hpp>

using namespace qmat;

namespace {
Partition P(const std::string& s) { return Partition::from_string(s); }
}  // namespace

TEST_CASE("partition counts match the classical series") {
    // p(n) for n = 0..6: 1, 1, 2, 3, 5, 7, 11
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(2).size() == 2);
    CHECK(partitions_of(3).size() == 3);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
}

TEST_CASE("string round trips and the empty partition") {
    CHECK(P("3,1").to_string() == "3,1");
    CHECK(P("-").empty());
    CHECK(P("-").to_string() == "-");
    CHECK(P("4,2,1").weight() == 7);
    CHECK(P("4,2,1").length() == 3);
    CHECK_THROWS_AS(P("1,3"), Error);  // parts must be weakly decreasing
}

TEST_CASE("conjugation and containment") {
    CHECK(P("3,1").conjugate() == P("2,1,1"));
    CHECK(P("2,2").conjugate() == P("2,2"));
    CHECK(P("4").conjugate() == P("1,1,1,1"));
    CHECK(P("-").conjugate() == P("-"));
    CHECK(P("3,2").contains(P("2,1")));
    CHECK(P("3,2").contains(P("-")));
    CHECK(!P("3,1").contains(P("2,2")));
    CHECK(rectangle_partition(2, 3) == P("3,3"));
    CHECK(rectangle_partition(3, 1) == P("1,1,1"));
}

TEST_CASE("standard tableau counts agree with the hook length formula") {
    CHECK(count_standard_tableaux(P("-")) == 1);
    CHECK(count_standard_tableaux(P("3")) == 1);
    CHECK(count_standard_tableaux(P("2,1")) == 2);
    CHECK(count_standard_tableaux(P("2,2")) == 2);
    CHECK(count_standard_tableaux(P("3,1")) == 3);
    CHECK(count_standard_tableaux(P("2,1,1")) == 3);
    CHECK(count_standard_tableaux(P("3,2")) == 5);
    CHECK(count_standard_tableaux(P("2,2,1")) == 5);
    CHECK(count_standard_tableaux(P("3,2,1")) == 16);
    CHECK(count_standard_tableaux(P("4,2")) == 9);
    CHECK(standard_tableaux(P("2,1")).size() == 2);
    // sum over shapes of f^2 = n!
    std::uint64_t total = 0;
    for (const Partition& lam : partitions_of(5)) {
        std::uint64_t f = count_standard_tableaux(lam);
        total += f * f;
    }
    CHECK(total == 120);
}

TEST_CASE("tableau contents are column minus row") {
    auto tabs = standard_tableaux(P("2,1"));
    REQUIRE(tabs.size() == 2);
    // the two standard tableaux of shape (2,1) have content vectors
    // (0,1,-1) and (0,-1,1) in some order
    std::vector<std::vector<int>> got;
    for (const auto& t : tabs) got.push_back(t.contents());
    std::vector<int> a{0, 1, -1}, b{0, -1, 1};
    CHECK(((got[0] == a && got[1] == b) || (got[0] == b && got[1] == a)));
}

TEST_CASE("Littlewood-Richardson spot values") {
    CHECK(lr_coefficient(P("1"), P("1"), P("2")) == 1);
    CHECK(lr_coefficient(P("1"), P("1"), P("1,1")) == 1);
    CHECK(lr_coefficient(P("2"), P("1,1"), P("3,1")) == 1);
    CHECK(lr_coefficient(P("2"), P("1,1"), P("2,1,1")) == 1);
    CHECK(lr_coefficient(P("2"), P("1,1"), P("2,2")) == 0);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("3,2,1")) == 2);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("4,2")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("3,3")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("2,2,2")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("4,1,1")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("2,2,1,1")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("2,1"), P("3,1,1,1")) == 1);
    CHECK(lr_coefficient(P("2"), P("2"), P("4")) == 1);
    CHECK(lr_coefficient(P("2"), P("2"), P("3,1")) == 1);
    CHECK(lr_coefficient(P("2"), P("2"), P("2,2")) == 1);
    CHECK(lr_coefficient(P("2"), P("2"), P("2,1,1")) == 0);
    CHECK(lr_coefficient(P("2,1"), P("1"), P("3,1")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("1"), P("2,2")) == 1);
    CHECK(lr_coefficient(P("2,1"), P("1"), P("2,1,1")) == 1);
}

TEST_CASE("semistandard tableau counts") {
    CHECK(ssyt_count(P("1"), 2) == 2);
    CHECK(ssyt_count(P("2"), 2) == 3);
    CHECK(ssyt_count(P("1,1"), 2) == 1);
    CHECK(ssyt_count(P("1,1"), 1) == 0);
    CHECK(ssyt_count(P("2,1"), 2) == 2);
    CHECK(ssyt_count(P("2,1"), 3) == 8);
    CHECK(ssyt_count(P("3,1"), 2) == 3);
    CHECK(ssyt_count(P("3,1"), 3) == 15);
    CHECK(ssyt_count(P("2,2"), 2) == 1);
    CHECK(ssyt_count(P("2,2"), 3) == 6);
    CHECK(ssyt_count(P("1,1,1"), 3) == 1);
    CHECK(ssyt_count(P("1,1,1"), 2) == 0);
    CHECK(ssyt_count(P("3,2"), 3) == 15);
    CHECK(ssyt_count(P("2,2,1"), 4) == 20);
    CHECK(ssyt_count(P("4,1"), 2) == 4);
}

TEST_CASE("hook semistandard tableau counts") {
    // (1|1): every hook shape counts 2, every non-hook 0
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n)) {
            bool hook = lam.length() <= 1 || lam.part(1) <= 1;
            CHECK(hook_ssyt_count(lam, 1, 1) == (hook ? 2u : 0u));
        }
    // (2|1) values
    CHECK(hook_ssyt_count(P("1"), 2, 1) == 3);
    CHECK(hook_ssyt_count(P("2"), 2, 1) == 5);
    CHECK(hook_ssyt_count(P("1,1"), 2, 1) == 4);
    CHECK(hook_ssyt_count(P("3"), 2, 1) == 7);
    CHECK(hook_ssyt_count(P("2,1"), 2, 1) == 8);
    CHECK(hook_ssyt_count(P("1,1,1"), 2, 1) == 4);
    CHECK(hook_ssyt_count(P("2,2"), 2, 1) == 4);
    CHECK(hook_ssyt_count(P("3,1"), 2, 1) == 12);
    CHECK(hook_ssyt_count(P("2,2,2"), 2, 1) == 0);
    CHECK(hook_ssyt_count(P("3,3"), 2, 1) == 4);
    // (1|2) is (2|1) of the conjugate
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(hook_ssyt_count(lam, 1, 2) == hook_ssyt_count(lam.conjugate(), 2, 1));
    // (2|2) spot values
    CHECK(hook_ssyt_count(P("2,1"), 2, 2) == 20);
    CHECK(hook_ssyt_count(P("3,1,1"), 2, 2) == 52);
    CHECK(hook_ssyt_count(P("2,2"), 2, 2) == 16);
    // (d|0) hook tableaux are ordinary semistandard tableaux
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(hook_ssyt_count(lam, 3, 0) == ssyt_count(lam, 3));
}

TEST_CASE("Pieri column sets") {
    auto ps = pieri_column_set(P("1"), 1);
    REQUIRE(ps.size() == 2);
    CHECK((ps[0] == P("1,1") || ps[1] == P("1,1")));
    CHECK((ps[0] == P("2") || ps[1] == P("2")));
    // adding a column of height 2 to (2,1)
    auto ps2 = pieri_column_set(P("2,1"), 2);
    // shapes: (3,2), (3,1,1), (2,2,1), (2,1,1,1)
    CHECK(ps2.size() == 4);
    for (const auto& mu : ps2) {
        CHECK(mu.weight() == 5);
        CHECK(mu.contains(P("2,1")));
    }
}

TEST_CASE("beta statistics and the dominance-style order") {
    CHECK(beta(P("2,1"), 1) == 2);
    CHECK(beta(P("2,1"), 2) == 3);
    CHECK(beta(P("3"), 2) == 2);
    CHECK(beta_geq(P("2,1"), P("2,1")));
    CHECK(beta_geq(P("2,2"), P("2,1")));
    CHECK(beta_geq(P("3,2,1"), P("2,2")));
    CHECK(!beta_geq(P("3"), P("1,1")));
}

TEST_CASE("determinantal ideal closure is the containment order filter") {
    PartitionSet gens{P("1,1")};
    auto closure = dideal_closure(gens, 3);
    // weight <= 3 partitions containing (1,1): (1,1), (2,1), (1,1,1)
    CHECK(closure.size() == 3);
    CHECK(closure.count(P("1,1")) == 1);
    CHECK(closure.count(P("2,1")) == 1);
    CHECK(closure.count(P("1,1,1")) == 1);
    CHECK(closure.count(P("3")) == 0);
}

TEST_CASE("hook support regions") {
    // Gamma_{1,0}: single row shapes only
    CHECK(gamma_rs_contains(1, 0, P("3")));
    CHECK(!gamma_rs_contains(1, 0, P("2,1")));
    // Gamma_{1,1}: hooks
    CHECK(gamma_rs_contains(1, 1, P("3,1,1")));
    CHECK(!gamma_rs_contains(1, 1, P("2,2")));
    // Gamma_{2,0}: at most two rows
    CHECK(gamma_rs_contains(2, 0, P("3,2")));
    CHECK(!gamma_rs_contains(2, 0, P("2,2,1")));
    // lambda outside Gamma_{r,s} iff it contains the (r+1) x (s+1) box
    for (const Partition& lam : partitions_up_to(5)) {
        bool outside = lam.contains(rectangle_partition(2, 2));
        CHECK(gamma_rs_contains(1, 1, lam) == !outside);
    }
}
