#include <doctest.h>

#include "facetlab/circulant.hpp"
#include "facetlab/moebius.hpp"
#include "helpers.hpp"

TEST_SUITE_BEGIN("moebius");

TEST_CASE("square: mu is -1 on points, +1 on edges, -1 on top") {
    fl::VertexSetFamily F = fl::vertex_set_closure(fl::polygon(4).matrix);
    fl::MoebiusTable t = fl::moebius_table(F, fl::TopMode::Artificial);
    CHECK(t.bottom == 1);
    for (size_t i = 0; i < F.members.size(); ++i) {
        int c = F.members[i].count();
        CHECK(t.mu[i] == (c == 1 ? -1 : +1));
    }
    CHECK(t.top == -1);  // -(1 + 4*(-1) + 4*(+1))
}

TEST_CASE("circulant interval values: mu(1)=-1, mu(2)=1, mu(s)=0 for 3<=s<=d") {
    // n >= 2d-1 keeps the family equal to all cyclic intervals of size <= d
    fl::VertexSetFamily F = fl::vertex_set_closure(fl::circulant(9, 4));
    fl::MoebiusTable t = fl::moebius_table(F, fl::TopMode::Artificial);
    for (size_t i = 0; i < F.members.size(); ++i) {
        int s = F.members[i].count();
        long long expect = s == 1 ? -1 : s == 2 ? 1 : 0;
        CHECK(t.mu[i] == expect);
    }
    CHECK(t.top == -1);  // -(1 + n*(-1) + n*(+1))
}

TEST_CASE("running example: mu(top) = 0") {
    CHECK(fl::moebius_number(fl::vertex_set_closure(fig1())) == 0);
}

TEST_CASE("moebius_number spot values") {
    CHECK(fl::moebius_number(fl::vertex_set_closure(fl::circulant(4, 3))) == 1);
    CHECK(fl::moebius_number(fl::vertex_set_closure(fl::cone(4).matrix)) == 0);
}

TEST_CASE("member-top mode vs artificial top") {
    fl::VertexSetFamily F = fl::vertex_set_closure(fig1());
    // {0,1,2,3} is the family maximum: the last member canonically
    int top = int(F.members.size()) - 1;
    fl::MoebiusTable t = fl::moebius_table(F, fl::TopMode::Member, top);
    CHECK(t.top == -1);  // the base facet's own interval: bounded square

    // with an artificial top above everything the number flips to 0
    CHECK(fl::moebius_table(F, fl::TopMode::Artificial).top == 0);

    // polygon(4) has no maximum: every member fails
    fl::VertexSetFamily P = fl::vertex_set_closure(fl::polygon(4).matrix);
    CHECK_THROWS_AS(fl::moebius_table(P, fl::TopMode::Member, 0), fl::Error);
}

TEST_CASE("euler oracle frozen values") {
    // polygon(4): f_0 = 8, f_1 = 8 -> -1 + 8 - 8 = -1
    CHECK(fl::euler_oracle(fl::vertex_set_closure(fl::polygon(4).matrix)) == -1);
    // fig1: -1 + 9 - 16 + 8 = 0
    CHECK(fl::euler_oracle(fl::vertex_set_closure(fig1())) == 0);
    // cone(3): single member
    CHECK(fl::euler_oracle(fl::vertex_set_closure(fl::cone(3).matrix)) == 0);
}

TEST_CASE("mu equals the reduced euler characteristic") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        fl::IncidenceMatrix A = random_matrix(3 + int(rng() % 5), 3 + int(rng() % 6), rng);
        fl::VertexSetFamily F = fl::vertex_set_closure(A);
        CHECK(fl::moebius_number(F) == fl::euler_oracle(F));
    }
    for (const auto& A :
         {fig1(), fl::circulant(4, 3), fl::polygon(12).matrix, fl::circulant(9, 4),
          fl::product(fl::segment(), fl::polygon(4)).matrix, fl::pyramid(fl::polygon(4)).matrix}) {
        fl::VertexSetFamily F = fl::vertex_set_closure(A);
        CHECK(fl::moebius_number(F) == fl::euler_oracle(F));
    }
}

TEST_CASE("moebius number is invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (const auto& A : {fig1(), fl::circulant(5, 3), fl::pyramid(fl::polygon(5)).matrix}) {
        long long base = fl::moebius_number(fl::vertex_set_closure(A));
        for (int t = 0; t < 15; ++t)
            CHECK(fl::moebius_number(fl::vertex_set_closure(shuffle_matrix(A, rng))) == base);
    }
}

TEST_CASE("families whose members share a vertex have mu = 0") {
    // order complex is a cone
    CHECK(fl::moebius_number(fl::vertex_set_closure(fl::cone(6).matrix)) == 0);
    CHECK(fl::moebius_number(fl::vertex_set_closure(fl::unbounded_prism(fl::polygon(5)).matrix)) ==
          0);
    fl::IncidenceMatrix A = fl::parse_incidence("3 4\n1110\n1011\n1101");
    bool share = true;
    for (const auto& r : A.rows) share = share && r.test(0);
    REQUIRE(share);
    CHECK(fl::moebius_number(fl::vertex_set_closure(A)) == 0);
}

TEST_CASE("chain cap stops the oracle") {
    fl::VertexSetFamily F = fl::vertex_set_closure(fl::simplex(6).matrix);
    CHECK_THROWS_AS(fl::euler_oracle(F, 100), fl::Error);
}

TEST_CASE("chain-count companion matches the oracle's count") {
    // chains of polygon(4): 8 singles + 8 pairs = 16
    fl::VertexSetFamily F = fl::vertex_set_closure(fl::polygon(4).matrix);
    auto mc = fl::moebius_table_with_chain_count(F, fl::TopMode::Artificial, 1'000'000);
    CHECK(mc.chains == 16);
    CHECK(!mc.capped);
    CHECK(mc.table.top == -1);

    // fig1: 9 + 16 + 8 = 33
    auto mc2 = fl::moebius_table_with_chain_count(fl::vertex_set_closure(fig1()),
                                                  fl::TopMode::Artificial, 1'000'000);
    CHECK(mc2.chains == 33);

    auto capped = fl::moebius_table_with_chain_count(F, fl::TopMode::Artificial, 10);
    CHECK(capped.capped);
}

TEST_SUITE_END();
