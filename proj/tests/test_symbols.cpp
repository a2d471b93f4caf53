#include "durfee/symbols.hpp"
#include "durfee/genfun.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace durfee;

namespace {

MarkedDurfeeSymbol2 make_symbol(int side, std::vector<int> t2, std::vector<int> t1,
                                std::vector<int> b2, std::vector<int> b1) {
    MarkedDurfeeSymbol2 s;
    s.side = side;
    s.top2 = std::move(t2);
    s.top1 = std::move(t1);
    s.bottom2 = std::move(b2);
    s.bottom1 = std::move(b1);
    return s;
}

}  // namespace

TEST_CASE("partition to Durfee symbol bijection", "[symbols]") {
    Partition p({6, 4, 4, 2, 1});
    auto s = partition_to_durfee(p);
    CHECK(s.side == 3);
    CHECK(s.top == std::vector<int>{3, 1, 1});
    CHECK(s.bottom == std::vector<int>{2, 1});
    CHECK(s.size() == 17);
    CHECK(durfee_to_partition(s) == p);
    CHECK(static_cast<int>(s.top.size()) - static_cast<int>(s.bottom.size()) == rank(p));

    auto one = partition_to_durfee(Partition({1}));
    CHECK(one.side == 1);
    CHECK(one.top.empty());
    CHECK(one.bottom.empty());
    CHECK(durfee_to_partition(one) == Partition({1}));

    for (int n = 0; n <= 20; ++n) {
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition q(parts);
            auto sym = partition_to_durfee(q);
            CHECK(sym.size() == n);
            for (int a : sym.top) CHECK(a <= sym.side);
            for (int b : sym.bottom) CHECK(b <= sym.side);
            CHECK(durfee_to_partition(sym) == q);
            CHECK(static_cast<int>(sym.top.size()) - static_cast<int>(sym.bottom.size()) ==
                  rank(q));
        });
    }
}

TEST_CASE("2-marked validity conditions", "[symbols]") {
    // Smallest valid symbol: size 2.
    auto smallest = make_symbol(1, {}, {1}, {}, {});
    CHECK(validate(smallest).valid);
    CHECK(smallest.size() == 2);

    // No subscript-1 entry in the top row: condition 2.
    auto no_sub1 = make_symbol(2, {2}, {}, {}, {});
    auto v2 = validate(no_sub1);
    CHECK_FALSE(v2.valid);
    CHECK(v2.violation.find("condition 2") != std::string::npos);

    // Bottom subscript-1 part above M: condition 3.
    auto bad_b1 = make_symbol(3, {}, {1}, {}, {2});
    auto v3 = validate(bad_b1);
    CHECK_FALSE(v3.valid);
    CHECK(v3.violation.find("condition 3") != std::string::npos);

    // Bottom subscript-2 part below M: condition 3.
    auto bad_b2 = make_symbol(3, {}, {2}, {1}, {});
    CHECK_FALSE(validate(bad_b2).valid);

    // Interval endpoints are inclusive: bottom2 == M and bottom2 == side.
    CHECK(validate(make_symbol(3, {}, {2}, {2}, {})).valid);
    CHECK(validate(make_symbol(3, {}, {2}, {3}, {})).valid);
    // Likewise bottom1 == M and top2 == M.
    CHECK(validate(make_symbol(3, {2}, {2}, {}, {2})).valid);

    // Parts must be within [1, side].
    CHECK_FALSE(validate(make_symbol(2, {}, {3}, {}, {})).valid);
    CHECK_FALSE(validate(make_symbol(0, {}, {}, {}, {})).valid);

    // Rows must be non-increasing.
    auto increasing = make_symbol(3, {}, {1, 2}, {}, {});
    CHECK_FALSE(validate(increasing).valid);
}

TEST_CASE("full rank", "[symbols]") {
    auto smallest = make_symbol(1, {}, {1}, {}, {});
    CHECK(full_rank(smallest) == 0);

    // tau1=2, beta1=1, tau2=3, beta2=1: rho1 = 0, rho2 = 2, full rank 4.
    auto s = make_symbol(2, {2, 2, 2}, {1, 1}, {2}, {1});
    REQUIRE(validate(s).valid);
    CHECK(first_rank(s) == 0);
    CHECK(second_rank(s) == 2);
    CHECK(full_rank(s) == 4);

    CHECK_THROWS_AS(full_rank(make_symbol(2, {2}, {}, {}, {})), std::domain_error);
}

TEST_CASE("enumeration of 2-marked symbols", "[symbols]") {
    CHECK(all_marked_symbols(0).empty());
    CHECK(all_marked_symbols(1).empty());

    auto n2 = all_marked_symbols(2);
    REQUIRE(n2.size() == 1);
    CHECK(n2[0] == make_symbol(1, {}, {1}, {}, {}));
    CHECK(full_rank(n2[0]) == 0);

    // Size 3: four symbols with full ranks {1, 2, -1, -2}.
    auto n3 = all_marked_symbols(3);
    REQUIRE(n3.size() == 4);
    std::multiset<int> ranks;
    for (const auto& s : n3) ranks.insert(full_rank(s));
    CHECK(ranks == std::multiset<int>{-2, -1, 1, 2});

    // Every enumerated symbol is valid, has the right size, and is distinct.
    for (int n = 0; n <= 16; ++n) {
        std::set<MarkedDurfeeSymbol2> seen;
        for_each_marked_symbol(n, [&](const MarkedDurfeeSymbol2& s) {
            CHECK(validate(s).valid);
            CHECK(s.size() == n);
            CHECK(seen.insert(s).second);
        });
    }

    // Totals match the coefficient of q^n in R2(1,1;q) (t = 1 collapse).
    auto R2_total = full_rank_gf_double_sum(1, 20);
    for (int n = 0; n <= 20; ++n) {
        Integer count = 0;
        for_each_marked_symbol(n, [&](const MarkedDurfeeSymbol2&) { count += 1; });
        CHECK(count == R2_total.coeff(n).component(0));
    }
}

TEST_CASE("conjugation of 2-marked symbols", "[symbols]") {
    for (int n = 0; n <= 14; ++n) {
        for_each_marked_symbol(n, [&](const MarkedDurfeeSymbol2& s) {
            auto c = conjugate(s);
            CHECK(validate(c).valid);
            CHECK(c.size() == n);
            CHECK(first_rank(c) == -first_rank(s));
            CHECK(second_rank(c) == -second_rank(s));
            CHECK(conjugate(c) == s);
        });
    }

    // A symbol with rho1 = rho2 = 0 maps to one with rho1 = rho2 = 0.
    auto balanced = make_symbol(2, {2}, {1, 1}, {1}, {1});
    REQUIRE(validate(balanced).valid);
    REQUIRE(full_rank(balanced) == 0);
    CHECK(full_rank(conjugate(balanced)) == 0);
}

TEST_CASE("full rank census and exact counts", "[symbols]") {
    // NF2(1;n) = NF2(2;n) for n <= 25 (Theorem 1.3(3)); frozen heads from the
    // independent census.
    auto nf1 = nf2_exact(1, 25);
    auto nf2_ = nf2_exact(2, 25);
    CHECK(nf1 == nf2_);
    const long long expect[] = {0,  0,  0,  1,   1,   2,   4,   6,   9,
                                14, 20, 29, 42,  58,  80,  110, 148, 198,
                                266, 349, 458, 597, 773, 994, 1277, 1624};
    for (int n = 0; n <= 25; ++n) CHECK(nf1[static_cast<size_t>(n)] == Integer(expect[n]));

    // Sum over r of NF2(r,t;2) is 1.
    auto table = FullRankTable::enumeration(7, 6);
    Integer sum = 0;
    for (int r = 0; r < 7; ++r) sum += table.at(r, 2);
    CHECK(sum == 1);

    // Frozen NF2(r,5;n) rows for n <= 12.
    auto t5 = FullRankTable::enumeration(5, 12);
    const long long rows5[13][5] = {
        {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0},  {0, 1, 1, 1, 1},
        {2, 2, 2, 2, 2}, {5, 4, 4, 4, 4}, {8, 8, 8, 8, 8},  {14, 14, 14, 14, 14},
        {23, 24, 24, 24, 24}, {38, 38, 38, 38, 38}, {61, 60, 60, 60, 60},
        {91, 91, 91, 91, 91}, {138, 137, 137, 137, 137}};
    for (int n = 0; n <= 12; ++n)
        for (int r = 0; r < 5; ++r) CHECK(t5.at(r, n) == Integer(rows5[n][r]));

    // Conjugation symmetry of the table.
    for (int n = 0; n <= 12; ++n)
        for (int r = 1; r < 5; ++r) CHECK(t5.at(r, n) == t5.at(5 - r, n));
}

TEST_CASE("pretty printing and CSV", "[symbols]") {
    auto s = make_symbol(3, {3}, {1}, {}, {2, 1});
    // Note: (3_2 1_1 / 2_1 1_1)_3 -- bottom-row subscript-1 parts print last.
    CHECK(s.str() == "(3_2 1_1 / 2_1 1_1)_3");

    auto sym = make_symbol(3, {3}, {1}, {2}, {});
    CHECK(sym.str() == "(3_2 1_1 / 2_2)_3");

    auto table = FullRankTable::enumeration(3, 3);
    std::ostringstream os;
    table.write_csv(os);
    CHECK(os.str() ==
          "t,n,r,count\n"
          "3,0,0,0\n"
          "3,0,1,0\n"
          "3,0,2,0\n"
          "3,1,0,0\n"
          "3,1,1,0\n"
          "3,1,2,0\n"
          "3,2,0,1\n"
          "3,2,1,0\n"
          "3,2,2,0\n"
          "3,3,0,0\n"
          "3,3,1,2\n"
          "3,3,2,2\n");
}
