#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tpoly/kazarian.hpp"

using namespace tpoly;

namespace {

std::vector<ColumnSpec> porteous_k0_columns(int smax)
{
    std::vector<ColumnSpec> cols;
    for (int s = 0; s <= smax; ++s)
        cols.push_back({s * s, DegreeMultiset::copies(2, s), 1, "U(" + std::to_string(s) + ")^2"});
    return cols;
}

std::vector<ColumnSpec> singularity_columns()
{
    std::vector<ColumnSpec> cols;
    cols.push_back({0, DegreeMultiset::of({}), 1, "A0"});
    for (int i = 1; i <= 3; ++i)
        cols.push_back({i, DegreeMultiset::of({1}), 1, "A" + std::to_string(i)});
    return cols;
}

}  // namespace

TEST_CASE("e1 ranks for the square-matrix page")
{
    RankTable t = e1_ranks(porteous_k0_columns(3), 13);
    // column s=2 carries rank 14 in fiber degree 4, i.e. total degree 8
    CHECK(t.fiber_entry(4, 2) == 14);
    CHECK(t.entry(8, 2) == 14);
    // column s=1 in total degrees 1..5 reads 1,2,3,4,5
    for (int d = 1; d <= 5; ++d)
        CHECK(t.entry(d, 1) == d);
    // a column with no generators has a single corner 1
    RankTable corner = e1_ranks({{3, DegreeMultiset::of({}), 1, ""}}, 6);
    for (int d = 0; d <= 6; ++d)
        CHECK(corner.entry(d, 0) == (d == 3 ? 1 : 0));
}

TEST_CASE("the printed square-matrix table, cell for cell")
{
    RankTable t = e1_ranks(porteous_k0_columns(3), 13);
    // fiber rows 0,1,2,3,4 by column s=0..3; the skew-diagonal sums pin the
    // (s=3, fiber 4) cell at 18: p(13) = 101 = 13 + 70 + 18
    long long want[4][5] = {{1, 0, 0, 0, 0},
                            {1, 2, 3, 4, 5},
                            {1, 2, 5, 8, 14},
                            {1, 2, 5, 10, 18}};
    for (std::size_t s = 0; s < 4; ++s)
        for (int f = 0; f <= 4; ++f)
            CHECK(t.fiber_entry(f, s) == want[s][f]);
    std::vector<long long> res = diagonal_check(t, DegreeMultiset::all_degrees(), 13);
    for (int d = 0; d <= 13; ++d)
        CHECK(res[std::size_t(d)] == 0);
}

TEST_CASE("skew diagonal consistency")
{
    SUBCASE("porteous k=0 diagonals vanish up to t=8")
    {
        RankTable t = e1_ranks(porteous_k0_columns(2), 8);
        std::vector<long long> res = diagonal_check(t, DegreeMultiset::all_degrees(), 8);
        for (int d = 0; d <= 8; ++d)
            CHECK(res[std::size_t(d)] == 0);
    }
    SUBCASE("dropping the s=2 column leaves its corner at t=4")
    {
        RankTable t = e1_ranks(porteous_k0_columns(1), 8);
        std::vector<long long> res = diagonal_check(t, DegreeMultiset::all_degrees(), 4);
        CHECK(res[0] == 0);
        CHECK(res[3] == 0);
        CHECK(res[4] == 1);
    }
    SUBCASE("empty table against the empty ambient")
    {
        RankTable t = e1_ranks({}, 3);
        std::vector<long long> res = diagonal_check(t, DegreeMultiset::of({}), 3);
        CHECK(res[0] == 1);  // pi(0, {}) = 1 has nothing to cancel it
        CHECK(res[1] == 0);
        CHECK(res[2] == 0);
    }
}

TEST_CASE("stratum count prediction")
{
    SUBCASE("the singularity table forces two codimension-4 strata")
    {
        CHECK(predict_stratum_count(singularity_columns(), DegreeMultiset::all_degrees(), 4) ==
              2);
    }
    SUBCASE("porteous with s=0,1 known predicts the single Sigma2")
    {
        CHECK(predict_stratum_count(porteous_k0_columns(1), DegreeMultiset::all_degrees(), 4) ==
              1);
    }
    SUBCASE("one codimension-1 stratum from the trivial column")
    {
        std::vector<ColumnSpec> cols{{0, DegreeMultiset::of({}), 1, ""}};
        CHECK(predict_stratum_count(cols, DegreeMultiset::all_degrees(), 1) == 1);
    }
    SUBCASE("columns at or above the target are rejected")
    {
        CHECK_THROWS_AS(
            predict_stratum_count(porteous_k0_columns(2), DegreeMultiset::all_degrees(), 4),
            Error);
    }
}

TEST_CASE("euler partition identity")
{
    for (int n = 1; n <= 30; ++n)
        CHECK(euler_identity_check(n));
    // n = 4 by hand: p(4) = 5 = pi(3,{1,1}) + pi(0,{1,1,2,2}) = 4 + 1
    CHECK(partition_count(3, DegreeMultiset::of({1, 1})) == 4);
    CHECK(partition_count(0, DegreeMultiset::of({1, 1, 2, 2})) == 1);
    // excluded boundary, by convention
    CHECK(euler_identity_check(0));
    CHECK(euler_identity_check(1));
}
