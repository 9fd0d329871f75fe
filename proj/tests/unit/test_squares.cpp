#include "doctest.h"
#include "swaprobust/errors.hpp"
#include "swaprobust/squares.hpp"

using namespace swaprobust;

TEST_CASE("little squares reproduce the rotation table") {
    CHECK(little_square(3, 0).entries.row(1) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(little_square(3, 1).entries.row(1) == std::vector<std::int64_t>{7, 4, 1});
    CHECK(little_square(3, 2).entries.row(1) == std::vector<std::int64_t>{9, 8, 7});
    CHECK(little_square(3, 3).entries.row(1) == std::vector<std::int64_t>{3, 6, 9});
    for (int r = 0; r < 4; ++r) CHECK(little_square(1, r).entries.cells == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(little_square(0, 0), InvalidArgument);
    CHECK_THROWS_AS(little_square(3, 4), InvalidArgument);
}

TEST_CASE("little square lines are single 1-APs") {
    for (int q = 1; q <= 6; ++q) {
        for (int r = 0; r < 4; ++r) {
            auto ls = little_square(q, r).entries;
            for (int k = 1; k <= q; ++k) {
                for (auto line : {ls.row(k), ls.column(k)}) {
                    std::int64_t step = q == 1 ? 0 : line[1] - line[0];
                    for (int i = 1; i < q; ++i) CHECK(line[i] - line[i - 1] == step);
                }
            }
        }
    }
}

TEST_CASE("base square") {
    Square b = base_square();
    CHECK(b.row(1) == std::vector<std::int64_t>{1, 6, 11, 16});
    for (int k = 1; k <= 4; ++k) {
        std::int64_t rs = 0, cs = 0;
        for (auto x : b.row(k)) rs += x;
        for (auto x : b.column(k)) cs += x;
        CHECK(rs == 34);
        CHECK(cs == 34);
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK((b.at(i, j) <= 8) == ((i <= 2) == (j <= 2)));
}

TEST_CASE("weaving square q=3 spot values") {
    auto w = weaving_square(3).entries;
    CHECK(w.at(1, 1) == 1);
    CHECK(w.at(1, 4) == 52);
    CHECK(w.at(4, 1) == 57);
    CHECK(w.at(12, 12) == 27);
    auto rep = check_weaving(w);
    CHECK(rep.pass);
    CHECK(rep.line_sum == 870);
    CHECK(weaving_square(1).entries.cells == base_square().cells);
    CHECK(check_weaving(weaving_square(1)).line_sum == 34);
    CHECK_THROWS_AS(weaving_square(0), InvalidArgument);
}

TEST_CASE("mutated weaving square is caught with a witness") {
    auto w = weaving_square(3).entries;
    std::swap(w.at(1, 1), w.at(1, 2));
    auto rep = check_weaving(w);
    CHECK_FALSE(rep.pass);
    // Swapping inside row 1 keeps its sum and value set, so the column checks fire.
    CHECK_FALSE(rep.property[1].ok);
    CHECK(rep.property[1].witness == "column 1");

    auto w2 = weaving_square(2).entries;
    std::swap(w2.at(1, 1), w2.at(5, 5));  // both low entries; sums change
    CHECK_FALSE(check_weaving(w2).pass);
    auto w3 = weaving_square(2).entries;
    std::swap(w3.at(1, 1), w3.at(1, 5));  // low/high exchange breaks property (4)
    CHECK_FALSE(check_weaving(w3).property[3].ok);
}

TEST_CASE("weaving squares q in [1,16] pass all properties") {
    for (int q = 1; q <= 16; ++q) {
        auto rep = check_weaving(weaving_square(q));
        CHECK(rep.pass);
        CHECK(rep.line_sum == 32LL * q * q * q + 2 * q);
    }
}

TEST_CASE("csv dump") { CHECK(square_to_csv(little_square(2, 0).entries) == "1,2\n3,4\n"); }
