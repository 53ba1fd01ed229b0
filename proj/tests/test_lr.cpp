#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "eigencone/lr.hpp"
#include "oracle_helpers.hpp"

using namespace eigencone;

namespace {

// All partitions with at most `rows` parts, each part at most `cap`.
std::vector<Partition> boxed_partitions(int rows, int cap) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.emplace_back(std::vector<int>(cur));
        if (row == rows) return;
        for (int v = std::min(maxpart, cap); v >= 1; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, cap);
    return out;
}

}  // namespace

TEST_CASE("single cell products") {
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
}

TEST_CASE("identity and weight gates") {
    for (const auto& a : {Partition({}), Partition({1}), Partition({3, 1}), Partition({2, 2, 1})}) {
        CHECK(lr_coefficient(a, Partition({}), a) == 1);
        CHECK(lr_coefficient(Partition({}), a, a) == 1);
    }
    CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({2})) == 0);
    CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({2, 2})) == 0);
    // gamma must contain alpha
    CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 2})) == 0);
}

TEST_CASE("multiplicity two at the first interesting size") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    CHECK(oracle::brute_lr(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
}

TEST_CASE("tensor decomposition tables") {
    auto one = tensor_decompose(Partition({1}), Partition({1}), 2);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == std::pair{Partition({2}), Multiplicity(1)});
    CHECK(one[1] == std::pair{Partition({1, 1}), Multiplicity(1)});

    auto row1 = tensor_decompose(Partition({1}), Partition({1}), 1);
    REQUIRE(row1.size() == 1);
    CHECK(row1[0] == std::pair{Partition({2}), Multiplicity(1)});

    // (2,1) x (2,1) in at most 3 rows: five shapes, total multiplicity six,
    // every emitted weight equal to |alpha| + |beta|.
    auto table = tensor_decompose(Partition({2, 1}), Partition({2, 1}), 3);
    REQUIRE(table.size() == 5);
    std::map<Partition, Multiplicity> got(table.begin(), table.end());
    CHECK(got[Partition({4, 2})] == 1);
    CHECK(got[Partition({4, 1, 1})] == 1);
    CHECK(got[Partition({3, 3})] == 1);
    CHECK(got[Partition({3, 2, 1})] == 2);
    CHECK(got[Partition({2, 2, 2})] == 1);
    Multiplicity total = 0;
    for (const auto& [g, c] : table) {
        CHECK(g.weight() == 6);
        total += c;
    }
    CHECK(total == 6);
}

TEST_CASE("tensor decomposition row bound validation") {
    CHECK_THROWS_AS(tensor_decompose(Partition({1, 1}), Partition({1}), 1),
                    std::invalid_argument);
}

TEST_CASE("library agrees with the polynomial oracle, exhaustively") {
    // Both factors range over partitions in a 3x3 box with weight <= 5; the
    // oracle computes the full product by polynomial algebra, a different
    // route than the library's tableau backtracking.
    auto shapes = boxed_partitions(3, 3);
    for (const auto& a : shapes) {
        if (a.weight() > 5) continue;
        for (const auto& b : shapes) {
            if (b.weight() > 5) continue;
            auto expect = oracle::brute_tensor(a, b);
            auto got = tensor_decompose(a, b, static_cast<int>(a.size() + b.size() + 1));
            std::map<std::vector<int>, long long> gotmap;
            for (const auto& [g, c] : got)
                gotmap[oracle::parts_of(g)] = static_cast<long long>(c);
            CHECK(gotmap == expect);
        }
    }
}

TEST_CASE("symmetry in the factors") {
    auto shapes = boxed_partitions(3, 3);
    for (const auto& a : shapes)
        for (const auto& b : shapes) {
            if (a.weight() + b.weight() > 8) continue;
            for (const auto& [g, c] : tensor_decompose(a, b, 6))
                CHECK(lr_coefficient(b, a, g) == c);
        }
}

TEST_CASE("multi factor coefficients") {
    CHECK(multi_lr({Partition({2, 1})}, Partition({2, 1})) == 1);
    CHECK(multi_lr({Partition({2, 1})}, Partition({3})) == 0);
    CHECK(multi_lr({Partition({1}), Partition({1}), Partition({1})}, Partition({3})) == 1);
    CHECK(multi_lr({Partition({1}), Partition({1}), Partition({1})}, Partition({2, 1})) == 2);
    CHECK(multi_lr({Partition({1}), Partition({1}), Partition({1})}, Partition({1, 1, 1})) == 1);
    CHECK(multi_lr({Partition({1}), Partition({1})}, Partition({2})) ==
          lr_coefficient(Partition({1}), Partition({1}), Partition({2})));
    CHECK(multi_lr({Partition({2}), Partition({1})}, Partition({2, 2})) == 0);
}

TEST_CASE("saturation scaling preserves nonvanishing") {
    CHECK(saturation_pair(Partition({1}), Partition({1}), Partition({2}), 2) ==
          std::pair{true, true});
    CHECK(saturation_pair(Partition({1}), Partition({1}), Partition({3}), 5) ==
          std::pair{false, false});
    CHECK(saturation_pair(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1}), 3) ==
          std::pair{true, true});

    auto shapes = boxed_partitions(2, 2);
    for (const auto& a : shapes)
        for (const auto& b : shapes)
            for (const auto& g : boxed_partitions(4, 4)) {
                if (g.weight() != a.weight() + b.weight()) continue;
                for (int N : {2, 3}) {
                    auto [plain, scaled] = saturation_pair(a, b, g, N);
                    CHECK(plain == scaled);
                }
            }
}

TEST_CASE("multiplicity overflow is reported") {
    CHECK_THROWS_AS(checked_mul(Multiplicity(1) << 63, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add(~Multiplicity(0), 1), std::overflow_error);
    CHECK(checked_mul(3, 4) == 12);
    CHECK(checked_add(3, 4) == 7);
}
