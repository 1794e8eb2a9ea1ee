#include <doctest.h>

#include <random>
#include <vector>

#include "pcore/abacus.hpp"
#include "pcore/partition.hpp"

using namespace pcore;

namespace {

const std::vector<long long> kFig1Parts = {26, 22, 18, 14, 14, 11, 11, 8, 8, 8, 6, 6, 6, 4, 4,
                                           4,  4,  3,  3,  3, 3,  2,  2, 2, 2, 1, 1, 1, 1};

Partition random_partition(std::mt19937& rng, int max_len, long long max_part) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<long long> part_dist(1, max_part);
    std::vector<long long> parts(static_cast<std::size_t>(len_dist(rng)));
    for (auto& part : parts) part = part_dist(rng);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

// The abacus route to the p-core property: beads topmost on their runners.
bool is_p_core_by_abacus(const Partition& lambda, int p) {
    try {
        bead_multiplicities(lambda, p);
        return true;
    } catch (const NotPCoreError&) {
        return false;
    }
}

}  // namespace

TEST_CASE("partition invariants are enforced at construction") {
    CHECK_NOTHROW(Partition(std::vector<long long>{}));
    CHECK_NOTHROW(Partition({3, 3, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
    CHECK_THROWS_AS(Partition({2, 0}), PreconditionError);
    CHECK_THROWS_AS(Partition({-1}), PreconditionError);
}

TEST_CASE("size sums the parts") {
    CHECK(size(Partition(kFig1Parts)) == 198);
    CHECK(size(Partition{}) == 0);
    CHECK(size(Partition({4, 2, 2, 1, 1})) == 10);
}

TEST_CASE("hook lengths match direct arm+leg+1 counts") {
    CHECK(hook_lengths(Partition({1})) == std::vector<std::vector<long long>>{{1}});
    CHECK(hook_lengths(Partition({2, 1})) == std::vector<std::vector<long long>>{{3, 1}, {1}});

    const auto grid = hook_lengths(Partition({4, 2, 2, 1, 1}));
    REQUIRE(grid.size() == 5);
    std::vector<long long> first_column;
    for (const auto& row : grid) first_column.push_back(row.front());
    CHECK(first_column == std::vector<long long>({8, 5, 4, 2, 1}));
}

TEST_CASE("first-column hooks are the beta-numbers") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition lambda = random_partition(rng, 10, 30);
        const auto grid = hook_lengths(lambda);
        const long long len = lambda.length();
        for (long long k = 1; k <= len; ++k)
            CHECK(grid[static_cast<std::size_t>(k - 1)].front() ==
                  lambda.parts()[static_cast<std::size_t>(k - 1)] + len - k);
    }
}

TEST_CASE("size equals the number of cells in the hook grid") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Partition lambda = random_partition(rng, 8, 20);
        const auto grid = hook_lengths(lambda);
        int128 cells = 0;
        for (const auto& row : grid) cells += static_cast<int128>(row.size());
        CHECK(cells == size(lambda));
    }
}

TEST_CASE("p-core predicate") {
    CHECK(is_p_core(Partition({4, 2, 2, 1, 1}), 3));
    CHECK(is_p_core(Partition{}, 5));
    for (int p : {2, 3, 5, 7})
        CHECK_FALSE(is_p_core(Partition({p}), p));  // a single row of length p
    CHECK_THROWS_AS(is_p_core(Partition({1}), 1), PreconditionError);
}

TEST_CASE("p' predicate looks only at parts") {
    CHECK(is_p_prime_partition(Partition(kFig1Parts), 5));
    CHECK_FALSE(is_p_prime_partition(Partition({5, 1}), 5));
    CHECK(is_p_prime_partition(Partition{}, 7));
    CHECK_THROWS_AS(is_p_prime_partition(Partition({1}), 0), PreconditionError);
}

TEST_CASE("hook route and abacus route to p-core agree") {
    std::mt19937 rng(99);
    for (int p : {2, 3, 4, 5, 7, 9, 11}) {
        for (int trial = 0; trial < 300; ++trial) {
            const Partition lambda = random_partition(rng, 12, 50);
            CHECK(is_p_core(lambda, p) == is_p_core_by_abacus(lambda, p));
        }
    }
}
