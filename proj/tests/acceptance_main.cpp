// Acceptance suite: reproduces the reference tables and the structural
// guarantees end to end, one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pcore/pcore.hpp"

namespace {

using namespace pcore;

struct CriterionFailure {
    std::string message;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw CriterionFailure{message};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Reference Table 1 rows as printed: first half, and the second half where
// the publication spells it out (empty for the rows it elides).
struct ReferenceRow {
    std::vector<long long> first_half;
    std::vector<long long> second_half;
};

const std::map<int, ReferenceRow> kReferenceRowMultiplicities = {
    {3, {{2}, {1}}},
    {5, {{4, 2}, {2, 3}}},
    {7, {{6, 2, 5}, {5, 2, 5}}},
    {11, {{10, 5, 7, 6, 8}, {8, 6, 7, 5, 9}}},
    {13, {{12, 5, 7, 10, 8, 11}, {11, 8, 10, 7, 5, 11}}},
    {17, {{16, 8, 9, 12, 15, 14, 8, 14}, {14, 8, 14, 15, 12, 9, 8, 15}}},
    {19, {{18, 8, 13, 14, 12, 14, 16, 10, 17}, {17, 10, 16, 14, 12, 14, 13, 8, 17}}},
    {23,
     {{22, 11, 15, 16, 19, 17, 18, 18, 14, 15, 20},
      {20, 15, 14, 18, 18, 17, 19, 16, 15, 11, 21}}},
    {29, {{28, 14, 17, 23, 23, 20, 22, 23, 26, 26, 20, 22, 17, 26}, {}}},
    {31, {{30, 14, 21, 20, 23, 26, 29, 27, 18, 26, 27, 23, 24, 19, 29}, {}}},
    {37, {{36, 17, 23, 27, 27, 30, 33, 28, 32, 33, 24, 34, 35, 29, 32, 26, 21, 35}, {}}},
    {41,
     {{40, 20, 25, 29, 35, 34, 30, 32, 32, 37, 38, 29, 37, 38, 26, 35, 36, 30, 26, 38}, {}}},
    {43,
     {{42, 20, 29, 31, 31, 34, 37, 40, 36, 37, 37, 30, 31, 38, 38, 29, 38, 38, 32, 28, 41},
      {}}},
};

// Reconstruct the full tuple; elided second halves follow the symmetry
// m_i = m_{p-i} (2 <= i <= p-2) and m_{p-1} = m_1 - 1.
std::vector<long long> full_reference_row(int p, const ReferenceRow& row) {
    std::vector<long long> m(static_cast<std::size_t>(p - 1), 0);
    for (std::size_t k = 0; k < row.first_half.size(); ++k) m[k] = row.first_half[k];
    if (!row.second_half.empty()) {
        for (std::size_t k = 0; k < row.second_half.size(); ++k)
            m[row.first_half.size() + k] = row.second_half[k];
        return m;
    }
    for (int i = static_cast<int>(row.first_half.size()) + 1; i <= p - 2; ++i)
        m[static_cast<std::size_t>(i - 1)] = m[static_cast<std::size_t>(p - i - 1)];
    m[static_cast<std::size_t>(p - 2)] = m[0] - 1;
    return m;
}

const std::vector<int> kPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

const std::vector<long long> kLargestSizes = {10,       198,      1726,     29773,    93334,
                                              502140,   1006386,  3312177,  14508172, 22313239,
                                              68032781, 127172362, 171105947};

const std::vector<long long> kUpperBounds = {10,       289,       2701,     50500,    146015,
                                             788476,   1577550,   5158945,  21523915, 32413475,
                                             95761401, 179231950, 239637580};

// Explicit-family column at every prime except 7, where the publication
// prints 326 but the construction gives 1326.
const std::map<int, long long> kExplicitSizes = {
    {3, 10},        {5, 187},       {11, 19134},    {13, 51655},   {17, 255671},
    {19, 496802},   {23, 1556950},  {29, 6234927},  {31, 9295954}, {37, 26832011},
    {41, 49641139}, {43, 66042990},
};

void criterion_table1() {
    const auto start = std::chrono::steady_clock::now();
    for (int p : kPrimes) {
        const RowMultiplicities solved = largest_row_multiplicities(p);
        const auto expected = full_reference_row(p, kReferenceRowMultiplicities.at(p));
        require(solved.counts() == expected,
                "row multiplicities differ from the reference at p = " + std::to_string(p));
    }
    const double elapsed = seconds_since(start);
    require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s, budget is 1 s");
}

void criterion_largest_sizes() {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < kPrimes.size(); ++k) {
        require(chartable_zero_threshold(kPrimes[k]) == static_cast<int128>(kLargestSizes[k]),
                "largest size differs at p = " + std::to_string(kPrimes[k]));
    }
    const double elapsed = seconds_since(start);
    require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s, budget is 1 s");
}

void criterion_upper_bounds() {
    for (std::size_t k = 0; k < kPrimes.size(); ++k)
        require(sharpened_upper_bound(kPrimes[k]) == static_cast<int128>(kUpperBounds[k]),
                "upper bound differs at p = " + std::to_string(kPrimes[k]));
}

void criterion_explicit_column() {
    for (const auto& [p, expected] : kExplicitSizes)
        require(explicit_family_size(p) == static_cast<int128>(expected),
                "explicit-family size differs at p = " + std::to_string(p));

    // p = 7: the computed value must be 1326 and the divergence from the
    // published 326 must be flagged, not reconciled.
    require(explicit_family_size(7) == 1326, "explicit-family size at p = 7 is not 1326");
    const std::string csv = table2_csv(7, /*paper_faithful=*/false);
    require(csv.find("7,1326,1726,2701,paper_table_discrepancy") != std::string::npos,
            "table2 does not flag the p = 7 explicit cell");
    const FamilySizePolynomials polys = family_size_polynomial_check(7);
    require(polys.corrected_matches && !polys.published_matches,
            "polynomial cross-report does not isolate the corrected cubic coefficient");
}

void criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    for (int p : {3, 5, 7, 11}) {
        const BruteForceResult brute = brute_force_largest(p);  // asserts uniqueness
        const LargestPartition fast = largest_partition(p);
        require(brute.row_multiplicities == fast.row_multiplicities,
                "exhaustive maximiser differs from the solver at p = " + std::to_string(p));
        require(brute.size == fast.size, "sizes differ at p = " + std::to_string(p));
    }
    const double elapsed = seconds_since(start);
    require(elapsed < 300.0, "took " + std::to_string(elapsed) + " s, budget is 5 min");
}

void criterion_formula_cross_derivation() {
    for (long long p = 2; p <= 200; ++p) {
        std::vector<long long> b(static_cast<std::size_t>(p - 1));
        for (long long i = 1; i < p; ++i) b[static_cast<std::size_t>(i - 1)] = (p - 2) * i + 1;
        require(sharpened_upper_bound(p) ==
                    size_from_bead_multiplicities(BeadMultiplicities(static_cast<int>(p), b)),
                "bead-multiplicity derivation differs at p = " + std::to_string(p));
        require(sharpened_upper_bound(p) <= mcspirit_ono_bound(p),
                "sharpened bound exceeds the McSpirit-Ono bound at p = " + std::to_string(p));
    }
}

void criterion_property_suite() {
    for (int p : kPrimes) {
        const LargestPartition result = largest_partition(p);
        const std::string at = " at p = " + std::to_string(p);
        require(is_p_core(result.partition, p), "solver output is not p-core (hooks)" + at);
        require(is_p_prime_partition(result.partition, p), "solver output is not p'" + at);
        const Walk walk = walk_from_row_multiplicities(result.row_multiplicities);
        require(is_recurrent(walk), "walk is not (p-1)-recurrent" + at);
        require(check_final_edge_unreachability(walk), "final-edge unreachability fails" + at);
        const auto& counts = result.row_multiplicities.counts();
        for (long long c : counts) require(c > 0, "a label is missing" + at);
        for (int i = 2; i <= p - 2; ++i)
            require(counts[static_cast<std::size_t>(i - 1)] ==
                        counts[static_cast<std::size_t>(p - i - 1)],
                    "row multiplicities are not symmetric" + at);
        require(counts[0] == counts[static_cast<std::size_t>(p - 2)] + 1,
                "m_1 != m_{p-1} + 1" + at);
    }

    // row replacements strictly increase the size, p <= 13
    std::mt19937 rng(4242);
    for (int p : {3, 5, 7, 11, 13}) {
        std::uniform_int_distribution<long long> dist(0, p - 1);
        for (int trial = 0; trial < 2000; ++trial) {
            std::vector<long long> counts(static_cast<std::size_t>(p - 1));
            for (auto& c : counts) c = dist(rng);
            const RowMultiplicities m(p, counts);
            const int128 before =
                size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(m));
            for (int i = 1; i <= p - 2; ++i) {
                for (RowReplacement kind : {RowReplacement::gaps, RowReplacement::beads}) {
                    const std::size_t src = kind == RowReplacement::gaps
                                                ? static_cast<std::size_t>(i)
                                                : static_cast<std::size_t>(p - i - 2);
                    if (counts[src] < i) continue;
                    const int128 after = size_from_bead_multiplicities(
                        row_multiplicities_to_bead_multiplicities(
                            apply_row_replacement(m, i, kind)));
                    require(after > before,
                            "row replacement failed to increase the size at p = " +
                                std::to_string(p));
                }
            }
        }
    }
}

void criterion_round_trips() {
    const auto check_tuple = [](const RowMultiplicities& m) {
        const int p = m.modulus();
        const Partition lambda = partition_from_row_multiplicities(m);
        require(size(lambda) == size_from_bead_multiplicities(
                                    row_multiplicities_to_bead_multiplicities(m)),
                "size formula disagrees with summation at p = " + std::to_string(p));
        require(abacus_to_partition(partition_to_abacus(lambda, p)) == lambda,
                "partition/abacus round trip failed at p = " + std::to_string(p));
        require(bead_multiplicities_to_row_multiplicities(
                    row_multiplicities_to_bead_multiplicities(m)) == m,
                "multiplicity round trip failed at p = " + std::to_string(p));
    };

    // exhaustive over the p = 3 walks
    std::uint64_t p3_tuples = 0;
    enumerate_p_core_p_prime(3, 4, [&](const RowMultiplicities& m) {
        ++p3_tuples;
        check_tuple(m);
    });
    require(p3_tuples == 6, "p = 3 walk enumeration should yield 6 tuples");

    // >= 10^4 random tuples for each larger p
    std::mt19937 rng(31337);
    for (int p : {5, 7, 11, 13}) {
        std::uniform_int_distribution<long long> dist(0, p - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<long long> counts(static_cast<std::size_t>(p - 1));
            for (auto& c : counts) c = dist(rng);
            check_tuple(RowMultiplicities(p, counts));
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Table 1 reproduction (row multiplicities, < 1 s)", criterion_table1},
        {2, "Table 2 largest-partition column (< 1 s)", criterion_largest_sizes},
        {3, "Table 2 upper-bound column", criterion_upper_bounds},
        {4, "Table 2 explicit column with the p = 7 discrepancy flagged",
         criterion_explicit_column},
        {5, "exhaustive search equals the solver for p in {3,5,7,11}",
         criterion_oracle_equivalence},
        {6, "sharpened bound cross-derivation and ordering for p in [2,200]",
         criterion_formula_cross_derivation},
        {7, "structural property suite for all primes p <= 43", criterion_property_suite},
        {8, "round-trip suite (exhaustive p = 3, 10^4 random tuples for p in {5,7,11,13})",
         criterion_round_trips},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        try {
            criterion.run();
            std::cout << "PASS  criterion " << criterion.id << ": " << criterion.name << '\n';
        } catch (const CriterionFailure& failure) {
            ++failures;
            std::cout << "FAIL  criterion " << criterion.id << ": " << criterion.name << " -- "
                      << failure.message << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  criterion " << criterion.id << ": " << criterion.name << " -- "
                      << e.what() << '\n';
        }
        std::cout.flush();
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
