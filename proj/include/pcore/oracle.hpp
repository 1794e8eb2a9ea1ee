#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcore/abacus.hpp"
#include "pcore/errors.hpp"
#include "pcore/int128.hpp"
#include "pcore/partition.hpp"
#include "pcore/walk.hpp"

namespace pcore {

namespace detail {

// The search space is roughly (p/2)^(p-1) walks after zero-avoidance
// pruning: fine through p = 11, minutes at p = 13, hopeless beyond.
inline void require_search_feasible(int p, bool override_feasibility) {
    require_odd_prime(p);
    if (p <= 11) return;
    if (p == 13 && override_feasibility) return;
    throw FeasibilityError(override_feasibility
                               ? "exhaustive search supports at most p = 13"
                               : "exhaustive search is gated to p <= 11 "
                                 "(p = 13 needs the feasibility override)");
}

inline std::string format_counts(const std::vector<long long>& counts) {
    std::string out = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(counts[i]);
    }
    return out + ")";
}

}  // namespace detail

/// Depth-first enumeration of every restricted walk with at most
/// max_walk_length steps, reported as its row-multiplicity tuple. At each
/// label every step count that stays clear of 0 is tried, including zero
/// steps, so each tuple is visited exactly once.
inline void enumerate_p_core_p_prime(int p, long long max_walk_length,
                                     const std::function<void(const RowMultiplicities&)>& visit,
                                     bool override_feasibility = false) {
    detail::require_search_feasible(p, override_feasibility);
    if (max_walk_length < 0) throw PreconditionError("walk length bound must be nonnegative");
    std::vector<long long> m(static_cast<std::size_t>(p - 1), 0);
    auto descend = [&](auto&& self, int label, int at, long long steps) -> void {
        if (label == p) {
            visit(RowMultiplicities(p, m));
            return;
        }
        int v = at;
        for (long long c = 0;; ++c) {
            if (steps + c > max_walk_length) break;
            m[static_cast<std::size_t>(label - 1)] = c;
            self(self, label + 1, v, steps + c);
            v = (v + label) % p;
            if (v == 0) break;
        }
        m[static_cast<std::size_t>(label - 1)] = 0;
    };
    descend(descend, 1, 0, 0);
}

/// Convenience collector for small spaces.
inline std::vector<RowMultiplicities> collect_walks(int p, long long max_walk_length,
                                                    bool override_feasibility = false) {
    std::vector<RowMultiplicities> out;
    enumerate_p_core_p_prime(
        p, max_walk_length, [&](const RowMultiplicities& m) { out.push_back(m); },
        override_feasibility);
    return out;
}

struct BruteForceResult {
    RowMultiplicities row_multiplicities;
    int128 size = 0;
    std::uint64_t walks_examined = 0;
};

/// Ground truth for the O(p^2) solver: exhaustively maximise the partition
/// size over all restricted walks. Pruning is on zero-visits only -- size is
/// not monotone along walk extension, so no size-based cut is sound. The
/// maximiser must be unique; a tie is reported as an error.
inline BruteForceResult brute_force_largest(int p, bool override_feasibility = false) {
    detail::require_search_feasible(p, override_feasibility);
    std::vector<long long> m(static_cast<std::size_t>(p - 1), 0);
    std::vector<long long> best_m;
    int128 best_size = -1;
    std::uint64_t ties = 0;
    std::uint64_t leaves = 0;
    // Size accumulators along the path: bead prefix b, l = sum of b so far,
    // s2 = sum b^2, s1 = sum label*b. All stay far below 2^63 for p <= 13.
    auto descend = [&](auto&& self, int label, int at, long long b, long long l, long long s2,
                       long long s1) -> void {
        if (label == p) {
            ++leaves;
            const int128 doubled = static_cast<int128>(l) * (1 - l - p) + static_cast<int128>(p) * s2;
            const int128 sz = doubled / 2 + s1;  // always even, see size formula
            if (sz > best_size) {
                best_size = sz;
                best_m = m;
                ties = 1;
            } else if (sz == best_size) {
                ++ties;
            }
            return;
        }
        int v = at;
        for (long long c = 0;; ++c) {
            m[static_cast<std::size_t>(label - 1)] = c;
            const long long nb = b + c;
            self(self, label + 1, v, nb, l + nb, s2 + nb * nb, s1 + label * nb);
            v = (v + label) % p;
            if (v == 0) break;
        }
        m[static_cast<std::size_t>(label - 1)] = 0;
    };
    descend(descend, 1, 0, 0, 0, 0, 0);
    if (ties != 1) throw Error("exhaustive search found multiple maximisers");
    return {RowMultiplicities(p, std::move(best_m)), best_size, leaves};
}

struct CrossCheckReport {
    int p = 0;
    std::uint64_t tuples_checked = 0;
    bool ok = true;
    std::string first_mismatch;  // empty when ok
};

/// For every enumerated tuple, assert that the size formula agrees with
/// direct part summation, that the constructed partition is p-core by the
/// hook scan, and that the two p' criteria (parts vs residue sequence)
/// agree. Pass a walk-length bound to keep p = 11 desk-scale.
inline CrossCheckReport cross_check_sizes(int p, std::optional<long long> max_walk_length = {},
                                          bool override_feasibility = false) {
    CrossCheckReport report;
    report.p = p;
    const long long full = static_cast<long long>(p - 1) * (p - 1);
    const long long limit = max_walk_length.value_or(full);
    enumerate_p_core_p_prime(
        p, limit,
        [&](const RowMultiplicities& m) {
            ++report.tuples_checked;
            if (!report.ok) return;
            const Partition lambda = partition_from_row_multiplicities(m);
            const int128 via_formula =
                size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(m));
            std::string failure;
            if (via_formula != size(lambda))
                failure = "size formula disagrees with part summation";
            else if (!is_p_core(lambda, p))
                failure = "constructed partition is not p-core by the hook scan";
            else if (!is_p_prime_partition(lambda, p))
                failure = "walk tuple produced a part divisible by p";
            else if (!is_p_prime_multiplicities(m))
                failure = "residue-sequence p' criterion disagrees with the parts";
            if (!failure.empty()) {
                report.ok = false;
                report.first_mismatch = failure + " at m = " + detail::format_counts(m.counts());
            }
        },
        override_feasibility);
    return report;
}

}  // namespace pcore
