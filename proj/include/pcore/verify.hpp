#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcore/abacus.hpp"
#include "pcore/bounds.hpp"
#include "pcore/oracle.hpp"
#include "pcore/partition.hpp"
#include "pcore/walk.hpp"

namespace pcore {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

namespace detail {

inline CheckResult run_check(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckResult result;
    result.name = name;
    try {
        std::string detail;
        result.ok = body(detail);
        result.detail = detail;
    } catch (const std::exception& e) {
        result.ok = false;
        result.detail = e.what();
    }
    return result;
}

}  // namespace detail

/// Per-prime invariant suite behind `verify`: every structural claim the
/// solver output must satisfy, checked from scratch for the given p.
inline std::vector<CheckResult> run_invariant_suite(int p) {
    require_odd_prime(p);
    std::vector<CheckResult> results;
    const auto check = [&](const std::string& name, std::function<bool(std::string&)> body) {
        results.push_back(detail::run_check(name, body));
    };

    const LargestPartition largest = largest_partition(p);
    const RowMultiplicities& m = largest.row_multiplicities;

    check("solver-size-formula-vs-part-sum", [&](std::string&) {
        return size(largest.partition) == largest.size;
    });
    check("solver-output-p-core-hooks", [&](std::string&) {
        return is_p_core(largest.partition, p);
    });
    check("solver-output-p-prime-parts", [&](std::string&) {
        return is_p_prime_partition(largest.partition, p) && is_p_prime_multiplicities(m);
    });
    check("walk-recurrent", [&](std::string&) {
        return is_recurrent(walk_from_row_multiplicities(m));
    });
    check("walk-uses-every-label", [&](std::string&) {
        for (long long c : m.counts())
            if (c == 0) return false;
        return true;
    });
    check("walk-final-edge-unreachability", [&](std::string&) {
        return check_final_edge_unreachability(walk_from_row_multiplicities(m));
    });
    check("row-multiplicity-symmetry", [&](std::string&) {
        const auto& counts = m.counts();
        for (int i = 2; i <= p - 2; ++i)
            if (counts[static_cast<std::size_t>(i - 1)] != counts[static_cast<std::size_t>(p - i - 1)])
                return false;
        return counts[0] == counts[static_cast<std::size_t>(p - 2)] + 1;
    });
    check("closed-segment-congruence-and-uniqueness", [&](std::string&) {
        for (int label = 2; label <= p - 2; ++label) {
            const auto seg = best_closed_segment(p, label);  // throws on a tie
            if ((seg.steps_out * label + seg.steps_back * (label + 1)) % p != 0) return false;
        }
        return true;
    });
    check("partition-abacus-round-trip", [&](std::string&) {
        return abacus_to_partition(partition_to_abacus(largest.partition, p)) == largest.partition;
    });
    check("row-bead-multiplicity-round-trip", [&](std::string&) {
        const auto beads = row_multiplicities_to_bead_multiplicities(m);
        return bead_multiplicities_to_row_multiplicities(beads) == m &&
               bead_multiplicities(largest.partition, p) == beads;
    });
    check("bounds-ordering", [&](std::string&) {
        const BoundsReport report = bounds_report(p);  // throws if the ordering fails
        return report.explicit_size.has_value() && report.largest_size.has_value() &&
               *report.largest_size == largest.size;
    });
    check("explicit-family-p-prime", [&](std::string&) {
        const RowMultiplicities family = explicit_family(p);
        return is_p_prime_multiplicities(family) &&
               is_p_prime_multiplicities(symmetrize_family(family, SymmetrizeDirection::first_onto_second)) &&
               is_p_prime_multiplicities(symmetrize_family(family, SymmetrizeDirection::second_onto_first));
    });
    check("family-polynomial-discrepancy", [&](std::string& detail) {
        const FamilySizePolynomials polys = family_size_polynomial_check(p);
        detail = polys.corrected_matches ? "corrected cubic coefficient (-24) matches"
                                         : "corrected polynomial does not match";
        return polys.corrected_matches;
    });
    return results;
}

/// Exhaustive-search checks behind `verify --oracle` (desk-scale p only).
/// For p = 11 and 13 the full cross-check space is out of reach, so the
/// size cross-check runs on a bounded walk length there.
inline std::vector<CheckResult> run_oracle_suite(int p, bool override_feasibility = false) {
    std::vector<CheckResult> results;
    const auto check = [&](const std::string& name, std::function<bool(std::string&)> body) {
        results.push_back(detail::run_check(name, body));
    };
    check("oracle-brute-force-equals-solver", [&](std::string& detail) {
        const BruteForceResult brute = brute_force_largest(p, override_feasibility);
        const LargestPartition fast = largest_partition(p);
        detail = "examined " + std::to_string(brute.walks_examined) + " walks";
        return brute.row_multiplicities == fast.row_multiplicities && brute.size == fast.size;
    });
    check("oracle-size-cross-check", [&](std::string& detail) {
        const std::optional<long long> bound =
            p <= 7 ? std::nullopt : std::optional<long long>(14);
        const CrossCheckReport report = cross_check_sizes(p, bound, override_feasibility);
        detail = "checked " + std::to_string(report.tuples_checked) + " tuples";
        if (!report.ok) detail = report.first_mismatch;
        return report.ok;
    });
    return results;
}

}  // namespace pcore
