#pragma once

#include <optional>
#include <vector>

#include "pcore/abacus.hpp"
#include "pcore/errors.hpp"
#include "pcore/int128.hpp"
#include "pcore/partition.hpp"

namespace pcore {

inline bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void require_odd_prime(long long p) {
    if (p % 2 == 0) throw NotOddError("p must be an odd prime");
    if (!is_odd_prime(p)) throw NotPrimeError("p must be an odd prime");
}

inline std::vector<int> odd_primes_through(int max_p) {
    std::vector<int> primes;
    for (int p = 3; p <= max_p; ++p)
        if (is_odd_prime(p)) primes.push_back(p);
    return primes;
}

/// Restricted walk on the additive residue graph: starts at 0, edge labels
/// weakly increasing, never revisits 0. The graph itself is never
/// materialised; an i-edge from r leads to (r + i) mod p.
struct Walk {
    int p = 0;
    std::vector<int> vertices;  // starts at 0; one more entry than labels
    std::vector<int> labels;    // in [1, p-1], weakly increasing

    friend bool operator==(const Walk&, const Walk&) = default;
};

/// The walk whose vertex trace is 0 followed by the abacus residue sequence,
/// with label i traversed m_i times.
inline Walk walk_from_row_multiplicities(const RowMultiplicities& m) {
    const int p = m.modulus();
    require_odd_prime(p);
    long long total = 0;
    for (long long c : m.counts()) total += c;
    Walk w;
    w.p = p;
    w.vertices.reserve(static_cast<std::size_t>(total) + 1);
    w.labels.reserve(static_cast<std::size_t>(total));
    w.vertices.push_back(0);
    int at = 0;
    for (int i = 1; i < p; ++i) {
        for (long long rep = 0; rep < m.counts()[static_cast<std::size_t>(i - 1)]; ++rep) {
            at = (at + i) % p;
            if (at == 0) throw RevisitsZeroError("walk revisits 0: not a p'-partition");
            w.vertices.push_back(at);
            w.labels.push_back(i);
        }
    }
    return w;
}

/// (p-1)-recurrent: for every label in [1, p-1] the walk has an edge with
/// that label whose source or target is p-1.
inline bool is_recurrent(const Walk& w) {
    const int p = w.p;
    if (p < 2) throw PreconditionError("walk has no modulus");
    std::vector<char> touched(static_cast<std::size_t>(p), 0);
    for (std::size_t k = 0; k < w.labels.size(); ++k)
        if (w.vertices[k] == p - 1 || w.vertices[k + 1] == p - 1)
            touched[static_cast<std::size_t>(w.labels[k])] = 1;
    for (int i = 1; i < p; ++i)
        if (!touched[static_cast<std::size_t>(i)]) return false;
    return true;
}

/// Number of steps to get from `from` to `to` on `label`-edges without
/// visiting 0, when such a run exists. Absence is a value, not an error.
inline std::optional<int> steps_on_label(int p, int from, int label, int to) {
    require_odd_prime(p);
    if (label < 1 || label >= p) throw PreconditionError("label must be in [1, p-1]");
    if (from < 1 || from >= p || to < 1 || to >= p)
        throw PreconditionError("walk endpoints must be nonzero residues");
    int v = from;
    for (int k = 0; k < p; ++k) {
        if (v == to) return k;
        v = (v + label) % p;
        if (v == 0) return std::nullopt;
    }
    return std::nullopt;  // unreachable: label is invertible mod a prime
}

/// A closed excursion from p-1 back to itself: steps_out edges of `label`
/// down to the transition residue, then steps_back edges of `label`+1 home.
struct ClosedSegmentChoice {
    int label = 0;
    int transition = 0;
    int steps_out = 0;
    int steps_back = 0;

    friend bool operator==(const ClosedSegmentChoice&, const ClosedSegmentChoice&) = default;
};

/// The transition residue maximising steps_out + steps_back. The maximum is
/// attained by exactly one residue; a tie is an invariant violation, not a
/// tie-break situation.
inline ClosedSegmentChoice best_closed_segment(int p, int label) {
    require_odd_prime(p);
    if (label < 2 || label > p - 2) throw PreconditionError("label must be in [2, p-2]");

    // steps from p-1 forward on `label`-edges, and from each residue home
    // on (label+1)-edges, both cut off at the first visit to 0
    std::vector<int> out(static_cast<std::size_t>(p), -1);
    std::vector<int> back(static_cast<std::size_t>(p), -1);
    out[static_cast<std::size_t>(p - 1)] = 0;
    for (int v = p - 1, k = 1;; ++k) {
        v = (v + label) % p;
        if (v == 0) break;
        out[static_cast<std::size_t>(v)] = k;
    }
    back[static_cast<std::size_t>(p - 1)] = 0;
    for (int v = p - 1, k = 1;; ++k) {
        v = (v + p - (label + 1)) % p;
        if (v == 0) break;
        back[static_cast<std::size_t>(v)] = k;
    }

    int best_r = -1, best_total = -1, attained = 0;
    for (int r = 1; r < p; ++r) {
        if (out[static_cast<std::size_t>(r)] < 0 || back[static_cast<std::size_t>(r)] < 0) continue;
        const int total = out[static_cast<std::size_t>(r)] + back[static_cast<std::size_t>(r)];
        if (total > best_total) {
            best_total = total;
            best_r = r;
            attained = 1;
        } else if (total == best_total) {
            ++attained;
        }
    }
    if (attained != 1)
        throw Error("uniqueness violated: several transition residues attain the maximum");

    const ClosedSegmentChoice choice{label, best_r, out[static_cast<std::size_t>(best_r)],
                                     back[static_cast<std::size_t>(best_r)]};
    if ((choice.steps_out * label + choice.steps_back * (label + 1)) % p != 0)
        throw Error("closed segment violates the return congruence");
    return choice;
}

/// Row multiplicities of the largest p-core p'-partition, via the walk
/// decomposition: p-1 steps on 1-edges up to p-1, for each label in
/// [2, p-2] the best closed segment, then p-2 final steps on (p-1)-edges
/// descending p-1, p-2, ..., 1. O(p^2).
inline RowMultiplicities largest_row_multiplicities(int p) {
    require_odd_prime(p);
    std::vector<long long> m(static_cast<std::size_t>(p - 1), 0);
    m[0] = p - 1;
    for (int label = 2; label <= p - 2; ++label) {
        const auto seg = best_closed_segment(p, label);
        m[static_cast<std::size_t>(label - 1)] += seg.steps_out;
        m[static_cast<std::size_t>(label)] += seg.steps_back;
    }
    m[static_cast<std::size_t>(p - 2)] += p - 2;
    return RowMultiplicities(p, std::move(m));
}

struct LargestPartition {
    RowMultiplicities row_multiplicities;
    Partition partition;
    int128 size = 0;
};

inline LargestPartition largest_partition(int p) {
    RowMultiplicities m = largest_row_multiplicities(p);
    Partition lambda = partition_from_row_multiplicities(m);
    const int128 total =
        size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(m));
    return {std::move(m), std::move(lambda), total};
}

/// Least N such that no p-core p'-partition of size > N exists; equals the
/// size of the largest one. Avoids materialising the partition, so stays
/// O(p^2) even for large p.
inline int128 chartable_zero_threshold(int p) {
    return size_from_bead_multiplicities(
        row_multiplicities_to_bead_multiplicities(largest_row_multiplicities(p)));
}

/// For each label present in the walk, with s the endpoint of its final
/// edge, s+1 must not be reachable from s on that label while avoiding 0.
/// Longest walks satisfy this; many non-maximal walks do not.
inline bool check_final_edge_unreachability(const Walk& w) {
    const int p = w.p;
    for (std::size_t k = w.labels.size(); k-- > 0;) {
        if (k + 1 < w.labels.size() && w.labels[k + 1] == w.labels[k])
            continue;  // not the final edge of this label
        const int label = w.labels[k];
        const int endpoint = w.vertices[k + 1];
        const int target = (endpoint + 1) % p;
        if (target == 0) continue;  // 0 is unreachable by definition
        if (steps_on_label(p, endpoint, label, target).has_value()) return false;
    }
    return true;
}

}  // namespace pcore
