#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pcore/errors.hpp"
#include "pcore/int128.hpp"
#include "pcore/partition.hpp"

namespace pcore {

/// Bead positions on the p-abacus. Position x sits on runner x mod p in row
/// x / p; position 0 is always a gap, so beads are distinct positive
/// integers. Each bead encodes a part equal to the number of gaps below it.
class Abacus {
public:
    Abacus(int p, std::vector<long long> beads) : p_(p), beads_(std::move(beads)) {
        require_modulus(p_);
        std::sort(beads_.begin(), beads_.end());
        for (std::size_t k = 0; k < beads_.size(); ++k) {
            if (beads_[k] < 1) throw PreconditionError("abacus position 0 must be a gap");
            if (k > 0 && beads_[k] == beads_[k - 1])
                throw PreconditionError("abacus bead positions must be distinct");
        }
    }

    int runners() const { return p_; }
    const std::vector<long long>& beads() const { return beads_; }

    friend bool operator==(const Abacus&, const Abacus&) = default;

private:
    int p_;
    std::vector<long long> beads_;
};

/// Beads per runner of a p-core abacus, runners 1..p-1 (runner 0 is empty
/// for a normalised p-core).
class BeadMultiplicities {
public:
    BeadMultiplicities(int p, std::vector<long long> counts)
        : p_(p), counts_(std::move(counts)) {
        require_modulus(p_);
        if (counts_.size() != static_cast<std::size_t>(p_ - 1))
            throw PreconditionError("bead multiplicities must have length p-1");
        for (long long c : counts_)
            if (c < 0) throw PreconditionError("bead multiplicities must be nonnegative");
    }

    int modulus() const { return p_; }
    const std::vector<long long>& counts() const { return counts_; }

    friend bool operator==(const BeadMultiplicities&, const BeadMultiplicities&) = default;

private:
    int p_;
    std::vector<long long> counts_;
};

/// Number of abacus rows with exactly i gaps, i = 1..p-1, for an abacus
/// whose beads are rightmost within their rows. Entries above p-1 are
/// representable; the p' check rejects the tuples that correspond to no walk.
class RowMultiplicities {
public:
    RowMultiplicities(int p, std::vector<long long> counts)
        : p_(p), counts_(std::move(counts)) {
        require_modulus(p_);
        if (counts_.size() != static_cast<std::size_t>(p_ - 1))
            throw PreconditionError("row multiplicities must have length p-1");
        for (long long c : counts_)
            if (c < 0) throw PreconditionError("row multiplicities must be nonnegative");
    }

    int modulus() const { return p_; }
    const std::vector<long long>& counts() const { return counts_; }

    friend bool operator==(const RowMultiplicities&, const RowMultiplicities&) = default;

private:
    int p_;
    std::vector<long long> counts_;
};

/// Beads at the beta-numbers lambda_k + l - k. Position 0 stays a gap since
/// every part is >= 1.
inline Abacus partition_to_abacus(const Partition& lambda, int p) {
    require_modulus(p);
    const auto& parts = lambda.parts();
    const long long len = lambda.length();
    std::vector<long long> beads(parts.size());
    for (long long k = 1; k <= len; ++k)
        beads[static_cast<std::size_t>(k - 1)] = parts[static_cast<std::size_t>(k - 1)] + len - k;
    return Abacus(p, std::move(beads));
}

/// Inverse of partition_to_abacus: a bead at position x contributes a part
/// equal to the number of gaps below it, i.e. x minus the beads below it.
inline Partition abacus_to_partition(const Abacus& a) {
    const auto& beads = a.beads();  // ascending
    std::vector<long long> parts(beads.size());
    for (std::size_t k = 0; k < beads.size(); ++k)
        parts[beads.size() - 1 - k] = beads[k] - static_cast<long long>(k);
    return Partition(std::move(parts));
}

/// Per-runner bead counts of a p-core partition. Rejects partitions whose
/// beads are not all topmost on their runners (equivalently, not p-core).
inline BeadMultiplicities bead_multiplicities(const Partition& lambda, int p) {
    const Abacus a = partition_to_abacus(lambda, p);
    std::vector<long long> counts(static_cast<std::size_t>(p), 0);
    std::vector<long long> top_row(static_cast<std::size_t>(p), -1);
    for (long long x : a.beads()) {
        const auto runner = static_cast<std::size_t>(x % p);
        ++counts[runner];
        top_row[runner] = std::max(top_row[runner], x / p);
    }
    if (counts[0] > 0) throw NotPCoreError("bead on runner 0: partition is not p-core");
    for (std::size_t i = 1; i < static_cast<std::size_t>(p); ++i) {
        // topmost beads occupy rows 0..count-1
        if (counts[i] > 0 && top_row[i] != counts[i] - 1)
            throw NotPCoreError("beads not topmost on their runner: partition is not p-core");
    }
    return BeadMultiplicities(p, std::vector<long long>(counts.begin() + 1, counts.end()));
}

/// |lambda| = l(1-l-p)/2 + (p/2) sum b_i^2 + sum i b_i with l = sum b_i.
/// The two half terms are combined first; their sum is always even.
inline int128 size_from_bead_multiplicities(const BeadMultiplicities& bm) {
    const int128 p = bm.modulus();
    int128 len = 0, sum_sq = 0, weighted = 0;
    for (std::size_t i = 0; i < bm.counts().size(); ++i) {
        const int128 b = bm.counts()[i];
        len = checked::add(len, b);
        sum_sq = checked::add(sum_sq, checked::mul(b, b));
        weighted = checked::add(weighted, checked::mul(static_cast<int128>(i + 1), b));
    }
    const int128 halved = checked::add(
        checked::mul(len, checked::sub(checked::sub(1, len), p)),
        checked::mul(p, sum_sq));
    return checked::add(checked::exact_div(halved, 2, "size formula"), weighted);
}

/// b_j = m_1 + ... + m_j.
inline BeadMultiplicities row_multiplicities_to_bead_multiplicities(const RowMultiplicities& m) {
    std::vector<long long> b(m.counts().size());
    long long run = 0;
    for (std::size_t j = 0; j < m.counts().size(); ++j) {
        if (__builtin_add_overflow(run, m.counts()[j], &run))
            throw OverflowError("bead multiplicity overflow");
        b[j] = run;
    }
    return BeadMultiplicities(m.modulus(), std::move(b));
}

/// m_i = b_i - b_{i-1}; requires b weakly increasing (beads rightmost).
inline RowMultiplicities bead_multiplicities_to_row_multiplicities(const BeadMultiplicities& b) {
    std::vector<long long> m(b.counts().size());
    long long prev = 0;
    for (std::size_t i = 0; i < b.counts().size(); ++i) {
        if (b.counts()[i] < prev)
            throw PreconditionError(
                "bead multiplicities not weakly increasing: beads are not rightmost");
        m[i] = b.counts()[i] - prev;
        prev = b.counts()[i];
    }
    return RowMultiplicities(b.modulus(), std::move(m));
}

/// Lay out m_1 rows with 1 gap, then m_2 rows with 2 gaps, and so on; the
/// k-th row contributes p - (its gap count) parts equal to the cumulative
/// gap count. Parts are returned weakly decreasing.
inline Partition partition_from_row_multiplicities(const RowMultiplicities& m) {
    const int p = m.modulus();
    struct RowBlock {
        long long part;
        long long beads;
    };
    std::vector<RowBlock> rows;
    int128 cumulative = 0;
    for (std::size_t i = 1; i < static_cast<std::size_t>(p); ++i) {
        for (long long rep = 0; rep < m.counts()[i - 1]; ++rep) {
            cumulative = checked::add(cumulative, static_cast<int128>(i));
            if (cumulative > static_cast<int128>(9'000'000'000'000'000'000LL))
                throw OverflowError("part size exceeds 64-bit range");
            rows.push_back({static_cast<long long>(cumulative), static_cast<long long>(p) - static_cast<long long>(i)});
        }
    }
    std::vector<long long> parts;
    std::size_t total = 0;
    for (const auto& row : rows) total += static_cast<std::size_t>(row.beads);
    parts.reserve(total);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->beads), it->part);
    return Partition(std::move(parts));
}

/// Residues mod p of the per-row part sizes: starting from 0, append
/// (previous + i) mod p exactly m_i times, for i = 1..p-1.
inline std::vector<int> residue_sequence(const RowMultiplicities& m) {
    const int p = m.modulus();
    std::vector<int> seq;
    long long total = 0;
    for (long long c : m.counts()) total += c;
    seq.reserve(static_cast<std::size_t>(total));
    int prev = 0;
    for (int i = 1; i < p; ++i) {
        for (long long rep = 0; rep < m.counts()[static_cast<std::size_t>(i - 1)]; ++rep) {
            prev = (prev + i) % p;
            seq.push_back(prev);
        }
    }
    return seq;
}

/// p' criterion in multiplicity space: no 0 in the residue sequence.
inline bool is_p_prime_multiplicities(const RowMultiplicities& m) {
    const int p = m.modulus();
    int prev = 0;
    for (int i = 1; i < p; ++i) {
        for (long long rep = 0; rep < m.counts()[static_cast<std::size_t>(i - 1)]; ++rep) {
            prev = (prev + i) % p;
            if (prev == 0) return false;
        }
    }
    return true;
}

namespace detail {

inline std::vector<long long> runner_counts(int p, const std::vector<long long>& beads) {
    std::vector<long long> counts(static_cast<std::size_t>(p), 0);
    for (long long x : beads) ++counts[static_cast<std::size_t>(x % p)];
    return counts;
}

}  // namespace detail

/// Rightmost-push of a p-core p'-partition: renormalise the abacus (prepend
/// a bead at position 0, shifting all positions up) until runner p-1 holds
/// the joint-most beads, then slide every row's beads against its right
/// edge. The result is a p-core p'-partition with all beads rightmost, of
/// size >= |lambda| with equality iff the beads were already rightmost.
inline Partition push_beads_rightmost(const Partition& lambda, int p) {
    if (p < 3) throw PreconditionError("p must be an odd integer >= 3");
    if (p % 2 == 0) throw NotOddError("p must be odd");
    if (!is_p_core(lambda, p)) throw NotPCoreError("input is not p-core");
    if (!is_p_prime_partition(lambda, p)) throw NotPPrimeError("input is not a p'-partition");

    std::vector<long long> beads = partition_to_abacus(lambda, p).beads();
    int prepends = 0;
    while (true) {
        const auto counts = detail::runner_counts(p, beads);
        if (counts[static_cast<std::size_t>(p - 1)] ==
            *std::max_element(counts.begin(), counts.end()))
            break;
        // Same partition, shifted configuration: new bead in position 0,
        // every other bead one position later.
        for (long long& x : beads) ++x;
        beads.insert(beads.begin(), 0);
        if (++prepends > p - 1)
            throw Error("abacus renormalisation failed to terminate");
    }

    // Compact each row against its right edge. Every nonempty row has a
    // bead on runner p-1 now, so beads never leave their rows.
    std::vector<long long> compacted;
    compacted.reserve(beads.size());
    std::size_t k = 0;
    while (k < beads.size()) {
        const long long row = beads[k] / p;
        std::size_t row_end = k;
        while (row_end < beads.size() && beads[row_end] / p == row) ++row_end;
        const long long in_row = static_cast<long long>(row_end - k);
        for (long long c = 0; c < in_row; ++c)
            compacted.push_back(row * p + (p - in_row) + c);
        k = row_end;
    }

    // Read the partition off the compacted configuration, dropping the
    // zero parts contributed by any leading full rows.
    std::vector<long long> parts(compacted.size());
    for (std::size_t j = 0; j < compacted.size(); ++j)
        parts[compacted.size() - 1 - j] = compacted[j] - static_cast<long long>(j);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

enum class RowReplacement {
    gaps,   // i rows of i+1 gaps -> i+1 rows of i gaps
    beads,  // i rows of i+1 beads -> i+1 rows of i beads
};

/// Row replacement on multiplicities; both kinds strictly increase the size
/// of the corresponding partition.
inline RowMultiplicities apply_row_replacement(const RowMultiplicities& m, int i,
                                               RowReplacement kind) {
    const int p = m.modulus();
    if (i < 1 || i > p - 2)
        throw PreconditionError("replacement index must satisfy 1 <= i <= p-2");
    std::vector<long long> out = m.counts();
    if (kind == RowReplacement::gaps) {
        // 1-based m_{i+1} loses i rows, m_i gains i+1.
        if (out[static_cast<std::size_t>(i)] < i)
            throw PreconditionError("not enough rows with i+1 gaps");
        out[static_cast<std::size_t>(i)] -= i;
        out[static_cast<std::size_t>(i - 1)] += i + 1;
    } else {
        // Rows with i+1 beads have p-i-1 gaps; they become rows with i
        // beads, i.e. p-i gaps.
        if (out[static_cast<std::size_t>(p - i - 2)] < i)
            throw PreconditionError("not enough rows with i+1 beads");
        out[static_cast<std::size_t>(p - i - 2)] -= i;
        out[static_cast<std::size_t>(p - i - 1)] += i + 1;
    }
    return RowMultiplicities(p, std::move(out));
}

/// One text line per abacus row, `.` for gap and `o` for bead, top row first.
inline std::vector<std::string> render_abacus(const Abacus& a) {
    const int p = a.runners();
    if (a.beads().empty()) return {};
    const long long rows = a.beads().back() / p + 1;
    std::vector<std::string> lines(static_cast<std::size_t>(rows),
                                   std::string(static_cast<std::size_t>(p), '.'));
    for (long long x : a.beads())
        lines[static_cast<std::size_t>(x / p)][static_cast<std::size_t>(x % p)] = 'o';
    return lines;
}

}  // namespace pcore
