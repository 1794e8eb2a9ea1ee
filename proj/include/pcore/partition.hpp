#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pcore/errors.hpp"
#include "pcore/int128.hpp"

namespace pcore {

inline void require_modulus(int p) {
    if (p < 2) throw PreconditionError("p must be at least 2");
}

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1) throw PreconditionError("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw PreconditionError("partition parts must be weakly decreasing");
        }
    }

    const std::vector<long long>& parts() const { return parts_; }
    long long length() const { return static_cast<long long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

/// |lambda|: the sum of the parts.
inline int128 size(const Partition& lambda) {
    int128 total = 0;
    for (long long part : lambda.parts()) total = checked::add(total, part);
    return total;
}

namespace detail {

// conj[c-1] = number of rows with at least c cells, for c = 1..lambda_1.
inline std::vector<long long> conjugate(const std::vector<long long>& parts) {
    if (parts.empty()) return {};
    std::vector<long long> conj(static_cast<std::size_t>(parts[0]), 0);
    // parts are weakly decreasing, so rows with >= c cells form a prefix
    // whose end only advances as c decreases.
    std::size_t qualifying = 0;
    for (long long c = parts[0]; c >= 1; --c) {
        while (qualifying < parts.size() && parts[qualifying] >= c) ++qualifying;
        conj[static_cast<std::size_t>(c - 1)] = static_cast<long long>(qualifying);
    }
    return conj;
}

}  // namespace detail

/// Hook length of each Young-diagram cell: arm + leg + 1.
inline std::vector<std::vector<long long>> hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const auto conj = detail::conjugate(parts);
    std::vector<std::vector<long long>> grid;
    grid.reserve(parts.size());
    for (std::size_t r = 1; r <= parts.size(); ++r) {
        std::vector<long long> row(static_cast<std::size_t>(parts[r - 1]));
        for (long long c = 1; c <= parts[r - 1]; ++c) {
            row[static_cast<std::size_t>(c - 1)] =
                parts[r - 1] - c + conj[static_cast<std::size_t>(c - 1)] - static_cast<long long>(r) + 1;
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

/// True iff no hook length is divisible by p. Scans cell by cell without
/// materialising the grid; the abacus module provides the independent
/// top-of-runner criterion.
inline bool is_p_core(const Partition& lambda, int p) {
    require_modulus(p);
    const auto& parts = lambda.parts();
    const auto conj = detail::conjugate(parts);
    for (std::size_t r = 1; r <= parts.size(); ++r) {
        const long long base = parts[r - 1] - static_cast<long long>(r) + 1;
        for (long long c = 1; c <= parts[r - 1]; ++c) {
            const long long hook = base - c + conj[static_cast<std::size_t>(c - 1)];
            if (hook % p == 0) return false;
        }
    }
    return true;
}

/// True iff no part is divisible by p.
inline bool is_p_prime_partition(const Partition& lambda, int p) {
    require_modulus(p);
    return std::none_of(lambda.parts().begin(), lambda.parts().end(),
                        [p](long long part) { return part % p == 0; });
}

}  // namespace pcore
