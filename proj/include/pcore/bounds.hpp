#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pcore/abacus.hpp"
#include "pcore/errors.hpp"
#include "pcore/int128.hpp"
#include "pcore/walk.hpp"

namespace pcore {

namespace detail {

inline int128 sextic(int128 p, long long c6, long long c5, long long c4, long long c3,
                     long long c2, long long c1, long long c0) {
    int128 acc = c6;
    for (long long c : {c5, c4, c3, c2, c1, c0}) acc = checked::add(checked::mul(acc, p), c);
    return acc;
}

}  // namespace detail

/// (p^6 - 2p^5 + 2p^4 - 3p^2 + 2p)/24. Holds for any integer p >= 2, not
/// just primes.
inline int128 mcspirit_ono_bound(long long p) {
    if (p < 2) throw PreconditionError("p must be at least 2");
    return checked::exact_div(detail::sextic(p, 1, -2, 2, 0, -3, 2, 0), 24,
                              "McSpirit-Ono bound");
}

/// (p^6 - 4p^5 + 5p^4 + 12p^3 - 42p^2 + 52p - 24)/24, the sharpened upper
/// bound. Independently derivable as the size of the bead multiplicities
/// b_i = (p-2)i + 1.
inline int128 sharpened_upper_bound(long long p) {
    if (p < 2) throw PreconditionError("p must be at least 2");
    return checked::exact_div(detail::sextic(p, 1, -4, 5, 12, -42, 52, -24), 24,
                              "sharpened upper bound");
}

/// The explicit lower-bound family: row multiplicities
/// (p-1, 2, p-2, 2, p-2, ..., 2, p-2, 1); degenerates to (2, 1) at p = 3.
inline RowMultiplicities explicit_family(int p) {
    require_odd_prime(p);
    std::vector<long long> m(static_cast<std::size_t>(p - 1));
    m[0] = p - 1;
    m[static_cast<std::size_t>(p - 2)] = 1;
    for (int i = 2; i <= p - 2; ++i)
        m[static_cast<std::size_t>(i - 1)] = (i % 2 == 0) ? 2 : p - 2;
    return RowMultiplicities(p, std::move(m));
}

/// Size of the explicit family, computed from the construction via the bead
/// multiplicity size formula; family_size_polynomial_check compares the two
/// closed-form candidates against this value.
inline int128 explicit_family_size(int p) {
    return size_from_bead_multiplicities(
        row_multiplicities_to_bead_multiplicities(explicit_family(p)));
}

/// Cross-examination of the two closed-form candidates for the family size,
/// both over denominator 96: the published sextic carries cubic coefficient
/// -12, the corrected one -24. Only the one matching `direct` at every
/// prime can be right.
struct FamilySizePolynomials {
    int128 direct = 0;
    int128 published_numerator = 0;
    int128 corrected_numerator = 0;
    bool published_integral = false;
    bool corrected_integral = false;
    bool published_matches = false;
    bool corrected_matches = false;
};

inline FamilySizePolynomials family_size_polynomial_check(int p) {
    FamilySizePolynomials out;
    out.direct = explicit_family_size(p);
    out.published_numerator = detail::sextic(p, 1, 0, 6, -12, 89, -120, -48);
    out.corrected_numerator = detail::sextic(p, 1, 0, 6, -24, 89, -120, -48);
    out.published_integral = out.published_numerator % 96 == 0;
    out.corrected_integral = out.corrected_numerator % 96 == 0;
    out.published_matches = out.published_integral && out.published_numerator / 96 == out.direct;
    out.corrected_matches = out.corrected_integral && out.corrected_numerator / 96 == out.direct;
    return out;
}

enum class SymmetrizeDirection {
    first_onto_second,  // middle entries mirrored from the second half
    second_onto_first,  // middle entries mirrored from the first half
};

/// Mirror one half of the tuple onto the other across positions 2..p-2,
/// adjusting the first or last entry by 1 so that m_1 = m_{p-1} + 1 holds
/// afterwards. Mirroring corresponds to reversing the residue sequence, so
/// it preserves the p' property.
inline RowMultiplicities symmetrize_family(const RowMultiplicities& m, SymmetrizeDirection dir) {
    const int p = m.modulus();
    const std::vector<long long>& in = m.counts();
    std::vector<long long> out = in;
    if (dir == SymmetrizeDirection::second_onto_first) {
        for (int j = 2; j <= p - 2; ++j)
            out[static_cast<std::size_t>(j - 1)] = in[static_cast<std::size_t>(std::min(j, p - j) - 1)];
        if (in[0] < 1) throw PreconditionError("adjustment would make the last entry negative");
        out[static_cast<std::size_t>(p - 2)] = in[0] - 1;
    } else {
        for (int j = 2; j <= p - 2; ++j)
            out[static_cast<std::size_t>(j - 1)] = in[static_cast<std::size_t>(std::max(j, p - j) - 1)];
        out[0] = in[static_cast<std::size_t>(p - 2)] + 1;
    }
    return RowMultiplicities(p, std::move(out));
}

/// One row of the size comparison: family size and solver size are only
/// defined when p is an odd prime; the two bounds hold for any p >= 2.
struct BoundsReport {
    long long p = 0;
    std::optional<int128> explicit_size;
    std::optional<int128> largest_size;
    int128 sharpened_upper = 0;
    int128 mcspirit_ono_upper = 0;
};

inline BoundsReport bounds_report(long long p) {
    BoundsReport r;
    r.p = p;
    r.sharpened_upper = sharpened_upper_bound(p);
    r.mcspirit_ono_upper = mcspirit_ono_bound(p);
    if (is_odd_prime(p)) {
        const int pi = static_cast<int>(p);
        r.explicit_size = explicit_family_size(pi);
        r.largest_size = chartable_zero_threshold(pi);
    }
    if (r.sharpened_upper > r.mcspirit_ono_upper)
        throw Error("bound ordering violated: sharpened > McSpirit-Ono");
    if (r.explicit_size && r.largest_size && *r.explicit_size > *r.largest_size)
        throw Error("bound ordering violated: explicit family exceeds the largest size");
    if (r.largest_size && *r.largest_size > r.sharpened_upper)
        throw Error("bound ordering violated: largest size exceeds the upper bound");
    return r;
}

}  // namespace pcore
