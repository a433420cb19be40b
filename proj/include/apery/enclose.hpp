#pragma once

#include "apery/decimal.hpp"
#include "apery/interval.hpp"
#include "apery/zeta.hpp"

#include <optional>

namespace apery {

/// Enclosure of q * zeta(s) - p with the zeta oracle precision escalated
/// until the sign is resolved and the width is below |value| * 10^(-rel),
/// starting from digits0 reference digits. Returns nullopt if the budget is
/// exhausted (the caller reports INDETERMINATE rather than guessing).
inline std::optional<Interval> linear_form_enclosure(const Rat& q, const Rat& p, long s,
                                                     long digits0, long rel = 2) {
    constexpr long kBudget = 20000;
    for (long d = std::max(digits0, 10l); d <= kBudget; d *= 2) {
        Interval iv = zeta_enclosure(s, d) * q - p;
        if (iv.sign() == 0) continue;
        Rat bound = rat_abs(iv.mid()) * pow10_neg(static_cast<unsigned long>(rel));
        if (iv.width() <= bound) return iv;
    }
    return std::nullopt;
}

}  // namespace apery
