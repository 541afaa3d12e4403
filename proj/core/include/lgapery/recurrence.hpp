#pragma once

#include "lgapery/upoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lgapery {

/// Linear recurrence sum_{j=0}^{span} q_j(n) a_{n-j} = 0 with polynomial
/// coefficients in n.
struct Recurrence {
    std::vector<UPoly> coefficients;

    std::size_t span() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    const UPoly& leading() const { return coefficients.at(0); }

    friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

std::string to_string(const Recurrence& rec);

}  // namespace lgapery
