#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "inducibility/profile.hpp"

namespace inducibility {

/// Parses a rational combination of isomorphism types:
///
///   K4+A4        1/2*C4 + 1/2*M4        2 P4 - 0.5 K4        G(5: 1-5, 2-3)
///
/// Names resolve in iso_table(t); G(n: a-b, ...) lists the edges of an
/// n-vertex graph on vertices 1..n. The order is inferred from the terms and
/// must equal `t` when given. Throws std::invalid_argument on errors.
QuantumGraph parse_quantum(std::string_view text, std::optional<int> t = std::nullopt);

/// Canonical text, e.g. "K4 + A4" or "1/2*C4 + 1/2*M4".
std::string print_quantum(const QuantumGraph& q);

}  // namespace inducibility
