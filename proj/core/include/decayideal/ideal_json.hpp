#pragma once

#include <string>
#include <string_view>

#include "decayideal/decay_construction.hpp"
#include "decayideal/monomial_ideal.hpp"

namespace decayideal {

/// {"variables": [...], "generators": [[...], ...]} in canonical order,
/// compact, no trailing newline.
std::string ideal_to_json(const MonomialIdeal& ideal);

/// Parses the ideal format. Generators need not be minimal or sorted; the
/// result is canonical. Throws InvalidArgument on malformed input.
MonomialIdeal ideal_from_json(std::string_view text);

/// The ideal format plus "meta": {"q", "n", "m", "t", "J", "K"}.
std::string construction_to_json(const ConstructionData& data);

}  // namespace decayideal
