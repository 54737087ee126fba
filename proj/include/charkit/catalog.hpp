#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charkit/config.hpp"
#include "charkit/perm_group.hpp"

namespace charkit {

/// Parses a group specification:
///
///   name:<Name>[x<Name>...]   catalog groups and their direct products,
///                             Name in {Cn, Dn (order 2n), Sn, An, Q8, Q16,
///                             SL23, F20, F21, ES27}
///   perm:<cycles>,<cycles>,...  generators in cycle notation, e.g.
///                             perm:(1 2),(1 2 3)
///
/// Throws ParseError for malformed input and unknown names, and
/// CapExceeded when the group order exceeds config.element_cap.
GroupPtr parse_group(std::string_view spec, const Config& config = {});

/// The catalog swept by `verify` when no catalog is given.
const std::vector<std::string>& default_catalog();

}  // namespace charkit
