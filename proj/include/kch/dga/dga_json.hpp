#pragma once

#include "kch/dga/dga.hpp"

#include "json.hpp"

namespace kch {

/// Ring descriptor, generator table and differentials as canonical strings.
nlohmann::json dga_to_json(const DGA &d);

} // namespace kch
