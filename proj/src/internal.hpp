#pragma once

#include <span>

#include "almg/checks.hpp"

namespace almg::detail {

/// Laws defined by the geometry module, for the shared registry.
std::span<const Law* const> geometry_laws();

}  // namespace almg::detail
