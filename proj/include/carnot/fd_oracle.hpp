#pragma once

#include <optional>

#include "carnot/field.hpp"

namespace carnot {

/// Central-difference jet built from value() calls only; independent of the
/// forward-mode path and meant for cross-checking it.
///
/// Default steps per coordinate a are eps^(1/3) * max(1, |p_a|) for the
/// gradient and eps^(1/4) * max(1, |p_a|) for the Hessian (the respective
/// optimal scalings for first and second central differences). An explicit
/// `h` replaces both base factors. Throws SingularPointError if a stencil
/// point lands in the singular set.
Jet2 fd_oracle(const ScalarField& f, const Point& p, std::optional<double> h = std::nullopt);

}  // namespace carnot
