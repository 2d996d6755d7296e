#pragma once

#include "wb/catkit.hpp"

namespace wb::corpus {

/// Objects {0,1}, arrows i0, i1 and u : 0 → 1.
InternalCategory two();
/// Objects {0,1}, arrows i0, i1, u : 0 → 1, v : 1 → 0 with uv and vu identities.
InternalCategory e4();
/// One object, arrows e and z with z∘z = e.
InternalCategory z2();
/// Discrete category on {0,1}.
InternalCategory disc2();

}  // namespace wb::corpus
