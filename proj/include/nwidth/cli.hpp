// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace nwidth {

/// Entry point of the nwidth executable. Returns 0 on success, 1 when the
/// request fails numerically or mathematically, 2 on usage errors.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nwidth
