#pragma once

#include <ostream>

namespace herschel {

/// Runs the cross-module oracle and identity suite, printing one
/// "ok - ..." / "FAIL - ..." line per check.  Returns the failure count.
int run_selfcheck(std::ostream& os);

}  // namespace herschel
