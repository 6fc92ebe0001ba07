#pragma once

namespace cfknot::cli {

/// Parses and runs one CLI invocation.
/// Exit codes: 0 success, 2 usage or parse error, 3 domain precondition
/// violation, 4 criterion inapplicable, 1 anything unexpected.
int run(int argc, const char* const* argv);

}  // namespace cfknot::cli
