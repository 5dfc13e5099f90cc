#pragma once

#include <vector>

#include "epp/enumeration.hpp"

namespace epp {

// golden copy of the 64-row passing-string table for Werner-form input,
// sorted by (marginal, input). generate_pass_table() must reproduce it
// exactly; the CLI verify command and the test suite both diff against it.
const std::vector<PassTableRow>& reference_pass_table();

}  // namespace epp
