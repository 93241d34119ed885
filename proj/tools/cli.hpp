#pragma once

#include <ostream>

namespace smtgi::cli {

// Exit codes: 0 success, 1 usage or input error, 2 size bound exhausted or
// unknown solver verdict, 3 machines not equivalent.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kSearchFailed = 2;
inline constexpr int kNotEquivalent = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smtgi::cli
