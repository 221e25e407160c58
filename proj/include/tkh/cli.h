// Command-line dispatch, shared by the binary and the tests. Exit codes:
// 0 success, 1 validation or computation failure, 2 unreadable or
// unparseable input. Failures print {"error": code, "detail": text} to the
// output stream.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tkh {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tkh
