#pragma once

#include <iosfwd>

namespace mopdom {

/// Entry point of the mopdom tool. Graph inputs are read from the positional
/// path argument, or from `in` when it is "-" or absent. Returns 0 on
/// success, 1 on a failed verification or stress run, 2 on usage or input
/// errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mopdom
