#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stdlat/norms.hpp"
#include "stdlat/types.hpp"

namespace stdlat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kNonStandard = 3,
  kResourceError = 4,
  kInternalError = 5,
};

struct BasisFile {
  LatticeBasis basis;
  std::optional<NormKind> norm;
};

// JSON ({"dim": n, "basis": [[...]], "norm": "l2"}) when the first
// non-blank character is '{', otherwise plain text: n followed by n*n
// integers. Throws InputError.
BasisFile parse_basis(std::string_view text);
BasisFile read_basis_file(const std::string& path);

// Coordinates given as "p/q" or "p"; tokens may also contain several
// coordinates separated by blanks or commas.
RatVector parse_point(const std::vector<std::string>& tokens);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stdlat::cli
