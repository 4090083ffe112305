#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace akcodes {

// Thrown on every precondition violation (bad arguments, malformed input,
// unsatisfiable construction). Messages are complete sentences naming the
// offending value so the CLI can print them verbatim.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A subset of the variable indices {1,...,k}, bit i-1 <-> index i.
// Doubles as the XOR mask acting on CRT evaluation points.
using VarSet = std::uint32_t;

inline constexpr std::uint32_t kMaxVars = 16;

// Parses "1,3,4" or "empty" (also "{}" and ""). Indices must be in [1,16].
VarSet parse_varset(const std::string& text);

// Formats as "{1,3,4}" or "{}" with ascending indices.
std::string format_varset(VarSet s);

// Comma form without braces ("1,3,4" / "empty"), used by spec files and reports.
std::string format_varset_plain(VarSet s);

inline bool varset_contains(VarSet s, unsigned i) { return (s >> (i - 1)) & 1u; }

}  // namespace akcodes
