#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ramsey/colouring.hpp"

namespace ramsey {

// CLR v1 text format:
//   optional '#' comment lines (before the header only)
//   RAMSEY-CLR 1 <m>
//   for i = 0..m-2: the bit string f(i,i+1) f(i,i+2) ... f(i,m-1)
// Round-trips bit-exactly.

struct ClrParseError : std::runtime_error {
    ClrParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line;
    std::size_t column;
};

void write_clr(std::ostream& out, const Colouring& f);
void write_clr_file(const std::string& path, const Colouring& f);

Colouring read_clr(std::istream& in);
Colouring read_clr_file(const std::string& path);

}  // namespace ramsey
