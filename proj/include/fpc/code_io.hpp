#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fpc/code.hpp"

namespace fpc {

// Text code format:
//   fpc1 q=<q> l=<l> M=<M> inf=<id|none>
//   <l space-separated symbol ids>   (M lines, lexicographic order)
// The inf symbol is written as `*`; `*` is also accepted on input.

std::string format_code(const Code& code);
void write_code(std::ostream& out, const Code& code);

/// Renders one word in file syntax.
std::string format_word(std::span<const Symbol> w, std::optional<Symbol> inf);

/// Input lines may come in any order; the result is canonical.
Code parse_code(std::string_view text);
Code read_code(std::istream& in);

Code load_code(const std::string& path);
void save_code(const std::string& path, const Code& code);

}  // namespace fpc
