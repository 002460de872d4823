#include "fpc/code_io.hpp"

#include <istream>
#include <iterator>
#include <ostream>

#include "fpc/error.hpp"
#include "fpc/text.hpp"

namespace fpc {

std::string format_word(std::span<const Symbol> w, std::optional<Symbol> inf) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    if (inf && w[i] == *inf) {
      out += '*';
    } else {
      out += std::to_string(w[i]);
    }
  }
  return out;
}

std::string format_code(const Code& code) {
  std::string out = "fpc1 q=" + std::to_string(code.alphabet_size()) +
                    " l=" + std::to_string(code.length()) + " M=" + std::to_string(code.size()) +
                    " inf=" + (code.inf_id() ? std::to_string(*code.inf_id()) : "none") + "\n";
  for (std::size_t i = 0; i < code.size(); ++i) {
    out += format_word(code.word(i), code.inf_id());
    out += '\n';
  }
  return out;
}

void write_code(std::ostream& out, const Code& code) { out << format_code(code); }

Code parse_code(std::string_view input) {
  auto lines = text::split_lines(input);
  if (lines.empty()) throw Error(ErrorCode::parse, "empty code file");
  auto header = text::split_ws(lines[0]);
  if (header.size() != 5 || header[0] != "fpc1") {
    throw Error(ErrorCode::parse, "expected header 'fpc1 q=<q> l=<l> M=<M> inf=<id|none>'");
  }
  const auto q = text::parse_field(header[1], "q");
  const auto l = text::parse_field(header[2], "l");
  const auto count = text::parse_field(header[3], "M");
  std::optional<Symbol> inf;
  if (header[4] != "inf=none") {
    auto id = text::parse_field(header[4], "inf");
    if (id >= q) throw Error(ErrorCode::symbol_out_of_range, "inf id outside alphabet");
    inf = static_cast<Symbol>(id);
  }
  if (q < 2 || q > kMaxAlphabet) throw Error(ErrorCode::parse, "alphabet size out of range");
  if (lines.size() - 1 != count) {
    throw Error(ErrorCode::parse, "header declares M=" + std::to_string(count) + " but file has " +
                                      std::to_string(lines.size() - 1) + " words");
  }

  std::vector<Word> words;
  words.reserve(count);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    auto tokens = text::split_ws(lines[n]);
    if (tokens.size() != l) {
      throw Error(ErrorCode::dimension_mismatch,
                  "line " + std::to_string(n + 1) + " has " + std::to_string(tokens.size()) +
                      " symbols, expected " + std::to_string(l));
    }
    Word w;
    w.reserve(l);
    for (auto tok : tokens) {
      if (tok == "*") {
        if (!inf) {
          throw Error(ErrorCode::parse,
                      "line " + std::to_string(n + 1) + " uses '*' but inf=none");
        }
        w.push_back(*inf);
        continue;
      }
      auto v = text::parse_uint(tok, "symbol");
      if (v >= q) {
        throw Error(ErrorCode::symbol_out_of_range,
                    "line " + std::to_string(n + 1) + ": symbol " + std::to_string(v) +
                        " outside alphabet of size " + std::to_string(q));
      }
      w.push_back(static_cast<Symbol>(v));
    }
    words.push_back(std::move(w));
  }
  return Code(l, q, std::move(words), inf);
}

Code read_code(std::istream& in) {
  std::string contents{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_code(contents);
}

Code load_code(const std::string& path) { return parse_code(text::read_file(path)); }

void save_code(const std::string& path, const Code& code) {
  text::write_file(path, format_code(code));
}

}  // namespace fpc
