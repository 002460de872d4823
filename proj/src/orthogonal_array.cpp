#include "fpc/orthogonal_array.hpp"

#include <algorithm>
#include <string>

#include "fpc/error.hpp"
#include "fpc/field.hpp"
#include "fpc/text.hpp"

namespace fpc {

namespace {

constexpr std::size_t kMaxTuples = 1u << 24;

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > kMaxTuples / base) {
      throw Error(ErrorCode::limit_exceeded, "s^t too large for exhaustive OA handling");
    }
    r *= base;
  }
  return r;
}

}  // namespace

OrthogonalArray::OrthogonalArray(std::size_t constraints, std::size_t levels,
                                 std::size_t strength, std::size_t runs,
                                 std::vector<Symbol> cells)
    : k_(constraints), s_(levels), t_(strength), n_(runs), cells_(std::move(cells)) {
  if (k_ == 0 || n_ == 0) throw Error(ErrorCode::invalid_argument, "empty orthogonal array");
  if (s_ < 2 || s_ > kMaxAlphabet) {
    throw Error(ErrorCode::invalid_argument, "OA needs 2 <= s <= " + std::to_string(kMaxAlphabet));
  }
  if (t_ < 1 || t_ > k_) throw Error(ErrorCode::invalid_argument, "OA strength must be in 1..k");
  if (cells_.size() != k_ * n_) {
    throw Error(ErrorCode::dimension_mismatch, "OA cell count does not match k x N");
  }
  for (Symbol v : cells_) {
    if (v >= s_) {
      throw Error(ErrorCode::symbol_out_of_range,
                  "OA symbol " + std::to_string(v) + " outside 0.." + std::to_string(s_ - 1));
    }
  }
}

std::size_t OrthogonalArray::index() const noexcept {
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < t_; ++i) {
    if (tuples > n_) return 0;
    tuples *= s_;
  }
  return n_ / tuples;
}

Word OrthogonalArray::column(std::size_t col) const {
  Word w(k_);
  for (std::size_t r = 0; r < k_; ++r) w[r] = at(r, col);
  return w;
}

OrthogonalArray build_oa_strength2(std::size_t s) {
  const Field field = make_field(s);
  const auto elems = field.canonical_elements();
  const std::size_t k = s + 1, n = s * s;
  std::vector<Symbol> cells(k * n);
  for (Element a : elems) {
    for (Element b : elems) {
      const std::size_t col = a * s + b;
      for (std::size_t r = 0; r < s; ++r) {
        cells[r * n + col] = static_cast<Symbol>(field.add(field.mul(a, elems[r]), b));
      }
      cells[s * n + col] = static_cast<Symbol>(a);
    }
  }
  return OrthogonalArray(k, s, 2, n, std::move(cells));
}

VerifyReport verify_oa(const OrthogonalArray& array) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t k = array.constraints(), s = array.levels(), t = array.strength();
  const std::size_t n = array.runs();
  const std::size_t tuples = checked_power(s, t);
  const std::size_t lambda = n / tuples;

  VerifyReport report;
  if (lambda == 0 || lambda * tuples != n) {
    // Run count is not a multiple of s^t: no index exists.
    Witness w;
    w.kind = WitnessKind::oa_violation;
    w.observed = n;
    w.expected = (lambda == 0 ? 1 : lambda) * tuples;
    report.verdict = false;
    report.witness = std::move(w);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }
  std::vector<std::size_t> rows(t);
  for (std::size_t i = 0; i < t; ++i) rows[i] = i;
  std::vector<std::size_t> counts(tuples);
  for (;;) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t code = 0;
      for (auto r : rows) code = code * s + array.at(r, col);
      ++counts[code];
    }
    ++report.subsets_examined;
    for (std::size_t code = 0; code < tuples; ++code) {
      if (counts[code] == lambda) continue;
      Witness w;
      w.kind = WitnessKind::oa_violation;
      w.rows = rows;
      w.tuple.resize(t);
      std::size_t rest = code;
      for (std::size_t i = t; i-- > 0;) {
        w.tuple[i] = static_cast<Symbol>(rest % s);
        rest /= s;
      }
      w.observed = counts[code];
      w.expected = lambda;
      report.verdict = false;
      report.witness = std::move(w);
      report.elapsed = std::chrono::steady_clock::now() - start;
      return report;
    }
    std::size_t pos = t;
    while (pos > 0 && rows[pos - 1] == k - t + pos - 1) --pos;
    if (pos == 0) break;
    ++rows[pos - 1];
    for (std::size_t i = pos; i < t; ++i) rows[i] = rows[i - 1] + 1;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

OrthogonalArray normalize_column_to_infinity(const OrthogonalArray& array, std::size_t col) {
  if (col >= array.runs()) {
    throw Error(ErrorCode::invalid_argument, "column " + std::to_string(col) + " out of range");
  }
  std::vector<Symbol> cells(array.cells().begin(), array.cells().end());
  const std::size_t n = array.runs();
  for (std::size_t r = 0; r < array.constraints(); ++r) {
    const Symbol v = array.at(r, col);
    if (v == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Symbol& cell = cells[r * n + j];
      if (cell == v) {
        cell = 0;
      } else if (cell == 0) {
        cell = v;
      }
    }
  }
  return OrthogonalArray(array.constraints(), array.levels(), array.strength(), n,
                         std::move(cells));
}

Code oa_to_frameproof(const OrthogonalArray& array, std::size_t c) {
  if (c < 1) throw Error(ErrorCode::invalid_argument, "c must be positive");
  if (array.constraints() <= c * (array.strength() - 1)) {
    throw Error(ErrorCode::precondition,
                "OA-to-code needs k > c(t-1): k=" + std::to_string(array.constraints()) +
                    ", c=" + std::to_string(c) + ", t=" + std::to_string(array.strength()));
  }
  std::vector<Word> words;
  words.reserve(array.runs());
  for (std::size_t j = 0; j < array.runs(); ++j) words.push_back(array.column(j));
  return Code(array.constraints(), array.levels(), std::move(words));
}

Code oa_to_pt_code(const OrthogonalArray& array, std::size_t t) {
  if (t != array.strength()) {
    throw Error(ErrorCode::precondition, "requested t does not match OA strength");
  }
  if (array.index() != 1 || checked_power(array.levels(), t) != array.runs()) {
    throw Error(ErrorCode::precondition, "Property P(t) code needs an OA of index 1");
  }
  const auto normalized = normalize_column_to_infinity(array, 0);
  std::vector<Word> words;
  words.reserve(array.runs() - 1);
  for (std::size_t j = 1; j < array.runs(); ++j) words.push_back(normalized.column(j));
  return Code(array.constraints(), array.levels(), std::move(words), Symbol{0});
}

std::string format_oa(const OrthogonalArray& array) {
  std::string out = "oa1 N=" + std::to_string(array.runs()) +
                    " k=" + std::to_string(array.constraints()) +
                    " s=" + std::to_string(array.levels()) +
                    " t=" + std::to_string(array.strength()) + "\n";
  for (std::size_t r = 0; r < array.constraints(); ++r) {
    auto row = array.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

OrthogonalArray parse_oa(std::string_view input) {
  auto lines = text::split_lines(input);
  if (lines.empty()) throw Error(ErrorCode::parse, "empty OA file");
  auto header = text::split_ws(lines[0]);
  if (header.size() != 5 || header[0] != "oa1") {
    throw Error(ErrorCode::parse, "expected header 'oa1 N=<N> k=<k> s=<s> t=<t>'");
  }
  const auto n = text::parse_field(header[1], "N");
  const auto k = text::parse_field(header[2], "k");
  const auto s = text::parse_field(header[3], "s");
  const auto t = text::parse_field(header[4], "t");
  if (lines.size() - 1 != k) {
    throw Error(ErrorCode::parse, "header declares k=" + std::to_string(k) + " but file has " +
                                      std::to_string(lines.size() - 1) + " rows");
  }
  if (s < 2 || s > kMaxAlphabet) throw Error(ErrorCode::parse, "OA level count out of range");
  std::vector<Symbol> cells;
  cells.reserve(k * n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto tokens = text::split_ws(lines[r]);
    if (tokens.size() != n) {
      throw Error(ErrorCode::dimension_mismatch, "row " + std::to_string(r) + " has " +
                                                     std::to_string(tokens.size()) +
                                                     " entries, expected " + std::to_string(n));
    }
    for (auto tok : tokens) {
      auto v = text::parse_uint(tok, "symbol");
      if (v >= s) {
        throw Error(ErrorCode::symbol_out_of_range,
                    "OA symbol " + std::to_string(v) + " outside 0.." + std::to_string(s - 1));
      }
      cells.push_back(static_cast<Symbol>(v));
    }
  }
  return OrthogonalArray(k, s, t, n, std::move(cells));
}

OrthogonalArray load_oa(const std::string& path) { return parse_oa(text::read_file(path)); }

void save_oa(const std::string& path, const OrthogonalArray& array) {
  text::write_file(path, format_oa(array));
}

}  // namespace fpc
