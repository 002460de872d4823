#include "fpc/code.hpp"

#include <algorithm>
#include <sstream>

#include "fpc/error.hpp"

namespace fpc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::dimension_mismatch: return "dimension mismatch";
    case ErrorCode::symbol_out_of_range: return "symbol out of range";
    case ErrorCode::duplicate_word: return "duplicate word";
    case ErrorCode::not_prime_power: return "not a prime power";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::limit_exceeded: return "limit exceeded";
    case ErrorCode::budget_exceeded: return "budget exceeded";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::io: return "i/o error";
  }
  return "unknown error";
}

namespace {

std::string render(std::span<const Symbol> w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ')';
  return out.str();
}

}  // namespace

std::strong_ordering compare_words(std::span<const Symbol> a, std::span<const Symbol> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Code::Code(std::size_t length, std::size_t alphabet, std::vector<Word> words,
           std::optional<Symbol> inf)
    : length_(length), alphabet_(alphabet), inf_(inf) {
  if (length == 0) throw Error(ErrorCode::invalid_argument, "code length must be positive");
  if (alphabet < 2 || alphabet > kMaxAlphabet) {
    throw Error(ErrorCode::invalid_argument,
                "alphabet size must be in 2.." + std::to_string(kMaxAlphabet));
  }
  if (inf && *inf >= alphabet) {
    throw Error(ErrorCode::symbol_out_of_range,
                "inf id " + std::to_string(*inf) + " outside alphabet of size " +
                    std::to_string(alphabet));
  }
  for (const auto& w : words) {
    if (w.size() != length) {
      throw Error(ErrorCode::dimension_mismatch, "word " + render(w) + " has length " +
                                                     std::to_string(w.size()) + ", expected " +
                                                     std::to_string(length));
    }
    for (Symbol s : w) {
      if (s >= alphabet) {
        throw Error(ErrorCode::symbol_out_of_range,
                    "word " + render(w) + " uses symbol " + std::to_string(s) +
                        " outside alphabet of size " + std::to_string(alphabet));
      }
    }
  }
  std::sort(words.begin(), words.end());
  if (auto dup = std::adjacent_find(words.begin(), words.end()); dup != words.end()) {
    throw Error(ErrorCode::duplicate_word, "duplicate word " + render(*dup));
  }
  size_ = words.size();
  symbols_.reserve(size_ * length_);
  for (const auto& w : words) symbols_.insert(symbols_.end(), w.begin(), w.end());
}

Code make_code(std::size_t length, std::size_t alphabet, std::vector<Word> words,
               std::optional<Symbol> inf) {
  return Code(length, alphabet, std::move(words), inf);
}

std::vector<Word> Code::words() const {
  std::vector<Word> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(word_copy(i));
  return out;
}

std::optional<std::size_t> Code::index_of(std::span<const Symbol> w) const {
  if (w.size() != length_) return std::nullopt;
  std::size_t lo = 0, hi = size_;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto cmp = compare_words(word(mid), w);
    if (cmp == 0) return mid;
    if (cmp < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

Symbol Code::require_inf(const char* operation) const {
  if (!inf_) {
    throw Error(ErrorCode::precondition,
                std::string(operation) + " requires a code with a declared inf symbol");
  }
  return *inf_;
}

namespace {

void check_coalition(std::span<const Word> coalition, std::size_t length) {
  if (coalition.empty()) throw Error(ErrorCode::invalid_argument, "coalition is empty");
  for (const auto& y : coalition) {
    if (y.size() != length) {
      throw Error(ErrorCode::dimension_mismatch,
                  "coalition word " + render(y) + " has length " + std::to_string(y.size()) +
                      ", expected " + std::to_string(length));
    }
  }
}

}  // namespace

bool descendant_contains(std::span<const Word> coalition, std::span<const Symbol> x) {
  check_coalition(coalition, x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool hit = std::any_of(coalition.begin(), coalition.end(),
                           [&](const Word& y) { return y[i] == x[i]; });
    if (!hit) return false;
  }
  return true;
}

std::vector<Word> enumerate_descendants(std::span<const Word> coalition, std::size_t cap) {
  if (coalition.empty()) throw Error(ErrorCode::invalid_argument, "coalition is empty");
  const std::size_t length = coalition.front().size();
  check_coalition(coalition, length);

  std::vector<std::vector<Symbol>> choices(length);
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    for (const auto& y : coalition) choices[i].push_back(y[i]);
    std::sort(choices[i].begin(), choices[i].end());
    choices[i].erase(std::unique(choices[i].begin(), choices[i].end()), choices[i].end());
    if (total > cap / choices[i].size()) {
      throw Error(ErrorCode::limit_exceeded,
                  "descendant set exceeds cap of " + std::to_string(cap) + " words");
    }
    total *= choices[i].size();
  }
  if (total > cap) {
    throw Error(ErrorCode::limit_exceeded,
                "descendant set exceeds cap of " + std::to_string(cap) + " words");
  }

  // Odometer over per-position choices; the last position varies fastest so
  // the output comes out sorted.
  std::vector<Word> out;
  out.reserve(total);
  std::vector<std::size_t> digit(length, 0);
  for (std::size_t n = 0; n < total; ++n) {
    Word w(length);
    for (std::size_t i = 0; i < length; ++i) w[i] = choices[i][digit[i]];
    out.push_back(std::move(w));
    for (std::size_t i = length; i-- > 0;) {
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

Code apply_coordinate_permutation(const Code& code, std::size_t position,
                                  std::span<const Symbol> sigma) {
  if (position >= code.length()) {
    throw Error(ErrorCode::invalid_argument, "position " + std::to_string(position) +
                                                 " outside code of length " +
                                                 std::to_string(code.length()));
  }
  if (sigma.size() != code.alphabet_size()) {
    throw Error(ErrorCode::invalid_argument, "permutation must have one entry per symbol");
  }
  std::vector<bool> seen(sigma.size(), false);
  for (Symbol v : sigma) {
    if (v >= sigma.size() || seen[v]) {
      throw Error(ErrorCode::invalid_argument, "sigma is not a bijection on 0..q-1");
    }
    seen[v] = true;
  }
  auto words = code.words();
  for (auto& w : words) w[position] = sigma[w[position]];
  return Code(code.length(), code.alphabet_size(), std::move(words), code.inf_id());
}

Symbol PairAlphabet::encode(Symbol b, std::uint32_t y) const {
  if (b == 0) return 0;
  if (b >= s || y >= m) {
    throw Error(ErrorCode::symbol_out_of_range, "pair (" + std::to_string(b) + "," +
                                                    std::to_string(y) +
                                                    ") outside flattened alphabet");
  }
  return static_cast<Symbol>((b - 1) * m + y + 1);
}

PairAlphabet::Pair PairAlphabet::decode(Symbol id) const {
  if (id >= q()) {
    throw Error(ErrorCode::symbol_out_of_range,
                "symbol " + std::to_string(id) + " outside flattened alphabet");
  }
  if (id == 0) return {0, 0};
  return {static_cast<Symbol>((id - 1) / m + 1), static_cast<std::uint32_t>((id - 1) % m)};
}

PairAlphabet flatten_pair_alphabet(std::size_t s, std::size_t m) {
  if (s < 2 || m < 2) {
    throw Error(ErrorCode::invalid_argument, "flattening needs s >= 2 and m >= 2");
  }
  PairAlphabet alphabet{s, m};
  if (alphabet.q() > kMaxAlphabet) {
    throw Error(ErrorCode::limit_exceeded,
                "flattened alphabet of size " + std::to_string(alphabet.q()) + " too large");
  }
  return alphabet;
}

bool witness_revalidates(const Witness& w, std::optional<Symbol> inf, std::size_t t) {
  switch (w.kind) {
    case WitnessKind::framed: {
      if (w.coalition.empty()) return false;
      bool member = std::find(w.coalition.begin(), w.coalition.end(), w.framed_word) !=
                    w.coalition.end();
      return !member && descendant_contains(w.coalition, w.framed_word);
    }
    case WitnessKind::pt_violation: {
      if (!inf || t == 0) return false;
      if (w.pair.size() == 1) {
        auto n = std::count(w.pair[0].begin(), w.pair[0].end(), *inf);
        return static_cast<std::size_t>(n) > t - 1;
      }
      if (w.pair.size() != 2 || w.pair[0] == w.pair[1]) return false;
      std::size_t agree = 0;
      for (std::size_t i = 0; i < w.pair[0].size(); ++i) {
        if (w.pair[0][i] == w.pair[1][i] && w.pair[0][i] != *inf) ++agree;
      }
      return agree > t - 1;
    }
    case WitnessKind::oa_violation:
      return w.observed != w.expected;
  }
  return false;
}

}  // namespace fpc
