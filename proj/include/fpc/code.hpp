#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fpc {

/// Dense symbol id in 0..q-1. When a code declares an infinity symbol it is
/// id 0 by convention (see PairAlphabet), though make_code accepts any id.
using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

/// Largest supported alphabet. 0xFFFF itself is never a symbol; the SIMD
/// kernels use it to pad columns.
inline constexpr std::size_t kMaxAlphabet = 0xFFFF;
inline constexpr Symbol kPadSymbol = 0xFFFF;

/// A set of equal-length words over {0..q-1}. Immutable; words are stored
/// row-major in lexicographic order.
class Code {
 public:
  Code(std::size_t length, std::size_t alphabet, std::vector<Word> words,
       std::optional<Symbol> inf = std::nullopt);

  std::size_t length() const noexcept { return length_; }
  std::size_t alphabet_size() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return size_; }
  std::optional<Symbol> inf_id() const noexcept { return inf_; }

  std::span<const Symbol> word(std::size_t i) const {
    return {symbols_.data() + i * length_, length_};
  }
  Word word_copy(std::size_t i) const {
    auto w = word(i);
    return {w.begin(), w.end()};
  }
  std::vector<Word> words() const;

  /// Row-major storage, size() * length() symbols.
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> index_of(std::span<const Symbol> w) const;
  bool contains(std::span<const Symbol> w) const { return index_of(w).has_value(); }

  /// Throws ErrorCode::precondition when no infinity symbol is declared.
  Symbol require_inf(const char* operation) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::size_t length_;
  std::size_t alphabet_;
  std::size_t size_ = 0;
  std::optional<Symbol> inf_;
  std::vector<Symbol> symbols_;
};

Code make_code(std::size_t length, std::size_t alphabet, std::vector<Word> words,
               std::optional<Symbol> inf = std::nullopt);

std::strong_ordering compare_words(std::span<const Symbol> a, std::span<const Symbol> b);

/// x is in desc(P) iff every position of x is matched by some member of P.
/// Never enumerates.
bool descendant_contains(std::span<const Word> coalition, std::span<const Symbol> x);

inline constexpr std::size_t kDefaultDescendantCap = 1'000'000;

/// All descendants of the coalition, lexicographically sorted. Throws
/// ErrorCode::limit_exceeded when prod_i |{y_i}| exceeds cap.
std::vector<Word> enumerate_descendants(std::span<const Word> coalition,
                                        std::size_t cap = kDefaultDescendantCap);

/// C(sigma, i): relabel the symbols at one position by a permutation of 0..q-1.
Code apply_coordinate_permutation(const Code& code, std::size_t position,
                                  std::span<const Symbol> sigma);

/// Flattening of (T x F_m) u {(inf,inf)} onto 0..q-1 with q = (s-1)m+1.
/// T is the non-infinity part of an s-symbol alphabet, ids 1..s-1.
struct PairAlphabet {
  std::size_t s;
  std::size_t m;

  std::size_t q() const noexcept { return (s - 1) * m + 1; }

  /// (b, y) with b in 1..s-1 and y in 0..m-1; (0, *) is the infinity pair.
  Symbol encode(Symbol b, std::uint32_t y) const;

  struct Pair {
    Symbol b;        // 0 for infinity
    std::uint32_t y;  // meaningless for infinity
    bool infinite() const noexcept { return b == 0; }
  };
  Pair decode(Symbol id) const;
};

PairAlphabet flatten_pair_alphabet(std::size_t s, std::size_t m);

enum class WitnessKind { framed, pt_violation, oa_violation };

/// Counterexample certificate returned by the verifiers.
struct Witness {
  WitnessKind kind = WitnessKind::framed;

  // framed: coalition P (sorted) and the framed word x not in P.
  std::vector<Word> coalition;
  Word framed_word;

  // pt_violation: one word (too many infinities) or two words, with the
  // offending positions (infinity positions or shared non-infinity positions).
  std::vector<Word> pair;
  std::vector<std::size_t> positions;

  // oa_violation: rows of the failing t-subset, the column tuple, and how
  // many times it was seen (expected lambda).
  std::vector<std::size_t> rows;
  std::vector<Symbol> tuple;
  std::size_t observed = 0;
  std::size_t expected = 0;
};

/// Independent re-check of a witness against the definitions.
bool witness_revalidates(const Witness& w, std::optional<Symbol> inf = std::nullopt,
                         std::size_t t = 0);

}  // namespace fpc
