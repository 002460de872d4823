#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fpc/code.hpp"
#include "fpc/field.hpp"

namespace fpc {

/// The four hard-coded seed codes, all with inf id 0 and Property P(2):
///   ex1   3-ary, length 4,  8 words, 2-frameproof
///   ex2   4-ary, length 5, 15 words, 3-frameproof
///   lem4  5-ary, length 4, 32 words, 2-frameproof
///   lem5 10-ary, length 5, 135 words, 3-frameproof
enum class BaseCodeId { ex1, ex2, lem4, lem5 };

std::string_view to_string(BaseCodeId id);
std::optional<BaseCodeId> parse_base_code_id(std::string_view name);

struct BaseCodeInfo {
  std::size_t q, length, size, c;
};
BaseCodeInfo base_code_info(BaseCodeId id);

Code base_code(BaseCodeId id);

/// An evaluation point: a field element or the point at infinity.
class EvalPoint {
 public:
  static EvalPoint element(Element e) { return EvalPoint(e, false); }
  static EvalPoint infinity() { return EvalPoint(0, true); }

  bool is_infinity() const noexcept { return infinite_; }
  Element value() const noexcept { return value_; }

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

 private:
  EvalPoint(Element v, bool inf) : value_(v), infinite_(inf) {}
  Element value_;
  bool infinite_;
};

using EvalPoints = std::vector<EvalPoint>;

/// First l canonical elements, or all m elements followed by infinity when
/// l = m + 1.
EvalPoints default_eval_points(const Field& field, std::size_t length);

struct ComposeParams {
  std::size_t m = 0;  // prime power, >= l - 1
  std::size_t t = 2;
  std::size_t c = 2;
  std::optional<EvalPoints> points;  // default_eval_points when absent
  bool trust = false;  // skip re-verifying Property P(t) of the input
};

/// Recursive composition: each parent word B is paired, position by
/// position, with every codeword of the degree <= t-1 evaluation code over
/// GF(m) (inf where B has inf, the X^{t-1} coefficient at the infinite point).
/// The result is over the flattened alphabet of size (s-1)m+1 with
/// |C| * m^t words and inherits c-frameproofness and Property P(t).
Code compose_lemma2(const Code& parent, const ComposeParams& params);

/// Adds the all-inf word; the result stays c-frameproof.
Code augment_infinity(const Code& code, std::size_t c, std::size_t t, bool trust = false);

/// OA(t, l, s) -> Property-P(t) code -> compose over GF(m). Only the built-in
/// strength-2 generator is available, so t = 2 and l = s + 1.
Code oa_pipeline_lemma7(std::size_t s, std::size_t t, std::size_t length, std::size_t m,
                        std::size_t c);

/// s = c + 1, l = c + 2, t = 2: a (cm+1)-ary c-frameproof code of length c+2
/// with (c+2)/c (q-1)^2 words.
Code corollary_oa(std::size_t c, std::size_t m);

/// Checks l = c(t-1) + r with r in t..c. Throws ErrorCode::precondition.
void require_length_split(std::size_t length, std::size_t c, std::size_t t);

}  // namespace fpc
