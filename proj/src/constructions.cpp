#include "fpc/constructions.hpp"

#include <algorithm>
#include <string>

#include "fpc/error.hpp"
#include "fpc/orthogonal_array.hpp"
#include "fpc/verifier.hpp"

namespace fpc {

std::string_view to_string(BaseCodeId id) {
  switch (id) {
    case BaseCodeId::ex1: return "ex1";
    case BaseCodeId::ex2: return "ex2";
    case BaseCodeId::lem4: return "lem4";
    case BaseCodeId::lem5: return "lem5";
  }
  return "?";
}

std::optional<BaseCodeId> parse_base_code_id(std::string_view name) {
  for (auto id : {BaseCodeId::ex1, BaseCodeId::ex2, BaseCodeId::lem4, BaseCodeId::lem5}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

BaseCodeInfo base_code_info(BaseCodeId id) {
  switch (id) {
    case BaseCodeId::ex1: return {3, 4, 8, 2};
    case BaseCodeId::ex2: return {4, 5, 15, 3};
    case BaseCodeId::lem4: return {5, 4, 32, 2};
    case BaseCodeId::lem5: return {10, 5, 135, 3};
  }
  throw Error(ErrorCode::invalid_argument, "unknown base code");
}

namespace {

constexpr int kInf = -1;

// Symbols over {inf} u Z_n: inf -> 0, i -> i + 1.
Symbol zn(int v, int n) { return v == kInf ? Symbol{0} : static_cast<Symbol>(((v % n) + n) % n + 1); }

// Rows are (offset, ...) patterns over Z_n with one inf entry: entry k of the
// word for i is i + offset_k (mod n).
Code cyclic_family(int n, std::size_t length, const std::vector<std::vector<int>>& patterns) {
  std::vector<Word> words;
  for (const auto& pattern : patterns) {
    for (int i = 0; i < n; ++i) {
      Word w;
      for (int off : pattern) w.push_back(off == kInf ? Symbol{0} : zn(i + off, n));
      words.push_back(std::move(w));
    }
  }
  return Code(length, static_cast<std::size_t>(n) + 1, std::move(words), Symbol{0});
}

// Product-alphabet family: entry k is (i + offset_k, value_k(f)) with f = aX+b
// over Z_n (n prime), value index 0..n-1 is f(value), n is the X coefficient.
Code product_family(int n, std::size_t length,
                    const std::vector<std::vector<std::pair<int, int>>>& patterns) {
  const auto alphabet = flatten_pair_alphabet(static_cast<std::size_t>(n) + 1,
                                              static_cast<std::size_t>(n));
  std::vector<Word> words;
  for (const auto& pattern : patterns) {
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          Word w;
          for (auto [off, point] : pattern) {
            if (off == kInf) {
              w.push_back(0);
              continue;
            }
            const int y = point == n ? a : (a * point + b) % n;
            w.push_back(alphabet.encode(zn(i + off, n), static_cast<std::uint32_t>(y)));
          }
          words.push_back(std::move(w));
        }
      }
    }
  }
  return Code(length, alphabet.q(), std::move(words), Symbol{0});
}

}  // namespace

Code base_code(BaseCodeId id) {
  switch (id) {
    case BaseCodeId::ex1:
      return cyclic_family(2, 4,
                           {{kInf, 0, 0, 0}, {0, kInf, 0, 1}, {0, 1, kInf, 0}, {0, 0, 1, kInf}});
    case BaseCodeId::ex2:
      return cyclic_family(3, 5,
                           {{kInf, 0, 0, 0, 0},
                            {0, kInf, 0, 1, 2},
                            {0, 0, kInf, 2, 1},
                            {0, 1, 2, kInf, 0},
                            {0, 2, 1, 0, kInf}});
    case BaseCodeId::lem4: {
      // (offset, point): point 0/1 is f(0)/f(1), point 2 is the X coefficient.
      constexpr int fi = 2;
      return product_family(2, 4,
                            {{{kInf, 0}, {0, 0}, {0, 1}, {0, fi}},
                             {{0, 0}, {kInf, 0}, {0, 1}, {1, fi}},
                             {{0, 0}, {1, 1}, {kInf, 0}, {0, fi}},
                             {{0, 0}, {0, 1}, {1, fi}, {kInf, 0}}});
    }
    case BaseCodeId::lem5: {
      constexpr int fi = 3;
      return product_family(3, 5,
                            {{{kInf, 0}, {0, 0}, {0, 1}, {0, 2}, {0, fi}},
                             {{0, 0}, {kInf, 0}, {0, 1}, {1, 2}, {2, fi}},
                             {{0, 0}, {0, 1}, {kInf, 0}, {2, 2}, {1, fi}},
                             {{0, 0}, {1, 1}, {2, 2}, {kInf, 0}, {0, fi}},
                             {{0, 0}, {2, 1}, {1, 2}, {0, fi}, {kInf, 0}}});
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown base code");
}

EvalPoints default_eval_points(const Field& field, std::size_t length) {
  const std::size_t m = field.order();
  if (length > m + 1) {
    throw Error(ErrorCode::precondition, "need m >= l-1 distinct evaluation points: m=" +
                                             std::to_string(m) + ", l=" + std::to_string(length));
  }
  EvalPoints points;
  const auto elems = field.canonical_elements();
  for (std::size_t j = 0; j < std::min(length, m); ++j) points.push_back(EvalPoint::element(elems[j]));
  if (length == m + 1) points.push_back(EvalPoint::infinity());
  return points;
}

void require_length_split(std::size_t length, std::size_t c, std::size_t t) {
  if (c < t) {
    throw Error(ErrorCode::precondition,
                "need c >= t (c=" + std::to_string(c) + ", t=" + std::to_string(t) + ")");
  }
  const std::size_t base = c * (t - 1);
  if (length < base + t || length > base + c) {
    throw Error(ErrorCode::precondition,
                "need l = c(t-1) + r with r in t..c (l=" + std::to_string(length) +
                    ", c=" + std::to_string(c) + ", t=" + std::to_string(t) + ")");
  }
}

namespace {

void require_pt(const Code& code, std::size_t t, const char* what) {
  auto report = satisfies_property_pt(code, t);
  if (!report.verdict) {
    throw Error(ErrorCode::precondition,
                std::string(what) + ": input does not satisfy Property P(" + std::to_string(t) + ")");
  }
}

}  // namespace

Code compose_lemma2(const Code& parent, const ComposeParams& params) {
  const std::size_t l = parent.length();
  const std::size_t s = parent.alphabet_size();
  const std::size_t t = params.t;
  const std::size_t c = params.c;
  const std::size_t m = params.m;

  const Symbol inf = parent.require_inf("composition");
  if (inf != 0) throw Error(ErrorCode::precondition, "composition needs the inf symbol at id 0");
  if (t < 1) throw Error(ErrorCode::precondition, "composition needs t >= 1");
  if (m < 2 || !is_prime_power(m)) {
    throw Error(ErrorCode::not_prime_power, "composition needs a prime power m, got " +
                                                std::to_string(m));
  }
  if (m + 1 < l) {
    throw Error(ErrorCode::precondition, "composition needs m >= l-1 (m=" + std::to_string(m) +
                                             ", l=" + std::to_string(l) + ")");
  }
  if (2 * t - 1 > l) {
    throw Error(ErrorCode::precondition, "composition needs 2t-1 <= l (t=" + std::to_string(t) +
                                             ", l=" + std::to_string(l) + ")");
  }
  require_length_split(l, c, t);
  if (!params.trust) require_pt(parent, t, "composition");

  const Field field = make_field(m);
  const EvalPoints points = params.points ? *params.points : default_eval_points(field, l);
  if (points.size() != l) {
    throw Error(ErrorCode::precondition, "need exactly l evaluation points");
  }
  for (std::size_t a = 0; a < l; ++a) {
    if (!points[a].is_infinity() && points[a].value() >= m) {
      throw Error(ErrorCode::symbol_out_of_range, "evaluation point outside GF(m)");
    }
    for (std::size_t b = a + 1; b < l; ++b) {
      if (points[a] == points[b]) throw Error(ErrorCode::precondition, "evaluation points repeat");
    }
  }
  const auto alphabet = flatten_pair_alphabet(s, m);

  std::uint64_t poly_count = 1;
  for (std::size_t i = 0; i < t; ++i) poly_count *= m;

  // Evaluation codeword for every polynomial, shared by all parent words.
  std::vector<std::uint32_t> evals(poly_count * l);
  for (std::uint64_t n = 0; n < poly_count; ++n) {
    const Poly f = nth_poly(field, n, t);
    for (std::size_t j = 0; j < l; ++j) {
      evals[n * l + j] = points[j].is_infinity() ? leading_coeff(f, t)
                                                 : eval_poly(field, f, points[j].value());
    }
  }

  std::vector<Word> words;
  words.reserve(parent.size() * poly_count);
  for (std::size_t i = 0; i < parent.size(); ++i) {
    auto b = parent.word(i);
    for (std::uint64_t n = 0; n < poly_count; ++n) {
      Word w(l);
      for (std::size_t j = 0; j < l; ++j) w[j] = alphabet.encode(b[j], evals[n * l + j]);
      words.push_back(std::move(w));
    }
  }
  return Code(l, alphabet.q(), std::move(words), Symbol{0});
}

Code augment_infinity(const Code& code, std::size_t c, std::size_t t, bool trust) {
  const Symbol inf = code.require_inf("inf augmentation");
  const Word all_inf(code.length(), inf);
  if (code.contains(all_inf)) {
    throw Error(ErrorCode::duplicate_word, "code already contains the all-inf word");
  }
  require_length_split(code.length(), c, t);
  if (!trust) require_pt(code, t, "inf augmentation");
  auto words = code.words();
  words.push_back(all_inf);
  return Code(code.length(), code.alphabet_size(), std::move(words), inf);
}

Code oa_pipeline_lemma7(std::size_t s, std::size_t t, std::size_t length, std::size_t m,
                        std::size_t c) {
  if (t != 2 || length != s + 1) {
    throw Error(ErrorCode::unsupported,
                "only the built-in OA(2, s+1, s) is available (t=2, l=s+1)");
  }
  if (s < 2 || !is_prime_power(s)) {
    throw Error(ErrorCode::not_prime_power, "OA order s must be a prime power");
  }
  const Code pt = oa_to_pt_code(build_oa_strength2(s), t);
  return compose_lemma2(pt, ComposeParams{.m = m, .t = t, .c = c, .points = {}, .trust = false});
}

Code corollary_oa(std::size_t c, std::size_t m) {
  if (c < 2) throw Error(ErrorCode::precondition, "OA-derived construction needs c >= 2");
  if (!is_prime_power(c + 1)) {
    throw Error(ErrorCode::not_prime_power, "c+1 = " + std::to_string(c + 1) +
                                                " is not a prime power");
  }
  if (m < c + 1) {
    throw Error(ErrorCode::precondition, "OA-derived construction needs m >= c+1");
  }
  return oa_pipeline_lemma7(c + 1, 2, c + 2, m, c);
}

}  // namespace fpc
