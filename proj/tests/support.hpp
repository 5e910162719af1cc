#pragma once

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

#include "braidkit/catalog.hpp"
#include "braidkit/parse.hpp"

namespace testing {

using namespace braidkit;

inline NcElement el(const std::string& text, const Signature& sig) { return parse_element(text, sig); }

inline NcElement el(const std::string& text, const Presentation& p, std::size_t slots = 1) {
  return parse_element(text, p.signature(slots));
}

inline Word word(const Presentation& p, const std::string& text) {
  const NcElement u = parse_element(text, p.signature());
  REQUIRE(u.size() == 1);
  return u.terms().begin()->first[0];
}

inline Scalar sc(const std::string& text) { return parse_scalar(text); }

/// Compares against tests/golden/<name>; BRAIDKIT_UPDATE_GOLDEN=1 rewrites it.
inline void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(BRAIDKIT_GOLDEN_DIR) + "/" + name;
  if (const char* update = std::getenv("BRAIDKIT_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path) << actual;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == actual);
}

/// Random Laurent polynomial with small coefficients and exponents.
inline Scalar random_scalar(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(-3, 3);
  Scalar s;
  for (int i = 0; i < terms; ++i) s += Scalar(coeff(rng)) * Scalar::q(expo(rng));
  return s;
}

/// Random word of length <= max_len over the alphabet.
inline Word random_word(std::mt19937& rng, const Alphabet& a, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(a.size()) - 1);
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) w.push_back(static_cast<GenId>(letter(rng)));
  return w;
}

inline NcElement random_element(std::mt19937& rng, const Presentation& p, std::size_t max_len, int terms = 3) {
  NcElement u(p.signature());
  for (int i = 0; i < terms; ++i) u.add_term(TensorWord{random_word(rng, p.alphabet(), max_len)}, random_scalar(rng, 2));
  return u;
}

}  // namespace testing
