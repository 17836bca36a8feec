#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace rlcm;

namespace {

// Family element from an {a,b}-word.
Element from_word(const Semigroup& s, const std::string& w) {
  return helpers::word(s, w);
}

void cross_check_words(long long c, long long d, int max_a, int max_b) {
  auto s = helpers::make_bs(c, d);
  std::vector<std::string> words = oracles::bs_words(c, d, max_a, max_b);

  // distinct normal forms must map to distinct codes and vice versa
  std::map<std::string, Code> by_nf;
  for (const std::string& w : words) {
    std::string nf = oracles::bs_normalize(w, c, d);
    CHECK(nf == w);  // bs_words emits normal forms
    Code code = from_word(*s, w).code;
    auto [it, fresh] = by_nf.emplace(nf, code);
    if (!fresh) CHECK(it->second == code);
  }
  std::set<Code> codes;
  for (const auto& [nf, code] : by_nf) codes.insert(code);
  CHECK(codes.size() == by_nf.size());

  // multiplication agrees with rewriting on all pairs of short words
  std::vector<std::string> shorts = oracles::bs_words(c, d, 2, 2);
  for (const std::string& x : shorts)
    for (const std::string& y : shorts) {
      Element lhs = s->multiply(from_word(*s, x), from_word(*s, y));
      Element rhs = from_word(*s, oracles::bs_mul(x, y, c, d));
      CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("defining relation b^d a = a b^c") {
  for (auto [c, d] : std::vector<std::pair<long long, long long>>{
           {1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {5, 2}}) {
    auto s = helpers::make_bs(c, d);
    Element lhs = from_word(*s, std::string(d, 'b') + "a");
    Element rhs = from_word(*s, "a" + std::string(c, 'b'));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("normal forms and multiplication match the rewriting oracle") {
  cross_check_words(2, 3, 3, 3);
  cross_check_words(3, 2, 3, 3);
  cross_check_words(3, 3, 3, 3);
  cross_check_words(1, 2, 3, 3);
  cross_check_words(4, 2, 3, 4);
}

TEST_CASE("scale is d^(number of a letters)") {
  auto s = helpers::make_bs(2, 3);
  CHECK(s->scale(from_word(*s, "a")) == 3);
  CHECK(s->scale(from_word(*s, "b")) == 1);
  CHECK(s->scale(from_word(*s, "ababb")) == 9);
  for (const std::string& w : oracles::bs_words(2, 3, 3, 2)) {
    size_t a_count = std::count(w.begin(), w.end(), 'a');
    Scale expected = 1;
    for (size_t i = 0; i < a_count; ++i) expected *= 3;
    CHECK(s->scale(from_word(*s, w)) == expected);
  }
}

TEST_CASE("factorization strips the trailing b-run") {
  auto s = helpers::make_bs(2, 3);
  for (const std::string& w : oracles::bs_words(2, 3, 2, 3)) {
    Element e = from_word(*s, w);
    Factorization f = s->factor(e);
    CHECK(s->is_core(f.core_part));
    CHECK(s->multiply(f.transversal_part, f.core_part) == e);
    // the transversal part is the word with the trailing b-run removed
    std::string trimmed = w;
    while (!trimmed.empty() && trimmed.back() == 'b') trimmed.pop_back();
    CHECK(f.transversal_part == from_word(*s, trimmed));
  }
}

TEST_CASE("transversals enumerate b-prefixed words") {
  auto s = helpers::make_bs(2, 3);
  auto t3 = s->transversal(3);
  REQUIRE(t3.size() == 3);
  std::set<Code> expected{from_word(*s, "a").code, from_word(*s, "ba").code,
                          from_word(*s, "bba").code};
  std::set<Code> got;
  for (const Element& f : t3) got.insert(f.code);
  CHECK(got == expected);
  CHECK(s->transversal(9).size() == 9);
  CHECK(s->transversal(2).empty());
}

TEST_CASE("right lcm of a and b") {
  auto s = helpers::make_bs(2, 3);
  Element a = from_word(*s, "a");
  Element b = from_word(*s, "b");
  LcmOutcome out = s->right_lcm(a, b);
  REQUIRE_FALSE(out.disjoint());
  // aS meets bS in b(b^2 a)S = (a b^2) S
  CHECK(*out.lcm == from_word(*s, "abb"));
  CHECK(s->multiply(a, out.left_complement) == *out.lcm);
  CHECK(s->multiply(b, out.right_complement) == *out.lcm);
}

TEST_CASE("distinct transversal ideals are disjoint") {
  auto s = helpers::make_bs(2, 3);
  auto t9 = s->transversal(9);
  for (size_t i = 0; i < t9.size(); ++i)
    for (size_t j = i + 1; j < t9.size(); ++j)
      CHECK(s->right_lcm(t9[i], t9[j]).disjoint());
}

TEST_CASE("degenerate BS(c,1) has trivial scale") {
  auto s = helpers::make_bs(3, 1);
  CHECK(s->irreducible_scales().empty());
  CHECK(s->scale(from_word(*s, "a")) == 1);
  CHECK(s->scale(from_word(*s, "ab")) == 1);
}
