#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rlcm/mealy.hpp"

using namespace rlcm;

namespace {

std::vector<Code> binary_words(size_t len) {
  std::vector<Code> out;
  for (unsigned long long bits = 0; bits < (1ull << len); ++bits) {
    Code w(len);
    for (size_t i = 0; i < len; ++i) w[i] = (bits >> i) & 1;
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("adding machine image is binary addition") {
  auto s = helpers::make_adding_machine();
  for (size_t len = 1; len <= 4; ++len)
    for (const Code& w : binary_words(len))
      for (long long k = 0; k <= 5; ++k) {
        std::vector<int> word(static_cast<size_t>(k), 1);  // q^k
        Code image = selfsimilar_image(*s, word, w);
        auto [expected, carry] = oracles::odometer_add(w, k);
        CHECK(image == expected);
        // section after the word is q^carry
        Element section = selfsimilar_section(*s, word, w);
        Element q = helpers::gen(*s, "q");
        Element expected_section = s->identity();
        for (long long i = 0; i < carry; ++i)
          expected_section = s->multiply(expected_section, q);
        CHECK(section == expected_section);
      }
}

TEST_CASE("inverse state words act as subtraction") {
  auto s = helpers::make_adding_machine();
  for (const Code& w : binary_words(3)) {
    // q^-1 after q is the identity
    CHECK(selfsimilar_image(*s, {1, -1}, w) == w);
    CHECK(selfsimilar_image(*s, {-1, 1}, w) == w);
  }
}

TEST_CASE("canonical automaton codes identify equal group elements") {
  MealySpec am = MealySpec::adding_machine();
  Code q = mealy::state_code(am, 0);
  Code e = mealy::state_code(am, 1);
  CHECK(e == mealy::identity_code(2));
  CHECK(mealy::compose(q, mealy::inverse(q, 2), 2, 4096) ==
        mealy::identity_code(2));
  // q^2 has the same canonical code as composing q twice in either order
  Code q2 = mealy::compose(q, q, 2, 4096);
  CHECK(mealy::compose(q2, q, 2, 4096) == mealy::compose(q, q2, 2, 4096));
  CHECK(q2 != q);
  CHECK(mealy::state_count(q) == 2);
}

TEST_CASE("automaton core is a group: division always succeeds") {
  auto s = helpers::make_adding_machine();
  const auto* zs = dynamic_cast<const ZsSemigroup*>(s.get());
  REQUIRE(zs != nullptr);
  auto cores = zs->a_monoid().enumerate(2);
  CHECK(cores.size() == 5);  // 1, q, q^-1, q^2, q^-2
  for (const Code& a : cores)
    for (const Code& b : cores) {
      auto q = zs->a_monoid().left_divide(a, b);
      REQUIRE(q.has_value());
      CHECK(zs->a_monoid().mul(a, *q) == b);
    }
}

TEST_CASE("letter ideals are disjoint, mixed ideals meet through the core") {
  auto s = helpers::make_adding_machine();
  Element l0 = helpers::gen(*s, "0");
  Element l1 = helpers::gen(*s, "1");
  CHECK(s->right_lcm(l0, l1).disjoint());
  // q maps 0 to 1, so qS meets every letter ideal
  Element q = helpers::gen(*s, "q");
  CHECK_FALSE(s->right_lcm(q, l0).disjoint());
  CHECK_FALSE(s->right_lcm(q, l1).disjoint());
}

TEST_CASE("scale counts letters") {
  auto s = helpers::make_adding_machine();
  Element l0 = helpers::gen(*s, "0");
  Element q = helpers::gen(*s, "q");
  CHECK(s->scale(l0) == 2);
  CHECK(s->scale(q) == 1);
  CHECK(s->scale(s->multiply(l0, s->multiply(q, l0))) == 4);
  CHECK(s->transversal(4).size() == 4);
}

TEST_CASE("certificates: odometer acts faithfully and almost freely") {
  auto s = helpers::make_adding_machine();
  ActionCertificates cert = s->action_certificates();
  REQUIRE(cert.faithful.has_value());
  REQUIRE(cert.almost_free.has_value());
  REQUIRE(cert.finite_propagation.has_value());
  CHECK(*cert.faithful);
  CHECK(*cert.almost_free);
  CHECK(*cert.finite_propagation);
}
