#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include <set>

using namespace rlcm;

namespace {

struct Fixture {
  std::string label;
  std::shared_ptr<Semigroup> s;
  Scale bound;        // scale bound for enumeration
  int weight;         // core weight for enumeration
};

std::vector<Fixture> fixtures() {
  return {
      {"BS(2,3)+", helpers::make_bs(2, 3), 9, 2},
      {"BS(3,2)+", helpers::make_bs(3, 2), 8, 2},
      {"N x| <2,3>", helpers::make_np({2, 3}), 12, 2},
      {"F_2+", helpers::make_free(2), 8, 2},
      {"F_2+ x N", helpers::make_easy_artin(2, 1), 8, 2},
      {"adding machine", helpers::make_adding_machine(), 8, 2},
      {"Z x|_2 N", helpers::make_dilation({{2}}), 8, 2},
      {"FFS(2)", helpers::make_ffs(2, 1), 8, 2},
  };
}

}  // namespace

TEST_CASE("transversal law: exactly n classes at scale n") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    for (Scale n : f.s->scale_values_up_to(f.bound)) {
      auto t = f.s->transversal(n);
      CHECK(t.size() == n);
      std::set<Code> codes;
      for (const Element& x : t) {
        CHECK(f.s->scale(x) == n);
        codes.insert(x.code);
        // transversal elements are their own class representative
        CHECK(f.s->factor(x).transversal_part == x);
      }
      CHECK(codes.size() == n);
    }
  }
}

TEST_CASE("transversal ideals are pairwise disjoint") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    for (Scale n : f.s->scale_values_up_to(f.bound)) {
      auto t = f.s->transversal(n);
      for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
          CHECK(f.s->right_lcm(t[i], t[j]).disjoint());
    }
  }
}

TEST_CASE("transversals are foundation sets") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    auto elems = f.s->bounded_elements(f.bound, f.weight);
    for (Scale n : f.s->scale_values_up_to(f.bound)) {
      auto t = f.s->transversal(n);
      for (const Element& x : elems) {
        bool meets = false;
        for (const Element& g : t)
          if (!f.s->right_lcm(x, g).disjoint()) {
            meets = true;
            break;
          }
        CHECK(meets);
      }
    }
  }
}

TEST_CASE("scale is multiplicative and units have scale 1") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    auto elems = f.s->bounded_elements(f.bound, f.weight);
    for (size_t i = 0; i < elems.size(); i += 3)
      for (size_t j = 0; j < elems.size(); j += 3)
        CHECK(f.s->scale(f.s->multiply(elems[i], elems[j])) ==
              f.s->scale(elems[i]) * f.s->scale(elems[j]));
    CHECK(f.s->scale(f.s->identity()) == 1);
    CHECK(f.s->is_unit(f.s->identity()));
  }
}

TEST_CASE("factorization is unique and reproduces the element") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    for (const Element& x : f.s->bounded_elements(f.bound, f.weight)) {
      Factorization fac = f.s->factor(x);
      CHECK(f.s->multiply(fac.transversal_part, fac.core_part) == x);
      CHECK(f.s->is_core(fac.core_part));
      auto t = f.s->transversal(f.s->scale(x));
      CHECK(std::count(t.begin(), t.end(), fac.transversal_part) == 1);
    }
  }
}

TEST_CASE("left division: found quotients verify, absent divisors refuse") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    auto elems = f.s->bounded_elements(f.bound, f.weight);
    for (size_t i = 0; i < elems.size(); i += 2)
      for (size_t j = 0; j < elems.size(); j += 2) {
        Element prod = f.s->multiply(elems[i], elems[j]);
        DivideResult d = f.s->left_divide(elems[i], prod);
        REQUIRE(d.status == DivideStatus::Found);
        CHECK(f.s->multiply(elems[i], *d.quotient) == prod);
      }
  }
}

TEST_CASE("right lcm matches the brute-force ideal oracle") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    Scale bound = f.label == "BS(2,3)+" || f.label == "N x| <2,3>"
                      ? 27
                      : f.bound;
    auto elems = f.s->bounded_elements(bound, 2);
    auto pool = f.s->bounded_elements(std::min<Scale>(bound, 9), 2);
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i; j < elems.size(); ++j) {
        auto check =
            oracles::check_lcm_against_pool(*f.s, elems[i], elems[j], pool);
        CHECK_MESSAGE(check.consistent, f.label, ": ", f.s->show(elems[i]),
                      " vs ", f.s->show(elems[j]), ": ", check.detail);
      }
  }
}

TEST_CASE("self-similar oracle equivalence on words of length <= 4") {
  auto s = helpers::make_adding_machine();
  std::vector<Element> elems{s->identity()};
  auto gens = s->generators();
  size_t start = 0;
  for (int len = 1; len <= 4; ++len) {
    size_t end = elems.size();
    for (size_t i = start; i < end; ++i)
      for (const auto& [name, g] : gens)
        elems.push_back(s->multiply(elems[i], g));
    start = end;
  }
  std::set<Code> seen;
  std::vector<Element> dedup;
  for (const Element& e : elems)
    if (seen.insert(e.code).second) dedup.push_back(e);
  auto pool = s->bounded_elements(4, 2);
  for (size_t i = 0; i < dedup.size(); ++i)
    for (size_t j = i; j < dedup.size(); ++j) {
      auto check =
          oracles::check_lcm_against_pool(*s, dedup[i], dedup[j], pool);
      CHECK_MESSAGE(check.consistent, s->show(dedup[i]), " vs ",
                    s->show(dedup[j]), ": ", check.detail);
    }
}

TEST_CASE("identity is a two-sided unit") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.label);
    Element e = f.s->identity();
    for (const Element& x : f.s->bounded_elements(4, 2)) {
      CHECK(f.s->multiply(e, x) == x);
      CHECK(f.s->multiply(x, e) == x);
    }
  }
}
