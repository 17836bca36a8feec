#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include <set>

using namespace rlcm;
using oracles::NpElem;

namespace {

// (n, p) as a family element: (1,1)^n * (0,p) with p factored over {2,3}.
Element make_elem(const Semigroup& s, long long n, long long p) {
  Element acc = s.identity();
  Element one = helpers::gen(s, "(1,1)");
  for (long long i = 0; i < n; ++i) acc = s.multiply(acc, one);
  long long rest = p;
  while (rest % 2 == 0) {
    acc = s.multiply(acc, helpers::gen(s, "(0,2)"));
    rest /= 2;
  }
  while (rest % 3 == 0) {
    acc = s.multiply(acc, helpers::gen(s, "(0,3)"));
    rest /= 3;
  }
  REQUIRE(rest == 1);
  return acc;
}

std::vector<NpElem> sample_elems() {
  std::vector<NpElem> out;
  for (long long p : {1, 2, 3, 4, 6, 9, 12})
    for (long long n = 0; n < p + 3; ++n) out.push_back({n, p});
  return out;
}

}  // namespace

TEST_CASE("multiplication matches the congruence oracle") {
  auto s = helpers::make_np({2, 3});
  auto elems = sample_elems();
  for (const NpElem& x : elems)
    for (const NpElem& y : elems) {
      NpElem z = oracles::np_mul(x, y);
      CHECK(s->multiply(make_elem(*s, x.n, x.p), make_elem(*s, y.n, y.p)) ==
            make_elem(*s, z.n, z.p));
    }
}

TEST_CASE("scale is the progression step p") {
  auto s = helpers::make_np({2, 3});
  for (const NpElem& x : sample_elems())
    CHECK(s->scale(make_elem(*s, x.n, x.p)) == static_cast<Scale>(x.p));
  std::vector<Scale> irr = s->irreducible_scales();
  CHECK(irr == std::vector<Scale>{2, 3});
}

TEST_CASE("transversals are the residues mod p") {
  auto s = helpers::make_np({2, 3});
  for (Scale p : {2ull, 3ull, 4ull, 6ull, 12ull}) {
    auto t = s->transversal(p);
    REQUIRE(t.size() == p);
    std::set<Code> got, expected;
    for (const Element& f : t) got.insert(f.code);
    for (Scale n = 0; n < p; ++n)
      expected.insert(make_elem(*s, static_cast<long long>(n),
                                static_cast<long long>(p))
                          .code);
    CHECK(got == expected);
  }
  CHECK(s->transversal(5).empty());
}

TEST_CASE("right lcm matches the CRT oracle") {
  auto s = helpers::make_np({2, 3});
  auto elems = sample_elems();
  for (const NpElem& x : elems)
    for (const NpElem& y : elems) {
      Element ex = make_elem(*s, x.n, x.p);
      Element ey = make_elem(*s, y.n, y.p);
      LcmOutcome out = s->right_lcm(ex, ey);
      auto oracle = oracles::np_ideal_lcm(x, y);
      if (!oracle) {
        CHECK(out.disjoint());
        continue;
      }
      REQUIRE_FALSE(out.disjoint());
      Element expected = make_elem(*s, oracle->n, oracle->p);
      // same principal ideal: mutual divisibility
      CHECK(s->left_divide(*out.lcm, expected).status == DivideStatus::Found);
      CHECK(s->left_divide(expected, *out.lcm).status == DivideStatus::Found);
      CHECK(s->multiply(ex, out.left_complement) == *out.lcm);
      CHECK(s->multiply(ey, out.right_complement) == *out.lcm);
    }
}

TEST_CASE("disjointness criterion: m - n not divisible by gcd(p,q)") {
  auto s = helpers::make_np({2, 3});
  // (0,2) and (1,4): gcd 2, difference 1 -> disjoint
  CHECK(s->right_lcm(make_elem(*s, 0, 2), make_elem(*s, 1, 4)).disjoint());
  // (0,2) and (2,4): difference 2 -> meet
  CHECK_FALSE(s->right_lcm(make_elem(*s, 0, 2), make_elem(*s, 2, 4)).disjoint());
  // (1,6) and (5,4): gcd 2, difference 4 -> meet at x = 13 mod 12
  LcmOutcome out = s->right_lcm(make_elem(*s, 1, 6), make_elem(*s, 5, 4));
  REQUIRE_FALSE(out.disjoint());
  Element expected = make_elem(*s, 13, 12);
  CHECK(s->left_divide(*out.lcm, expected).status == DivideStatus::Found);
  CHECK(s->left_divide(expected, *out.lcm).status == DivideStatus::Found);
}

TEST_CASE("core is the translation monoid") {
  auto s = helpers::make_np({2, 3});
  Element one = helpers::gen(*s, "(1,1)");
  CHECK(s->is_core(one));
  CHECK(s->is_core(s->multiply(one, one)));
  CHECK_FALSE(s->is_core(helpers::gen(*s, "(0,2)")));
  auto cores = s->enumerate_core(4);
  CHECK(cores.size() == 5);  // 0..4 translations
  CHECK(cores.front() == s->identity());
}
