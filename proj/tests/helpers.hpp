#pragma once

#include "rlcm/families.hpp"

#include <memory>
#include <string>
#include <vector>

namespace helpers {

using namespace rlcm;

inline std::shared_ptr<Semigroup> make_bs(long long c, long long d) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::BaumslagSolitar;
  spec.c = c;
  spec.d = d;
  return build(spec);
}

inline std::shared_ptr<Semigroup> make_np(std::vector<long long> primes) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::NSemidirectP;
  spec.primes = std::move(primes);
  return build(spec);
}

inline std::shared_ptr<Semigroup> make_free(int m) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::FreeMonoid;
  spec.m = m;
  return build(spec);
}

inline std::shared_ptr<Semigroup> make_easy_artin(int m, int n) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::EasyArtin;
  spec.m = m;
  spec.n = n;
  return build(spec);
}

inline std::shared_ptr<Semigroup> make_adding_machine() {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::SelfSimilar;
  spec.automaton_name = "adding-machine";
  spec.automaton = automaton_by_name("adding-machine");
  return build(spec);
}

inline std::shared_ptr<Semigroup> make_dilation(IntMat a) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::DilationMatrix;
  spec.matrix = std::move(a);
  return build(spec);
}

inline std::shared_ptr<Semigroup> make_ffs(long long q, long long deg) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::FiniteFieldShift;
  spec.q = q;
  spec.f_degree = deg;
  return build(spec);
}

inline Element gen(const Semigroup& s, const std::string& name) {
  for (const auto& [n, g] : s.generators())
    if (n == name) return g;
  throw std::runtime_error("no generator " + name);
}

// Product of single-character generator names, e.g. "abba".
inline Element word(const Semigroup& s, const std::string& letters) {
  Element acc = s.identity();
  for (char ch : letters) acc = s.multiply(acc, gen(s, std::string(1, ch)));
  return acc;
}

}  // namespace helpers
