#pragma once

#include "rlcm/ads.hpp"
#include "rlcm/mealy.hpp"
#include "rlcm/semigroup.hpp"
#include "rlcm/zs.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace rlcm {

struct FamilySpec {
  enum class Kind {
    FreeMonoid,
    EasyArtin,
    BaumslagSolitar,
    NSemidirectP,
    SelfSimilar,
    DilationMatrix,
    FiniteFieldShift,
    ZappaSzep,
  };
  Kind kind = Kind::FreeMonoid;

  int m = 2;                       // FreeMonoid / EasyArtin alphabet size
  int n = 0;                       // EasyArtin abelian rank
  long long c = 1, d = 2;          // BaumslagSolitar
  std::vector<long long> primes;   // NSemidirectP
  MealySpec automaton;             // SelfSimilar
  std::string automaton_name;      // optional builtin name
  size_t section_cap = 4096;
  IntMat matrix;                   // DilationMatrix
  long long q = 2, f_degree = 1;   // FiniteFieldShift
  // ZappaSzep combinator: U = free monoid on zs_letters letters, A = free
  // abelian monoid of rank zs_rank, generator tables (see ledger).
  int zs_letters = 0, zs_rank = 0;
  std::vector<std::vector<int>> zs_action_table;
  std::vector<std::vector<Code>> zs_restriction_table;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::shared_ptr<Semigroup> build(const FamilySpec& spec);

FamilySpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const FamilySpec& spec);

// Builtin automata addressable by name in configs ("adding-machine").
MealySpec automaton_by_name(const std::string& name);

// Zappa-Szep entry points (instance must be a ZsSemigroup-backed family).
Element zs_action(const Semigroup& s, const Element& core,
                  const Element& transversal);
Element zs_restriction(const Semigroup& s, const Element& core,
                       const Element& transversal);

struct ZsCoreData {
  std::string core_description;             // S_c = U_c ⋈ A
  std::string core_irreducible_description; // S_ci = U_ci ⋈ A*
};
ZsCoreData zs_core_data(const Semigroup& s);

// ADS principal-ideal intersection on raw coordinates.
LcmOutcome ads_ideal_test(const Semigroup& s, const Code& g, long long n,
                          const Code& h, long long n2);

// Self-similar action: group elements given as state words (1-based indices,
// negative for inverses), letters as a Code over the alphabet.
Code selfsimilar_image(const Semigroup& s, const std::vector<int>& group_word,
                       const Code& letter_word);
Element selfsimilar_section(const Semigroup& s,
                            const std::vector<int>& group_word,
                            const Code& letter_word);

}  // namespace rlcm
