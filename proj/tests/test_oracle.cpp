#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galcoh/oracle.hpp"

using namespace galcoh;

namespace {

// Random Gamma-module in a shape both the engine and the oracle accept:
// diagonal moduli, sigma an involutive signed permutation (mixing only
// equal moduli) or a unipotent-involution block.
struct RandomModule {
  GammaModule engine;
  OracleModule oracle;
};

RandomModule random_module(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_d(1, 4), mod_pick(0, 3), flip(0, 1),
      shear(-2, 2);
  const long mod_choices[4] = {0, 2, 3, 4};
  int n = size_d(rng);
  std::vector<long> moduli(n);
  for (long& m : moduli) m = mod_choices[mod_pick(rng)];

  std::vector<std::vector<long>> sigma(n, std::vector<long>(n, 0));
  std::vector<int> used(n, 0);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    // try to pair i with a later coordinate of equal modulus
    int partner = -1;
    if (flip(rng)) {
      for (int j = i + 1; j < n; ++j)
        if (!used[j] && moduli[j] == moduli[i]) {
          partner = j;
          break;
        }
    }
    if (partner >= 0) {
      long s = flip(rng) ? 1 : -1;
      sigma[i][partner] = s;
      sigma[partner][i] = s;
      used[i] = used[partner] = 1;
    } else {
      sigma[i][i] = flip(rng) ? 1 : -1;
      used[i] = 1;
    }
  }
  // occasionally shear a free coordinate against a -1 eigen-coordinate:
  // [[1, a], [0, -1]] is still an involution
  for (int i = 0; i + 1 < n; ++i) {
    if (moduli[i] == 0 && moduli[i + 1] == 0 && sigma[i][i] == 1 &&
        sigma[i + 1][i + 1] == -1 && sigma[i][i + 1] == 0 && sigma[i + 1][i] == 0)
      sigma[i][i + 1] = shear(rng);
  }

  RandomModule out;
  out.oracle.moduli = moduli;
  out.oracle.sigma = sigma;
  std::vector<long> mods(moduli.begin(), moduli.end());
  out.engine.group = FgAbGroup::cyclic_sum(mods);
  IntegerMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.at(i, j) = sigma[i][j];
  out.engine.sigma = s;
  return out;
}

}  // namespace

TEST_CASE("brute_h1_gamma on the basic modules") {
  CHECK(brute_h1_gamma({{0}, {{-1}}}) == 2);
  CHECK(brute_h1_gamma({{0}, {{1}}}) == 1);
  CHECK(brute_h1_gamma({{4}, {{1}}}) == 2);
  CHECK(brute_h1_gamma({{0, 0}, {{0, 1}, {1, 0}}}) == 1);  // induced module
}

TEST_CASE("brute_h1_gamma enforces its bounds") {
  CHECK_THROWS_AS(brute_h1_gamma({{16}, {{1}}}), CapError);
  CHECK_THROWS_AS(brute_h1_gamma({{0, 0, 0, 0, 0},
                                  {{-1, 0, 0, 0, 0},
                                   {0, -1, 0, 0, 0},
                                   {0, 0, -1, 0, 0},
                                   {0, 0, 0, -1, 0},
                                   {0, 0, 0, 0, -1}}}),
                  CapError);
  CHECK_THROWS_AS(brute_h1_gamma({{4}, {{1}}}, 4), CapError);  // box < 2*modulus
}

TEST_CASE("engine h1_gamma matches the brute-force oracle on random modules") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    RandomModule m = random_module(rng);
    CAPTURE(trial);
    long engine = 1L << h1_gamma(m.engine).dimension();
    CHECK(engine == brute_h1_gamma(m.oracle, 8));
  }
}

TEST_CASE("full-group orbit partition matches generator BFS") {
  for (const char* name :
       {"U(2)", "SL2R", "Sp4R", "SU(2,2)", "compact:B3", "custom:B2-order4"}) {
    TwistedAction act = build_action(catalog_get(name));
    CHECK(orbit_partition(act) == brute_orbits_full_group(act));
  }
}

TEST_CASE("full-group oracle on a trivial action gives singletons") {
  TwistedAction act = build_action(catalog_get("quasi-torus:U1xmu4"));
  auto parts = brute_orbits_full_group(act);
  CHECK(parts.size() == 4);
  for (const auto& p : parts) CHECK(p.size() == 1);
}

TEST_CASE("classification counts") {
  CHECK(classification_count("hermitian", 2) == 3);
  CHECK(classification_count("hermitian", 5) == 6);
  CHECK(classification_count("quadratic-odd", 2) == 3);
  CHECK(classification_count("quadratic-even", 3) == 4);
  CHECK(classification_count("quaternionic", 3) == 4);
  CHECK(classification_count("symplectic", 7) == 1);
  CHECK(classification_count("sl", 2) == 1);
  CHECK(classification_count("hermitian-det1", 3) == 2);
  CHECK(classification_count("hermitian-det1", 4) == 3);
  CHECK_THROWS_AS(classification_count("septic", 1), ValidationError);
}

TEST_CASE("exact sequence oracle for the det-square-1 group") {
  CHECK(exact_sequence_gl2_count() == 2);
}
