#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcoh/matrix.hpp"

namespace galcoh {

/// Based root datum: character lattice Z^rank with simple roots, simple
/// coroots, and the standard dot pairing. rank may exceed the number of
/// simple roots only for the degenerate (quasi-torus) case of no roots.
struct BasedRootDatum {
  int rank = 0;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;
  std::optional<std::string> cartan_label;

  int num_simple() const { return static_cast<int>(simple_roots.size()); }
  Int pairing(const IntVec& x, const IntVec& coroot) const { return dot(x, coroot); }
  /// cartan(i, j) = <alpha_i, alpha_j^vee>.
  IntegerMatrix cartan() const;
  void validate() const;
};

enum class LatticeForm { SimplyConnected, Adjoint };

/// Parses a Cartan label ("A3", "B2xG2", ...) into a based root datum,
/// Bourbaki numbering. SimplyConnected uses the fundamental-weight basis,
/// Adjoint the simple-root basis.
BasedRootDatum make_root_datum(const std::string& label, LatticeForm form = LatticeForm::SimplyConnected);

/// Root datum of compact SO(n), n >= 3, in the standard coordinates of the
/// B/D series (the character lattice of the SO torus, not Spin or PSO).
BasedRootDatum so_root_datum(int n);

BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b);

/// |W| for a Cartan label, by the product formula.
std::optional<unsigned long long> weyl_order_from_label(const std::string& label);

struct WeylElement {
  IntegerMatrix matrix;       // action on the character lattice
  std::vector<int> word;      // reduced word in simple reflections
};

IntegerMatrix simple_reflection_matrix(const BasedRootDatum& rd, int i);
WeylElement simple_reflection(const BasedRootDatum& rd, int i);

constexpr long kDefaultWeylCap = 10'000'000;

/// Full Weyl group by breadth-first closure of the simple reflections,
/// deduplicated by matrix, sorted by word length then matrix order.
std::vector<WeylElement> generate_weyl(const BasedRootDatum& rd, long cap = kDefaultWeylCap);

/// All roots, by closing the simple roots under the simple reflections.
std::vector<IntVec> all_roots(const BasedRootDatum& rd, long cap = 100000);

struct W0Subgroup {
  std::vector<IntegerMatrix> generators;
  std::vector<IntegerMatrix> elements;
};

/// The subgroup W0 = { w in W : w sigma = sigma w } of Galois-fixed Weyl
/// elements, with a generating set (the simple reflections when sigma = -1,
/// otherwise an irredundant computed set).
W0Subgroup w0_subgroup(const BasedRootDatum& rd, const IntegerMatrix& sigma,
                       long cap = kDefaultWeylCap);

/// Closure of a matrix list under multiplication. Throws CapError above cap.
std::vector<IntegerMatrix> close_matrix_group(const std::vector<IntegerMatrix>& gens, long cap);

}  // namespace galcoh
