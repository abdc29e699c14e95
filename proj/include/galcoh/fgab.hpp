#pragma once

#include <vector>

#include "galcoh/matrix.hpp"

namespace galcoh {

/// Finitely generated abelian group presented as Z^ambient_rank modulo the
/// lattice spanned by the columns of `relations`.
class FgAbGroup {
public:
  FgAbGroup() : FgAbGroup(0, IntegerMatrix(0, 0)) {}
  FgAbGroup(int ambient_rank, IntegerMatrix relations);

  static FgAbGroup free_group(int rank) { return FgAbGroup(rank, IntegerMatrix(rank, 0)); }
  /// Direct sum of cyclic groups Z/d (d = 0 gives a Z factor).
  static FgAbGroup cyclic_sum(const std::vector<long>& moduli);

  int ambient_rank() const { return ambient_rank_; }
  const IntegerMatrix& relations() const { return relations_; }

  /// Invariant factors d1 | d2 | ... with unit factors dropped and one
  /// trailing 0 per free summand. Presentation-independent.
  IntVec invariant_factors() const;

  bool is_trivial() const;

  /// Canonical coordinates of the element represented by ambient vector v.
  /// Two vectors represent the same element iff their canonical forms agree.
  IntVec canonical(const IntVec& v) const;
  bool is_zero_element(const IntVec& v) const;
  bool elements_equal(const IntVec& a, const IntVec& b) const;

  /// Whether the hom given by `matrix` (on ambient generators) maps this
  /// group's relations into `target`'s relation lattice.
  bool matrix_maps_relations_into(const IntegerMatrix& matrix, const FgAbGroup& target) const;

private:
  int ambient_rank_;
  IntegerMatrix relations_;
  SmithForm rel_snf_;
};

/// Homomorphism of finitely generated abelian groups, given by an integer
/// matrix on ambient generators.
struct GroupHom {
  FgAbGroup source, target;
  IntegerMatrix matrix;

  /// Throws ValidationError when the matrix does not preserve relations.
  void validate() const;
  bool is_well_defined() const;
  bool is_surjective() const;
  IntVec apply(const IntVec& v) const { return matrix.apply(v); }
};

GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f

struct SubquotientPart {
  FgAbGroup group;
  GroupHom map;  // kernel: inclusion into source; image: inclusion into
                 // target; cokernel: projection from target
};

SubquotientPart kernel(const GroupHom& h);
SubquotientPart image(const GroupHom& h);
SubquotientPart cokernel(const GroupHom& h);

/// Given f: A -> B and an injective j: C -> B whose image contains im(f),
/// produce the factorization g: A -> C with j∘g = f.
GroupHom factor_through(const GroupHom& f, const GroupHom& j);

/// Finitely generated abelian group with an involution of Gal(C/R).
struct GammaModule {
  FgAbGroup group;
  IntegerMatrix sigma;

  void validate() const;
  IntegerMatrix norm() const;   // 1 + sigma
  IntegerMatrix twist() const;  // sigma - 1
};

/// The F2-vector space H^1(Gamma, M) = ker(1+sigma) / im(sigma-1), with
/// chosen basis lifts in the ambient lattice of M.
class F2Space {
public:
  int dimension() const { return dimension_; }
  const std::vector<IntVec>& basis_lifts() const { return basis_lifts_; }

  /// Coordinates over F2 of a ker(1+sigma) element given by an ambient
  /// vector. Throws ValidationError if v is not killed by the norm.
  std::vector<int> reduce(const IntVec& v) const;

private:
  friend F2Space h1_gamma(const GammaModule& m);
  int dimension_ = 0;
  int ambient_ = 0;
  std::vector<IntVec> basis_lifts_;
  IntegerMatrix norm_;
  FgAbGroup parent_;
  IntegerMatrix kernel_basis_;  // ambient x r
  SmithForm kernel_basis_snf_;
  SmithForm quotient_snf_;      // SNF of relators of K/J in kernel-basis coords
  std::vector<int> slots_;      // indices of the Z/2 summands
};

F2Space h1_gamma(const GammaModule& m);

/// Matrix over F2 of the map induced on H^1 by an equivariant f: from -> to,
/// in the spaces' chosen bases. Column j is h_to.reduce(f(basis_lift_j)).
std::vector<std::vector<int>> h1_functorial(const GammaModule& from, const GammaModule& to,
                                            const IntegerMatrix& f, const F2Space& h_from,
                                            const F2Space& h_to);

/// Coordinates in Hom(H^1(Gamma, X*(Q)), Z/2) of the class of mu(-1), where
/// mu is a cocharacter of T with (1+sigma_*)mu in 2 X_*(T). Coordinate i is
/// <p(chi_i), mu> mod 2 for the basis lifts chi_i of h1_of_m.
std::vector<int> class_of_two_torsion_point(const F2Space& h1_of_m, const IntegerMatrix& p,
                                            const IntegerMatrix& sigma_t, const IntVec& mu);

}  // namespace galcoh
