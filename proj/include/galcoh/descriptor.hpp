#pragma once

#include <string>
#include <vector>

#include "galcoh/fgab.hpp"
#include "galcoh/rootdata.hpp"

namespace galcoh {

enum class FamilyKind { Compact, Inner, Custom };

std::string family_kind_name(FamilyKind k);

struct Family {
  FamilyKind kind = FamilyKind::Compact;
  /// Inner: coweight bits in the basis dual to the simple roots (adjoint
  /// cocharacter coordinates, Bourbaki numbering).
  std::vector<int> z;
  /// Custom: W0 generators as automorphisms of M (ambient matrices) and
  /// their translation classes in the H^1(R,Q) coordinates.
  std::vector<IntegerMatrix> w0_gens;
  std::vector<std::vector<int>> delta;
};

/// Full lattice-level input for a real quasi-connected reductive group:
/// root datum of G^ss, the character module M = X*(Q) of the fundamental
/// quasi-torus, the restriction p : X*(Q) -> X*(T), root lifts, and the
/// real-form family.
struct QuasiConnectedDescriptor {
  std::string name;
  BasedRootDatum rd;
  GammaModule M;
  IntegerMatrix p;                 // rank(T) x ambient(M), surjective
  std::vector<IntVec> root_lifts;  // ambient vectors of M with p(lift_i) = alpha_i
  IntegerMatrix sigma_T;           // involution on X*(T), p-compatible with M's sigma
  Family family;
};

/// Runs all structural checks; returns the names of the failed ones
/// (empty means valid). Does not include the action-relations check,
/// which lives in the orbits module.
std::vector<std::string> descriptor_check_failures(const QuasiConnectedDescriptor& desc);

/// Throws ValidationError naming the first failed check.
void validate_descriptor(const QuasiConnectedDescriptor& desc);

/// The W0 generators acting on M (and the same generators on X*(T)).
/// For the Compact and Inner families these are the simple reflections;
/// for Custom they are the user-supplied automorphisms with their induced
/// action on X*(T).
struct WeylActionOnM {
  std::vector<IntegerMatrix> on_M;
  std::vector<IntegerMatrix> on_T;
};

WeylActionOnM weyl_action_on_M(const QuasiConnectedDescriptor& desc);

/// Translation classes delta(w) in H^1(R,Q) coordinates, one per W0
/// generator. Zero for Compact; the coweight formula for Inner; the
/// validated user vectors for Custom.
std::vector<std::vector<int>> delta_on_generators(const QuasiConnectedDescriptor& desc,
                                                  const WeylActionOnM& action,
                                                  const F2Space& h1_q);

/// Data of a finite central subgroup mu of Z(G^ss) x Q0, at the character
/// level: X*(mu) with the two restriction maps.
struct KernelSpec {
  FgAbGroup mu_chars;      // X*(mu)
  IntegerMatrix q1;        // X*(T_ss) -> X*(mu)
  IntegerMatrix q2;        // X*(Q0)   -> X*(mu), on ambient generators
  IntegerMatrix sigma_mu;  // Galois involution on X*(mu)
};

/// Builds the descriptor of G = (G^ss x Q0) / mu: M is the fiber product
/// of X*(T_ss) and X*(Q0) over X*(mu), with induced involution, p, and
/// root lifts.
QuasiConnectedDescriptor build_product_quotient(const BasedRootDatum& rd, const GammaModule& m0,
                                                const KernelSpec& spec, const std::string& name,
                                                Family family, const IntegerMatrix& sigma_t);

std::vector<std::string> catalog_names();
QuasiConnectedDescriptor catalog_get(const std::string& name);

}  // namespace galcoh
