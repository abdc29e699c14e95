#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galcoh/descriptor.hpp"

namespace galcoh {

/// Affine map x -> L x + t of F2^dim, bit-packed: bit i of cols[j] is L(i,j).
struct AffineMapF2 {
  int dim = 0;
  std::vector<std::uint32_t> cols;
  std::uint32_t t = 0;

  std::uint32_t apply(std::uint32_t x) const;
  bool is_identity() const;
  bool operator==(const AffineMapF2& rhs) const = default;
};

/// Map of the product element vw under a right action: first a (= v), then b.
AffineMapF2 compose_right(const AffineMapF2& a, const AffineMapF2& b);

/// The twisted affine W0-action on H^1(R,Q) = Hom(H^1(Gamma,M), Z/2):
/// generator w acts by x -> L_w x + delta(w), L_w the transpose of the
/// functorial action of w on H^1(Gamma,M).
struct TwistedAction {
  int dim = 0;
  std::vector<AffineMapF2> gens;
};

constexpr int kMaxH1Dim = 30;

/// Builds the action from a validated descriptor. Throws CapError when the
/// H^1 dimension exceeds kMaxH1Dim.
TwistedAction build_action(const QuasiConnectedDescriptor& desc);

struct Orbit {
  std::string rep;  // lex-least member, char i = coordinate i
  long size = 0;
};

struct OrbitResult {
  int dim = 0;
  std::vector<Orbit> orbits;  // sorted by rep
  long orbit_count() const { return static_cast<long>(orbits.size()); }
};

OrbitResult enumerate_orbits(const TwistedAction& action);

/// Full partition from generator BFS: orbits as sorted mask lists, sorted by
/// least element.
std::vector<std::vector<std::uint32_t>> orbit_partition(const TwistedAction& action);

constexpr long kActionClosureCap = 1'000'000;

/// Checks that the affine maps define an action of W0. Compact/Inner
/// families check the Coxeter relations of the simple reflections; Custom
/// families close the generators and verify that equal group elements get
/// equal affine maps. Throws ValidationError on failure.
void validate_action(const QuasiConnectedDescriptor& desc, const TwistedAction& action,
                     long cap = kActionClosureCap);

/// Orbit count of W0 on Q(R)_2 = Hom(M/(2M + (sigma-1)M), {+-1}) computed
/// with mod-2 matrices only; valid when sigma acts as -1 on M (anisotropic
/// quasi-torus), where Q(R)_2 = H^1(R,Q). Throws ValidationError otherwise.
long compact_fast_count(const QuasiConnectedDescriptor& desc);

/// Whether compact_fast_count applies to this descriptor.
bool compact_fast_applicable(const QuasiConnectedDescriptor& desc);

struct H1Report {
  std::string group;
  int dim_h1_q = 0;
  unsigned long long w0_order = 1;
  OrbitResult orbits;
  std::string family;
  bool validated = false;
};

/// Full pipeline: validate, build the action, validate it, enumerate
/// orbits, and cross-check the compact fast path when applicable.
H1Report h1_compute(const QuasiConnectedDescriptor& desc);

}  // namespace galcoh
