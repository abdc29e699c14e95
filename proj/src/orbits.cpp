#include "galcoh/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace galcoh {

std::uint32_t AffineMapF2::apply(std::uint32_t x) const {
  std::uint32_t y = t;
  for (int j = 0; j < dim; ++j)
    if (x >> j & 1u) y ^= cols[j];
  return y;
}

bool AffineMapF2::is_identity() const {
  if (t != 0) return false;
  for (int j = 0; j < dim; ++j)
    if (cols[j] != (1u << j)) return false;
  return true;
}

AffineMapF2 compose_right(const AffineMapF2& a, const AffineMapF2& b) {
  AffineMapF2 c;
  c.dim = a.dim;
  c.cols.resize(a.dim);
  for (int j = 0; j < a.dim; ++j) {
    std::uint32_t col = 0;
    for (int i = 0; i < a.dim; ++i)
      if (a.cols[j] >> i & 1u) col ^= b.cols[i];
    c.cols[j] = col;
  }
  c.t = b.apply(a.t);
  return c;
}

namespace {

AffineMapF2 identity_map(int dim) {
  AffineMapF2 m;
  m.dim = dim;
  m.cols.resize(dim);
  for (int j = 0; j < dim; ++j) m.cols[j] = 1u << j;
  return m;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

std::string bit_string(std::uint32_t x, int dim) {
  std::string s(dim, '0');
  for (int i = 0; i < dim; ++i)
    if (x >> i & 1u) s[i] = '1';
  return s;
}

// Orbit partition of {0,1}^dim under a list of bijections, reps lex-least
// as bit strings.
OrbitResult orbits_of_maps(int dim, const std::vector<AffineMapF2>& maps) {
  if (dim > kMaxH1Dim) throw CapError("H^1 dimension exceeds the supported cap");
  const std::uint32_t n = 1u << dim;
  UnionFind uf(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (const AffineMapF2& m : maps) uf.unite(x, m.apply(x));
  std::map<std::uint32_t, std::pair<std::string, long>> by_root;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::string s = bit_string(x, dim);
    auto [it, fresh] = by_root.try_emplace(uf.find(x), s, 0L);
    if (!fresh && s < it->second.first) it->second.first = s;
    ++it->second.second;
  }
  OrbitResult res;
  res.dim = dim;
  for (auto& [root, rs] : by_root) res.orbits.push_back(Orbit{rs.first, rs.second});
  std::sort(res.orbits.begin(), res.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
  return res;
}

int braid_order(const Int& cij, const Int& cji) {
  Int m = cij * cji;
  if (m == 0) return 2;
  if (m == 1) return 3;
  if (m == 2) return 4;
  if (m == 3) return 6;
  throw ValidationError("Cartan matrix entry out of range for a finite Weyl group");
}

// Canonical key of an automorphism of M: canonical forms of the generator
// images.
std::vector<IntVec> hom_key(const FgAbGroup& g, const IntegerMatrix& m) {
  std::vector<IntVec> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(g.canonical(m.column(j)));
  return cols;
}

}  // namespace

TwistedAction build_action(const QuasiConnectedDescriptor& desc) {
  F2Space h1 = h1_gamma(desc.M);
  if (h1.dimension() > kMaxH1Dim) throw CapError("H^1 dimension exceeds the supported cap");
  WeylActionOnM act = weyl_action_on_M(desc);
  std::vector<std::vector<int>> delta = delta_on_generators(desc, act, h1);
  TwistedAction out;
  out.dim = h1.dimension();
  for (std::size_t g = 0; g < act.on_M.size(); ++g) {
    auto fcols = h1_functorial(desc.M, desc.M, act.on_M[g], h1, h1);
    AffineMapF2 m;
    m.dim = out.dim;
    m.cols.resize(out.dim);
    // L = F^T: bit i of column j is F(j, i), i.e. coordinate j of the image
    // of basis vector i.
    for (int j = 0; j < out.dim; ++j) {
      std::uint32_t col = 0;
      for (int i = 0; i < out.dim; ++i)
        if (fcols[i][j]) col |= 1u << i;
      m.cols[j] = col;
    }
    for (int i = 0; i < out.dim; ++i)
      if (delta[g][i]) m.t |= 1u << i;
    out.gens.push_back(std::move(m));
  }
  return out;
}

OrbitResult enumerate_orbits(const TwistedAction& action) {
  return orbits_of_maps(action.dim, action.gens);
}

std::vector<std::vector<std::uint32_t>> orbit_partition(const TwistedAction& action) {
  if (action.dim > kMaxH1Dim) throw CapError("H^1 dimension exceeds the supported cap");
  const std::uint32_t n = 1u << action.dim;
  UnionFind uf(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (const AffineMapF2& m : action.gens) uf.unite(x, m.apply(x));
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_root;
  for (std::uint32_t x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<std::uint32_t>> parts;
  for (auto& [root, members] : by_root) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end());
  return parts;
}

void validate_action(const QuasiConnectedDescriptor& desc, const TwistedAction& action,
                     long cap) {
  if (desc.family.kind != FamilyKind::Custom) {
    // Generators are the simple reflections; the Coxeter relations present W0.
    IntegerMatrix c = desc.rd.cartan();
    const int m = desc.rd.num_simple();
    if (static_cast<int>(action.gens.size()) != m)
      throw ValidationError("validate_action: generator count mismatch");
    for (int i = 0; i < m; ++i)
      if (!compose_right(action.gens[i], action.gens[i]).is_identity())
        throw ValidationError("validate_action: generator is not an involution");
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        int ord = braid_order(c.at(i, j), c.at(j, i));
        AffineMapF2 prod = identity_map(action.dim);
        for (int k = 0; k < ord; ++k) {
          prod = compose_right(prod, action.gens[i]);
          prod = compose_right(prod, action.gens[j]);
        }
        if (!prod.is_identity())
          throw ValidationError("validate_action: braid relation fails");
      }
    return;
  }

  // Custom: close the generators as automorphisms of M and check that the
  // attached affine maps are consistent along every edge.
  const WeylActionOnM act = weyl_action_on_M(desc);
  std::map<std::vector<IntVec>, std::pair<IntegerMatrix, AffineMapF2>> seen;
  IntegerMatrix id = IntegerMatrix::identity(desc.M.group.ambient_rank());
  seen.emplace(hom_key(desc.M.group, id), std::make_pair(id, identity_map(action.dim)));
  std::vector<std::vector<IntVec>> queue = {hom_key(desc.M.group, id)};
  while (!queue.empty()) {
    auto key = std::move(queue.back());
    queue.pop_back();
    auto [mat, aff] = seen.at(key);
    for (std::size_t g = 0; g < act.on_M.size(); ++g) {
      IntegerMatrix next = mat * act.on_M[g];
      AffineMapF2 naff = compose_right(aff, action.gens[g]);
      auto nkey = hom_key(desc.M.group, next);
      auto it = seen.find(nkey);
      if (it == seen.end()) {
        if (static_cast<long>(seen.size()) >= cap)
          throw CapError("validate_action: closure cap exceeded");
        seen.emplace(nkey, std::make_pair(std::move(next), naff));
        queue.push_back(std::move(nkey));
      } else if (!(it->second.second == naff)) {
        throw ValidationError("validate_action: affine maps are inconsistent on W0");
      }
    }
  }
}

bool compact_fast_applicable(const QuasiConnectedDescriptor& desc) {
  if (desc.family.kind != FamilyKind::Compact) return false;
  const int n = desc.M.group.ambient_rank();
  IntegerMatrix sum = desc.M.sigma + IntegerMatrix::identity(n);
  for (int j = 0; j < n; ++j)
    if (!desc.M.group.is_zero_element(sum.column(j))) return false;
  return true;
}

long compact_fast_count(const QuasiConnectedDescriptor& desc) {
  if (!compact_fast_applicable(desc))
    throw ValidationError("fast path requires a compact family with sigma = -1 on M");
  const int n = desc.M.group.ambient_rank();
  // V = M / (2M + (sigma-1)M), an F2 space; W0 acts linearly.
  IntegerMatrix two = IntegerMatrix::identity(n) + IntegerMatrix::identity(n);
  IntegerMatrix rel = desc.M.group.relations().hcat(two).hcat(desc.M.twist());
  SmithForm s = smith_normal_form(rel);
  IntVec d = s.diagonal();
  std::vector<int> slots;
  for (int i = 0; i < n; ++i) {
    Int di = (i < static_cast<int>(d.size())) ? d[i] : Int(0);
    if (di == 1) continue;
    if (di != 2) throw Error("compact_fast_count: quotient is not an F2 space");
    slots.push_back(i);
  }
  const int dim = static_cast<int>(slots.size());
  if (dim > kMaxH1Dim) throw CapError("H^1 dimension exceeds the supported cap");
  auto reduce = [&](const IntVec& v) {
    IntVec y = s.U.apply(v);
    std::uint32_t bits = 0;
    for (int i = 0; i < dim; ++i)
      if (y[slots[i]] % 2 != 0) bits |= 1u << i;
    return bits;
  };
  WeylActionOnM act = weyl_action_on_M(desc);
  std::vector<AffineMapF2> maps;
  for (const IntegerMatrix& w : act.on_M) {
    AffineMapF2 m;
    m.dim = dim;
    m.cols.resize(dim);
    for (int j = 0; j < dim; ++j) m.cols[j] = reduce(w.apply(s.Uinv.column(slots[j])));
    maps.push_back(std::move(m));
  }
  return orbits_of_maps(dim, maps).orbit_count();
}

H1Report h1_compute(const QuasiConnectedDescriptor& desc) {
  validate_descriptor(desc);
  TwistedAction action = build_action(desc);
  validate_action(desc, action);
  H1Report rep;
  rep.group = desc.name;
  rep.dim_h1_q = action.dim;
  rep.family = family_kind_name(desc.family.kind);
  rep.orbits = enumerate_orbits(action);
  if (desc.family.kind == FamilyKind::Custom || desc.rd.num_simple() == 0) {
    WeylActionOnM act = weyl_action_on_M(desc);
    rep.w0_order = act.on_T.empty()
                       ? 1
                       : static_cast<unsigned long long>(
                             close_matrix_group(act.on_T, kActionClosureCap).size());
  } else {
    // sigma_T = -1 is central, so W0 is all of W.
    auto known = desc.rd.cartan_label ? weyl_order_from_label(*desc.rd.cartan_label)
                                      : std::nullopt;
    if (known) {
      rep.w0_order = *known;
    } else {
      std::vector<IntegerMatrix> gens;
      for (int i = 0; i < desc.rd.num_simple(); ++i)
        gens.push_back(simple_reflection_matrix(desc.rd, i));
      rep.w0_order = close_matrix_group(gens, kDefaultWeylCap).size();
    }
  }
  if (compact_fast_applicable(desc) &&
      compact_fast_count(desc) != rep.orbits.orbit_count())
    throw Error("compact fast path disagrees with the orbit engine");
  rep.validated = true;
  return rep;
}

}  // namespace galcoh
