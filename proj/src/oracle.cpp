#include "galcoh/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galcoh {

namespace {

long mod_reduce(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

struct PointSet {
  std::vector<std::vector<long>> points;
  std::map<std::vector<long>, int> index;
  int add(const std::vector<long>& p) {
    auto [it, fresh] = index.try_emplace(p, static_cast<int>(points.size()));
    if (fresh) points.push_back(p);
    return it->second;
  }
};

}  // namespace

long brute_h1_gamma(const OracleModule& m, long box) {
  const int n = static_cast<int>(m.moduli.size());
  if (static_cast<int>(m.sigma.size()) != n) throw ValidationError("oracle: sigma shape");
  long max_mod = 1;
  int free_rank = 0;
  for (long d : m.moduli) {
    if (d < 0) throw ValidationError("oracle: negative modulus");
    if (d == 0)
      ++free_rank;
    else
      max_mod = std::max(max_mod, d);
    if (d > 8) throw CapError("oracle: modulus above 8");
  }
  if (free_rank > 4) throw CapError("oracle: free rank above 4");
  if (box < 2 * max_mod) throw CapError("oracle: box too small");

  auto reduce = [&](std::vector<long> p) {
    for (int i = 0; i < n; ++i)
      if (m.moduli[i] != 0) p[i] = mod_reduce(p[i], m.moduli[i]);
    return p;
  };
  auto apply_sigma = [&](const std::vector<long>& p) {
    std::vector<long> q(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q[i] += m.sigma[i][j] * p[j];
    return reduce(q);
  };
  auto in_box = [&](const std::vector<long>& p) {
    for (int i = 0; i < n; ++i)
      if (m.moduli[i] == 0 && (p[i] < -box || p[i] > box)) return false;
    return true;
  };
  auto is_cocycle = [&](const std::vector<long>& p) {
    std::vector<long> s = apply_sigma(p);
    for (int i = 0; i < n; ++i) {
      long v = s[i] + p[i];
      if (m.moduli[i] != 0 ? mod_reduce(v, m.moduli[i]) != 0 : v != 0) return false;
    }
    return true;
  };

  // Enumerate the whole box, keep cocycles.
  PointSet pts;
  std::vector<long> cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (is_cocycle(cur)) pts.add(reduce(cur));
      return;
    }
    long lo = m.moduli[i] == 0 ? -box : 0;
    long hi = m.moduli[i] == 0 ? box : m.moduli[i] - 1;
    for (long v = lo; v <= hi; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);

  // Merge along x ~ x +- (sigma - 1) e_j.
  std::vector<int> parent(pts.points.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t idx = 0; idx < pts.points.size(); ++idx) {
    for (int j = 0; j < n; ++j) {
      for (int sign : {1, -1}) {
        // shift by sign * ((sigma - 1) e_j)
        std::vector<long> q = pts.points[idx];
        for (int i = 0; i < n; ++i) q[i] += sign * (m.sigma[i][j] - (i == j ? 1 : 0));
        q = reduce(q);
        if (!in_box(q)) continue;
        auto it = pts.index.find(q);
        if (it == pts.index.end()) continue;
        int a = find(static_cast<int>(idx)), b = find(it->second);
        if (a != b) parent[b] = a;
      }
    }
  }
  std::set<int> roots;
  for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<long>(roots.size());
}

std::vector<std::vector<std::uint32_t>> brute_orbits_full_group(const TwistedAction& action,
                                                                long cap) {
  // Close the generators into the full group of affine maps.
  std::set<std::pair<std::vector<std::uint32_t>, std::uint32_t>> seen;
  std::vector<AffineMapF2> group;
  AffineMapF2 id;
  id.dim = action.dim;
  id.cols.resize(action.dim);
  for (int j = 0; j < action.dim; ++j) id.cols[j] = 1u << j;
  group.push_back(id);
  seen.insert({id.cols, id.t});
  for (size_t i = 0; i < group.size(); ++i) {
    for (const AffineMapF2& g : action.gens) {
      AffineMapF2 next = compose_right(group[i], g);
      if (seen.insert({next.cols, next.t}).second) {
        if (static_cast<long>(group.size()) >= cap)
          throw CapError("oracle: affine group larger than cap");
        group.push_back(next);
      }
    }
  }
  const std::uint32_t n = 1u << action.dim;
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t x = 0; x < n; ++x) parent[x] = x;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t x = 0; x < n; ++x)
    for (const AffineMapF2& g : group) {
      std::uint32_t a = find(x), b = find(g.apply(x));
      if (a != b) parent[b] = a;
    }
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_root;
  for (std::uint32_t x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<std::uint32_t>> parts;
  for (auto& [root, members] : by_root) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end());
  return parts;
}

long classification_count(const std::string& family, int n) {
  if (n < 0) throw ValidationError("oracle: negative rank");
  long count = 0;
  if (family == "hermitian" || family == "quaternionic") {
    // signatures (p, q), p + q = n
    for (int p = 0; p <= n; ++p) ++count;
    return count;
  }
  if (family == "quadratic-odd") {
    // dim 2n+1, determinant sign fixed: disc = (-1)^q, q even
    int dim = 2 * n + 1;
    for (int q = 0; q <= dim; ++q)
      if (q % 2 == 0) ++count;
    return count;
  }
  if (family == "quadratic-even") {
    int dim = 2 * n;
    for (int q = 0; q <= dim; ++q)
      if (q % 2 == 0) ++count;
    return count;
  }
  if (family == "hermitian-det1") {
    // rank n, discriminant parity fixed
    for (int q = 0; q <= n; ++q)
      if (q % 2 == 0) ++count;
    return count;
  }
  if (family == "symplectic" || family == "sl") return 1;
  throw ValidationError("oracle: unknown classification family " + family);
}

long exact_sequence_gl2_count() {
  // R^x up to homotopy is the sign group {+1, -1}; det on GL2(R) is onto,
  // so the image of g -> det(g)^2 is the squares.
  std::vector<int> signs = {1, -1};
  std::set<int> image;
  for (int s : signs) image.insert(s * s);
  std::set<int> cosets;
  for (int s : signs) {
    // coset of s modulo the image
    int rep = image.count(s) ? 1 : s;
    cosets.insert(rep);
  }
  return static_cast<long>(cosets.size());
}

}  // namespace galcoh
