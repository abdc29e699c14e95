#include "galcoh/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace galcoh {

IntegerMatrix BasedRootDatum::cartan() const {
  int m = num_simple();
  IntegerMatrix c(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c.at(i, j) = pairing(simple_roots[i], simple_coroots[j]);
  return c;
}

void BasedRootDatum::validate() const {
  if (static_cast<int>(simple_coroots.size()) != num_simple())
    throw ValidationError("root datum: roots/coroots count mismatch");
  for (const IntVec& a : simple_roots)
    if (static_cast<int>(a.size()) != rank) throw ValidationError("root datum: root size mismatch");
  for (const IntVec& a : simple_coroots)
    if (static_cast<int>(a.size()) != rank)
      throw ValidationError("root datum: coroot size mismatch");
  IntegerMatrix c = cartan();
  for (int i = 0; i < c.rows(); ++i) {
    if (c.at(i, i) != 2) throw ValidationError("root datum: Cartan diagonal entry is not 2");
    for (int j = 0; j < c.cols(); ++j) {
      if (i == j) continue;
      if (c.at(i, j) > 0) throw ValidationError("root datum: positive off-diagonal Cartan entry");
      if ((c.at(i, j) == 0) != (c.at(j, i) == 0))
        throw ValidationError("root datum: asymmetric Cartan zero pattern");
    }
  }
  if (cartan_label) {
    BasedRootDatum ref = make_root_datum(*cartan_label, LatticeForm::SimplyConnected);
    if (ref.cartan() != c)
      throw ValidationError("root datum: Cartan matrix does not match label " + *cartan_label);
  }
}

namespace {

struct TypeRank {
  char type;
  int rank;
};

TypeRank parse_simple_label(const std::string& s) {
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
    throw ValidationError("unknown Cartan label: " + s);
  int r = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ValidationError("unknown Cartan label: " + s);
    r = r * 10 + (s[i] - '0');
  }
  char t = s[0];
  bool ok = false;
  switch (t) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 1; break;
    case 'C': ok = r >= 1; break;
    case 'D': ok = r >= 2; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
  }
  if (!ok) throw ValidationError("unknown Cartan label: " + s);
  return TypeRank{t, r};
}

std::vector<std::string> split_label(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

// cartan(i, j) = <alpha_i, alpha_j^vee>, Bourbaki numbering.
IntegerMatrix cartan_of(TypeRank tr) {
  int l = tr.rank;
  IntegerMatrix c(l, l);
  for (int i = 0; i < l; ++i) c.at(i, i) = 2;
  auto edge = [&](int i, int j, int cij, int cji) {
    c.at(i, j) = cij;
    c.at(j, i) = cji;
  };
  switch (tr.type) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1, -1);
      if (l >= 2) edge(l - 2, l - 1, -2, -1);
      break;
    case 'C':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1, -1);
      if (l >= 2) edge(l - 2, l - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1, -1);
      if (l >= 3) edge(l - 3, l - 1, -1, -1);
      break;
    case 'E':
      edge(0, 2, -1, -1);
      edge(2, 3, -1, -1);
      edge(1, 3, -1, -1);
      edge(3, 4, -1, -1);
      edge(4, 5, -1, -1);
      if (l >= 7) edge(5, 6, -1, -1);
      if (l >= 8) edge(6, 7, -1, -1);
      break;
    case 'F':
      edge(0, 1, -1, -1);
      edge(1, 2, -2, -1);
      edge(2, 3, -1, -1);
      break;
    case 'G':
      edge(0, 1, -1, -3);
      break;
  }
  return c;
}

BasedRootDatum datum_from_cartan(const IntegerMatrix& c, LatticeForm form, std::string label) {
  int l = c.rows();
  BasedRootDatum rd;
  rd.rank = l;
  rd.cartan_label = std::move(label);
  for (int i = 0; i < l; ++i) {
    IntVec root(l), coroot(l);
    if (form == LatticeForm::SimplyConnected) {
      // Fundamental-weight basis: coroots are the dual standard basis.
      for (int j = 0; j < l; ++j) root[j] = c.at(i, j);
      coroot[i] = 1;
    } else {
      // Simple-root basis.
      root[i] = 1;
      for (int j = 0; j < l; ++j) coroot[j] = c.at(j, i);
    }
    rd.simple_roots.push_back(std::move(root));
    rd.simple_coroots.push_back(std::move(coroot));
  }
  return rd;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BasedRootDatum make_root_datum(const std::string& label, LatticeForm form) {
  std::vector<std::string> parts = split_label(label);
  BasedRootDatum rd;
  bool first = true;
  for (const std::string& p : parts) {
    TypeRank tr = parse_simple_label(p);
    BasedRootDatum piece = datum_from_cartan(cartan_of(tr), form, p);
    rd = first ? piece : direct_sum(rd, piece);
    first = false;
  }
  rd.cartan_label = label;
  return rd;
}

BasedRootDatum so_root_datum(int n) {
  if (n < 3) throw ValidationError("SO(n) requires n >= 3");
  int m = n / 2;
  BasedRootDatum rd;
  rd.rank = m;
  auto unit = [&](int i) {
    IntVec v(m);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i + 1 < m; ++i) {
    IntVec r = unit(i);
    r[i + 1] = -1;
    rd.simple_roots.push_back(r);
    rd.simple_coroots.push_back(r);
  }
  if (n % 2 == 1) {
    rd.simple_roots.push_back(unit(m - 1));
    rd.simple_coroots.push_back(vec_scale(2, unit(m - 1)));
    rd.cartan_label = "B" + std::to_string(m);
  } else {
    if (m >= 2) {
      IntVec r = unit(m - 2);
      r[m - 1] = 1;
      rd.simple_roots.push_back(r);
      rd.simple_coroots.push_back(r);
    }
    rd.cartan_label = "D" + std::to_string(m);
  }
  return rd;
}

BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b) {
  BasedRootDatum rd;
  rd.rank = a.rank + b.rank;
  auto embed = [&](const IntVec& v, int offset) {
    IntVec w(rd.rank);
    for (size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
  };
  for (int i = 0; i < a.num_simple(); ++i) {
    rd.simple_roots.push_back(embed(a.simple_roots[i], 0));
    rd.simple_coroots.push_back(embed(a.simple_coroots[i], 0));
  }
  for (int i = 0; i < b.num_simple(); ++i) {
    rd.simple_roots.push_back(embed(b.simple_roots[i], a.rank));
    rd.simple_coroots.push_back(embed(b.simple_coroots[i], a.rank));
  }
  if (a.cartan_label && b.cartan_label) rd.cartan_label = *a.cartan_label + "x" + *b.cartan_label;
  return rd;
}

std::optional<unsigned long long> weyl_order_from_label(const std::string& label) {
  unsigned long long order = 1;
  for (const std::string& p : split_label(label)) {
    TypeRank tr;
    try {
      tr = parse_simple_label(p);
    } catch (const ValidationError&) {
      return std::nullopt;
    }
    unsigned long long o = 1;
    int l = tr.rank;
    switch (tr.type) {
      case 'A': o = factorial(l + 1); break;
      case 'B':
      case 'C': o = factorial(l) << l; break;
      case 'D': o = factorial(l) << (l - 1); break;
      case 'E': o = (l == 6) ? 51840ull : (l == 7) ? 2903040ull : 696729600ull; break;
      case 'F': o = 1152; break;
      case 'G': o = 12; break;
    }
    order *= o;
  }
  return order;
}

IntegerMatrix simple_reflection_matrix(const BasedRootDatum& rd, int i) {
  if (i < 0 || i >= rd.num_simple())
    throw ValidationError("simple_reflection: index out of range");
  IntegerMatrix m = IntegerMatrix::identity(rd.rank);
  const IntVec& a = rd.simple_roots[i];
  const IntVec& av = rd.simple_coroots[i];
  for (int r = 0; r < rd.rank; ++r)
    for (int c = 0; c < rd.rank; ++c) m.at(r, c) -= a[r] * av[c];
  return m;
}

WeylElement simple_reflection(const BasedRootDatum& rd, int i) {
  return WeylElement{simple_reflection_matrix(rd, i), {i}};
}

std::vector<WeylElement> generate_weyl(const BasedRootDatum& rd, long cap) {
  std::vector<IntegerMatrix> gens;
  for (int i = 0; i < rd.num_simple(); ++i) gens.push_back(simple_reflection_matrix(rd, i));
  std::map<IntegerMatrix, std::vector<int>> seen;
  std::deque<IntegerMatrix> queue;
  IntegerMatrix id = IntegerMatrix::identity(rd.rank);
  seen.emplace(id, std::vector<int>{});
  queue.push_back(id);
  while (!queue.empty()) {
    IntegerMatrix w = std::move(queue.front());
    queue.pop_front();
    std::vector<int> word = seen.at(w);
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      IntegerMatrix next = w * gens[i];
      if (seen.count(next)) continue;
      if (static_cast<long>(seen.size()) >= cap)
        throw CapError("generate_weyl: group too large (cap " + std::to_string(cap) + ")");
      std::vector<int> nw = word;
      nw.push_back(i);
      seen.emplace(next, std::move(nw));
      queue.push_back(next);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [m, w] : seen) out.push_back(WeylElement{m, w});
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.matrix < b.matrix;
  });
  if (rd.cartan_label) {
    auto known = weyl_order_from_label(*rd.cartan_label);
    if (known && *known != out.size())
      throw Error("generate_weyl: enumerated order disagrees with the known order of " +
                  *rd.cartan_label);
  }
  return out;
}

std::vector<IntVec> all_roots(const BasedRootDatum& rd, long cap) {
  std::set<IntVec> roots;
  std::deque<IntVec> queue;
  for (const IntVec& a : rd.simple_roots)
    if (roots.insert(a).second) queue.push_back(a);
  std::vector<IntegerMatrix> gens;
  for (int i = 0; i < rd.num_simple(); ++i) gens.push_back(simple_reflection_matrix(rd, i));
  while (!queue.empty()) {
    IntVec r = std::move(queue.front());
    queue.pop_front();
    for (const IntegerMatrix& s : gens) {
      IntVec next = s.apply(r);
      if (roots.insert(next).second) {
        if (static_cast<long>(roots.size()) > cap)
          throw ValidationError("all_roots: root system is not finite");
        queue.push_back(next);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<IntegerMatrix> close_matrix_group(const std::vector<IntegerMatrix>& gens, long cap) {
  std::set<IntegerMatrix> seen;
  std::deque<IntegerMatrix> queue;
  int n = gens.empty() ? 0 : gens[0].rows();
  IntegerMatrix id = IntegerMatrix::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    IntegerMatrix w = std::move(queue.front());
    queue.pop_front();
    for (const IntegerMatrix& g : gens) {
      IntegerMatrix next = w * g;
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > cap)
          throw CapError("matrix group closure cap " + std::to_string(cap) + " exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

W0Subgroup w0_subgroup(const BasedRootDatum& rd, const IntegerMatrix& sigma, long cap) {
  if (sigma.rows() != rd.rank || sigma.cols() != rd.rank)
    throw ValidationError("w0_subgroup: sigma shape mismatch");
  if (!(sigma * sigma).is_identity())
    throw ValidationError("w0_subgroup: sigma is not an involution");

  std::vector<WeylElement> w = generate_weyl(rd, cap);
  std::set<IntegerMatrix> wset;
  for (const WeylElement& e : w) wset.insert(e.matrix);
  for (int i = 0; i < rd.num_simple(); ++i) {
    IntegerMatrix conj = sigma * simple_reflection_matrix(rd, i) * sigma;
    if (!wset.count(conj))
      throw ValidationError("w0_subgroup: sigma does not normalize the Weyl group");
  }

  W0Subgroup out;
  for (const WeylElement& e : w)
    if (e.matrix * sigma == sigma * e.matrix) out.elements.push_back(e.matrix);

  bool minus_one = true;
  for (int i = 0; minus_one && i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      if (sigma.at(i, j) != (i == j ? -1 : 0)) {
        minus_one = false;
        break;
      }
  if (minus_one) {
    for (int i = 0; i < rd.num_simple(); ++i)
      out.generators.push_back(simple_reflection_matrix(rd, i));
    return out;
  }

  // Greedy generating set, then prune to an irredundant one.
  std::set<IntegerMatrix> target(out.elements.begin(), out.elements.end());
  std::set<IntegerMatrix> have;
  have.insert(IntegerMatrix::identity(rd.rank));
  for (const IntegerMatrix& m : out.elements) {
    if (have.count(m)) continue;
    out.generators.push_back(m);
    auto closed = close_matrix_group(out.generators, cap);
    have = std::set<IntegerMatrix>(closed.begin(), closed.end());
  }
  for (size_t i = 0; i < out.generators.size();) {
    std::vector<IntegerMatrix> rest;
    for (size_t j = 0; j < out.generators.size(); ++j)
      if (j != i) rest.push_back(out.generators[j]);
    if (rest.empty()) break;
    auto closed = close_matrix_group(rest, cap);
    if (closed.size() == target.size()) {
      out.generators = std::move(rest);
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace galcoh
