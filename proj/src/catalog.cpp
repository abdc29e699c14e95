#include <algorithm>
#include <map>
#include <sstream>

#include "galcoh/descriptor.hpp"

namespace galcoh {

namespace {

IntegerMatrix minus_identity(int n) { return -IntegerMatrix::identity(n); }

// Semisimple group whose character lattice is the chosen ambient Z^rank,
// with the compact real structure sigma = -1.
QuasiConnectedDescriptor semisimple_desc(const std::string& name, BasedRootDatum rd,
                                         Family family) {
  QuasiConnectedDescriptor d;
  d.name = name;
  int n = rd.rank;
  d.M = GammaModule{FgAbGroup::free_group(n), minus_identity(n)};
  d.p = IntegerMatrix::identity(n);
  d.root_lifts = rd.simple_roots;
  d.sigma_T = minus_identity(n);
  d.rd = std::move(rd);
  d.family = std::move(family);
  validate_descriptor(d);
  return d;
}

QuasiConnectedDescriptor quasi_torus_desc(const std::string& name, GammaModule m) {
  QuasiConnectedDescriptor d;
  d.name = name;
  d.rd.rank = 0;
  d.p = IntegerMatrix(0, m.group.ambient_rank());
  d.sigma_T = IntegerMatrix(0, 0);
  d.M = std::move(m);
  d.family.kind = FamilyKind::Compact;
  validate_descriptor(d);
  return d;
}

Family inner_family(std::vector<int> z) {
  Family f;
  f.kind = FamilyKind::Inner;
  f.z = std::move(z);
  return f;
}

std::vector<int> unit_bits(int n, int i) {
  std::vector<int> z(n, 0);
  z[i] = 1;
  return z;
}

// U(n) = (SU(n) x U(1)) / mu_n, diagonal central mu_n.
QuasiConnectedDescriptor make_unitary(int n) {
  std::string name = "U(" + std::to_string(n) + ")";
  GammaModule circle{FgAbGroup::free_group(1), minus_identity(1)};
  if (n == 1) return quasi_torus_desc(name, circle);
  BasedRootDatum rd = make_root_datum("A" + std::to_string(n - 1));
  KernelSpec spec;
  spec.mu_chars = FgAbGroup::cyclic_sum({n});
  spec.q1 = IntegerMatrix(1, n - 1);
  for (int j = 0; j < n - 1; ++j) spec.q1.at(0, j) = j + 1;  // varpi_j restricts to j mod n
  spec.q2 = IntegerMatrix(1, 1, {1});
  spec.sigma_mu = minus_identity(1);
  Family f;
  f.kind = FamilyKind::Compact;
  return build_product_quotient(rd, circle, spec, name, f, minus_identity(n - 1));
}

// (SL2 x mu_4) / mu_2, the group {g in GL2 : (det g)^2 = 1}, compact form.
QuasiConnectedDescriptor make_gl2_det_square_1() {
  BasedRootDatum rd = make_root_datum("A1");
  GammaModule mu4{FgAbGroup::cyclic_sum({4}), IntegerMatrix::identity(1)};
  KernelSpec spec;
  spec.mu_chars = FgAbGroup::cyclic_sum({2});
  spec.q1 = IntegerMatrix(1, 1, {1});
  spec.q2 = IntegerMatrix(1, 1, {1});
  spec.sigma_mu = IntegerMatrix::identity(1);
  Family f;
  f.kind = FamilyKind::Compact;
  return build_product_quotient(rd, mu4, spec, "gl2-det-square-1", f, minus_identity(1));
}

// Custom entry with an order-4 generator r = s1 s2 of W(B2), built from the
// inner-twisted B2 descriptor so that r carries a nonzero translation part.
QuasiConnectedDescriptor make_custom_b2() {
  QuasiConnectedDescriptor base = catalog_get("inner:B2:10");
  WeylActionOnM act = weyl_action_on_M(base);
  F2Space h1 = h1_gamma(base.M);
  std::vector<std::vector<int>> d = delta_on_generators(base, act, h1);
  auto lcols = [&](int g) { return h1_functorial(base.M, base.M, act.on_M[g], h1, h1); };
  // delta(vw) = L_w delta(v) + delta(w), with L_w(i,j) = cols_w[i][j].
  auto cols2 = lcols(1);
  std::vector<int> dr(h1.dimension());
  for (int i = 0; i < h1.dimension(); ++i) {
    int b = d[1][i];
    for (int j = 0; j < h1.dimension(); ++j) b ^= cols2[i][j] & d[0][j];
    dr[i] = b;
  }
  QuasiConnectedDescriptor desc = base;
  desc.name = "custom:B2-order4";
  desc.family.kind = FamilyKind::Custom;
  desc.family.z.clear();
  desc.family.w0_gens = {act.on_M[0] * act.on_M[1], act.on_M[0]};
  desc.family.delta = {dr, d[0]};
  validate_descriptor(desc);
  return desc;
}

const std::vector<std::string>& simple_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (int r = 1; r <= 8; ++r) v.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 8; ++r) v.push_back("B" + std::to_string(r));
    for (int r = 2; r <= 8; ++r) v.push_back("C" + std::to_string(r));
    for (int r = 4; r <= 8; ++r) v.push_back("D" + std::to_string(r));
    v.insert(v.end(), {"E6", "E7", "E8", "F4", "G2"});
    return v;
  }();
  return labels;
}

std::vector<int> parse_bits(const std::string& s) {
  std::vector<int> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw ValidationError("bad z bits: " + s);
    bits.push_back(c - '0');
  }
  return bits;
}

QuasiConnectedDescriptor make_mu(const std::string& name, long k) {
  return quasi_torus_desc(name,
                          GammaModule{FgAbGroup::cyclic_sum({k}), IntegerMatrix::identity(1)});
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const std::string& l : simple_labels()) {
    names.push_back("compact:" + l);
    names.push_back("compact-adjoint:" + l);
  }
  for (int n = 3; n <= 14; ++n) names.push_back("SO(" + std::to_string(n) + ")");
  for (int n = 1; n <= 8; ++n) names.push_back("U(" + std::to_string(n) + ")");
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= p && p + q <= 6; ++q)
      names.push_back("SU(" + std::to_string(p) + "," + std::to_string(q) + ")");
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= p && p + q <= 4; ++q)
      names.push_back("Sp(" + std::to_string(p) + "," + std::to_string(q) + ")");
  for (int n = 1; n <= 6; ++n) names.push_back("Sp" + std::to_string(2 * n) + "R");
  names.push_back("SL2R");
  names.push_back("gl2-det-square-1");
  names.push_back("quasi-torus:Gm");
  names.push_back("quasi-torus:U1");
  for (int k = 2; k <= 8; ++k) names.push_back("quasi-torus:mu" + std::to_string(k));
  names.push_back("quasi-torus:U1xmu4");
  names.push_back("quasi-torus:norm-one");
  names.push_back("custom:B2-order4");
  std::sort(names.begin(), names.end());
  return names;
}

QuasiConnectedDescriptor catalog_get(const std::string& name) {
  auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
  auto num = [](const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ValidationError("bad number in catalog name");
    return v;
  };

  if (starts("compact:")) {
    Family f;
    return semisimple_desc(name, make_root_datum(name.substr(8)), f);
  }
  if (starts("compact-adjoint:")) {
    Family f;
    return semisimple_desc(name, make_root_datum(name.substr(16), LatticeForm::Adjoint), f);
  }
  if (starts("inner:")) {
    // inner:LABEL:bits, one bit per simple root
    size_t colon = name.find(':', 6);
    if (colon == std::string::npos) throw ValidationError("inner entry needs z bits");
    BasedRootDatum rd = make_root_datum(name.substr(6, colon - 6));
    std::vector<int> z = parse_bits(name.substr(colon + 1));
    if (static_cast<int>(z.size()) != rd.num_simple())
      throw ValidationError("inner entry: z has the wrong length");
    return semisimple_desc(name, std::move(rd), inner_family(std::move(z)));
  }
  if (starts("SO(") && name.back() == ')') {
    int n = num(name.substr(3, name.size() - 4));
    if (n < 3 || n > 14) throw ValidationError("SO(n) supported for 3 <= n <= 14");
    Family f;
    return semisimple_desc(name, so_root_datum(n), f);
  }
  if (starts("U(") && name.back() == ')') {
    int n = num(name.substr(2, name.size() - 3));
    if (n < 1 || n > 8) throw ValidationError("U(n) supported for 1 <= n <= 8");
    return make_unitary(n);
  }
  if ((starts("SU(") || starts("Sp(")) && name.back() == ')') {
    size_t comma = name.find(',');
    if (comma == std::string::npos) throw ValidationError("unknown catalog entry: " + name);
    int p = num(name.substr(3, comma - 3));
    int q = num(name.substr(comma + 1, name.size() - comma - 2));
    if (p < 1 || q < 1 || q > p) throw ValidationError("need p >= q >= 1");
    int n = p + q;
    if (starts("SU(")) {
      if (n > 8) throw ValidationError("SU(p,q) supported for p+q <= 8");
      return semisimple_desc(name, make_root_datum("A" + std::to_string(n - 1)),
                             inner_family(unit_bits(n - 1, p - 1)));
    }
    if (n > 8) throw ValidationError("Sp(p,q) supported for p+q <= 8");
    std::string label = (n >= 2) ? "C" + std::to_string(n) : "A1";
    return semisimple_desc(name, make_root_datum(label), inner_family(unit_bits(n, p - 1)));
  }
  if (name == "SL2R" || name == "Sp2R")
    return semisimple_desc(name, make_root_datum("A1"), inner_family({1}));
  if (starts("Sp") && name.back() == 'R') {
    int m = num(name.substr(2, name.size() - 3));
    if (m < 2 || m > 12 || m % 2 != 0) throw ValidationError("Sp2nR supported for 2n <= 12");
    int n = m / 2;
    return semisimple_desc(name, make_root_datum("C" + std::to_string(n)),
                           inner_family(unit_bits(n, n - 1)));
  }
  if (name == "gl2-det-square-1") return make_gl2_det_square_1();
  if (name == "quasi-torus:Gm")
    return quasi_torus_desc(name, GammaModule{FgAbGroup::free_group(1), IntegerMatrix::identity(1)});
  if (name == "quasi-torus:U1" || name == "quasi-torus:norm-one")
    return quasi_torus_desc(name, GammaModule{FgAbGroup::free_group(1), minus_identity(1)});
  if (starts("quasi-torus:mu")) return make_mu(name, num(name.substr(14)));
  if (name == "quasi-torus:U1xmu4") {
    FgAbGroup g = FgAbGroup::cyclic_sum({0, 4});
    IntegerMatrix sigma = IntegerMatrix::identity(2);
    sigma.at(0, 0) = -1;
    return quasi_torus_desc(name, GammaModule{g, sigma});
  }
  if (name == "custom:B2-order4") return make_custom_b2();
  throw ValidationError("unknown catalog entry: " + name);
}

}  // namespace galcoh
