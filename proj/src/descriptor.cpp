#include "galcoh/descriptor.hpp"

#include <algorithm>

namespace galcoh {

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Compact: return "compact";
    case FamilyKind::Inner: return "inner";
    case FamilyKind::Custom: return "custom";
  }
  return "?";
}

namespace {

bool is_minus_identity(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return m == -IntegerMatrix::identity(m.rows());
}

// Integer right inverse of a surjective map onto a free lattice.
IntegerMatrix right_inverse(const IntegerMatrix& p) {
  SmithForm s = smith_normal_form(p);
  IntegerMatrix dplus(p.cols(), p.rows());
  for (int i = 0; i < p.rows(); ++i) {
    if (i >= std::min(p.rows(), p.cols()) || s.D.at(i, i) != 1)
      throw ValidationError("p is not surjective");
    dplus.at(i, i) = 1;
  }
  IntegerMatrix r = s.V * dplus * s.U;
  if (!(p * r).is_identity()) throw Error("right_inverse: verification failed");
  return r;
}

bool has_finite_order(const IntegerMatrix& phi, const FgAbGroup& g, int cap = 512) {
  auto key = [&](const IntegerMatrix& m) {
    std::vector<IntVec> cols;
    for (int j = 0; j < m.cols(); ++j) cols.push_back(g.canonical(m.column(j)));
    return cols;
  };
  auto id_key = key(IntegerMatrix::identity(g.ambient_rank()));
  IntegerMatrix pw = phi;
  for (int k = 1; k <= cap; ++k) {
    if (key(pw) == id_key) return true;
    pw = pw * phi;
  }
  return false;
}

IntegerMatrix reflection_on_M(const QuasiConnectedDescriptor& desc, int i) {
  const int nm = desc.M.group.ambient_rank();
  // covector x -> <p(x), alpha_i^vee>
  IntVec row = desc.p.transpose().apply(desc.rd.simple_coroots[i]);
  IntegerMatrix phi = IntegerMatrix::identity(nm);
  const IntVec& lift = desc.root_lifts[i];
  for (int r = 0; r < nm; ++r)
    for (int c = 0; c < nm; ++c) phi.at(r, c) -= lift[r] * row[c];
  return phi;
}

IntegerMatrix induced_on_T(const QuasiConnectedDescriptor& desc, const IntegerMatrix& phi) {
  IntegerMatrix pr = right_inverse(desc.p);
  IntegerMatrix w = desc.p * phi * pr;
  if (!(w * desc.p == desc.p * phi))
    throw ValidationError("automorphism of M does not descend to X*(T)");
  return w;
}

bool permutes_roots(const BasedRootDatum& rd, const IntegerMatrix& w) {
  std::vector<IntVec> roots = all_roots(rd);
  std::sort(roots.begin(), roots.end());
  for (const IntVec& a : roots) {
    IntVec b = w.apply(a);
    if (!std::binary_search(roots.begin(), roots.end(), b)) return false;
  }
  return true;
}

void check_custom_generator(const QuasiConnectedDescriptor& desc, const IntegerMatrix& phi) {
  const int nm = desc.M.group.ambient_rank();
  if (phi.rows() != nm || phi.cols() != nm)
    throw ValidationError("custom generator has the wrong shape");
  if (!desc.M.group.matrix_maps_relations_into(phi, desc.M.group))
    throw ValidationError("custom generator does not preserve relations");
  if (!has_finite_order(phi, desc.M.group))
    throw ValidationError("custom generator has infinite order");
  // Gamma-equivariance on M.
  IntegerMatrix comm = phi * desc.M.sigma - desc.M.sigma * phi;
  for (int j = 0; j < comm.cols(); ++j)
    if (!desc.M.group.is_zero_element(comm.column(j)))
      throw ValidationError("custom generator does not commute with sigma");
  // Must fix ker(p) elementwise (it acts through the Weyl group of G^ss).
  GroupHom ph{desc.M.group, FgAbGroup::free_group(desc.rd.rank), desc.p};
  SubquotientPart ker_p = kernel(ph);
  const IntegerMatrix& inc = ker_p.map.matrix;
  for (int j = 0; j < inc.cols(); ++j) {
    IntVec v = inc.column(j);
    if (!desc.M.group.elements_equal(phi.apply(v), v))
      throw ValidationError("custom generator moves the central part");
  }
  IntegerMatrix w = induced_on_T(desc, phi);
  if (!permutes_roots(desc.rd, w))
    throw ValidationError("induced map on X*(T) is not a Weyl element");
  if (!(w * desc.sigma_T == desc.sigma_T * w))
    throw ValidationError("induced Weyl element does not commute with sigma_T");
}

}  // namespace

std::vector<std::string> descriptor_check_failures(const QuasiConnectedDescriptor& desc) {
  std::vector<std::string> failed;
  auto check = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const Error&) {
      failed.push_back(name);
    }
  };

  const int nm = desc.M.group.ambient_rank();
  const int nt = desc.rd.rank;

  check("cartan", [&] { desc.rd.validate(); });
  check("sigma-involution", [&] {
    desc.M.validate();
    if (desc.sigma_T.rows() != nt || desc.sigma_T.cols() != nt)
      throw ValidationError("sigma_T shape");
    if (!(desc.sigma_T * desc.sigma_T).is_identity())
      throw ValidationError("sigma_T is not an involution");
  });
  check("p-wellformed", [&] {
    if (desc.p.rows() != nt || desc.p.cols() != nm) throw ValidationError("p shape");
    const IntegerMatrix& rel = desc.M.group.relations();
    if (!(desc.p * rel).is_zero())
      throw ValidationError("p does not kill the relations of M");
  });
  check("sigma-compat", [&] {
    if (desc.p.rows() != nt || desc.p.cols() != nm) throw ValidationError("p shape");
    if (!(desc.p * desc.M.sigma == desc.sigma_T * desc.p))
      throw ValidationError("p is not Gamma-equivariant");
  });
  check("p-surjective", [&] { right_inverse(desc.p); });
  check("root-lifts", [&] {
    if (static_cast<int>(desc.root_lifts.size()) != desc.rd.num_simple())
      throw ValidationError("wrong number of root lifts");
    for (int i = 0; i < desc.rd.num_simple(); ++i) {
      if (static_cast<int>(desc.root_lifts[i].size()) != nm)
        throw ValidationError("root lift has the wrong size");
      if (desc.p.apply(desc.root_lifts[i]) != desc.rd.simple_roots[i])
        throw ValidationError("p(root lift) != simple root");
    }
  });
  check("family-sigma", [&] {
    if (desc.family.kind != FamilyKind::Custom && desc.rd.num_simple() > 0 &&
        !is_minus_identity(desc.sigma_T))
      throw ValidationError("compact/inner families require sigma_T = -1");
  });
  check("family-z", [&] {
    if (desc.family.kind == FamilyKind::Inner) {
      if (static_cast<int>(desc.family.z.size()) != desc.rd.num_simple())
        throw ValidationError("z must have one bit per simple root");
      for (int b : desc.family.z)
        if (b != 0 && b != 1) throw ValidationError("z bits must be 0 or 1");
    }
  });
  check("custom-gens", [&] {
    if (desc.family.kind != FamilyKind::Custom) return;
    if (desc.family.w0_gens.size() != desc.family.delta.size())
      throw ValidationError("custom family needs one delta per generator");
    for (const IntegerMatrix& phi : desc.family.w0_gens) check_custom_generator(desc, phi);
  });
  return failed;
}

void validate_descriptor(const QuasiConnectedDescriptor& desc) {
  auto failed = descriptor_check_failures(desc);
  if (!failed.empty()) throw ValidationError("descriptor check failed: " + failed.front());
}

WeylActionOnM weyl_action_on_M(const QuasiConnectedDescriptor& desc) {
  WeylActionOnM act;
  if (desc.family.kind == FamilyKind::Custom) {
    for (const IntegerMatrix& phi : desc.family.w0_gens) {
      act.on_M.push_back(phi);
      act.on_T.push_back(induced_on_T(desc, phi));
    }
    return act;
  }
  for (int i = 0; i < desc.rd.num_simple(); ++i) {
    IntegerMatrix phi = reflection_on_M(desc, i);
    if (!desc.M.group.matrix_maps_relations_into(phi, desc.M.group))
      throw ValidationError("reflection does not preserve the relations of M");
    act.on_M.push_back(std::move(phi));
    act.on_T.push_back(simple_reflection_matrix(desc.rd, i));
  }
  return act;
}

std::vector<std::vector<int>> delta_on_generators(const QuasiConnectedDescriptor& desc,
                                                  const WeylActionOnM& action,
                                                  const F2Space& h1_q) {
  const size_t ngens = action.on_M.size();
  std::vector<std::vector<int>> delta;
  switch (desc.family.kind) {
    case FamilyKind::Compact:
      delta.assign(ngens, std::vector<int>(h1_q.dimension(), 0));
      break;
    case FamilyKind::Inner:
      for (int i = 0; i < desc.rd.num_simple(); ++i) {
        // mu_i = (s_i^{-1} - 1) z = -z_i alpha_i^vee, always integral.
        IntVec mu = vec_scale(-Int(desc.family.z[i]), desc.rd.simple_coroots[i]);
        delta.push_back(class_of_two_torsion_point(h1_q, desc.p, desc.sigma_T, mu));
      }
      break;
    case FamilyKind::Custom:
      for (const auto& d : desc.family.delta) {
        if (static_cast<int>(d.size()) != h1_q.dimension())
          throw ValidationError("custom delta has the wrong length");
        for (int b : d)
          if (b != 0 && b != 1) throw ValidationError("custom delta bits must be 0 or 1");
        delta.push_back(d);
      }
      break;
  }
  return delta;
}

QuasiConnectedDescriptor build_product_quotient(const BasedRootDatum& rd, const GammaModule& m0,
                                                const KernelSpec& spec, const std::string& name,
                                                Family family, const IntegerMatrix& sigma_t) {
  const int nt = rd.rank;
  const int n0 = m0.group.ambient_rank();
  const int nmu = spec.mu_chars.ambient_rank();
  if (spec.q1.rows() != nmu || spec.q1.cols() != nt)
    throw ValidationError("build_product_quotient: q1 shape");
  if (spec.q2.rows() != nmu || spec.q2.cols() != n0)
    throw ValidationError("build_product_quotient: q2 shape");
  if (!m0.group.matrix_maps_relations_into(spec.q2, spec.mu_chars))
    throw ValidationError("build_product_quotient: q2 is not well defined on X*(Q0)");
  // mu must be central: every root restricts trivially.
  for (const IntVec& a : rd.simple_roots)
    if (!spec.mu_chars.is_zero_element(spec.q1.apply(a)))
      throw ValidationError("build_product_quotient: kernel is not central");

  // D = X*(T) + X*(Q0); M = ker([q1 | -q2] : D -> X*(mu)), as a subgroup of
  // the group D with the relations of the Q0 factor.
  const int nd = nt + n0;
  IntegerMatrix rel_d(nd, m0.group.relations().cols());
  for (int j = 0; j < m0.group.relations().cols(); ++j)
    for (int i = 0; i < n0; ++i) rel_d.at(nt + i, j) = m0.group.relations().at(i, j);
  FgAbGroup dgroup(nd, rel_d);
  IntegerMatrix h(nmu, nd);
  for (int i = 0; i < nmu; ++i) {
    for (int j = 0; j < nt; ++j) h.at(i, j) = spec.q1.at(i, j);
    for (int j = 0; j < n0; ++j) h.at(i, nt + j) = -spec.q2.at(i, j);
  }
  SubquotientPart mk = kernel(GroupHom{dgroup, spec.mu_chars, h});
  const GroupHom& inc = mk.map;  // M -> D

  // sigma on D, restricted to M. sigma_mu compatibility is what makes the
  // restriction land back in M.
  IntegerMatrix sigma_d(nd, nd);
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j) sigma_d.at(i, j) = sigma_t.at(i, j);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) sigma_d.at(nt + i, nt + j) = m0.sigma.at(i, j);
  IntegerMatrix stab = spec.sigma_mu * h - h * sigma_d;
  for (int j = 0; j < stab.cols(); ++j)
    if (!spec.mu_chars.is_zero_element(stab.column(j)))
      throw ValidationError("build_product_quotient: kernel is not sigma-stable");
  GroupHom sigma_m;
  try {
    sigma_m = factor_through(GroupHom{mk.group, dgroup, sigma_d * inc.matrix}, inc);
  } catch (const ValidationError&) {
    throw ValidationError("build_product_quotient: sigma does not restrict to M");
  }

  QuasiConnectedDescriptor desc;
  desc.name = name;
  desc.rd = rd;
  desc.M = GammaModule{mk.group, sigma_m.matrix};
  desc.sigma_T = sigma_t;
  // p = projection D -> X*(T) restricted to M.
  desc.p = IntegerMatrix(nt, mk.group.ambient_rank());
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < mk.group.ambient_rank(); ++j) desc.p.at(i, j) = inc.matrix.at(i, j);
  // Root lifts: (alpha_i, 0) lies in M by centrality; solve for coordinates.
  SmithForm inc_snf = smith_normal_form(inc.matrix);
  for (const IntVec& a : rd.simple_roots) {
    IntVec target(nd);
    for (int i = 0; i < nt; ++i) target[i] = a[i];
    auto sol = solve_linear(inc_snf, target);
    if (!sol) throw Error("build_product_quotient: root lift not found");
    desc.root_lifts.push_back(*sol);
  }
  desc.family = std::move(family);
  validate_descriptor(desc);
  return desc;
}

}  // namespace galcoh
