#include "galcoh/fgab.hpp"

#include <algorithm>

namespace galcoh {

namespace {

Int pos_mod(const Int& x, const Int& d) {
  Int m = x % d;
  if (m < 0) m += d;
  return m;
}

bool is_odd(const Int& x) { return x % 2 != 0; }

}  // namespace

FgAbGroup::FgAbGroup(int ambient_rank, IntegerMatrix relations)
    : ambient_rank_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.rows() != ambient_rank_)
    throw ValidationError("FgAbGroup: relations must have ambient_rank rows");
  rel_snf_ = smith_normal_form(relations_);
}

FgAbGroup FgAbGroup::cyclic_sum(const std::vector<long>& moduli) {
  int n = static_cast<int>(moduli.size());
  std::vector<IntVec> cols;
  for (int i = 0; i < n; ++i) {
    if (moduli[i] < 0) throw ValidationError("cyclic_sum: negative modulus");
    if (moduli[i] == 0) continue;
    IntVec c(n);
    c[i] = moduli[i];
    cols.push_back(c);
  }
  return FgAbGroup(n, IntegerMatrix::from_columns(cols, n));
}

IntVec FgAbGroup::invariant_factors() const {
  IntVec out;
  IntVec d = rel_snf_.diagonal();
  int rank = 0;
  for (const Int& x : d)
    if (x != 0) ++rank;
  for (const Int& x : d)
    if (x > 1) out.push_back(x);
  for (int i = 0; i < ambient_rank_ - rank; ++i) out.push_back(0);
  return out;
}

bool FgAbGroup::is_trivial() const { return invariant_factors().empty(); }

IntVec FgAbGroup::canonical(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_rank_)
    throw ValidationError("FgAbGroup::canonical: size mismatch");
  IntVec y = rel_snf_.U.apply(v);
  IntVec d = rel_snf_.diagonal();
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) y[i] = pos_mod(y[i], d[i]);
  return y;
}

bool FgAbGroup::is_zero_element(const IntVec& v) const { return vec_is_zero(canonical(v)); }

bool FgAbGroup::elements_equal(const IntVec& a, const IntVec& b) const {
  return canonical(a) == canonical(b);
}

bool FgAbGroup::matrix_maps_relations_into(const IntegerMatrix& matrix,
                                           const FgAbGroup& target) const {
  if (matrix.cols() != ambient_rank_ || matrix.rows() != target.ambient_rank_) return false;
  for (int j = 0; j < relations_.cols(); ++j)
    if (!target.is_zero_element(matrix.apply(relations_.column(j)))) return false;
  return true;
}

void GroupHom::validate() const {
  if (!is_well_defined())
    throw ValidationError("GroupHom: matrix does not preserve relations");
}

bool GroupHom::is_well_defined() const {
  return source.matrix_maps_relations_into(matrix, target);
}

bool GroupHom::is_surjective() const { return cokernel(*this).group.is_trivial(); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  return GroupHom{f.source, g.target, g.matrix * f.matrix};
}

namespace {

// Basis of the lattice {x in Z^nA : h(x) lies in the relation lattice of the
// target}. Contains the source relations whenever h is well defined.
IntegerMatrix preimage_lattice(const GroupHom& h) {
  IntegerMatrix block = h.matrix.hcat(h.target.relations());
  IntegerMatrix ker = integer_kernel(block);
  int na = h.source.ambient_rank();
  IntegerMatrix gens(na, ker.cols());
  for (int j = 0; j < ker.cols(); ++j)
    for (int i = 0; i < na; ++i) gens.at(i, j) = ker.at(i, j);
  return column_lattice_basis(gens);
}

}  // namespace

SubquotientPart kernel(const GroupHom& h) {
  h.validate();
  IntegerMatrix basis = preimage_lattice(h);
  SmithForm bs = smith_normal_form(basis);
  const IntegerMatrix& ra = h.source.relations();
  IntegerMatrix rel(basis.cols(), ra.cols());
  for (int j = 0; j < ra.cols(); ++j) {
    auto c = solve_linear(bs, ra.column(j));
    if (!c) throw Error("kernel: source relation outside preimage lattice");
    for (int i = 0; i < basis.cols(); ++i) rel.at(i, j) = (*c)[i];
  }
  FgAbGroup g(basis.cols(), rel);
  return SubquotientPart{g, GroupHom{g, h.source, basis}};
}

SubquotientPart image(const GroupHom& h) {
  h.validate();
  IntegerMatrix basis = preimage_lattice(h);
  FgAbGroup g(h.source.ambient_rank(), basis);
  return SubquotientPart{g, GroupHom{g, h.target, h.matrix}};
}

SubquotientPart cokernel(const GroupHom& h) {
  if (!h.is_well_defined())
    throw ValidationError("GroupHom: matrix does not preserve relations");
  FgAbGroup g(h.target.ambient_rank(), h.matrix.hcat(h.target.relations()));
  return SubquotientPart{
      g, GroupHom{h.target, g, IntegerMatrix::identity(h.target.ambient_rank())}};
}

GroupHom factor_through(const GroupHom& f, const GroupHom& j) {
  IntegerMatrix block = j.matrix.hcat(j.target.relations());
  SmithForm s = smith_normal_form(block);
  int nc = j.source.ambient_rank();
  int na = f.source.ambient_rank();
  IntegerMatrix g(nc, na);
  for (int a = 0; a < na; ++a) {
    IntVec e(na);
    e[a] = 1;
    auto sol = solve_linear(s, f.apply(e));
    if (!sol) throw ValidationError("factor_through: image of f not contained in image of j");
    for (int i = 0; i < nc; ++i) g.at(i, a) = (*sol)[i];
  }
  GroupHom result{f.source, j.source, g};
  result.validate();
  return result;
}

void GammaModule::validate() const {
  int n = group.ambient_rank();
  if (sigma.rows() != n || sigma.cols() != n)
    throw ValidationError("GammaModule: sigma must be square of ambient rank");
  if (!group.matrix_maps_relations_into(sigma, group))
    throw ValidationError("GammaModule: sigma does not preserve relations");
  IntegerMatrix sq = sigma * sigma;
  for (int j = 0; j < n; ++j) {
    IntVec e(n);
    e[j] = 1;
    if (!group.is_zero_element(vec_sub(sq.apply(e), e)))
      throw ValidationError("GammaModule: sigma is not an involution");
  }
}

IntegerMatrix GammaModule::norm() const {
  return IntegerMatrix::identity(group.ambient_rank()) + sigma;
}

IntegerMatrix GammaModule::twist() const {
  return sigma - IntegerMatrix::identity(group.ambient_rank());
}

F2Space h1_gamma(const GammaModule& m) {
  m.validate();
  const int n = m.group.ambient_rank();
  const IntegerMatrix& rel = m.group.relations();
  IntegerMatrix nm = m.norm();

  // K = { x : (1+sigma) x lies in the relation lattice }.
  IntegerMatrix ker = integer_kernel(nm.hcat(rel));
  IntegerMatrix gens(n, ker.cols());
  for (int j = 0; j < ker.cols(); ++j)
    for (int i = 0; i < n; ++i) gens.at(i, j) = ker.at(i, j);
  IntegerMatrix basis = column_lattice_basis(gens);
  SmithForm basis_snf = smith_normal_form(basis);
  const int r = basis.cols();

  // J = (sigma-1) Z^n + relation lattice, expressed in K-coordinates.
  IntegerMatrix jgens = m.twist().hcat(rel);
  IntegerMatrix c(r, jgens.cols());
  for (int j = 0; j < jgens.cols(); ++j) {
    auto sol = solve_linear(basis_snf, jgens.column(j));
    if (!sol) throw Error("h1_gamma: im(sigma-1) escaped ker(1+sigma)");
    for (int i = 0; i < r; ++i) c.at(i, j) = (*sol)[i];
  }
  SmithForm qs = smith_normal_form(c);

  F2Space h;
  h.ambient_ = n;
  h.norm_ = std::move(nm);
  h.parent_ = m.group;
  h.kernel_basis_ = basis;
  h.kernel_basis_snf_ = std::move(basis_snf);
  IntVec d = qs.diagonal();
  for (int i = 0; i < r; ++i) {
    Int di = (i < static_cast<int>(d.size())) ? d[i] : Int(0);
    if (di == 1) continue;
    if (di != 2) throw Error("h1_gamma: quotient is not an elementary 2-group");
    h.slots_.push_back(i);
    h.basis_lifts_.push_back(basis.apply(qs.Uinv.column(i)));
  }
  h.quotient_snf_ = std::move(qs);
  h.dimension_ = static_cast<int>(h.slots_.size());
  return h;
}

std::vector<int> F2Space::reduce(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw ValidationError("F2Space::reduce: size mismatch");
  if (!parent_.is_zero_element(norm_.apply(v)))
    throw ValidationError("F2Space::reduce: element is not killed by the norm");
  auto c = solve_linear(kernel_basis_snf_, v);
  if (!c) throw Error("F2Space::reduce: norm kernel element outside kernel lattice");
  IntVec y = quotient_snf_.U.apply(*c);
  std::vector<int> bits(dimension_);
  for (int i = 0; i < dimension_; ++i) bits[i] = is_odd(y[slots_[i]]) ? 1 : 0;
  return bits;
}

std::vector<std::vector<int>> h1_functorial(const GammaModule& from, const GammaModule& to,
                                            const IntegerMatrix& f, const F2Space& h_from,
                                            const F2Space& h_to) {
  if (!from.group.matrix_maps_relations_into(f, to.group))
    throw ValidationError("h1_functorial: f is not a well-defined homomorphism");
  IntegerMatrix comm = f * from.sigma - to.sigma * f;
  for (int j = 0; j < comm.cols(); ++j)
    if (!to.group.is_zero_element(comm.column(j)))
      throw ValidationError("h1_functorial: f does not commute with sigma");
  std::vector<std::vector<int>> cols;
  cols.reserve(h_from.basis_lifts().size());
  for (const IntVec& lift : h_from.basis_lifts()) cols.push_back(h_to.reduce(f.apply(lift)));
  return cols;  // cols[j] is the image of basis vector j
}

std::vector<int> class_of_two_torsion_point(const F2Space& h1_of_m, const IntegerMatrix& p,
                                            const IntegerMatrix& sigma_t, const IntVec& mu) {
  if (static_cast<int>(mu.size()) != sigma_t.rows())
    throw ValidationError("class_of_two_torsion_point: cocharacter size mismatch");
  IntVec norm_mu = vec_add(mu, sigma_t.transpose().apply(mu));
  for (const Int& x : norm_mu)
    if (is_odd(x))
      throw ValidationError("class_of_two_torsion_point: mu(-1) is not a cocycle");
  std::vector<int> bits;
  bits.reserve(h1_of_m.basis_lifts().size());
  for (const IntVec& chi : h1_of_m.basis_lifts())
    bits.push_back(is_odd(dot(p.apply(chi), mu)) ? 1 : 0);
  return bits;
}

}  // namespace galcoh
