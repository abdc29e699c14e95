#include "galcoh/json_io.hpp"

namespace galcoh {

namespace {

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw ValidationError("json: matrix entry out of range");
  return x.get_si();
}

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(to_long(x));
  return a;
}

IntVec vec_from_json(const Json& j, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    throw ValidationError("json: expected an integer array of length " + std::to_string(size));
  IntVec v;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw ValidationError("json: expected an integer entry");
    v.push_back(Int(x.get<long>()));
  }
  return v;
}

// Recover sigma_T from sigma_M through p (the schema does not carry it).
IntegerMatrix induce_sigma_t(const IntegerMatrix& p, const IntegerMatrix& sigma_m) {
  SmithForm s = smith_normal_form(p);
  IntegerMatrix dplus(p.cols(), p.rows());
  for (int i = 0; i < p.rows(); ++i) {
    if (i >= std::min(p.rows(), p.cols()) || s.D.at(i, i) != 1)
      throw ValidationError("json: p is not surjective");
    dplus.at(i, i) = 1;
  }
  return p * sigma_m * (s.V * dplus * s.U);
}

}  // namespace

Json matrix_to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

IntegerMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ValidationError("json: expected a matrix with " + std::to_string(rows) + " rows");
  std::vector<IntVec> r;
  for (const Json& row : j) r.push_back(vec_from_json(row, cols));
  return IntegerMatrix::from_rows(r, cols);
}

Json descriptor_to_json(const QuasiConnectedDescriptor& desc) {
  Json j;
  j["name"] = desc.name;
  if (desc.rd.cartan_label)
    j["cartan"] = *desc.rd.cartan_label;
  else
    j["cartan"] = nullptr;
  Json roots = Json::array(), coroots = Json::array();
  for (const IntVec& v : desc.rd.simple_roots) roots.push_back(vec_to_json(v));
  for (const IntVec& v : desc.rd.simple_coroots) coroots.push_back(vec_to_json(v));
  j["simple_roots"] = roots;
  j["simple_coroots"] = coroots;
  j["M"] = Json{{"ambient_rank", desc.M.group.ambient_rank()},
                {"relations", matrix_to_json(desc.M.group.relations())}};
  j["sigma_M"] = matrix_to_json(desc.M.sigma);
  j["p"] = matrix_to_json(desc.p);
  Json lifts = Json::array();
  for (const IntVec& v : desc.root_lifts) lifts.push_back(vec_to_json(v));
  j["root_lifts"] = lifts;
  Json fam;
  fam["kind"] = family_kind_name(desc.family.kind);
  if (desc.family.kind == FamilyKind::Inner) fam["z"] = desc.family.z;
  if (desc.family.kind == FamilyKind::Custom) {
    Json gens = Json::array();
    for (const IntegerMatrix& g : desc.family.w0_gens) gens.push_back(matrix_to_json(g));
    fam["w0_gens"] = gens;
    fam["delta"] = desc.family.delta;
  }
  j["family"] = fam;
  return j;
}

QuasiConnectedDescriptor descriptor_from_json(const Json& j) {
  QuasiConnectedDescriptor d;
  if (!j.is_object()) throw ValidationError("json: descriptor must be an object");
  d.name = j.at("name").get<std::string>();
  if (j.contains("cartan") && !j.at("cartan").is_null())
    d.rd.cartan_label = j.at("cartan").get<std::string>();

  const Json& m = j.at("M");
  int nm = m.at("ambient_rank").get<int>();
  if (nm < 0) throw ValidationError("json: negative ambient rank");
  const Json& rel = m.at("relations");
  int nrel = rel.is_array() && !rel.empty() && rel[0].is_array()
                 ? static_cast<int>(rel[0].size())
                 : 0;
  d.M.group = FgAbGroup(nm, matrix_from_json(rel, nm, nrel));
  d.M.sigma = matrix_from_json(j.at("sigma_M"), nm, nm);

  const Json& pj = j.at("p");
  int nt = static_cast<int>(pj.size());
  d.p = matrix_from_json(pj, nt, nm);
  d.rd.rank = nt;
  for (const Json& v : j.at("simple_roots")) d.rd.simple_roots.push_back(vec_from_json(v, nt));
  for (const Json& v : j.at("simple_coroots"))
    d.rd.simple_coroots.push_back(vec_from_json(v, nt));
  for (const Json& v : j.at("root_lifts")) d.root_lifts.push_back(vec_from_json(v, nm));
  d.sigma_T = induce_sigma_t(d.p, d.M.sigma);

  const Json& fam = j.at("family");
  std::string kind = fam.at("kind").get<std::string>();
  if (kind == "compact") {
    d.family.kind = FamilyKind::Compact;
  } else if (kind == "inner") {
    d.family.kind = FamilyKind::Inner;
    d.family.z = fam.at("z").get<std::vector<int>>();
  } else if (kind == "custom") {
    d.family.kind = FamilyKind::Custom;
    for (const Json& g : fam.at("w0_gens"))
      d.family.w0_gens.push_back(matrix_from_json(g, nm, nm));
    d.family.delta = fam.at("delta").get<std::vector<std::vector<int>>>();
  } else {
    throw ValidationError("json: unknown family kind " + kind);
  }
  return d;
}

Json report_to_json(const H1Report& rep) {
  Json j;
  j["group"] = rep.group;
  j["dim_h1_q"] = rep.dim_h1_q;
  j["w0_order"] = rep.w0_order;
  j["orbit_count"] = rep.orbits.orbit_count();
  Json orbits = Json::array();
  for (const Orbit& o : rep.orbits.orbits)
    orbits.push_back(Json{{"rep", o.rep}, {"size", o.size}});
  j["orbits"] = orbits;
  j["family"] = rep.family;
  j["validated"] = rep.validated;
  return j;
}

}  // namespace galcoh
