#include "adlv/json_io.hpp"

namespace adlv {

Json vec_to_json(const IVec& v)
{
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

IVec vec_from_json(const Json& j)
{
  IVec v;
  for (auto& x : j) v.push_back(x.get<int>());
  return v;
}

Json gallery_to_json(const RootSystem& R, const Gallery& g)
{
  Json j;
  j["first"] = format_element(R, g.first);
  Json steps = Json::array();
  for (auto& s : g.steps) {
    Json st;
    st["gen"] = s.gen;
    st["kind"] = s.kind == StepKind::Fold ? "F" : "C";
    steps.push_back(st);
  }
  j["steps"] = steps;
  j["vertex_marked"] = g.vertex_marked;
  return j;
}

Gallery gallery_from_json(const RootSystem& R, const Json& j)
{
  if (!j.is_object() || !j.contains("first") || !j.contains("steps")) throw Error("malformed gallery JSON");
  Gallery g;
  g.first = parse_element(R, j.at("first").get<std::string>());
  for (auto& st : j.at("steps")) {
    int gen = st.at("gen").get<int>();
    if (gen < 0 || gen > R.rank) throw Error("gallery step generator out of range");
    std::string k = st.at("kind").get<std::string>();
    if (k != "C" && k != "F") throw Error("gallery step kind must be C or F");
    g.steps.push_back({gen, k == "F" ? StepKind::Fold : StepKind::Cross});
  }
  g.vertex_marked = j.value("vertex_marked", false);
  return g;
}

Json dimstats_to_json(const DimStats& d)
{
  Json j;
  j["P"] = d.P;
  j["N"] = d.N;
  j["F"] = d.F;
  j["C"] = d.C;
  j["dim"] = d.dim;
  return j;
}

Json answer_to_json(const RootSystem& R, const AffineElement& x, const AdlvAnswer& a)
{
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = R.label;
  j["x"] = format_element(R, x);
  j["length"] = affine_length(R, x);
  j["b"] = vec_to_json(a.b.mu);
  j["newton"] = vec_to_json(a.b.mu_plus);
  j["correction"] = a.b.correction;
  j["nonempty"] = a.nonempty;
  j["dim"] = a.dim ? Json(*a.dim) : Json(nullptr);
  j["exhaustive"] = a.exhaustive;
  j["branches"] = a.branches;
  if (a.witness) {
    j["orientation"] = format_element(R, finite_part(R, a.orientation->w));
    j["target"] = format_element(R, *a.target);
    j["witness_raw_dim"] = a.witness_raw_dim;
    j["witness"] = gallery_to_json(R, *a.witness);
  }
  Json per = Json::array();
  for (auto& r : a.per_orientation) {
    Json o;
    o["w"] = format_element(R, finite_part(R, r.w));
    o["orientation"] = format_element(R, finite_part(R, r.orientation.w));
    o["found"] = r.found;
    if (r.found) {
      o["raw_dim"] = r.raw_dim;
      o["folds"] = r.folds;
      o["maximal_count"] = r.maximal_count;
    }
    per.push_back(o);
  }
  j["per_orientation"] = per;
  return j;
}

AdlvAnswer answer_from_json(const RootSystem& R, const Json& j)
{
  AdlvAnswer a;
  a.b = translation_class(R, vec_from_json(j.at("b")));
  a.nonempty = j.at("nonempty").get<bool>();
  if (!j.at("dim").is_null()) a.dim = j.at("dim").get<int>();
  a.exhaustive = j.value("exhaustive", true);
  a.branches = j.value("branches", 0LL);
  if (j.contains("witness")) {
    a.orientation = Orientation{parse_element(R, j.at("orientation").get<std::string>()).w};
    a.target = parse_element(R, j.at("target").get<std::string>());
    a.witness = gallery_from_json(R, j.at("witness"));
    a.witness_raw_dim = j.at("witness_raw_dim").get<int>();
  }
  return a;
}

}  // namespace adlv
