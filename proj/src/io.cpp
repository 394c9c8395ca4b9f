#include "nervelab/io.hpp"

#include <fstream>
#include <limits>

#include "nervelab/subdivision.hpp"

namespace nervelab {

namespace {

Label label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error("vertex label must be a string or an integer, got " + j.dump());
}

std::vector<std::vector<Label>> facets_from_json(const Json& j) {
  if (!j.is_array()) throw Error("facets must be an array of arrays");
  std::vector<std::vector<Label>> out;
  for (const Json& f : j) {
    if (!f.is_array() || f.empty()) throw Error("each facet must be a nonempty array");
    std::vector<Label> labels;
    for (const Json& v : f) {
      labels.push_back(label_from_json(v));
      validate_label(labels.back());
    }
    out.push_back(std::move(labels));
  }
  return out;
}

Json facets_to_json(const SimplicialComplex& k) {
  Json out = Json::array();
  for (const Simplex& s : k.facets()) out.push_back(s);
  return out;
}

}  // namespace

void validate_label(const std::string& label) {
  if (label.empty()) throw Error("empty vertex label");
  if (label.find_first_of("[],") == std::string::npos) return;
  try {
    const Simplex parts = parse_face_label(label);
    for (const Label& p : parts) validate_label(p);
  } catch (const Error&) {
    throw Error("malformed vertex label '" + label + "'");
  }
}

Json complex_to_json(const SimplicialComplex& k) {
  Json out;
  out["name"] = k.name();
  out["facets"] = facets_to_json(k);
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("facets")) throw Error("complex JSON needs a \"facets\" array");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error("complex name must be a string");
    name = j["name"].get<std::string>();
  }
  return SimplicialComplex::from_facets(facets_from_json(j["facets"]), std::move(name));
}

Json cover_to_json(const SubcomplexCover& c) {
  Json out;
  out["ambient"] = complex_to_json(c.ambient());
  Json members = Json::object();
  for (std::size_t i = 0; i < c.size(); ++i) members[c.indices()[i]] = facets_to_json(c.members()[i]);
  out["members"] = std::move(members);
  return out;
}

SubcomplexCover cover_from_json(const Json& j, bool drop_empty) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("members"))
    throw Error("cover JSON needs \"ambient\" and \"members\"");
  SimplicialComplex ambient = complex_from_json(j["ambient"]);
  if (!j["members"].is_object()) throw Error("cover members must be an object");
  std::map<std::string, SimplicialComplex> members;
  for (const auto& [index, facets] : j["members"].items()) {
    if (index.empty()) throw Error("empty cover index");
    members.emplace(index, SimplicialComplex::from_facets(facets_from_json(facets), index));
  }
  return SubcomplexCover(std::move(ambient), std::move(members), drop_empty);
}

Json group_to_json(const HomologyGroup& g) {
  Json out;
  out["betti"] = g.betti;
  Json torsion = Json::array();
  for (const BigInt& t : g.torsion) {
    if (t <= BigInt(std::numeric_limits<long long>::max()))
      torsion.push_back(static_cast<long long>(t));
    else
      torsion.push_back(t.str());
  }
  out["torsion"] = std::move(torsion);
  return out;
}

Json homology_to_json(const HomologyGroups& h) {
  Json out;
  out["ring"] = h.modulus == 0 ? std::string("Z") : "Z/" + std::to_string(h.modulus);
  out["reduced"] = h.reduced;
  Json groups = Json::array();
  for (const HomologyGroup& g : h.groups) groups.push_back(group_to_json(g));
  out["groups"] = std::move(groups);
  return out;
}

Json presentation_to_json(const GroupPresentation& p) {
  Json out;
  out["generators"] = p.generators;
  Json rels = Json::array();
  for (const Word& w : p.relators) rels.push_back(w);
  out["relators"] = std::move(rels);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

SimplicialComplex read_complex_file(const std::filesystem::path& path) {
  return complex_from_json(read_json_file(path));
}

SubcomplexCover read_cover_file(const std::filesystem::path& path, bool drop_empty) {
  return cover_from_json(read_json_file(path), drop_empty);
}

}  // namespace nervelab
