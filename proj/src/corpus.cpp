#include "derham/corpus.hpp"

#include <fstream>
#include <stdexcept>

namespace derham::driver {

using simplicial::SimplicialComplex;

const std::vector<NamedComplex>& builtin_corpus() {
  static const std::vector<NamedComplex> corpus = [] {
    std::vector<NamedComplex> c;
    auto add = [&c](const std::string& name, const std::vector<std::string>& v,
                    const std::vector<std::vector<std::string>>& m) {
      c.push_back({name, SimplicialComplex::from_maximal(v, m)});
    };
    add("point", {"1"}, {{"1"}});
    add("two-points", {"1", "2"}, {{"1"}, {"2"}});
    add("edge", {"1", "2"}, {{"1", "2"}});
    add("triangle", {"1", "2", "3"}, {{"1", "2", "3"}});
    add("boundary-triangle", {"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    add("boundary-tetrahedron", {"1", "2", "3", "4"},
        {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
    add("two-triangles", {"1", "2", "3", "4"}, {{"1", "2", "3"}, {"2", "3", "4"}});
    add("wedge-triangles", {"1", "2", "3", "4", "5"},
        {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "4"}, {"1", "5"}, {"4", "5"}});
    return c;
  }();
  return corpus;
}

const NamedComplex* find_builtin(const std::string& name) {
  for (const auto& c : builtin_corpus())
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Vertex labels may be written as strings or as integers; everything else is
// rejected with a message that names the offending field.
std::string label_of(const nlohmann::json& v, const char* field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string("complex JSON: entries of \"") + field +
                              "\" must be strings or integers");
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* field) {
  if (!j.contains(field))
    throw std::invalid_argument(std::string("complex JSON: missing \"") + field +
                                "\" (expected {\"vertices\": [...], \"maximal_simplices\": [[...], ...]})");
  const nlohmann::json& f = j.at(field);
  if (!f.is_array())
    throw std::invalid_argument(std::string("complex JSON: \"") + field + "\" must be an array");
  return f;
}

}  // namespace

NamedComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("complex JSON must be an object");
  NamedComplex c;
  c.name = j.value("name", std::string("unnamed"));
  std::vector<std::string> vertices;
  for (const auto& v : array_field(j, "vertices")) vertices.push_back(label_of(v, "vertices"));
  std::vector<std::vector<std::string>> maximal;
  for (const auto& s : array_field(j, "maximal_simplices")) {
    if (!s.is_array())
      throw std::invalid_argument("complex JSON: each entry of \"maximal_simplices\" must be an array of vertex labels");
    std::vector<std::string> simplex;
    for (const auto& v : s) simplex.push_back(label_of(v, "maximal_simplices"));
    maximal.push_back(std::move(simplex));
  }
  c.complex = SimplicialComplex::from_maximal(vertices, maximal);
  return c;
}

nlohmann::ordered_json complex_to_json(const NamedComplex& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["vertices"] = c.complex.labels();
  nlohmann::ordered_json maximal = nlohmann::ordered_json::array();
  for (simplicial::VertexSet s : c.complex.maximal_simplices()) {
    nlohmann::ordered_json simplex = nlohmann::ordered_json::array();
    for (int v : simplicial::vertex_list(s)) simplex.push_back(c.complex.label(v));
    maximal.push_back(std::move(simplex));
  }
  j["maximal_simplices"] = std::move(maximal);
  return j;
}

NamedComplex load_complex(const std::string& path_or_builtin) {
  if (const NamedComplex* b = find_builtin(path_or_builtin)) return *b;
  std::ifstream in(path_or_builtin);
  if (!in) throw std::runtime_error("cannot open input: " + path_or_builtin);
  nlohmann::json j;
  in >> j;
  return complex_from_json(j);
}

}  // namespace derham::driver
