#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "derham/simplicial.hpp"

namespace derham::driver {

struct NamedComplex {
  std::string name;
  simplicial::SimplicialComplex complex;
};

// The built-in desk-scale corpus, in a fixed order.
const std::vector<NamedComplex>& builtin_corpus();
const NamedComplex* find_builtin(const std::string& name);

// JSON interchange: {"name": ..., "vertices": [...], "maximal_simplices": [[...], ...]}.
NamedComplex complex_from_json(const nlohmann::json& j);
nlohmann::ordered_json complex_to_json(const NamedComplex& c);
NamedComplex load_complex(const std::string& path_or_builtin);

}  // namespace derham::driver
