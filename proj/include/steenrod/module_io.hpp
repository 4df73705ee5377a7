/*
   Copyright 2026 The steenrod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* Module-definition files. Schema (see docs/module-format.md):

   {
     "name": "rp3",
     "top_degree": 3,
     "unit": true,
     "generators": [ {"id": "t", "degree": 1}, ... ],
     "sq": { "t": { "1": ["t^2"] }, ... },
     "products": [ {"left": "t", "right": "t", "sum": ["t^2"]}, ... ]
   }

   "products" is optional; when absent the cup products are unknown and the
   product axioms are not checked. */

#ifndef STEENROD_MODULE_IO_HPP
#define STEENROD_MODULE_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "module.hpp"

namespace steenrod {

class ModuleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::ordered_json ids_json(const GradedModule& M, const ModuleElement& x) {
  auto arr = nlohmann::ordered_json::array();
  for (auto g : x) arr.push_back(M.id_of(g));
  return arr;
}

inline ModuleElement ids_element(const GradedModule& M, const nlohmann::json& arr, const std::string& where) {
  if (!arr.is_array()) throw ModuleFormatError(where + ": expected an array of generator ids");
  ModuleElement x;
  for (const auto& v : arr) {
    if (!v.is_string()) throw ModuleFormatError(where + ": generator ids must be strings");
    const auto g = M.find(v.get<std::string>());
    if (!g) throw ModuleFormatError(where + ": unknown generator '" + v.get<std::string>() + "'");
    x.toggle(*g);
  }
  return x;
}

}  // namespace detail

inline nlohmann::ordered_json module_to_json(const GradedModule& M) {
  nlohmann::ordered_json j;
  j["name"] = M.name();
  j["top_degree"] = M.top_degree();
  j["unit"] = M.has_unit();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : M.generators()) gens.push_back({{"id", g.id}, {"degree", g.degree}});
  j["generators"] = gens;

  auto sq = nlohmann::ordered_json::object();
  for (const auto& [key, value] : M.sq_table())
    sq[M.id_of(key.first)][std::to_string(key.second)] = detail::ids_json(M, value);
  j["sq"] = sq;

  if (M.has_products()) {
    auto prods = nlohmann::ordered_json::array();
    for (const auto& [key, value] : M.product_table())
      prods.push_back({{"left", M.id_of(key.first)},
                       {"right", M.id_of(key.second)},
                       {"sum", detail::ids_json(M, value)}});
    j["products"] = prods;
  }
  return j;
}

inline GradedModule module_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ModuleFormatError("module definition must be a JSON object");
    for (const char* key : {"name", "top_degree", "generators"})
      if (!j.contains(key)) throw ModuleFormatError(std::string("missing field '") + key + "'");
    GradedModule M(j.at("name").get<std::string>(), j.at("top_degree").get<std::uint32_t>(),
                   j.value("unit", true));
    for (const auto& g : j.at("generators")) {
      if (!g.is_object() || !g.contains("id") || !g.contains("degree"))
        throw ModuleFormatError("generators: each entry needs 'id' and 'degree'");
      M.add_generator(g.at("id").get<std::string>(), g.at("degree").get<std::uint32_t>());
    }
    if (j.contains("sq")) {
      for (const auto& [id, by_exp] : j.at("sq").items()) {
        const auto g = M.find(id);
        if (!g) throw ModuleFormatError("sq: unknown generator '" + id + "'");
        for (const auto& [exp, sum] : by_exp.items()) {
          std::size_t used = 0;
          unsigned long i = 0;
          try {
            i = std::stoul(exp, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != exp.size() || i == 0)
            throw ModuleFormatError("sq." + id + ": exponent '" + exp + "' must be a positive integer");
          M.set_sq(*g, static_cast<std::uint32_t>(i), detail::ids_element(M, sum, "sq." + id + "." + exp));
        }
      }
    }
    if (j.contains("products")) {
      M.set_has_products(true);
      for (const auto& p : j.at("products")) {
        const auto l = M.find(p.at("left").get<std::string>());
        const auto r = M.find(p.at("right").get<std::string>());
        if (!l || !r) throw ModuleFormatError("products: unknown generator");
        M.set_product(*l, *r, detail::ids_element(M, p.at("sum"), "products"));
      }
    }
    return M;
  } catch (const nlohmann::json::exception& e) {
    throw ModuleFormatError(std::string("malformed module definition: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ModuleFormatError(e.what());
  }
}

inline std::string write_module(const GradedModule& M) { return module_to_json(M).dump(2) + "\n"; }

inline GradedModule read_module(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModuleFormatError(std::string("module definition is not valid JSON: ") + e.what());
  }
  return module_from_json(j);
}

inline GradedModule load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModuleFormatError("cannot open module file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_module(ss.str());
}

}  // namespace steenrod

#endif  // STEENROD_MODULE_IO_HPP
