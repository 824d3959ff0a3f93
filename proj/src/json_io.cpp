#include "rbhopf/json_io.hpp"

#include <fstream>

namespace rbhopf {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

Rational rational_field(const nlohmann::json& j) {
  if (!j.is_string()) throw ParseError("rationals must be strings like \"-1/2\"");
  try {
    return Rational::from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
}

}  // namespace

LieAlgebra lie_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("Lie algebra spec must be an object");
  std::vector<std::string> names;
  for (const auto& n : field(j, "basis")) {
    if (!n.is_string()) throw ParseError("basis entries must be strings");
    names.push_back(n.get<std::string>());
  }
  auto index_of = [&names](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw ParseError("unknown basis name '" + s + "'");
  };
  std::vector<LieAlgebra::BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const auto& e : j["brackets"]) {
      LieAlgebra::BracketEntry entry;
      entry.left = index_of(field(e, "left").get<std::string>());
      entry.right = index_of(field(e, "right").get<std::string>());
      for (const auto& [name, coeff] : field(e, "value").items())
        entry.value.add_term(index_of(name), rational_field(coeff));
      entries.push_back(std::move(entry));
    }
  }
  try {
    return LieAlgebra(std::move(names), entries);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json lie_to_json(const LieAlgebra& l) {
  nlohmann::json out;
  out["basis"] = l.names();
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j) {
      LinComb<int> v = l.bracket(i, j);
      if (v.is_zero()) continue;
      nlohmann::json e;
      e["left"] = l.name(i);
      e["right"] = l.name(j);
      nlohmann::json val = nlohmann::json::object();
      for (const auto& [k, c] : v.sorted_terms()) val[l.name(k)] = c.str();
      e["value"] = std::move(val);
      brackets.push_back(std::move(e));
    }
  out["brackets"] = std::move(brackets);
  return out;
}

LieOperator lie_operator_from_json(const nlohmann::json& j, const LieAlgebra& l) {
  const auto& mat = field(j, "matrix");
  if (j.contains("convention") && j["convention"] != "columns")
    throw ParseError("operator convention must be \"columns\"");
  const int n = l.dim();
  if (static_cast<int>(mat.size()) != n) throw ParseError("operator matrix has wrong row count");
  LieOperator r(n);
  for (int row = 0; row < n; ++row) {
    const auto& jrow = mat[static_cast<std::size_t>(row)];
    if (static_cast<int>(jrow.size()) != n)
      throw ParseError("operator matrix has wrong column count");
    for (int col = 0; col < n; ++col)
      r.set(row, col, rational_field(jrow[static_cast<std::size_t>(col)]));
  }
  return r;
}

nlohmann::json lie_operator_to_json(const LieOperator& r) {
  nlohmann::json out;
  out["convention"] = "columns";
  nlohmann::json mat = nlohmann::json::array();
  for (int row = 0; row < r.dim(); ++row) {
    nlohmann::json jrow = nlohmann::json::array();
    for (int col = 0; col < r.dim(); ++col) jrow.push_back(r.at(row, col).str());
    mat.push_back(std::move(jrow));
  }
  out["matrix"] = std::move(mat);
  return out;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  const auto& jc = field(j, "cayley");
  std::vector<std::vector<int>> cayley;
  for (const auto& row : jc) cayley.push_back(row.get<std::vector<int>>());
  if (j.contains("order") && j["order"].get<std::size_t>() != cayley.size())
    throw ParseError("declared order does not match table size");
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j["names"].get<std::vector<std::string>>();
  } else {
    for (std::size_t i = 0; i < cayley.size(); ++i) names.push_back("g" + std::to_string(i));
  }
  try {
    return FiniteGroup(std::move(cayley), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json out;
  out["order"] = g.order();
  out["cayley"] = g.cayley();
  out["names"] = g.names();
  return out;
}

GroupMap group_map_from_json(const nlohmann::json& j, const FiniteGroup& g) {
  GroupMap m;
  m.image = field(j, "image").get<std::vector<int>>();
  if (static_cast<int>(m.image.size()) != g.order())
    throw ParseError("group map image length does not match group order");
  for (int v : m.image)
    if (v < 0 || v >= g.order()) throw ParseError("group map image out of range");
  return m;
}

nlohmann::json group_map_to_json(const GroupMap& m) {
  nlohmann::json out;
  out["image"] = m.image;
  return out;
}

RBOperator<int> tabulated_operator_from_json(const nlohmann::json& j, const GroupAlgebra& h) {
  const auto& action = field(j, "action");
  const int n = h.group().order();
  std::vector<LinComb<int>> table(static_cast<std::size_t>(n));
  for (const auto& [key, value] : action.items()) {
    int g = -1;
    try {
      g = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("action keys must be element indices");
    }
    if (g < 0 || g >= n) throw ParseError("action key out of range");
    for (const auto& [lk, coeff] : value.items()) {
      int l = -1;
      try {
        l = std::stoi(lk);
      } catch (const std::exception&) {
        throw ParseError("action value keys must be element indices");
      }
      if (l < 0 || l >= n) throw ParseError("action value key out of range");
      table[static_cast<std::size_t>(g)].add_term(l, rational_field(coeff));
    }
  }
  for (int g = 0; g < n; ++g)
    if (!action.contains(std::to_string(g)))
      throw ParseError("action must cover every basis element");
  return RBOperator<int>(
      [table](const int& g) { return table.at(static_cast<std::size_t>(g)); },
      Provenance::Custom);
}

nlohmann::json tabulated_operator_to_json(const GroupAlgebra& h, const RBOperator<int>& b,
                                          const std::string& carrier) {
  nlohmann::json out;
  out["carrier"] = carrier;
  nlohmann::json action = nlohmann::json::object();
  for (int g : h.basis()) {
    nlohmann::json img = nlohmann::json::object();
    for (const auto& [l, c] : b.apply(g).sorted_terms()) img[std::to_string(l)] = c.str();
    action[std::to_string(g)] = std::move(img);
  }
  out["action"] = std::move(action);
  return out;
}

nlohmann::json enumeration_to_json(const std::vector<GroupMap>& ops) {
  nlohmann::json out;
  out["count"] = ops.size();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : ops) arr.push_back(group_map_to_json(m));
  out["operators"] = std::move(arr);
  return out;
}

}  // namespace rbhopf
