#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rbhopf/group.hpp"
#include "rbhopf/group_algebra.hpp"
#include "rbhopf/lie.hpp"
#include "rbhopf/rb_operator.hpp"

namespace rbhopf {

/// Malformed input file or JSON structure; distinct from failed mathematical
/// validation so callers can report parse errors separately.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

/// { "basis": ["x","h","y"], "brackets": [ {"left":"h","right":"x","value":{"x":"2"}}, ... ] }
LieAlgebra lie_from_json(const nlohmann::json& j);
nlohmann::json lie_to_json(const LieAlgebra& l);

/// { "convention": "columns", "matrix": [["0","0","0"],["0","-1/2","0"],["0","0","-1"]] }
/// Column k is the image of basis vector e_k.
LieOperator lie_operator_from_json(const nlohmann::json& j, const LieAlgebra& l);
nlohmann::json lie_operator_to_json(const LieOperator& r);

/// { "order": 6, "cayley": [[0,1,...],...], "names": ["e","(12)",...] }
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

/// { "image": [0,0,2,...] }
GroupMap group_map_from_json(const nlohmann::json& j, const FiniteGroup& g);
nlohmann::json group_map_to_json(const GroupMap& m);

/// { "carrier": "group:S3", "action": { "0": {"0":"1"}, ... } } with
/// element indices as keys and rational coefficient strings as values.
RBOperator<int> tabulated_operator_from_json(const nlohmann::json& j, const GroupAlgebra& h);
nlohmann::json tabulated_operator_to_json(const GroupAlgebra& h, const RBOperator<int>& b,
                                          const std::string& carrier);

/// { "count": N, "operators": [ {"image": [...]}, ... ] }
nlohmann::json enumeration_to_json(const std::vector<GroupMap>& ops);

}  // namespace rbhopf
