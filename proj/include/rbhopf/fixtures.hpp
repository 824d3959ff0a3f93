#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbhopf/group.hpp"
#include "rbhopf/lie.hpp"

namespace rbhopf {

/// sl2 with ordered basis x, h, y and brackets [h,x]=2x, [h,y]=-2y, [x,y]=h.
LieAlgebra sl2();

/// The standard weight-1 operator on sl2: x -> 0, h -> -h/2, y -> -y.
LieOperator sl2_standard_operator();

/// Built-in Cayley-table groups by name: C2..C6, V4, S3, D4, Q8.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// The exact factorization S3 = A3 * <(12)> as index subsets into
/// builtin_group("S3").
std::pair<std::vector<int>, std::vector<int>> s3_factorization();

}  // namespace rbhopf
