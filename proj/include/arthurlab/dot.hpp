#pragma once

#include <string>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/orders.hpp"

namespace arthurlab {

// Graphviz rendering of the order restricted to `list`: one node per index,
// cover relations as edges pointing at the greater element. Edges of the
// operator order carry the single raising move realizing them when one
// exists.
std::string poset_dot(const std::vector<LocalArthurParameter>& list,
                      OrderKind kind);

}  // namespace arthurlab
