#include "gtq/relations.hpp"

namespace gtq {

std::vector<Relation> defining_relations(int n) {
  std::vector<Relation> out;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      out.push_back({"commute(" + std::to_string(i) + "," + std::to_string(j) + ")", {{1, false, {i, j}}, {-1, false, {j, i}}}});
  for (int i = 2; i + 1 <= n; ++i) {
    int x = i + 1, y = i;
    // X^2 Y - [2] X Y X + Y X^2 + Y
    out.push_back({"cubic-high(" + std::to_string(i) + ")",
                   {{1, false, {x, x, y}}, {-1, true, {x, y, x}}, {1, false, {y, x, x}}, {1, false, {y}}}});
    // Y^2 X - [2] Y X Y + X Y^2 + X
    out.push_back({"cubic-low(" + std::to_string(i) + ")",
                   {{1, false, {y, y, x}}, {-1, true, {y, x, y}}, {1, false, {x, y, y}}, {1, false, {x}}}});
  }
  return out;
}

}  // namespace gtq
