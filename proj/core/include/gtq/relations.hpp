#pragma once

#include <string>
#include <vector>

namespace gtq {

// One summand of a defining relation: sign * (1 or [2]) * word.  The word is
// read as written, so it acts on vectors from the right end first.
struct RelationTerm {
  int sign;           // +1 or -1
  bool times_qtwo;    // multiply by [2]
  std::vector<int> word;  // generator indices i of I_{i,i-1}
};

struct Relation {
  std::string id;  // "commute(i,j)", "cubic-high(i)" (I_{i+1,i} squared), "cubic-low(i)"
  std::vector<RelationTerm> terms;
};

// All defining relations among I_{2,1}, ..., I_{n,n-1}; every relation reads "sum = 0".
std::vector<Relation> defining_relations(int n);

}  // namespace gtq
