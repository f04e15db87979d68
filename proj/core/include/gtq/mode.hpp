#pragma once

#include <string>
#include <string_view>

namespace gtq {

// quantum: q-numbers live in Q(t), t = q^(1/2).  classical: [a] is replaced by a.
enum class Mode { quantum, classical };

Mode parse_mode(std::string_view s);
std::string to_string(Mode m);

}  // namespace gtq
