#pragma once

// Hand-built symbolic values for oracles.

#include "gtq/multirat.hpp"

namespace sym {

inline gtq::MultiRat var(int row, int col) { return gtq::MultiRat::variable(gtq::var_index(row, col)); }
inline gtq::MultiRat t() { return gtq::MultiRat::variable(gtq::kTVar); }
inline gtq::MultiRat c(long v) { return gtq::MultiRat::constant(v); }
inline gtq::MultiRat i() { return gtq::MultiRat::imaginary_unit(); }
inline gtq::MultiRat q() { return t() * t(); }
// q - 1/q
inline gtq::MultiRat qdiff() { return q() - q().inverse(); }
// (z - 1/z)/(q - 1/q)
inline gtq::MultiRat bracket(const gtq::MultiRat &z) { return (z - z.inverse()) / qdiff(); }

}  // namespace sym
