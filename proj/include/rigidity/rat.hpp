#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rigidity {

// Rationals are GMP mpq_class values, always canonical (lowest terms,
// positive denominator). Serialized form is "num/den", or "num" when den = 1.

inline mpq_class rat_parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::runtime_error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace rigidity
