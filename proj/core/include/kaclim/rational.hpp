#ifndef KACLIM_RATIONAL_HPP
#define KACLIM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace kaclim {

// All arithmetic in the library is exact; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Renders "p/q", or just "p" for integers.
inline std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "p" or "p/q"; the result is canonicalized.
Rat rat_from_string(const std::string& text);

}  // namespace kaclim

#endif
