#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "flagdeg/pluecker.hpp"
#include "flagdeg/symgroup.hpp"
#include "oracles.hpp"

namespace testkit {

inline oracle::Perm to_vec(const flagdeg::Permutation& p) { return {p.images().begin(), p.images().end()}; }
inline flagdeg::Permutation to_perm(const oracle::Perm& p) { return flagdeg::Permutation(p); }

inline oracle::Poly to_poly(const flagdeg::Relation& r) {
  oracle::Poly poly;
  for (const auto& t : r.terms) poly[{t.a, t.b}] += t.coeff;
  return poly;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(FLAGDEG_SOURCE_DIR) + "/tables/" + name); }

}  // namespace testkit
