#include "kc/chains.hpp"

#include <sstream>

namespace kc {

std::string HomologyReport::str() const {
  std::ostringstream os;
  os << "[" << ring << "]";
  if (degrees.empty()) os << " 0";
  for (const auto& [r, h] : degrees) {
    os << " H" << r << "=";
    bool first = true;
    if (h.free_rank > 0) {
      os << ring << "^" << h.free_rank;
      first = false;
    }
    for (const auto& t : h.torsion) {
      os << (first ? "" : "+") << ring << "/(" << t << ")";
      first = false;
    }
  }
  return os.str();
}

std::string LevelHomology::str() const {
  std::ostringstream os;
  if (Z) os << Z->str() << " ";
  if (Q) os << Q->str() << " ";
  if (QZ) os << QZ->str();
  return os.str();
}

}  // namespace kc
