#include "wildbraid/poly.hpp"

#include <sstream>

namespace wildbraid {

std::string mpoly_to_string(const MPoly& p, const std::string& varname) {
  if (p.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    Rat a = abs(c);
    bool unit = cmp(a, Rat(1)) == 0;
    bool has_var = false;
    for (int x : e) has_var |= x > 0;
    if (!unit || !has_var) out << a.get_str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << varname << i + 1;
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

std::string MPolyRing::str(const Elem& a) const { return mpoly_to_string(a); }

}  // namespace wildbraid
