#include "arthurlab/l_param.hpp"

#include <algorithm>

#include "arthurlab/errors.hpp"

namespace arthurlab {

int LocalLParameter::dim() const {
  int n = 0;
  for (const auto& s : summands) n += s.dim();
  return n;
}

void LocalLParameter::canonicalize() {
  std::sort(summands.begin(), summands.end());
}

LocalLParameter make_l_parameter(GroupSpec group, std::vector<LSummand> summands) {
  for (const auto& s : summands)
    if (s.a < 1 || s.rho.dim < 1)
      fail(Errc::InvariantBroken, "summand sizes must be positive");
  LocalLParameter phi{group, std::move(summands)};
  phi.canonicalize();
  return phi;
}

LocalLParameter phi_of(const LocalArthurParameter& psi) {
  std::vector<LSummand> out;
  for (const auto& s : psi.summands)
    for (int t = 0; t < s.b; ++t)
      out.push_back(LSummand{s.rho, HalfInt::halves(s.b - 1 - 2 * t), s.a});
  return make_l_parameter(psi.group, std::move(out));
}

InfinitesimalClass infinitesimal_of(const LocalLParameter& phi) {
  InfinitesimalClass cls;
  for (const auto& s : phi.summands)
    for (int t = 0; t < s.a; ++t)
      cls.exponents[s.rho].push_back(s.x + HalfInt::halves(s.a - 1 - 2 * t));
  for (auto& [rho, xs] : cls.exponents) std::sort(xs.begin(), xs.end());
  return cls;
}

InfinitesimalClass infinitesimal_of(const LocalArthurParameter& psi) {
  return infinitesimal_of(phi_of(psi));
}

std::string InfinitesimalClass::str() const {
  std::string out;
  for (const auto& [rho, xs] : exponents) {
    if (!out.empty()) out += "; ";
    out += rho.name + ": {";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ",";
      out += xs[i].str();
    }
    out += "}";
  }
  return out;
}

}  // namespace arthurlab
