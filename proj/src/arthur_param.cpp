#include "arthurlab/arthur_param.hpp"

#include <algorithm>
#include <map>

#include "arthurlab/errors.hpp"

namespace arthurlab {

ArthurSummand ArthurSummand::from_AB(const SupercuspidalLabel& rho, HalfInt A,
                                     HalfInt B) {
  HalfInt a = A + B + HalfInt::whole(1);
  HalfInt b = A - B + HalfInt::whole(1);
  if (!a.is_integer() || !b.is_integer() || a.as_int() < 1 || b.as_int() < 1)
    fail(Errc::InvariantBroken, "coordinates (A=" + A.str() + ", B=" + B.str() +
                                    ") do not give a summand");
  return ArthurSummand{rho, a.as_int(), b.as_int()};
}

int LocalArthurParameter::dim() const {
  int n = 0;
  for (const auto& s : summands) n += s.dim();
  return n;
}

void LocalArthurParameter::canonicalize() {
  std::sort(summands.begin(), summands.end());
}

LocalArthurParameter make_parameter(GroupSpec group,
                                    std::vector<ArthurSummand> summands) {
  for (const auto& s : summands)
    if (s.a < 1 || s.b < 1 || s.rho.dim < 1)
      fail(Errc::InvariantBroken, "summand sizes must be positive");
  LocalArthurParameter psi{group, std::move(summands)};
  psi.canonicalize();
  return psi;
}

bool summand_good_parity(GroupFamily family, const ArthurSummand& s) {
  if (!s.rho.self_dual()) return false;
  bool sum_even = (s.a + s.b) % 2 == 0;
  bool rho_orth = s.rho.type == SelfdualType::Orthogonal;
  if (family == GroupFamily::Sp) return rho_orth == sum_even;
  return rho_orth != sum_even;
}

ValidationReport validate_parameter(const LocalArthurParameter& psi) {
  ValidationReport rep;
  rep.dimension_ok = psi.dim() == psi.group.dual_dim();
  if (!rep.dimension_ok)
    rep.notes.push_back("summand dimensions total " + std::to_string(psi.dim()) +
                        ", group needs " + std::to_string(psi.group.dual_dim()));
  rep.all_good_parity = true;
  for (const auto& s : psi.summands) {
    bool good = summand_good_parity(psi.group.family, s);
    rep.summand_good_parity.push_back(good);
    if (!good) rep.all_good_parity = false;
  }
  return rep;
}

GoodParitySplit good_parity_split(const LocalArthurParameter& psi) {
  GoodParitySplit split;
  std::map<ArthurSummand, int> rest;
  for (const auto& s : psi.summands) {
    if (summand_good_parity(psi.group.family, s))
      split.good.push_back(s);
    else
      ++rest[s];
  }
  while (!rest.empty()) {
    auto it = rest.begin();
    ArthurSummand s = it->first;
    ArthurSummand partner{s.rho.dual(), s.a, s.b};
    auto pit = rest.find(partner);
    if (pit == rest.end() || (pit == it && pit->second < 2))
      fail(Errc::UnpairableBadParity, "no dual partner for " + s.rho.name +
                                          " (x) S_" + std::to_string(s.a) +
                                          " (x) S_" + std::to_string(s.b));
    split.paired.push_back(s);
    if (pit == it) {
      it->second -= 2;
    } else {
      --it->second;
      --pit->second;
      if (pit->second == 0) rest.erase(pit);
    }
    if (it->second == 0) rest.erase(it);
  }
  return split;
}

LocalArthurParameter dual_psi(const LocalArthurParameter& psi) {
  LocalArthurParameter out = psi;
  for (auto& s : out.summands) {
    s.rho = s.rho.dual();
    std::swap(s.a, s.b);
  }
  out.canonicalize();
  return out;
}

PartitionPair partitions_of(const LocalArthurParameter& psi) {
  std::vector<int> pa, pd;
  for (const auto& s : psi.summands) {
    for (int k = 0; k < s.rho.dim * s.a; ++k) pa.push_back(s.b);
    for (int k = 0; k < s.rho.dim * s.b; ++k) pd.push_back(s.a);
  }
  return PartitionPair{Partition::of(std::move(pa)), Partition::of(std::move(pd))};
}

LambdaExtremes extremal_parameters_of_lambda(const LocalArthurParameter& psi) {
  std::vector<ArthurSummand> open;
  for (const auto& s : psi.summands) {
    int m = std::min(s.a, s.b);
    for (int k = 0; k < m; ++k)
      open.push_back(ArthurSummand{s.rho, s.a + s.b - 1 - 2 * k, 1});
  }
  LocalArthurParameter open_param = make_parameter(psi.group, std::move(open));
  return LambdaExtremes{open_param, dual_psi(open_param)};
}

}  // namespace arthurlab
