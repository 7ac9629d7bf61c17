#include "arthurlab/labels.hpp"

#include "arthurlab/errors.hpp"

namespace arthurlab {

char selfdual_type_char(SelfdualType t) {
  return t == SelfdualType::Orthogonal ? 'O' : 'S';
}

SupercuspidalLabel SupercuspidalLabel::dual() const {
  if (self_dual()) return *this;
  SupercuspidalLabel d = *this;
  d.name = dual_name;
  d.dual_name = name;
  return d;
}

SupercuspidalLabel trivial_label() {
  return SupercuspidalLabel{"tr", 1, SelfdualType::Orthogonal, ""};
}

int GroupSpec::matrix_size() const {
  return family == GroupFamily::Sp ? 2 * rank : 2 * rank + 1;
}

int GroupSpec::dual_dim() const {
  return family == GroupFamily::Sp ? 2 * rank + 1 : 2 * rank;
}

std::string GroupSpec::str() const {
  return (family == GroupFamily::Sp ? std::string("Sp:") : std::string("SO:")) +
         std::to_string(matrix_size());
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError(0, "group of the form Sp:<even> or SO:<odd>");
  std::string fam = text.substr(0, colon);
  int size = 0;
  try {
    size_t used = 0;
    size = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trail");
  } catch (const std::exception&) {
    throw ParseError(colon + 1, "matrix size");
  }
  if (size < 0) throw ParseError(colon + 1, "nonnegative matrix size");
  if (fam == "Sp") {
    if (size % 2 != 0) throw ParseError(colon + 1, "even matrix size for Sp");
    return GroupSpec{GroupFamily::Sp, size / 2};
  }
  if (fam == "SO") {
    if (size % 2 != 1) throw ParseError(colon + 1, "odd matrix size for SO");
    return GroupSpec{GroupFamily::SOOdd, (size - 1) / 2};
  }
  throw ParseError(0, "family Sp or SO");
}

GroupSpec GroupSpec::for_dual_dim(GroupFamily family, int n) {
  if (family == GroupFamily::Sp) {
    if (n < 1 || n % 2 != 1)
      fail(Errc::TotalMismatch,
           "Sp needs an odd dual dimension, got " + std::to_string(n));
    return GroupSpec{GroupFamily::Sp, (n - 1) / 2};
  }
  if (n < 0 || n % 2 != 0)
    fail(Errc::TotalMismatch,
         "SO needs an even dual dimension, got " + std::to_string(n));
  return GroupSpec{GroupFamily::SOOdd, n / 2};
}

}  // namespace arthurlab
