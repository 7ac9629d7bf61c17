#pragma once

#include <compare>
#include <string>

namespace arthurlab {

enum class SelfdualType { Orthogonal, Symplectic };

char selfdual_type_char(SelfdualType t);  // 'O' / 'S'

// Opaque tag for an irreducible unitary supercuspidal of some GL_d(F).
// `type` records the (conjectural) self-dual type used by the parity rules.
// A non-empty `dual_name` marks a non-self-dual label whose dual carries that
// name; such labels never contribute parity constraints.
struct SupercuspidalLabel {
  std::string name;
  int dim = 1;
  SelfdualType type = SelfdualType::Orthogonal;
  std::string dual_name;

  bool self_dual() const { return dual_name.empty(); }
  SupercuspidalLabel dual() const;

  auto operator<=>(const SupercuspidalLabel&) const = default;
};

// Common shorthand: the trivial character of GL_1 ("tr", dim 1, orthogonal).
SupercuspidalLabel trivial_label();

enum class GroupFamily { Sp, SOOdd };

// Matrix-size presentation: "Sp:10" is Sp(10) (rank 5, dual dimension 11),
// "SO:9" is SO(9) (rank 4, dual dimension 8).
struct GroupSpec {
  GroupFamily family = GroupFamily::Sp;
  int rank = 0;

  int matrix_size() const;
  // Dimension of the dual-side standard representation: parameters for this
  // group must have summand dimensions totalling exactly this value.
  int dual_dim() const;

  std::string str() const;
  static GroupSpec parse(const std::string& text);
  // Group of the family whose dual dimension equals n; throws TotalMismatch
  // when the parity of n does not fit the family.
  static GroupSpec for_dual_dim(GroupFamily family, int n);

  auto operator<=>(const GroupSpec&) const = default;
};

}  // namespace arthurlab
