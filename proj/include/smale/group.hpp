#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smale/matrix.hpp"

namespace smale {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators of a free group.
class GroupWord {
 public:
  GroupWord() = default;
  /// Exponents must be ±1; the word is freely reduced on construction.
  explicit GroupWord(const std::vector<Letter>& letters);
  /// generator^power
  static GroupWord power(int generator, int power);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  GroupWord inverse() const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// <generators | relators>, each relator meaning "relator = 1".
class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> generators, std::vector<GroupWord> relators);

  /// Parses `<x, y | x y x = y x y>`. Letters are whitespace separated (or
  /// run together when every generator name is one character); inverses are
  /// written `x'` or `x^-1`, powers `x^3`, and parenthesised groups may be
  /// raised to powers. An equation u = v is stored as the relator u v^-1.
  static GroupPresentation parse(std::string_view text);

  int generator_count() const noexcept { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<GroupWord>& relators() const noexcept { return relators_; }
  /// std::invalid_argument for an unknown name.
  int index_of(std::string_view name) const;

  std::string word_to_string(const GroupWord& w) const;
  std::string to_string() const;

 private:
  std::vector<std::string> generators_;
  std::vector<GroupWord> relators_;
};

/// Homomorphism onto the infinite cyclic group <t>: generator i maps to
/// t^exponents[i].
class AbelianizationMap {
 public:
  explicit AbelianizationMap(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {}

  const std::vector<Integer>& exponents() const noexcept { return exponents_; }
  int generator_count() const noexcept { return static_cast<int>(exponents_.size()); }
  Integer exponent_of(int generator) const;
  /// Exponent of t in the image of w.
  Integer exponent_sum(const GroupWord& w) const;
  LaurentPoly image(const GroupWord& w) const;

  friend bool operator==(const AbelianizationMap&, const AbelianizationMap&) = default;

 private:
  std::vector<Integer> exponents_;
};

/// std::domain_error unless `phi` covers every generator and kills every relator.
void check_abelianization(const GroupPresentation& p, const AbelianizationMap& phi);

/// The surjection onto Z when H_1 of the presentation is infinite cyclic,
/// sign-normalized so the first nonzero exponent is positive. Throws
/// std::domain_error when H_1 is not Z.
AbelianizationMap solve_abelianization(const GroupPresentation& p);

/// Fox derivative dw/d(generator), pushed through phi.
LaurentPoly fox_derivative(const GroupWord& w, int generator, const AbelianizationMap& phi);

/// Rows: relators; columns: generators; entry phi(d r_i / d x_j).
LaurentMatrix alexander_matrix(const GroupPresentation& p, const AbelianizationMap& phi);

/// Alexander polynomial of a deficiency-one presentation: the minor with
/// column j deleted, times (t - 1) / (phi(x_j) - 1). Defaults to the first
/// column whose generator has nonzero image. The result is unnormalized;
/// compare with equal_up_to_units.
LaurentPoly alexander_from_presentation(const GroupPresentation& p, const AbelianizationMap& phi,
                                        std::optional<int> deleted_column = std::nullopt);
/// Uses solve_abelianization for phi.
LaurentPoly alexander_from_presentation(const GroupPresentation& p);

enum class UnknotVerdict { NotUnknot, Inconclusive };

/// A knot whose Alexander polynomial is not a unit cannot have infinite
/// cyclic group, so it is knotted. A trivial polynomial proves nothing.
UnknotVerdict unknot_certificate(const GroupPresentation& p, const AbelianizationMap& phi);

std::string to_string(UnknotVerdict v);

/// <x, y | x y x = y x y>, the trefoil group.
GroupPresentation trefoil_presentation();
/// <r, y | y^-1 r^p y^-1 = r^p y^-1 r^p>: van Kampen's presentation for a
/// Lorenz saddle neighbourhood glued to the repeller's solid torus.
GroupPresentation lorenz_repeller_presentation(int p);
/// <x, y | x^p y x^p = y x^p y>.
GroupPresentation lorenz_band_presentation(int p);

}  // namespace smale
