#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smale/matrix.hpp"

namespace smale {

/// Ordered single-character symbol names for the partition elements
/// (strips) of a subshift; symbol i is row/column i of the incidence matrix.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);
  /// "xy" for two strips (the Lorenz template), otherwise "abc...".
  static Alphabet default_for(Eigen::Index size);
  static Alphabet lorenz() { return Alphabet("xy"); }

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_.at(static_cast<std::size_t>(index)); }
  /// Index of `c`; ParseError if it is not a symbol.
  int index_of(char c) const;
  const std::string& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// Periodic orbit of a suspended subshift, stored as its lexicographically
/// least rotation. Construction rejects proper powers.
class OrbitWord {
 public:
  /// Rotates `letters` into canonical form; std::invalid_argument if empty or
  /// not primitive.
  explicit OrbitWord(std::vector<int> letters);
  static OrbitWord parse(std::string_view text, const Alphabet& alphabet = Alphabet::lorenz());

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::string to_string(const Alphabet& alphabet = Alphabet::lorenz()) const;

  friend bool operator==(const OrbitWord&, const OrbitWord&) = default;
  /// Length first, then lexicographic.
  friend bool operator<(const OrbitWord& a, const OrbitWord& b);

 private:
  std::vector<int> letters_;
};

/// True if no proper rotation-period divides the word.
bool is_primitive(const std::vector<int>& letters);
/// Lexicographically least rotation.
std::vector<int> least_rotation(const std::vector<int>& letters);

/// 0/1 transition matrix of a Markov partition; every row and column has a 1.
class IncidenceMatrix {
 public:
  /// std::invalid_argument on non-square, non-0/1 entries, or an empty row/column.
  explicit IncidenceMatrix(IntMatrix entries);

  const IntMatrix& entries() const noexcept { return entries_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }
  bool allows(int from, int to) const { return entries_(from, to) != 0; }

  static IncidenceMatrix lorenz();

 private:
  IntMatrix entries_;
};

/// Incidence matrix signed by the orientation behaviour of the return map.
class StructureMatrix {
 public:
  /// Entries in {-1, 0, 1}; |S| must form a valid IncidenceMatrix.
  explicit StructureMatrix(IntMatrix entries);

  const IntMatrix& entries() const noexcept { return entries_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }
  IncidenceMatrix incidence() const;
  StructureMatrix transposed() const { return StructureMatrix(entries_.transpose()); }

  /// Both strips of the Lorenz template are orientation preserving.
  static StructureMatrix lorenz();

 private:
  IntMatrix entries_;
};

/// trace(A^n): the number of period-n points of the first return map.
Integer count_periodic_points(const IncidenceMatrix& a, int n);

/// Number of primitive closed orbits of least period n, via Moebius inversion
/// of the traces.
Integer count_closed_orbits(const IncidenceMatrix& a, int n);

/// All admissible primitive cyclic words of length exactly n, each in
/// canonical rotation, in lexicographic order.
std::vector<OrbitWord> enumerate_orbits(const IncidenceMatrix& a, int n);

/// Every letter pair (cyclically) is an allowed transition.
bool is_admissible(const IncidenceMatrix& a, const std::vector<int>& letters);

/// Moebius function; n >= 1.
int moebius(int n);

}  // namespace smale
