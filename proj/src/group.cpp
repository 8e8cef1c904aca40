#include "smale/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smale/errors.hpp"

namespace smale {

GroupWord::GroupWord(const std::vector<Letter>& letters) {
  for (const Letter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("letter exponents must be +1 or -1");
    if (l.generator < 0) throw std::invalid_argument("negative generator index");
    if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().exponent == -l.exponent)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

GroupWord GroupWord::power(int generator, int power) {
  std::vector<Letter> letters(static_cast<std::size_t>(power < 0 ? -static_cast<long>(power) : power),
                              Letter{generator, power < 0 ? -1 : 1});
  return GroupWord(letters);
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(Letter{it->generator, -it->exponent});
  return GroupWord(out);
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(joined);
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<GroupWord> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  if (std::set<std::string>(generators_.begin(), generators_.end()).size() != generators_.size())
    throw std::invalid_argument("generator names must be distinct");
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (l.generator >= generator_count()) throw std::invalid_argument("relator uses an unknown generator");
}

int GroupPresentation::index_of(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return static_cast<int>(it - generators_.begin());
}

std::string GroupPresentation::word_to_string(const GroupWord& w) const {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long power = static_cast<long>(j - i) * letters[i].exponent;
    if (i != 0) os << ' ';
    os << generators_.at(static_cast<std::size_t>(letters[i].generator));
    if (power != 1) os << '^' << power;
    i = j;
  }
  return os.str();
}

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i];
  os << " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) os << (i ? ", " : " ") << word_to_string(relators_[i]);
  os << '>';
  return os.str();
}

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  GroupPresentation parse() {
    skip_space();
    expect('<');
    std::vector<std::string> gens;
    skip_space();
    if (peek() != '|') {
      gens.push_back(identifier());
      skip_space();
      while (peek() == ',') {
        next();
        skip_space();
        gens.push_back(identifier());
        skip_space();
      }
    }
    expect('|');
    generators_ = gens;
    if (std::set<std::string>(gens.begin(), gens.end()).size() != gens.size()) fail("duplicate generator name");
    single_char_names_ = std::all_of(gens.begin(), gens.end(), [](const std::string& g) { return g.size() == 1; });
    std::vector<GroupWord> relators;
    skip_space();
    if (peek() != '>') {
      relators.push_back(relation());
      skip_space();
      while (peek() == ',') {
        next();
        relators.push_back(relation());
        skip_space();
      }
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after '>'");
    return GroupPresentation(gens, relators);
  }

 private:
  GroupWord relation() {
    GroupWord lhs = side();
    if (peek() == '=') {
      next();
      GroupWord rhs = side();
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  // A nonempty word; the identity is written 1.
  GroupWord side() {
    skip_space();
    const std::size_t start = pos_;
    GroupWord w = word();
    if (pos_ == start) fail("expected a word (write 1 for the identity)");
    skip_space();
    return w;
  }

  GroupWord word() {
    GroupWord w;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '(') {
        next();
        GroupWord inner = word();
        skip_space();
        expect(')');
        w = w * with_power(inner);
      } else if (c == '1' && !std::isalnum(static_cast<unsigned char>(peek(1)))) {
        next();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        const std::string name = identifier();
        const auto it = std::find(generators_.begin(), generators_.end(), name);
        if (it != generators_.end()) {
          w = w * with_power(GroupWord::power(static_cast<int>(it - generators_.begin()), 1));
        } else if (single_char_names_) {
          // "xyx" with one-character generators: each character is a letter
          // and a trailing power applies to the last one.
          for (std::size_t i = 0; i < name.size(); ++i) {
            const auto g = std::find(generators_.begin(), generators_.end(), std::string(1, name[i]));
            if (g == generators_.end()) {
              pos_ = start + i;
              fail("unknown generator '" + std::string(1, name[i]) + "'");
            }
            GroupWord letter = GroupWord::power(static_cast<int>(g - generators_.begin()), 1);
            w = w * (i + 1 == name.size() ? with_power(letter) : letter);
          }
        } else {
          pos_ = start;
          fail("unknown generator '" + name + "'");
        }
      } else {
        return w;
      }
    }
  }

  GroupWord with_power(const GroupWord& base) {
    if (peek() == '\'') {
      next();
      return base.inverse();
    }
    if (peek() != '^') return base;
    next();
    long sign = 1;
    if (peek() == '-' || peek() == '+') sign = next() == '-' ? -1 : 1;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer power");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (next() - '0');
      if (value > 100000) fail("power too large");
    }
    const GroupWord unit = sign < 0 ? base.inverse() : base;
    GroupWord out;
    for (long i = 0; i < value; ++i) out = out * unit;
    return out;
  }

  std::string identifier() {
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a generator name");
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s.push_back(next());
    return s;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    next();
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  char next() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("presentation '" + std::string(text_) + "', column " + std::to_string(pos_ + 1) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> generators_;
  bool single_char_names_ = false;
};

}  // namespace

GroupPresentation GroupPresentation::parse(std::string_view text) { return PresentationParser(text).parse(); }

Integer AbelianizationMap::exponent_of(int generator) const {
  if (generator < 0 || generator >= generator_count())
    throw std::invalid_argument("unknown generator index " + std::to_string(generator));
  return exponents_[static_cast<std::size_t>(generator)];
}

Integer AbelianizationMap::exponent_sum(const GroupWord& w) const {
  Integer sum = 0;
  for (const auto& l : w.letters()) sum = checked_add(sum, checked_mul(exponent_of(l.generator), l.exponent));
  return sum;
}

LaurentPoly AbelianizationMap::image(const GroupWord& w) const {
  return LaurentPoly::t(static_cast<LaurentPoly::Exponent>(exponent_sum(w)));
}

void check_abelianization(const GroupPresentation& p, const AbelianizationMap& phi) {
  if (phi.generator_count() != p.generator_count())
    throw std::domain_error("abelianization must assign an exponent to each of the " +
                            std::to_string(p.generator_count()) + " generators");
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    if (phi.exponent_sum(p.relators()[i]) != 0)
      throw std::domain_error("abelianization does not kill relator " + std::to_string(i + 1) + " (" +
                              p.word_to_string(p.relators()[i]) + ")");
}

AbelianizationMap solve_abelianization(const GroupPresentation& p) {
  const int g = p.generator_count();
  const auto m = static_cast<Eigen::Index>(p.relators().size());
  if (g == 0) throw std::domain_error("presentation has no generators");
  // Exponent-sum matrix: H_1 = Z^g / rowspace(R).
  IntMatrix r = IntMatrix::Zero(m, g);
  for (Eigen::Index i = 0; i < m; ++i)
    for (const auto& l : p.relators()[static_cast<std::size_t>(i)].letters())
      r(i, l.generator) = checked_add(r(i, l.generator), l.exponent);
  IntMatrix u = IntMatrix::Identity(g, g);

  // Diagonalize with unimodular row and column operations, tracking the
  // column operations in u; then R u = P^-1 D and the zero columns of D
  // give kernel vectors of R.
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(m, g); ++k) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < m; ++i)
        for (Eigen::Index j = k; j < g; ++j)
          if (r(i, j) != 0 && (pi < 0 || checked_abs(r(i, j)) < checked_abs(r(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      r.row(k).swap(r.row(pi));
      r.col(k).swap(r.col(pj));
      u.col(k).swap(u.col(pj));
      bool clean = true;
      for (Eigen::Index i = k + 1; i < m; ++i) {
        const Integer q = r(i, k) / r(k, k);
        for (Eigen::Index j = k; j < g; ++j) r(i, j) = checked_sub(r(i, j), checked_mul(q, r(k, j)));
        if (r(i, k) != 0) clean = false;
      }
      for (Eigen::Index j = k + 1; j < g; ++j) {
        const Integer q = r(k, j) / r(k, k);
        for (Eigen::Index i = k; i < m; ++i) r(i, j) = checked_sub(r(i, j), checked_mul(q, r(i, k)));
        for (Eigen::Index i = 0; i < g; ++i) u(i, j) = checked_sub(u(i, j), checked_mul(q, u(i, k)));
        if (r(k, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r(k, k) == 0) break;
    if (checked_abs(r(k, k)) != 1)
      throw std::domain_error("first homology has torsion Z/" + std::to_string(checked_abs(r(k, k))));
    ++rank;
  }
  if (g - rank != 1)
    throw std::domain_error("first homology has rank " + std::to_string(g - rank) + ", not infinite cyclic");

  std::vector<Integer> exponents(static_cast<std::size_t>(g));
  for (Eigen::Index i = 0; i < g; ++i) exponents[static_cast<std::size_t>(i)] = u(i, rank);
  const auto first = std::find_if(exponents.begin(), exponents.end(), [](Integer e) { return e != 0; });
  if (first != exponents.end() && *first < 0)
    for (auto& e : exponents) e = checked_neg(e);
  AbelianizationMap phi(std::move(exponents));
  check_abelianization(p, phi);
  return phi;
}

LaurentPoly fox_derivative(const GroupWord& w, int generator, const AbelianizationMap& phi) {
  const Integer own = phi.exponent_of(generator);
  LaurentPoly result;
  Integer prefix = 0;
  for (const auto& l : w.letters()) {
    const Integer step = checked_mul(phi.exponent_of(l.generator), l.exponent);
    if (l.generator == generator) {
      // d(g)/dg = 1 and d(g^-1)/dg = -g^-1, each after the prefix image.
      if (l.exponent > 0)
        result += LaurentPoly::t(static_cast<LaurentPoly::Exponent>(prefix));
      else
        result -= LaurentPoly::t(static_cast<LaurentPoly::Exponent>(checked_sub(prefix, own)));
    }
    prefix = checked_add(prefix, step);
  }
  return result;
}

LaurentMatrix alexander_matrix(const GroupPresentation& p, const AbelianizationMap& phi) {
  check_abelianization(p, phi);
  const auto rows = static_cast<Eigen::Index>(p.relators().size());
  LaurentMatrix m(rows, p.generator_count());
  for (Eigen::Index i = 0; i < rows; ++i)
    for (int j = 0; j < p.generator_count(); ++j)
      m(i, j) = fox_derivative(p.relators()[static_cast<std::size_t>(i)], j, phi);
  return m;
}

LaurentPoly alexander_from_presentation(const GroupPresentation& p, const AbelianizationMap& phi,
                                        std::optional<int> deleted_column) {
  const int g = p.generator_count();
  if (static_cast<int>(p.relators().size()) != g - 1)
    throw std::domain_error("presentation has " + std::to_string(g) + " generators and " +
                            std::to_string(p.relators().size()) + " relators; deficiency one is required");
  const LaurentMatrix m = alexander_matrix(p, phi);
  int column = -1;
  if (deleted_column) {
    column = *deleted_column;
    if (column < 0 || column >= g) throw std::invalid_argument("deleted column out of range");
  } else {
    for (int j = 0; j < g && column < 0; ++j)
      if (phi.exponent_of(j) != 0) column = j;
    if (column < 0) throw std::domain_error("every generator abelianizes to 1");
  }
  const Integer a = phi.exponent_of(column);
  if (a == 0)
    throw std::domain_error("generator '" + p.generators()[static_cast<std::size_t>(column)] +
                            "' abelianizes to 1; delete a different column");

  LaurentMatrix minor(g - 1, g - 1);
  for (int i = 0; i < g - 1; ++i)
    for (int j = 0, out = 0; j < g; ++j)
      if (j != column) minor(i, out++) = m(i, j);
  const LaurentPoly det = determinant(minor);
  const LaurentPoly denominator = LaurentPoly::t(static_cast<LaurentPoly::Exponent>(a)) - LaurentPoly(1);
  try {
    return exact_divide(det * (LaurentPoly::t() - LaurentPoly(1)), denominator);
  } catch (const std::domain_error&) {
    throw std::domain_error("Alexander minor " + det.to_string() + " is not divisible by " + denominator.to_string() +
                            "; the presentation/abelianization pair is not a knot group");
  }
}

LaurentPoly alexander_from_presentation(const GroupPresentation& p) {
  return alexander_from_presentation(p, solve_abelianization(p));
}

UnknotVerdict unknot_certificate(const GroupPresentation& p, const AbelianizationMap& phi) {
  return equal_up_to_units(alexander_from_presentation(p, phi), LaurentPoly(1)) ? UnknotVerdict::Inconclusive
                                                                                : UnknotVerdict::NotUnknot;
}

std::string to_string(UnknotVerdict v) { return v == UnknotVerdict::NotUnknot ? "NotUnknot" : "Inconclusive"; }

GroupPresentation trefoil_presentation() { return GroupPresentation::parse("<x, y | x y x = y x y>"); }

GroupPresentation lorenz_repeller_presentation(int p) {
  const GroupWord rp = GroupWord::power(0, p);
  const GroupWord ybar = GroupWord::power(1, -1);
  return GroupPresentation({"r", "y"}, {(ybar * rp * ybar) * (rp * ybar * rp).inverse()});
}

GroupPresentation lorenz_band_presentation(int p) {
  const GroupWord xp = GroupWord::power(0, p);
  const GroupWord y = GroupWord::power(1, 1);
  return GroupPresentation({"x", "y"}, {(xp * y * xp) * (y * xp * y).inverse()});
}

}  // namespace smale
