#include "smale/symbolic_dynamics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "smale/errors.hpp"

namespace smale {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (std::set<char>(symbols_.begin(), symbols_.end()).size() != symbols_.size())
    throw std::invalid_argument("alphabet symbols must be distinct");
}

Alphabet Alphabet::default_for(Eigen::Index size) {
  if (size == 2) return lorenz();
  if (size < 1 || size > 26) throw std::invalid_argument("no default alphabet for " + std::to_string(size) + " strips");
  std::string s;
  for (Eigen::Index i = 0; i < size; ++i) s.push_back(static_cast<char>('a' + i));
  return Alphabet(s);
}

int Alphabet::index_of(char c) const {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) throw ParseError(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
  return static_cast<int>(pos);
}

bool is_primitive(const std::vector<int>& letters) {
  const std::size_t n = letters.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = letters[i] == letters[i - d];
    if (periodic) return false;
  }
  return true;
}

std::vector<int> least_rotation(const std::vector<int>& letters) {
  const std::size_t n = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = letters[(r + i) % n];
      const int b = letters[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = letters[(best + i) % n];
  return out;
}

OrbitWord::OrbitWord(std::vector<int> letters) {
  if (letters.empty()) throw std::invalid_argument("orbit word must be nonempty");
  if (!is_primitive(letters)) throw std::invalid_argument("orbit word is a proper power");
  letters_ = least_rotation(letters);
}

OrbitWord OrbitWord::parse(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw ParseError("empty orbit word");
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(alphabet.index_of(c));
  return OrbitWord(std::move(letters));
}

std::string OrbitWord::to_string(const Alphabet& alphabet) const {
  std::string s;
  for (int l : letters_) s.push_back(alphabet.symbol(l));
  return s;
}

bool operator<(const OrbitWord& a, const OrbitWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters_ < b.letters_;
}

IncidenceMatrix::IncidenceMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw std::invalid_argument("incidence matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = 0; j < entries_.cols(); ++j)
      if (entries_(i, j) != 0 && entries_(i, j) != 1) throw std::invalid_argument("incidence matrix entries must be 0 or 1");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_.row(i).sum() == 0)
      throw std::invalid_argument("incidence matrix row " + std::to_string(i) + " has no 1 (wandering element)");
    if (entries_.col(i).sum() == 0)
      throw std::invalid_argument("incidence matrix column " + std::to_string(i) + " has no 1 (wandering element)");
  }
}

IncidenceMatrix IncidenceMatrix::lorenz() { return IncidenceMatrix(IntMatrix::Ones(2, 2)); }

StructureMatrix::StructureMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = 0; j < entries_.cols(); ++j)
      if (entries_(i, j) < -1 || entries_(i, j) > 1) throw std::invalid_argument("structure matrix entries must be -1, 0 or 1");
  (void)incidence();
}

IncidenceMatrix StructureMatrix::incidence() const { return IncidenceMatrix(entries_.cwiseAbs()); }

StructureMatrix StructureMatrix::lorenz() { return StructureMatrix(IntMatrix::Ones(2, 2)); }

Integer count_periodic_points(const IncidenceMatrix& a, int n) {
  if (n < 1) throw std::invalid_argument("period must be at least 1");
  IntMatrix result = IntMatrix::Identity(a.size(), a.size());
  IntMatrix base = a.entries();
  for (int e = n;;) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e == 0) break;
    base = multiply(base, base);
  }
  Integer trace = 0;
  for (Eigen::Index i = 0; i < result.rows(); ++i) trace = checked_add(trace, result(i, i));
  return trace;
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Integer count_closed_orbits(const IncidenceMatrix& a, int n) {
  if (n < 1) throw std::invalid_argument("period must be at least 1");
  Integer sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(d);
    if (mu != 0) sum = checked_add(sum, checked_mul(mu, count_periodic_points(a, n / d)));
  }
  return exact_divide(sum, static_cast<Integer>(n));
}

bool is_admissible(const IncidenceMatrix& a, const std::vector<int>& letters) {
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int from = letters[i];
    const int to = letters[(i + 1) % n];
    if (from < 0 || to < 0 || from >= a.size() || to >= a.size() || !a.allows(from, to)) return false;
  }
  return true;
}

std::vector<OrbitWord> enumerate_orbits(const IncidenceMatrix& a, int n) {
  if (n < 1) throw std::invalid_argument("period must be at least 1");
  const int k = static_cast<int>(a.size());
  const auto length = static_cast<std::size_t>(n);
  std::vector<OrbitWord> out;
  // Fredricksen-Kessler-Maiorana generation of Lyndon words in lexicographic
  // order; a prefix with a forbidden transition cannot extend to an
  // admissible word, so such branches are cut immediately.
  std::vector<int> word(length + 1, 0);  // 1-based
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t t, std::size_t p) {
    if (t > length) {
      if (length == p && a.allows(word[length], word[1]))
        out.emplace_back(std::vector<int>(word.begin() + 1, word.end()));
      return;
    }
    for (int symbol = word[t - p]; symbol < k; ++symbol) {
      word[t] = symbol;
      if (t > 1 && !a.allows(word[t - 1], symbol)) continue;
      extend(t + 1, symbol == word[t - p] ? p : t);
    }
  };
  extend(1, 1);
  return out;
}

}  // namespace smale
