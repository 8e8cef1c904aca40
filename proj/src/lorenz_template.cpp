#include "smale/lorenz_template.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace smale {

namespace {

void require_lorenz_letters(const OrbitWord& w) {
  for (int l : w.letters())
    if (l != 0 && l != 1) throw std::invalid_argument("Lorenz template orbits use only the letters x and y");
}

struct StrandLayout {
  std::vector<BranchPoint> points;        // branch-line order
  std::vector<std::size_t> orbit_of;      // orbit index per position
  std::vector<std::size_t> image_of;      // position of the shifted point
};

StrandLayout layout(const std::vector<OrbitWord>& orbits) {
  StrandLayout out;
  out.points = branch_line_order(orbits);
  const std::size_t n = out.points.size();
  std::vector<std::size_t> first(orbits.size() + 1, 0);
  for (std::size_t o = 0; o < orbits.size(); ++o) first[o + 1] = first[o] + orbits[o].length();
  // position of (orbit o, phase k) is looked up through a flat index.
  std::vector<std::size_t> position(n);
  out.orbit_of.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto& bp = out.points[pos];
    const auto o = static_cast<std::size_t>(std::find(orbits.begin(), orbits.end(), bp.orbit) - orbits.begin());
    out.orbit_of[pos] = o;
    position[first[o] + bp.phase] = pos;
  }
  out.image_of.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto& bp = out.points[pos];
    const std::size_t o = out.orbit_of[pos];
    out.image_of[pos] = position[first[o] + (bp.phase + 1) % bp.orbit.length()];
  }
  return out;
}

// Counts position pairs (i < j) selected by `keep` whose images are in the
// opposite order.
template <typename Keep>
Integer count_reversals(const StrandLayout& s, Keep keep) {
  Integer count = 0;
  const std::size_t n = s.points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(s.orbit_of[i], s.orbit_of[j]) && s.image_of[i] > s.image_of[j]) ++count;
  return count;
}

}  // namespace

std::string BranchPoint::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < orbit.length(); ++i) s.push_back(Alphabet::lorenz().symbol(symbol(i)));
  return s;
}

int compare_itineraries(const BranchPoint& a, const BranchPoint& b) {
  const std::size_t bound = a.orbit.length() + b.orbit.length();
  for (std::size_t i = 0; i < bound; ++i) {
    const int sa = a.symbol(i);
    const int sb = b.symbol(i);
    if (sa != sb) return sa < sb ? -1 : 1;
  }
  return 0;
}

LorenzEmbedding LorenzEmbedding::torus_cable(int p, int q) {
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus cable needs coprime (p,q)");
  return LorenzEmbedding(TorusCableEmbedding{p, q});
}

std::vector<BranchPoint> branch_line_order(const std::vector<OrbitWord>& orbits) {
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    require_lorenz_letters(orbits[i]);
    for (std::size_t j = i + 1; j < orbits.size(); ++j)
      if (orbits[i] == orbits[j]) throw std::invalid_argument("orbits must be pairwise distinct");
  }
  std::vector<BranchPoint> points;
  for (const auto& w : orbits)
    for (std::size_t phase = 0; phase < w.length(); ++phase) points.push_back(BranchPoint{w, phase});
  std::sort(points.begin(), points.end(),
            [](const BranchPoint& a, const BranchPoint& b) { return compare_itineraries(a, b) < 0; });
  return points;
}

Integer linking_number(const OrbitWord& w1, const OrbitWord& w2) {
  if (w1 == w2) throw std::invalid_argument("linking number needs two distinct orbits");
  const auto s = layout({w1, w2});
  const Integer crossings = count_reversals(s, [](std::size_t a, std::size_t b) { return a != b; });
  if (crossings % 2 != 0) throw std::logic_error("odd crossing count between two closed orbits");
  return crossings / 2;
}

Integer linking_number(const LorenzEmbedding& embedding, const OrbitWord& w1, const OrbitWord& w2) {
  if (!embedding.is_standard())
    throw std::domain_error("orbit linking numbers are only defined here for the standard Lorenz embedding");
  return linking_number(w1, w2);
}

Integer self_crossings(const OrbitWord& w) {
  const auto s = layout({w});
  return count_reversals(s, [](std::size_t a, std::size_t b) { return a == b; });
}

}  // namespace smale
