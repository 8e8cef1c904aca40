#include "smale/flow.hpp"

#include <algorithm>
#include <sstream>

namespace smale {

Integer linking_factor(const SaddleRecord& s) {
  if (const auto* d = std::get_if<SaddleData>(&s)) return checked_abs(structure_determinant(d->structure()));
  return std::get<OpaqueSaddle>(s).structure_det_abs;
}

std::optional<LaurentPoly> attractor_factor(const SaddleRecord& s) {
  if (const auto* d = std::get_if<SaddleData>(&s)) return alexander_from_linking_matrix(d->attractor_link());
  const auto& o = std::get<OpaqueSaddle>(s);
  return o.attractor_alexander ? std::optional(normalize(*o.attractor_alexander)) : std::nullopt;
}

std::optional<LaurentPoly> repeller_factor(const SaddleRecord& s) {
  if (const auto* d = std::get_if<SaddleData>(&s)) return alexander_from_linking_matrix(d->repeller_link());
  const auto& o = std::get<OpaqueSaddle>(s);
  return o.repeller_alexander ? std::optional(normalize(*o.repeller_alexander)) : std::nullopt;
}

SaddleRecord reversed(const SaddleRecord& s) {
  return std::visit([](const auto& v) -> SaddleRecord { return v.reversed(); }, s);
}

void check_flow(const FlowDescriptor& f) {
  Integer product = 1;
  for (const auto& s : f.saddles) product = checked_mul(product, linking_factor(s));
  if (product != f.lk_ar_abs)
    throw std::domain_error("lk_ar_abs = " + std::to_string(f.lk_ar_abs) + " but the saddles give prod |det(I - S)| = " +
                            std::to_string(product));
  if (f.repeller_is_meridian_of_attractor && f.lk_ar_abs != 1)
    throw std::domain_error("a meridian repeller must link the attractor once");
  if (f.is_simple()) {
    if (const auto* d = std::get_if<SaddleData>(&f.saddles.front())) check_simple_linking_matrix(d->attractor_link());
    if (const auto a = attractor_factor(f.saddles.front()); a && !is_symmetric(*a))
      throw std::domain_error("attractor polynomial " + a->to_string() + " is not symmetric");
  }
}

namespace {

std::string matrix_key(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ':';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j) << ',';
  return os.str();
}

// Total order on saddle records, used only to make saddle lists canonical.
std::string saddle_key(const SaddleRecord& s) {
  if (const auto* d = std::get_if<SaddleData>(&s))
    return "0|" + matrix_key(d->structure().entries()) + "|" + matrix_key(d->attractor_link().exponents()) + "|" +
           matrix_key(d->repeller_link().exponents());
  const auto& o = std::get<OpaqueSaddle>(s);
  return "1|" + std::to_string(o.structure_det_abs) + "|" +
         (o.attractor_alexander ? o.attractor_alexander->to_string() : "?") + "|" +
         (o.repeller_alexander ? o.repeller_alexander->to_string() : "?");
}

void sort_saddles(std::vector<SaddleRecord>& saddles) {
  std::stable_sort(saddles.begin(), saddles.end(),
                   [](const SaddleRecord& a, const SaddleRecord& b) { return saddle_key(a) < saddle_key(b); });
}

void require_meridian_repeller(const FlowDescriptor& f, int index) {
  if (!f.repeller.is_unknot())
    throw HypothesisError(2, index, "repeller " + f.repeller.to_string() + " is knotted");
  if (!f.repeller_is_meridian_of_attractor)
    throw HypothesisError(2, index, "repeller is not a meridian of the attractor");
}

void require_disk(const FlowDescriptor& f, int index) {
  if (!f.repeller_disk_condition)
    throw HypothesisError(3, index, "repeller does not bound a disk meeting the chain-recurrent set in a single point");
}

Integer product_of_factors(const std::vector<SaddleRecord>& saddles) {
  Integer product = 1;
  for (const auto& s : saddles) product = checked_mul(product, linking_factor(s));
  return product;
}

}  // namespace

FlowDescriptor compose_sum(const FlowDescriptor& f1, const FlowDescriptor& f2) {
  require_meridian_repeller(f1, 1);
  require_meridian_repeller(f2, 2);
  require_disk(f1, 1);
  require_disk(f2, 2);
  FlowDescriptor out;
  out.attractor = connected_sum(f1.attractor, f2.attractor);
  out.repeller = KnotType::unknot();
  out.repeller_is_meridian_of_attractor = true;
  // Nothing guarantees the glued flow satisfies (3) again.
  out.repeller_disk_condition = false;
  out.saddles = f1.saddles;
  out.saddles.insert(out.saddles.end(), f2.saddles.begin(), f2.saddles.end());
  sort_saddles(out.saddles);
  out.lk_ar_abs = product_of_factors(out.saddles);
  check_flow(out);
  return out;
}

FlowDescriptor compose_split(const FlowDescriptor& f1, const FlowDescriptor& f2) {
  require_meridian_repeller(f1, 1);
  require_meridian_repeller(f2, 2);
  FlowDescriptor out;
  out.attractor = f1.attractor;
  out.repeller = f2.attractor;
  out.repeller_is_meridian_of_attractor = f2.attractor.is_unknot();
  out.repeller_disk_condition = false;
  out.mutual_meridian_tori = true;
  out.saddles = f1.saddles;
  for (const auto& s : f2.saddles) out.saddles.push_back(reversed(s));
  out.lk_ar_abs = product_of_factors(out.saddles);
  if (out.lk_ar_abs != 1) throw std::logic_error("split flow must have linking number one");
  check_flow(out);
  return out;
}

FlowDescriptor realize_any_knot(const KnotType& k) {
  FlowDescriptor out;
  out.attractor = k;
  out.repeller = KnotType::unknot();
  out.repeller_is_meridian_of_attractor = true;
  out.repeller_disk_condition = true;
  const auto torus = k.as_torus();
  if (k.is_unknot()) {
    out.saddles.push_back(SaddleData::lorenz(0, 0));
  } else if (torus && torus->p == 2 && torus->q == 3) {
    out.saddles.push_back(SaddleData::lorenz(1, 0));
  } else {
    OpaqueSaddle o;
    o.structure_det_abs = 1;
    try {
      o.attractor_alexander = alexander_of(k);
    } catch (const std::domain_error&) {
      o.attractor_alexander = std::nullopt;
    }
    o.repeller_alexander = LaurentPoly(1);
    out.saddles.push_back(o);
  }
  out.lk_ar_abs = product_of_factors(out.saddles);
  check_flow(out);
  return out;
}

LaurentPoly alexander_of_flow(const FlowDescriptor& f) {
  LaurentPoly product(1);
  for (std::size_t i = 0; i < f.saddles.size(); ++i) {
    const auto factor = attractor_factor(f.saddles[i]);
    if (!factor) throw std::domain_error("saddle " + std::to_string(i + 1) + " has no known attractor polynomial");
    product *= *factor;
  }
  return normalize(product);
}

LaurentPoly repeller_alexander_of_flow(const FlowDescriptor& f) {
  LaurentPoly product(1);
  for (std::size_t i = 0; i < f.saddles.size(); ++i) {
    const auto factor = repeller_factor(f.saddles[i]);
    if (!factor) throw std::domain_error("saddle " + std::to_string(i + 1) + " has no known repeller polynomial");
    product *= *factor;
  }
  return normalize(product);
}

}  // namespace smale
