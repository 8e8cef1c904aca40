#include "smale/knot.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "smale/errors.hpp"

namespace smale {

KnotType KnotType::torus(int p, int q) {
  const int ap = std::abs(p);
  const int aq = std::abs(q);
  if (std::gcd(ap, aq) != 1) throw std::invalid_argument("torus knot (" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime p, q");
  KnotType k;
  if (ap <= 1 || aq <= 1) return k;
  k.factors_.push_back(TorusFactor{std::min(ap, aq), std::max(ap, aq), (p < 0) != (q < 0)});
  return k;
}

KnotType KnotType::named(std::string label) {
  if (label.empty()) throw std::invalid_argument("named knot needs a label");
  KnotType k;
  k.factors_.push_back(NamedFactor{std::move(label)});
  return k;
}

KnotType KnotType::cable(int p, int q, const KnotType& companion) {
  return named("cable(" + std::to_string(p) + "," + std::to_string(q) + ",of=" + companion.to_string() + ")");
}

std::optional<TorusFactor> KnotType::as_torus() const {
  if (factors_.size() != 1) return std::nullopt;
  if (const auto* t = std::get_if<TorusFactor>(&factors_.front())) return *t;
  return std::nullopt;
}

KnotType KnotType::mirror() const {
  KnotType k = *this;
  for (auto& f : k.factors_)
    if (auto* t = std::get_if<TorusFactor>(&f)) t->left_handed = !t->left_handed;
  std::sort(k.factors_.begin(), k.factors_.end());
  return k;
}

std::string to_string(const PrimeFactor& f) {
  if (const auto* t = std::get_if<TorusFactor>(&f))
    return "torus(" + std::to_string(t->p) + "," + (t->left_handed ? "-" : "") + std::to_string(t->q) + ")";
  const auto& label = std::get<NamedFactor>(f).label;
  // Structured labels such as cable(...) print as themselves.
  if (label.rfind("cable(", 0) == 0) return label;
  return "named(" + label + ")";
}

std::string KnotType::to_string() const {
  if (factors_.empty()) return "unknot";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " # " : "") + smale::to_string(factors_[i]);
  return s;
}

KnotType connected_sum(const KnotType& a, const KnotType& b) {
  KnotType k = a;
  k.factors_.insert(k.factors_.end(), b.factors_.begin(), b.factors_.end());
  std::sort(k.factors_.begin(), k.factors_.end());
  return k;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits on '#' outside parentheses.
std::vector<std::string> split_summands(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth < 0) throw ParseError("knot '" + std::string(text) + "': unbalanced ')'");
    if (text[i] == '#' && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("knot '" + std::string(text) + "': unbalanced '('");
  parts.push_back(trim(text.substr(start)));
  return parts;
}

int parse_int(const std::string& s, const std::string& context) {
  const std::string t = trim(s);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ParseError(context + ": expected an integer, got '" + t + "'");
  }
  if (used != t.size()) throw ParseError(context + ": expected an integer, got '" + t + "'");
  return value;
}

KnotType parse_prime(const std::string& term) {
  const std::string context = "knot term '" + term + "'";
  if (term == "unknot") return KnotType::unknot();
  if (term == "trefoil") return KnotType::torus(2, 3);
  const auto open = term.find('(');
  if (open == std::string::npos || term.back() != ')') throw ParseError(context + ": expected unknot, trefoil, torus(p,q), named(label) or cable(p,q,of=knot)");
  const std::string head = trim(std::string_view(term).substr(0, open));
  const std::string body = term.substr(open + 1, term.size() - open - 2);
  if (head == "named") {
    const std::string label = trim(body);
    if (label.empty()) throw ParseError(context + ": empty label");
    return KnotType::named(label);
  }
  if (head == "torus") {
    const auto comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
      throw ParseError(context + ": torus needs exactly two integers");
    const int p = parse_int(body.substr(0, comma), context);
    const int q = parse_int(body.substr(comma + 1), context);
    try {
      return KnotType::torus(p, q);
    } catch (const std::invalid_argument& e) {
      throw std::domain_error(e.what());
    }
  }
  if (head == "cable") {
    const auto c1 = body.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : body.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError(context + ": cable needs p, q and of=knot");
    const int p = parse_int(body.substr(0, c1), context);
    const int q = parse_int(body.substr(c1 + 1, c2 - c1 - 1), context);
    std::string rest = trim(body.substr(c2 + 1));
    if (rest.rfind("of=", 0) != 0) throw ParseError(context + ": cable needs of=knot");
    return KnotType::cable(p, q, KnotType::parse(rest.substr(3)));
  }
  throw ParseError(context + ": unknown knot constructor '" + head + "'");
}

}  // namespace

KnotType KnotType::parse(std::string_view text) {
  KnotType k;
  for (const auto& term : split_summands(text)) {
    if (term.empty()) throw ParseError("knot '" + std::string(text) + "': empty summand");
    k = connected_sum(k, parse_prime(term));
  }
  return k;
}

LaurentPoly torus_knot_alexander(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw std::invalid_argument("torus knot polynomial needs coprime p, q >= 1");
  const LaurentPoly one(1);
  const LaurentPoly num = (LaurentPoly::t(p * q) - one) * (LaurentPoly::t() - one);
  const LaurentPoly den = (LaurentPoly::t(p) - one) * (LaurentPoly::t(q) - one);
  return exact_divide(num, den);
}

LaurentPoly alexander_of(const KnotType& k) {
  LaurentPoly product(1);
  for (const auto& f : k.factors()) {
    if (const auto* t = std::get_if<TorusFactor>(&f)) {
      product *= torus_knot_alexander(t->p, t->q);
    } else {
      throw std::domain_error("no Alexander polynomial formula available for " + to_string(f));
    }
  }
  return normalize(product);
}

}  // namespace smale
