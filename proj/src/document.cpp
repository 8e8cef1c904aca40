#include "smale/document.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "smale/errors.hpp"

namespace smale {

namespace {

// Errors that already carry a source location.
struct LocatedParseError : ParseError {
  using ParseError::ParseError;
};
struct LocatedDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A JSON value together with its location, for error messages.
class Node {
 public:
  Node(const Json& j, std::string path, const std::string& source) : j_(&j), path_(std::move(path)), source_(&source) {}

  const Json& json() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& why) const { throw LocatedParseError(where() + why); }
  [[noreturn]] void fail_domain(const std::string& why) const { throw LocatedDomainError(where() + why); }

  void require_object() const {
    if (!j_->is_object()) fail("expected an object");
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    require_object();
    for (const auto& [k, v] : j_->items()) {
      bool known = false;
      for (auto key : keys) known = known || key == k;
      if (!known) Node(v, path_ + "/" + k, *source_).fail("unknown field");
    }
  }

  std::optional<Node> find(const std::string& key) const {
    require_object();
    const auto it = j_->find(key);
    if (it == j_->end()) return std::nullopt;
    return Node(*it, path_ + "/" + key, *source_);
  }

  Node at(const std::string& key) const {
    auto n = find(key);
    if (!n) fail("missing required field '" + key + "'");
    return *n;
  }

  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }

  Node at(std::size_t i) const { return Node((*j_)[i], path_ + "/" + std::to_string(i), *source_); }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  Integer integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<Integer>();
  }

  int int32() const {
    const Integer v = integer();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail("integer out of range");
    return static_cast<int>(v);
  }

  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

  IntMatrix matrix() const {
    const std::size_t rows = size();
    if (rows == 0) fail("expected a nonempty matrix");
    const std::size_t cols = at(0).size();
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      const Node row = at(i);
      if (row.size() != cols) row.fail("rows must all have " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = row.at(c).integer();
    }
    return m;
  }

  // Runs a constructor, attaching this node's location to domain errors and
  // to parse errors raised by the text parsers.
  template <typename F>
  auto build(F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const LocatedParseError&) {
      throw;
    } catch (const LocatedDomainError&) {
      throw;
    } catch (const ParseError& e) {
      fail(e.what());
    } catch (const std::invalid_argument& e) {
      fail_domain(e.what());
    } catch (const std::domain_error& e) {
      fail_domain(e.what());
    }
  }

  LaurentPoly polynomial() const {
    const std::string s = str();
    return build([&] { return parse_laurent(s); });
  }

  KnotType knot() const {
    const std::string s = str();
    return build([&] { return KnotType::parse(s); });
  }

 private:
  std::string where() const { return *source_ + ": " + (path_.empty() ? "/" : path_) + ": "; }

  const Json* j_;
  std::string path_;
  const std::string* source_;
};

SaddleRecord saddle_from(const Node& n) {
  n.require_object();
  if (const auto opaque = n.find("opaque"); opaque && opaque->boolean()) {
    n.allow_only({"kind", "opaque", "structure_det_abs", "attractor_alexander", "repeller_alexander"});
    OpaqueSaddle o;
    const Node det = n.at("structure_det_abs");
    o.structure_det_abs = det.integer();
    if (o.structure_det_abs < 0) det.fail("expected a nonnegative integer");
    const auto read_poly = [&](const char* key) -> std::optional<LaurentPoly> {
      const auto field = n.find(key);
      if (!field || field->json().is_null()) return std::nullopt;
      return field->polynomial();
    };
    o.attractor_alexander = read_poly("attractor_alexander");
    o.repeller_alexander = read_poly("repeller_alexander");
    return o;
  }
  n.allow_only({"kind", "opaque", "incidence", "structure", "attractor_exponents", "repeller_exponents"});
  const Node s_node = n.at("structure");
  const StructureMatrix s = s_node.build([&] { return StructureMatrix(s_node.matrix()); });
  if (const auto inc = n.find("incidence")) {
    const IntMatrix a = inc->matrix();
    if (a != s.incidence().entries()) inc->fail_domain("incidence matrix differs from |structure|");
  }
  const auto linking = [&](const char* key) {
    const auto field = n.find(key);
    if (!field) return LinkingMatrix::unlinked(s);
    return field->build([&] { return LinkingMatrix(s, field->matrix()); });
  };
  n.at("attractor_exponents");  // required, unlike repeller_exponents
  const LinkingMatrix la = linking("attractor_exponents");
  const LinkingMatrix lr = linking("repeller_exponents");
  return n.build([&] { return SaddleData(s, la, lr); });
}

TemplateDocument template_from(const Node& n) {
  n.allow_only({"kind", "name", "incidence", "symbols", "embedding"});
  TemplateDocument doc;
  const auto name = n.find("name");
  const auto incidence = n.find("incidence");
  if (name && incidence) n.fail("give either 'name' or 'incidence', not both");
  if (name) {
    if (name->str() != "lorenz") name->fail("unknown template name '" + name->str() + "' (known: lorenz)");
  } else if (incidence) {
    doc.incidence = incidence->build([&] { return IncidenceMatrix(incidence->matrix()); });
    doc.alphabet = incidence->build([&] { return Alphabet::default_for(doc.incidence.size()); });
  } else {
    n.fail("missing required field 'incidence' (or 'name')");
  }
  if (const auto symbols = n.find("symbols")) {
    doc.alphabet = symbols->build([&] { return Alphabet(symbols->str()); });
    if (doc.alphabet.size() != doc.incidence.size())
      symbols->fail("needs one symbol per strip (" + std::to_string(doc.incidence.size()) + ")");
  }
  if (const auto e = n.find("embedding")) {
    const std::string type = e->at("type").str();
    if (type == "standard") {
      e->allow_only({"type", "concentric"});
      const auto c = e->find("concentric");
      doc.embedding = LorenzEmbedding::standard(c ? c->boolean() : false);
    } else if (type == "twisted") {
      e->allow_only({"type", "full_twists"});
      doc.embedding = LorenzEmbedding::twisted(e->at("full_twists").int32());
    } else if (type == "torus_cable") {
      e->allow_only({"type", "p", "q"});
      const int p = e->at("p").int32();
      const int q = e->at("q").int32();
      doc.embedding = e->build([&] { return LorenzEmbedding::torus_cable(p, q); });
    } else {
      e->at("type").fail("unknown embedding type '" + type + "' (standard, twisted, torus_cable)");
    }
  }
  return doc;
}

PresentationDocument presentation_from(const Node& n) {
  n.allow_only({"kind", "presentation", "abelianization", "deleted_generator"});
  const Node text = n.at("presentation");
  const std::string s = text.str();
  PresentationDocument doc{text.build([&] { return GroupPresentation::parse(s); }), std::nullopt, std::nullopt};
  if (const auto ab = n.find("abelianization")) {
    ab->require_object();
    std::vector<Integer> exps(static_cast<std::size_t>(doc.presentation.generator_count()), 0);
    std::vector<bool> seen(exps.size(), false);
    for (const auto& [name, value] : ab->json().items()) {
      const Node field = ab->at(name);
      const int g = field.build([&] { return doc.presentation.index_of(name); });
      exps[static_cast<std::size_t>(g)] = field.integer();
      seen[static_cast<std::size_t>(g)] = true;
    }
    for (std::size_t g = 0; g < seen.size(); ++g)
      if (!seen[g]) ab->fail("no exponent for generator '" + doc.presentation.generators()[g] + "'");
    doc.abelianization = AbelianizationMap(std::move(exps));
  }
  if (const auto del = n.find("deleted_generator")) {
    const std::string name = del->str();
    doc.deleted_column = del->build([&] { return doc.presentation.index_of(name); });
  }
  return doc;
}

ArLink ar_link_from(const Node& n) {
  if (n.json().is_string()) {
    const std::string s = n.str();
    if (s == "Hopf" || s == "hopf") return ArLink::hopf();
    if (s == "TrefoilMeridian" || s == "trefoil-meridian") return ArLink::trefoil_meridian();
    n.fail("unknown link type '" + s + "' (Hopf, TrefoilMeridian, or {\"other\": label})");
  }
  n.allow_only({"other"});
  return ArLink::other(n.at("other").str());
}

ProposalDocument proposal_from(const Node& n) {
  n.allow_only({"kind", "x_core", "y_core", "x_twist", "y_twist", "bands_linked", "ar_link", "concentric",
                "fixed_points"});
  ProposalDocument doc;
  auto& p = doc.proposal;
  p.x_core = n.at("x_core").knot();
  p.y_core = n.at("y_core").knot();
  p.x_twist = n.at("x_twist").int32();
  p.y_twist = n.at("y_twist").int32();
  p.bands_linked = n.at("bands_linked").boolean();
  p.ar_link = ar_link_from(n.at("ar_link"));
  if (const auto c = n.find("concentric")) p.concentric = c->boolean();
  if (const auto f = n.find("fixed_points")) doc.fixed_points = f->boolean();
  return doc;
}

FlowDescriptor flow_from(const Node& n) {
  n.allow_only({"kind", "attractor", "repeller", "repeller_is_meridian_of_attractor", "repeller_disk_condition",
                "mutual_meridian_tori", "lk_ar_abs", "saddles"});
  FlowDescriptor f;
  f.attractor = n.at("attractor").knot();
  f.repeller = n.at("repeller").knot();
  f.repeller_is_meridian_of_attractor = n.at("repeller_is_meridian_of_attractor").boolean();
  f.repeller_disk_condition = n.at("repeller_disk_condition").boolean();
  if (const auto m = n.find("mutual_meridian_tori")) f.mutual_meridian_tori = m->boolean();
  const Node saddles = n.at("saddles");
  for (std::size_t i = 0; i < saddles.size(); ++i) f.saddles.push_back(saddle_from(saddles.at(i)));
  f.lk_ar_abs = n.at("lk_ar_abs").integer();
  n.build([&] {
    check_flow(f);
    return 0;
  });
  return f;
}

}  // namespace

Document parse_document(std::string_view text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  const Node root(j, "", source);
  root.require_object();
  const std::string kind = root.at("kind").str();
  if (kind == "template") return template_from(root);
  if (kind == "saddle") {
    auto s = saddle_from(root);
    if (!std::holds_alternative<SaddleData>(s)) root.fail("a saddle document needs explicit matrices");
    return std::get<SaddleData>(s);
  }
  if (kind == "presentation") return presentation_from(root);
  if (kind == "proposal") return proposal_from(root);
  if (kind == "flow") return flow_from(root);
  if (kind == "knot") {
    root.allow_only({"kind", "knot"});
    return root.at("knot").knot();
  }
  root.at("kind").fail("unknown kind '" + kind + "' (template, saddle, presentation, proposal, flow, knot)");
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SaddleData& s) {
  Json j;
  j["structure"] = to_json(s.structure().entries());
  j["attractor_exponents"] = to_json(s.attractor_link().exponents());
  j["repeller_exponents"] = to_json(s.repeller_link().exponents());
  return j;
}

Json to_json(const SaddleRecord& s) {
  if (const auto* d = std::get_if<SaddleData>(&s)) return to_json(*d);
  const auto& o = std::get<OpaqueSaddle>(s);
  Json j;
  j["opaque"] = true;
  j["structure_det_abs"] = o.structure_det_abs;
  j["attractor_alexander"] = o.attractor_alexander ? Json(o.attractor_alexander->to_string()) : Json(nullptr);
  j["repeller_alexander"] = o.repeller_alexander ? Json(o.repeller_alexander->to_string()) : Json(nullptr);
  return j;
}

Json to_json(const FlowDescriptor& f) {
  Json j;
  j["kind"] = "flow";
  j["attractor"] = f.attractor.to_string();
  j["repeller"] = f.repeller.to_string();
  j["repeller_is_meridian_of_attractor"] = f.repeller_is_meridian_of_attractor;
  j["repeller_disk_condition"] = f.repeller_disk_condition;
  j["mutual_meridian_tori"] = f.mutual_meridian_tori;
  j["lk_ar_abs"] = f.lk_ar_abs;
  Json saddles = Json::array();
  for (const auto& s : f.saddles) saddles.push_back(to_json(s));
  j["saddles"] = std::move(saddles);
  return j;
}

Json to_json(const ConfigProposal& p) {
  Json j;
  j["kind"] = "proposal";
  j["x_core"] = p.x_core.to_string();
  j["y_core"] = p.y_core.to_string();
  j["x_twist"] = p.x_twist;
  j["y_twist"] = p.y_twist;
  j["bands_linked"] = p.bands_linked;
  switch (p.ar_link.kind) {
    case ArLink::Kind::Hopf: j["ar_link"] = "Hopf"; break;
    case ArLink::Kind::TrefoilMeridian: j["ar_link"] = "TrefoilMeridian"; break;
    case ArLink::Kind::Other: j["ar_link"] = Json{{"other", p.ar_link.label}}; break;
  }
  j["concentric"] = p.concentric;
  return j;
}

namespace {

bool is_flat_array(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

// Like Json::dump(2), but arrays of scalars stay on one line so matrices
// read row by row.
void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (is_flat_array(j)) {
    os << '[';
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << ']';
  } else if (j.is_array()) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << Json(k).dump() << ": ";
      write(os, v, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << '\n';
  return os.str();
}

}  // namespace smale
