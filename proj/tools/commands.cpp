#include "commands.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "smale/classifier.hpp"
#include "smale/document.hpp"
#include "smale/errors.hpp"
#include "smale/flow.hpp"
#include "smale/group.hpp"
#include "smale/knot.hpp"
#include "smale/lorenz_template.hpp"
#include "smale/symbolic_dynamics.hpp"

namespace smale::cli {

namespace {

Document load(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_document(ss.str(), "<stdin>");
  }
  return read_document(path);
}

template <typename T>
T load_as(const std::string& path, const char* what) {
  Document d = load(path);
  if (auto* v = std::get_if<T>(&d)) return std::move(*v);
  throw ParseError(path + ": expected " + std::string(what) + " document");
}

const char* kind_name(const Document& d) {
  static constexpr const char* names[] = {"template", "saddle", "presentation", "proposal", "flow", "knot"};
  return names[d.index()];
}

// orbits

struct OrbitsOptions {
  std::optional<std::string> input;
  int max_period = 6;
  bool count_only = false;
};

void cmd_orbits(const OrbitsOptions& o, std::ostream& out) {
  IncidenceMatrix a = IncidenceMatrix::lorenz();
  Alphabet alphabet = Alphabet::lorenz();
  if (o.input) {
    Document d = load(*o.input);
    if (auto* t = std::get_if<TemplateDocument>(&d)) {
      a = t->incidence;
      alphabet = t->alphabet;
    } else if (auto* s = std::get_if<SaddleData>(&d)) {
      a = s->incidence();
      alphabet = Alphabet::default_for(a.size());
    } else {
      throw ParseError(*o.input + ": orbits expects a template or saddle document, got " + kind_name(d));
    }
  }
  if (o.max_period < 1) throw std::domain_error("--max-period must be at least 1");
  for (int n = 1; n <= o.max_period; ++n) {
    if (o.count_only) {
      out << n << ' ' << count_closed_orbits(a, n) << '\n';
      continue;
    }
    for (const auto& w : enumerate_orbits(a, n)) out << w.to_string(alphabet) << '\n';
  }
}

// link

struct LinkOptions {
  std::optional<std::string> input;
  std::string w1, w2;
};

void cmd_link(const LinkOptions& o, std::ostream& out) {
  TemplateDocument t;
  if (o.input) t = load_as<TemplateDocument>(*o.input, "a template");
  if (t.incidence.size() != 2) throw std::domain_error("linking numbers need a two-strip Lorenz template");
  const OrbitWord w1 = OrbitWord::parse(o.w1, t.alphabet);
  const OrbitWord w2 = OrbitWord::parse(o.w2, t.alphabet);
  for (const auto* w : {&w1, &w2})
    if (!is_admissible(t.incidence, w->letters()))
      throw std::domain_error("orbit " + w->to_string(t.alphabet) + " is not admissible in the template");
  out << linking_number(t.embedding, w1, w2) << '\n';
}

// alex

struct AlexOptions {
  std::optional<std::string> expression;
  std::optional<std::string> input;
  bool raw = false;
  std::string orbit = "attractor";
};

LaurentPoly alex_of_presentation(const PresentationDocument& doc, bool raw) {
  const AbelianizationMap phi = doc.abelianization ? *doc.abelianization : solve_abelianization(doc.presentation);
  const LaurentPoly p = alexander_from_presentation(doc.presentation, phi, doc.deleted_column);
  return raw ? p : normalize(p);
}

void cmd_alex(const AlexOptions& o, std::ostream& out) {
  if (o.expression.has_value() == o.input.has_value())
    throw ParseError("alex needs exactly one of EXPR or --input");
  const bool repeller = o.orbit == "repeller";
  LaurentPoly result;
  if (o.expression) {
    const std::string& e = *o.expression;
    const auto first = e.find_first_not_of(" \t");
    if (first != std::string::npos && e[first] == '<')
      result = alex_of_presentation({GroupPresentation::parse(e), std::nullopt, std::nullopt}, o.raw);
    else
      result = alexander_of(KnotType::parse(e));
  } else {
    Document d = load(*o.input);
    if (const auto* s = std::get_if<SaddleData>(&d)) {
      const LinkingMatrix& l = repeller ? s->repeller_link() : s->attractor_link();
      result = o.raw ? alexander_determinant(l) : alexander_from_linking_matrix(l);
    } else if (const auto* p = std::get_if<PresentationDocument>(&d)) {
      result = alex_of_presentation(*p, o.raw);
    } else if (const auto* f = std::get_if<FlowDescriptor>(&d)) {
      result = repeller ? repeller_alexander_of_flow(*f) : alexander_of_flow(*f);
    } else if (const auto* k = std::get_if<KnotType>(&d)) {
      result = alexander_of(*k);
    } else {
      throw ParseError(*o.input + ": alex expects a saddle, presentation, flow or knot document, got " +
                       kind_name(d));
    }
  }
  out << result << '\n';
}

// classify

void cmd_classify(const std::string& input, std::ostream& out) {
  const auto doc = load_as<ProposalDocument>(input, "a proposal");
  const Verdict v = doc.fixed_points ? fixed_point_variant(doc.proposal) : validate(doc.proposal);
  if (const auto* r = std::get_if<Rejection>(&v)) {
    out << "UNREALIZABLE " << r->reason << '\n';
    return;
  }
  const auto& c = std::get<LorenzSmaleConfig>(v);
  out << "REALIZABLE " << c.name() << '\n';
  if (const auto* t = std::get_if<HopfTwisted>(&c.variant())) {
    out << "band: " << to_string(t->band) << '\n' << "twist: " << t->full_twists << '\n';
  } else if (const auto* k = std::get_if<HopfTorusCable>(&c.variant())) {
    out << "band: " << to_string(k->band) << '\n'
        << "core: " << to_string(PrimeFactor(k->knot)) << '\n'
        << "twist: " << k->twist() << '\n';
  }
  const ConfigInvariants inv = invariants_of(c);
  out << "ar_link: " << inv.ar_link.to_string() << '\n'
      << "lk_abs: " << inv.lk_abs << '\n'
      << "alexander_attractor: " << inv.alexander_attractor << '\n'
      << "alexander_repeller: " << inv.alexander_repeller << '\n';
}

// compose

struct ComposeOptions {
  std::string mode;
  std::vector<std::string> inputs;
  std::optional<std::string> knot;
  bool check_alexander = false;
};

// Compares two polynomials up to units and reports on `err`.
bool report(std::ostream& err, const std::string& what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  const bool ok = equal_up_to_units(lhs, rhs);
  err << (ok ? "PASS " : "FAIL ") << what << ": " << normalize(lhs) << (ok ? " = " : " != ") << normalize(rhs)
      << '\n';
  return ok;
}

int cmd_compose(const ComposeOptions& o, std::ostream& out, std::ostream& err) {
  FlowDescriptor result;
  bool ok = true;
  if (o.mode == "realize") {
    if (o.knot.has_value() + o.inputs.size() != 1) throw ParseError("compose realize needs one KNOT or one --input");
    const KnotType k = o.knot ? KnotType::parse(*o.knot) : load_as<KnotType>(o.inputs.front(), "a knot");
    result = realize_any_knot(k);
    if (o.check_alexander) ok = report(err, "alexander(attractor)", alexander_of_flow(result), alexander_of(k));
  } else {
    if (o.knot) throw ParseError("compose " + o.mode + " takes flow documents via --input, not a knot");
    if (o.inputs.size() != 2) throw ParseError("compose " + o.mode + " needs exactly two --input flow documents");
    const auto f1 = load_as<FlowDescriptor>(o.inputs[0], "a flow");
    const auto f2 = load_as<FlowDescriptor>(o.inputs[1], "a flow");
    if (o.mode == "sum") {
      result = compose_sum(f1, f2);
      if (o.check_alexander)
        ok = report(err, "alexander(k1 # k2)", alexander_of_flow(result),
                    alexander_of_flow(f1) * alexander_of_flow(f2));
    } else {
      result = compose_split(f1, f2);
      if (o.check_alexander) {
        ok = report(err, "alexander(attractor)", alexander_of_flow(result), alexander_of_flow(f1));
        ok = report(err, "alexander(repeller)", repeller_alexander_of_flow(result), alexander_of_flow(f2)) && ok;
      }
    }
  }
  out << dump(to_json(result));
  return ok ? 0 : 1;
}

// franks

void cmd_franks(const std::vector<std::string>& inputs, std::ostream& out) {
  std::vector<SaddleRecord> saddles;
  for (const auto& path : inputs) {
    Document d = load(path);
    if (auto* s = std::get_if<SaddleData>(&d)) saddles.emplace_back(std::move(*s));
    else if (auto* f = std::get_if<FlowDescriptor>(&d)) saddles.insert(saddles.end(), f->saddles.begin(), f->saddles.end());
    else throw ParseError(path + ": franks expects saddle or flow documents, got " + kind_name(d));
  }
  Integer product = 1;
  for (const auto& s : saddles) product = checked_mul(product, linking_factor(s));
  out << product << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of nonsingular Smale flows on S^3 and the Lorenz-Smale classification", "smaleflow"};
  app.require_subcommand(1);

  OrbitsOptions orbits;
  auto* orbits_cmd = app.add_subcommand("orbits", "List closed orbits of a subshift by period");
  orbits_cmd->add_option("--input", orbits.input, "Template or saddle document (default: Lorenz template)");
  orbits_cmd->add_option("--max-period", orbits.max_period, "Largest period to list")->capture_default_str();
  orbits_cmd->add_flag("--count-only", orbits.count_only, "Print 'n count' per period instead of the orbits");

  LinkOptions link;
  auto* link_cmd = app.add_subcommand("link", "Linking number of two orbits on the Lorenz template");
  link_cmd->add_option("W1", link.w1, "First orbit word")->required();
  link_cmd->add_option("W2", link.w2, "Second orbit word")->required();
  link_cmd->add_option("--input", link.input, "Template document (default: standard Lorenz)");

  AlexOptions alex;
  auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomial of a saddle, presentation, flow or knot");
  alex_cmd->add_option("EXPR", alex.expression, "Knot expression or presentation '<gens | relators>'");
  alex_cmd->add_option("--input", alex.input, "Document to read");
  alex_cmd->add_flag("--raw", alex.raw, "Print the determinant without normalizing");
  alex_cmd->add_option("--orbit", alex.orbit, "Which orbit of a saddle or flow")
      ->check(CLI::IsMember({"attractor", "repeller"}))
      ->capture_default_str();

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "Decide realizability of a Lorenz-Smale configuration");
  classify_cmd->add_option("--input", classify_input, "Proposal document")->required();

  ComposeOptions compose;
  auto* compose_cmd = app.add_subcommand("compose", "Compose flows: sum, split, or realize a knot");
  compose_cmd->add_option("MODE", compose.mode, "sum, split or realize")
      ->required()
      ->check(CLI::IsMember({"sum", "split", "realize"}));
  compose_cmd->add_option("KNOT", compose.knot, "Knot expression for realize");
  compose_cmd->add_option("--input", compose.inputs, "Flow documents (knot document for realize)");
  compose_cmd->add_flag("--check-alexander", compose.check_alexander,
                        "Verify the Alexander product identity; PASS/FAIL on stderr");

  std::vector<std::string> franks_inputs;
  auto* franks_cmd = app.add_subcommand("franks", "prod |det(I - S)| over the saddles of the given documents");
  franks_cmd->add_option("--input", franks_inputs, "Saddle or flow documents");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (orbits_cmd->parsed()) cmd_orbits(orbits, out);
    else if (link_cmd->parsed()) cmd_link(link, out);
    else if (alex_cmd->parsed()) cmd_alex(alex, out);
    else if (classify_cmd->parsed()) cmd_classify(classify_input, out);
    else if (compose_cmd->parsed()) return cmd_compose(compose, out, err);
    else if (franks_cmd->parsed()) cmd_franks(franks_inputs, out);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace smale::cli
