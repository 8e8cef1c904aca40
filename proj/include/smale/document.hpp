#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "smale/classifier.hpp"
#include "smale/flow.hpp"
#include "smale/group.hpp"
#include "smale/lorenz_template.hpp"

namespace smale {

using Json = nlohmann::ordered_json;

/// JSON document formats shared by the CLI. Every document is an object
/// with a `kind` field; see README.md for the field reference.

struct TemplateDocument {
  IncidenceMatrix incidence = IncidenceMatrix::lorenz();
  Alphabet alphabet = Alphabet::lorenz();
  LorenzEmbedding embedding = LorenzEmbedding::standard();
};

struct PresentationDocument {
  GroupPresentation presentation;
  std::optional<AbelianizationMap> abelianization;
  std::optional<int> deleted_column;
};

struct ProposalDocument {
  ConfigProposal proposal;
  /// Attracting/repelling fixed points instead of closed orbits.
  bool fixed_points = false;
};

using Document =
    std::variant<TemplateDocument, SaddleData, PresentationDocument, ProposalDocument, FlowDescriptor, KnotType>;

/// Parses a document. Malformed JSON, an unknown kind, or missing or
/// mistyped fields throw ParseError naming `source` and the JSON path;
/// well-formed data violating a domain invariant throws std::domain_error
/// or std::invalid_argument.
Document parse_document(std::string_view text, const std::string& source = "<input>");
Document read_document(const std::string& path);

Json to_json(const IntMatrix& m);
Json to_json(const SaddleData& s);
Json to_json(const SaddleRecord& s);
Json to_json(const FlowDescriptor& f);
Json to_json(const ConfigProposal& p);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace smale
