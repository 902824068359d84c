// Reading and writing BPA documents.
//
// Text format (line oriented, '#' starts a comment):
//
//     frame: w1 w2 w3
//     w1: 0.4
//     w1 w2: 0.1
//
// The first significant line names the frame; every following line assigns a
// mass to the subset given by its whitespace-separated labels. A JSON form
// is also accepted and emitted:
//
//     {"frame": ["w1","w2"], "masses": [{"subset": ["w1"], "mass": 0.6}, ...],
//      "name": "optional"}
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dst/mass_function.hpp"

namespace dst {

struct BpaEntry {
  std::vector<std::string> subset;
  double mass;
};

struct BpaDocument {
  std::vector<std::string> frame;
  std::vector<BpaEntry> entries;
  std::optional<std::string> name;
};

// Parses either format; input starting with '{' is treated as JSON.
// Errors carry a 1-based line/column position.
BpaDocument parse_bpa_document(std::string_view text);

BpaDocument parse_bpa_text(std::string_view text);
BpaDocument parse_bpa_json(std::string_view text);

// Validates the document into domain values.
std::pair<Frame, MassFunction> realize(const BpaDocument& document,
                                       MassValidation* validation = nullptr);

// Parse + realize in one step.
std::pair<Frame, MassFunction> parse_bpa(std::string_view text);

BpaDocument to_document(const MassFunction& m,
                        std::optional<std::string> name = std::nullopt);

// Text emission requires labels without whitespace, ':' or '#'; masses are
// printed with full round-trip precision.
std::string emit_text(const BpaDocument& document);
std::string emit_json(const BpaDocument& document);

}  // namespace dst
