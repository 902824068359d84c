#include "dst/bpa_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dst {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Splits a line at the comment marker and tokenizes on whitespace.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t end = line.find('#');
  if (end == std::string_view::npos) end = line.size();
  std::size_t i = 0;
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

double parse_mass(const std::string& text, int line_no, int column) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(errc::syntax, "expected a decimal mass, got '" + text + "'",
                     line_no, column);
  }
  return value;
}

std::string format_mass(double mass) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", mass);
  return buffer;
}

void check_text_label(const std::string& label) {
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#') {
      throw ValidationError(errc::invalid_argument,
                            "label '" + label +
                                "' is not representable in the text format");
    }
  }
}

int line_of_offset(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

BpaDocument parse_bpa_text(std::string_view text) {
  BpaDocument doc;
  bool have_frame = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens.empty()) {
      // the colon may be glued to the last label or stand alone
      int colon_index = -1;
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        if (tokens[t].text == ":") {
          colon_index = static_cast<int>(t);
          tokens.erase(tokens.begin() + static_cast<long>(t));
          break;
        }
        if (tokens[t].text.size() > 1 && tokens[t].text.back() == ':') {
          colon_index = static_cast<int>(t) + 1;
          tokens[t].text.pop_back();
          break;
        }
      }
      if (colon_index < 0) {
        throw ParseError(errc::syntax, "expected '<labels>: <mass>'", line_no,
                         tokens.front().column);
      }
      std::vector<Token> head(tokens.begin(), tokens.begin() + colon_index);
      std::vector<Token> tail(tokens.begin() + colon_index, tokens.end());

      if (!have_frame) {
        if (head.size() != 1 || head.front().text != "frame") {
          throw ParseError(errc::syntax,
                           "first line must be 'frame: <label> <label> ...'",
                           line_no, head.empty() ? 1 : head.front().column);
        }
        if (tail.empty()) {
          throw ParseError(errc::empty_frame, "frame has no labels", line_no,
                           1);
        }
        for (auto& token : tail) doc.frame.push_back(std::move(token.text));
        have_frame = true;
      } else {
        if (head.empty()) {
          throw ParseError(errc::empty_set,
                           "mass line names no subset labels", line_no, 1);
        }
        if (tail.size() != 1) {
          throw ParseError(errc::syntax, "expected exactly one mass value",
                           line_no,
                           tail.empty() ? static_cast<int>(line.size()) + 1
                                        : tail[1].column);
        }
        BpaEntry entry;
        for (std::size_t t = 0; t < head.size(); ++t) {
          for (std::size_t u = t + 1; u < head.size(); ++u) {
            if (head[t].text == head[u].text) {
              throw ParseError(errc::duplicate_label,
                               "label '" + head[u].text +
                                   "' repeated within a subset",
                               line_no, head[u].column);
            }
          }
          entry.subset.push_back(std::move(head[t].text));
        }
        entry.mass = parse_mass(tail.front().text, line_no,
                                tail.front().column);
        doc.entries.push_back(std::move(entry));
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (!have_frame) {
    throw ParseError(errc::syntax, "no frame line found", 1, 1);
  }
  return doc;
}

BpaDocument parse_bpa_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(errc::syntax, err.what(),
                     line_of_offset(text, err.byte), 1);
  }
  auto fail = [](const std::string& message) -> ParseError {
    return ParseError(errc::syntax, message, 1, 1);
  };
  if (!root.is_object()) throw fail("top-level JSON value must be an object");
  if (!root.contains("frame") || !root["frame"].is_array()) {
    throw fail("missing 'frame' array");
  }
  if (!root.contains("masses") || !root["masses"].is_array()) {
    throw fail("missing 'masses' array");
  }
  BpaDocument doc;
  for (const auto& label : root["frame"]) {
    if (!label.is_string()) throw fail("frame labels must be strings");
    doc.frame.push_back(label.get<std::string>());
  }
  for (const auto& item : root["masses"]) {
    if (!item.is_object() || !item.contains("subset") ||
        !item["subset"].is_array() || !item.contains("mass") ||
        !item["mass"].is_number()) {
      throw fail("each mass entry needs a 'subset' array and a 'mass' number");
    }
    BpaEntry entry;
    for (const auto& label : item["subset"]) {
      if (!label.is_string()) throw fail("subset labels must be strings");
      entry.subset.push_back(label.get<std::string>());
    }
    entry.mass = item["mass"].get<double>();
    doc.entries.push_back(std::move(entry));
  }
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw fail("'name' must be a string");
    doc.name = root["name"].get<std::string>();
  }
  return doc;
}

BpaDocument parse_bpa_document(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_bpa_json(text);
    break;
  }
  return parse_bpa_text(text);
}

std::pair<Frame, MassFunction> realize(const BpaDocument& document,
                                       MassValidation* validation) {
  Frame frame = make_frame(document.frame);
  std::vector<MassEntry> entries;
  entries.reserve(document.entries.size());
  for (const BpaEntry& entry : document.entries) {
    entries.push_back({frame.subset(entry.subset), entry.mass});
  }
  MassFunction m = make_mass(frame, std::move(entries), validation);
  return {std::move(frame), std::move(m)};
}

std::pair<Frame, MassFunction> parse_bpa(std::string_view text) {
  return realize(parse_bpa_document(text));
}

BpaDocument to_document(const MassFunction& m,
                        std::optional<std::string> name) {
  BpaDocument doc;
  doc.frame = m.frame().labels();
  for (const MassEntry& e : m.focal_elements()) {
    doc.entries.push_back({m.frame().member_labels(e.set), e.mass});
  }
  doc.name = std::move(name);
  return doc;
}

std::string emit_text(const BpaDocument& document) {
  for (const auto& label : document.frame) check_text_label(label);
  std::ostringstream out;
  out << "frame:";
  for (const auto& label : document.frame) out << ' ' << label;
  out << '\n';
  for (const BpaEntry& entry : document.entries) {
    for (std::size_t i = 0; i < entry.subset.size(); ++i) {
      check_text_label(entry.subset[i]);
      out << (i == 0 ? "" : " ") << entry.subset[i];
    }
    out << ": " << format_mass(entry.mass) << '\n';
  }
  return out.str();
}

std::string emit_json(const BpaDocument& document) {
  nlohmann::json root;
  root["frame"] = document.frame;
  root["masses"] = nlohmann::json::array();
  for (const BpaEntry& entry : document.entries) {
    root["masses"].push_back({{"subset", entry.subset}, {"mass", entry.mass}});
  }
  if (document.name) root["name"] = *document.name;
  return root.dump(2) + "\n";
}

}  // namespace dst
