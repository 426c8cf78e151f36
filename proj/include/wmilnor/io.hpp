#pragma once

// Diagram files:
//   {"m": 2, "strands": [
//     [{"id": 1, "role": "o", "sign": 1}],
//     [{"id": 1, "role": "u", "sign": 1}]
//   ]}
// write_diagram emits exactly this layout, so parse/write round-trips
// byte for byte on canonically relabelled codes.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gauss_code.hpp"

namespace wmilnor {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline GaussCode parse_diagram(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const int m = j.at("m").get<int>();
    const auto& strands = j.at("strands");
    if (!strands.is_array()) throw ParseError("\"strands\" must be an array");
    GaussCode code(m, {});
    for (const auto& s : strands) {
      if (!s.is_array()) throw ParseError("each strand must be an array");
      Strand strand;
      for (const auto& p : s) {
        const std::string role = p.at("role").get<std::string>();
        if (role != "o" && role != "u") throw ParseError("role must be \"o\" or \"u\"");
        strand.push_back({p.at("id").get<int>(), role == "o" ? Role::over : Role::under, p.at("sign").get<int>()});
      }
      code.strands.push_back(std::move(strand));
    }
    auto report = validate(code);
    if (!report) throw ParseError("invalid diagram: " + report.to_string());
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad diagram structure: ") + e.what());
  }
}

inline std::string write_diagram(const GaussCode& code) {
  std::ostringstream os;
  os << "{\"m\": " << code.m << ", \"strands\": [";
  for (std::size_t i = 0; i < code.strands.size(); ++i) {
    os << (i ? ",\n  [" : "\n  [");
    const auto& s = code.strands[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      os << (k ? ", " : "") << "{\"id\": " << s[k].id << ", \"role\": \""
         << (s[k].role == Role::over ? 'o' : 'u') << "\", \"sign\": " << s[k].sign << '}';
    }
    os << ']';
  }
  os << (code.strands.empty() ? "]}\n" : "\n]}\n");
  return os.str();
}

inline GaussCode read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

}  // namespace wmilnor
