#pragma once
// Surface syntax for segments and multisegments.
//
//   Mult := "0" | Seg ("+" Seg)*
//   Seg  := "[" Int ("," Int)? "]" ("_" Ident)?
//
// An input may open with line declarations, one per line:
//   @line NAME dim=K dual=NAME2
// The default table holds one unnamed self-dual line of dim 1; a segment
// without a suffix lives on it. "[a]" is shorthand for "[a,a]".

#include <map>
#include <string>

#include "json.hpp"
#include "mseg/core.hpp"

namespace mseg {

class LineTable {
 public:
  static LineTable standard();

  const Line& get(const std::string& id, std::size_t pos) const;
  bool has(const std::string& id) const { return lines_.count(id) > 0; }
  // idempotent for identical redeclarations, throws on conflicts
  void declare(const Line& line, std::size_t pos);

 private:
  std::map<std::string, Line> lines_;
};

// Parses declarations (updating the table in place) followed by the
// expression. Throws parse_error with a byte offset on bad input.
Multisegment parse_multisegment(const std::string& text, LineTable& table);
Segment parse_segment(const std::string& text, LineTable& table);

// Canonical form; parse(print(m)) == m. Line declarations are not emitted,
// the caller's table is expected to know any named lines.
std::string print_multisegment(const Multisegment& m);
std::string print_segment(const Segment& s);

// JSON mirror: [{line, a, b, mult}, ...]
nlohmann::json multisegment_to_json(const Multisegment& m);
Multisegment multisegment_from_json(const nlohmann::json& j, const LineTable& table);
nlohmann::json segment_to_json(const Segment& s);

}  // namespace mseg
