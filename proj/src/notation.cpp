#include "mseg/notation.hpp"

#include <cctype>
#include <vector>

namespace mseg {

LineTable LineTable::standard() {
  LineTable t;
  t.lines_[""] = Line::standard();
  return t;
}

const Line& LineTable::get(const std::string& id, std::size_t pos) const {
  auto it = lines_.find(id);
  if (it == lines_.end()) throw parse_error("unknown line identifier '" + id + "'", pos);
  return it->second;
}

void LineTable::declare(const Line& line, std::size_t pos) {
  auto it = lines_.find(line.id);
  if (it != lines_.end()) {
    const Line& old = it->second;
    if (old.dim != line.dim || old.dual_id != line.dual_id)
      throw parse_error("conflicting redeclaration of line '" + line.id + "'", pos);
    return;
  }
  lines_[line.id] = line;
}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void skip_blanks() {  // spaces and tabs only, keeps newlines visible
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    std::size_t start = pos;
    if (peek() == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw parse_error("expected integer", start);
    return std::stoi(text.substr(start, pos - start));
  }
  std::string ident() {
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      throw parse_error("expected identifier", start);
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

struct LineDecl {
  Line line;  // dual_dim filled during resolution
  std::size_t pos;
};

void parse_preamble(Scanner& sc, LineTable& table) {
  std::vector<LineDecl> decls;
  while (true) {
    sc.skip_ws();
    if (sc.peek() != '@') break;
    std::size_t at = sc.pos;
    ++sc.pos;
    std::string kw = sc.ident();
    if (kw != "line") throw parse_error("unknown directive '@" + kw + "'", at);
    sc.skip_blanks();
    LineDecl d;
    d.pos = at;
    d.line.id = sc.ident();
    d.line.dual_id = d.line.id;
    while (true) {
      sc.skip_blanks();
      char c = sc.peek();
      if (c == '\0' || c == '\n') break;
      std::size_t kpos = sc.pos;
      std::string key = sc.ident();
      sc.expect('=');
      if (key == "dim") {
        d.line.dim = sc.integer();
        if (d.line.dim < 1) throw parse_error("line dim must be >= 1", kpos);
      } else if (key == "dual") {
        d.line.dual_id = sc.ident();
      } else {
        throw parse_error("unknown line attribute '" + key + "'", kpos);
      }
    }
    decls.push_back(std::move(d));
  }
  // resolve duals against the batch plus anything already in the table
  auto find_dim = [&](const std::string& id, std::size_t pos) -> int {
    for (const auto& d : decls)
      if (d.line.id == id) return d.line.dim;
    if (table.has(id)) return table.get(id, pos).dim;
    throw parse_error("dual line '" + id + "' not declared", pos);
  };
  auto find_dual_of = [&](const std::string& id, std::size_t pos) -> std::string {
    for (const auto& d : decls)
      if (d.line.id == id) return d.line.dual_id;
    if (table.has(id)) return table.get(id, pos).dual_id;
    throw parse_error("dual line '" + id + "' not declared", pos);
  };
  for (auto& d : decls) {
    d.line.dual_dim = find_dim(d.line.dual_id, d.pos);
    if (find_dual_of(d.line.dual_id, d.pos) != d.line.id)
      throw parse_error("line '" + d.line.id + "' and its dual '" + d.line.dual_id +
                            "' do not pair up",
                        d.pos);
  }
  for (const auto& d : decls) table.declare(d.line, d.pos);
}

Segment parse_one_segment(Scanner& sc, LineTable& table) {
  sc.skip_ws();
  std::size_t start = sc.pos;
  sc.expect('[');
  sc.skip_ws();
  int a = sc.integer();
  int b = a;
  sc.skip_ws();
  if (sc.peek() == ',') {
    ++sc.pos;
    sc.skip_ws();
    b = sc.integer();
    sc.skip_ws();
  }
  sc.expect(']');
  std::string id;
  if (sc.peek() == '_') {
    ++sc.pos;
    id = sc.ident();
  }
  if (b < a) throw parse_error("empty segments not writable: b < a", start);
  return Segment(table.get(id, start), a, b);
}

}  // namespace

Multisegment parse_multisegment(const std::string& text, LineTable& table) {
  Scanner sc{text};
  parse_preamble(sc, table);
  sc.skip_ws();
  if (sc.peek() == '0') {
    ++sc.pos;
    if (!sc.eof()) throw parse_error("trailing input after '0'", sc.pos);
    return Multisegment();
  }
  std::vector<Segment> segs;
  segs.push_back(parse_one_segment(sc, table));
  while (true) {
    sc.skip_ws();
    if (sc.peek() != '+') break;
    ++sc.pos;
    segs.push_back(parse_one_segment(sc, table));
  }
  if (!sc.eof()) throw parse_error("unexpected input", sc.pos);
  return Multisegment(std::move(segs));
}

Segment parse_segment(const std::string& text, LineTable& table) {
  Scanner sc{text};
  parse_preamble(sc, table);
  Segment s = parse_one_segment(sc, table);
  if (!sc.eof()) throw parse_error("unexpected input", sc.pos);
  return s;
}

std::string print_multisegment(const Multisegment& m) { return repr(m); }

std::string print_segment(const Segment& s) { return repr(s); }

nlohmann::json multisegment_to_json(const Multisegment& m) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& es = m.entries();
  for (std::size_t i = 0; i < es.size();) {
    std::size_t j = i;
    while (j < es.size() && es[j] == es[i]) ++j;
    arr.push_back({{"line", es[i].line().id},
                   {"a", es[i].a()},
                   {"b", es[i].b()},
                   {"mult", j - i}});
    i = j;
  }
  return arr;
}

Multisegment multisegment_from_json(const nlohmann::json& j, const LineTable& table) {
  std::vector<Segment> segs;
  for (const auto& e : j) {
    Segment s(table.get(e.at("line").get<std::string>(), 0), e.at("a").get<int>(),
              e.at("b").get<int>());
    std::size_t mult = e.value("mult", 1u);
    for (std::size_t k = 0; k < mult; ++k) segs.push_back(s);
  }
  return Multisegment(std::move(segs));
}

nlohmann::json segment_to_json(const Segment& s) {
  if (s.is_empty()) return nullptr;
  return {{"line", s.line().id}, {"a", s.a()}, {"b", s.b()}, {"mult", 1}};
}

}  // namespace mseg
