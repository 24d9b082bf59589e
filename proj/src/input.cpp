#include "markedbases/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mb {

namespace {

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

bool is_blank(std::string_view s) { return skip_space(s, 0) == s.size(); }

// Splits at commas; each piece keeps its 0-based offset in `s`.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view s, std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.emplace_back(s.substr(start, i - start), offset + start);
      start = i + 1;
    }
  }
  return out;
}

// `keyword:` at the start of a line (after spaces); returns the offset just
// past the colon.
std::optional<std::size_t> section(std::string_view line, std::string_view keyword) {
  std::size_t i = skip_space(line, 0);
  if (line.substr(i, keyword.size()) != keyword) return std::nullopt;
  std::size_t j = skip_space(line, i + keyword.size());
  if (j < line.size() && line[j] == ':') return j + 1;
  return std::nullopt;
}

}  // namespace

MarkedSet<Rational> InputFile::marked_set() const {
  if (!ideal) throw std::invalid_argument("the input has no `J:` section");
  if (!has_marked) throw std::invalid_argument("the input has no `G:` section");
  return MarkedSet<Rational>(*ideal, marked);
}

InputFile parse_input(std::string_view text) {
  InputFile in;
  bool have_ring = false;
  bool in_marked = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto need_ring = [&](std::size_t col) {
    if (!have_ring) throw ParseError("`ring` must be declared first", line_no, col);
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    std::size_t first = skip_space(line, 0);
    if (first == line.size() || line[first] == '#') continue;

    if (line.substr(first, 4) == "ring" && (first + 4 == line.size() || std::isspace(static_cast<unsigned char>(line[first + 4])))) {
      if (have_ring) throw ParseError("`ring` declared twice", line_no, first + 1);
      std::vector<std::string> names;
      std::size_t i = first + 4;
      while (true) {
        i = skip_space(line, i);
        std::size_t start = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
        if (i == start) throw ParseError("expected a variable name", line_no, i + 1);
        names.emplace_back(line.substr(start, i - start));
        i = skip_space(line, i);
        if (i == line.size()) break;
        if (line[i] != '<') throw ParseError("expected `<` between variables", line_no, i + 1);
        ++i;
      }
      try {
        in.ring = Ring(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, first + 1);
      }
      have_ring = true;
      in_marked = false;
      continue;
    }
    if (auto c = section(line, "J")) {
      need_ring(first + 1);
      if (in.ideal) throw ParseError("`J:` declared twice", line_no, first + 1);
      std::vector<Term> gens;
      for (auto [piece, off] : split_commas(line.substr(*c), *c)) {
        if (is_blank(piece)) throw ParseError("empty generator", line_no, off + 1);
        gens.push_back(parse_term(piece, in.ring, line_no, off));
      }
      try {
        in.ideal.emplace(in.ring, std::move(gens));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, first + 1);
      }
      in_marked = false;
      continue;
    }
    if (auto c = section(line, "G")) {
      need_ring(first + 1);
      if (in.has_marked) throw ParseError("`G:` declared twice", line_no, first + 1);
      if (!is_blank(line.substr(*c))) throw ParseError("`G:` entries go on the following lines", line_no, *c + 1);
      in.has_marked = true;
      in_marked = true;
      continue;
    }
    if (auto c = section(line, "query")) {
      need_ring(first + 1);
      in.queries.push_back(parse_polynomial(line.substr(*c), in.ring, line_no, *c));
      in_marked = false;
      continue;
    }
    if (auto c = section(line, "I")) {
      need_ring(first + 1);
      if (in.generators) throw ParseError("`I:` declared twice", line_no, first + 1);
      std::vector<RationalPolynomial> gens;
      for (auto [piece, off] : split_commas(line.substr(*c), *c)) gens.push_back(parse_polynomial(piece, in.ring, line_no, off));
      in.generators = std::move(gens);
      in_marked = false;
      continue;
    }
    if (in_marked) {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected `HEAD : POLYNOMIAL`", line_no, first + 1);
      Term head = parse_term(line.substr(0, colon), in.ring, line_no, 0);
      auto poly = parse_polynomial(line.substr(colon + 1), in.ring, line_no, colon + 1);
      in.marked.push_back({std::move(head), std::move(poly)});
      continue;
    }
    throw ParseError("unknown section", line_no, first + 1);
  }
  if (!have_ring) throw ParseError("missing `ring` declaration", line_no == 0 ? 1 : line_no, 1);
  return in;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace mb
