#include "freicond/formats.hpp"

#include <fstream>
#include <sstream>

namespace freicond {

namespace {

struct Line {
  std::uint64_t number;
  std::string text;
};

// Content lines with comments and blanks stripped.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  std::uint64_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back({no, line.substr(first, last - first + 1)});
  }
  return out;
}

Int parse_int(const std::string& tok, std::uint64_t line) {
  bool ok = !tok.empty();
  for (std::size_t i = 0; ok && i < tok.size(); ++i) {
    char c = tok[i];
    ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && tok.size() > 1);
  }
  if (!ok) throw input_error("not an integer: '" + tok + "'", line);
  return Int(tok);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

IntSet parse_intset(const std::string& text) {
  std::vector<Int> values;
  for (const auto& l : content_lines(text)) {
    auto toks = split_ws(l.text);
    if (toks.size() != 1)
      throw input_error("expected one integer per line", l.number);
    values.push_back(parse_int(toks[0], l.number));
  }
  if (values.empty()) throw input_error("set file has no elements");
  return IntSet(std::move(values));
}

std::string serialize_intset(const IntSet& a) {
  std::string out;
  for (const Int& v : a.values()) {
    out += v.str();
    out += '\n';
  }
  return out;
}

PolySystem parse_polysystem(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw input_error("system file is empty");
  auto head = split_ws(lines[0].text);
  if (head.size() != 2 || head[0] != "vars")
    throw input_error("expected header 'vars s'", lines[0].number);
  Int sval = parse_int(head[1], lines[0].number);
  if (sval < 1 || sval > 64)
    throw input_error("variable count out of range", lines[0].number);
  auto s = sval.convert_to<std::uint32_t>();

  std::vector<Poly> polys;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    auto colon = l.text.find(':');
    if (colon == std::string::npos)
      throw input_error("expected 'poly:' or 'linear:' line", l.number);
    std::string tag = l.text.substr(0, colon);
    std::string body = l.text.substr(colon + 1);
    std::vector<Term> terms;
    if (tag == "poly") {
      for (const auto& part : split_on(body, ';')) {
        auto toks = split_ws(part);
        if (toks.empty())
          throw input_error("empty term in polynomial", l.number);
        if (toks.size() != 1u + s)
          throw input_error("term needs a coefficient and " +
                                std::to_string(s) + " exponents",
                            l.number);
        Term t;
        t.coeff = parse_int(toks[0], l.number);
        for (std::uint32_t j = 0; j < s; ++j) {
          Int e = parse_int(toks[1 + j], l.number);
          if (e < 0 || e > 64)
            throw input_error("exponent out of range", l.number);
          t.exps.push_back(e.convert_to<std::uint32_t>());
        }
        terms.push_back(std::move(t));
      }
    } else if (tag == "linear") {
      auto toks = split_ws(body);
      if (toks.size() != s + 1u)
        throw input_error("linear line needs " + std::to_string(s) +
                              " coefficients and a constant",
                          l.number);
      for (std::uint32_t j = 0; j < s; ++j) {
        Int c = parse_int(toks[j], l.number);
        if (c == 0) continue;
        Term t;
        t.coeff = c;
        t.exps.assign(s, 0);
        t.exps[j] = 1;
        terms.push_back(std::move(t));
      }
      Int b = parse_int(toks[s], l.number);
      if (b != 0) {
        Term t;
        t.coeff = -b;
        t.exps.assign(s, 0);
        terms.push_back(std::move(t));
      }
    } else {
      throw input_error("unknown line tag '" + tag + "'", l.number);
    }
    try {
      polys.emplace_back(s, std::move(terms));
    } catch (const input_error& e) {
      throw input_error(e.what(), l.number);
    }
  }
  if (polys.empty()) throw input_error("system file has no polynomials");
  return PolySystem(s, std::move(polys));
}

std::string serialize_polysystem(const PolySystem& p) {
  std::string out = "vars " + std::to_string(p.arity()) + "\n";
  for (const auto& poly : p.polys()) {
    out += "poly:";
    bool first = true;
    for (const auto& t : poly.terms()) {
      if (!first) out += " ;";
      first = false;
      out += ' ' + t.coeff.str();
      for (auto e : t.exps) out += ' ' + std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

MapTable parse_maptable(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw input_error("map file is empty");
  bool tfold = false;
  std::uint32_t fold = 1;
  std::vector<std::pair<Int, Int>> singles;
  std::vector<std::pair<std::vector<Int>, Int>> tuples;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& l = lines[li];
    auto arrow = l.text.find("->");
    if (arrow == std::string::npos)
      throw input_error("expected 'key -> value'", l.number);
    std::string keypart = l.text.substr(0, arrow);
    auto valtoks = split_ws(l.text.substr(arrow + 2));
    if (valtoks.size() != 1)
      throw input_error("expected a single image value", l.number);
    Int value = parse_int(valtoks[0], l.number);

    std::vector<Int> key;
    for (const auto& piece : split_on(keypart, ',')) {
      auto toks = split_ws(piece);
      if (toks.size() != 1)
        throw input_error("malformed key tuple", l.number);
      key.push_back(parse_int(toks[0], l.number));
    }
    if (li == 0) {
      tfold = key.size() > 1;
      fold = static_cast<std::uint32_t>(key.size());
    } else if (key.size() != fold) {
      throw input_error("inconsistent key tuple arity", l.number);
    }
    if (tfold)
      tuples.emplace_back(std::move(key), value);
    else
      singles.emplace_back(key[0], value);
  }
  return tfold ? MapTable::t_fold(fold, std::move(tuples))
               : MapTable::single(std::move(singles));
}

std::string serialize_maptable(const MapTable& m) {
  std::string out;
  for (std::uint64_t i = 0; i < m.size(); ++i) {
    const auto& key = m.keys()[i];
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (j) out += ", ";
      out += key[j].str();
    }
    out += " -> " + m.values()[i].str() + '\n';
  }
  return out;
}

SolutionSet parse_solutions(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.size() < 2) throw input_error("solutions file is too short");
  auto head = split_ws(lines[0].text);
  if (head.size() != 2 || head[0] != "arity")
    throw input_error("expected header 'arity s'", lines[0].number);
  auto s = parse_int(head[1], lines[0].number).convert_to<std::uint32_t>();

  auto gtoks = split_ws(lines[1].text);
  if (gtoks.empty() || gtoks[0] != "ground:")
    throw input_error("expected 'ground:' line", lines[1].number);
  std::vector<Int> ground;
  for (std::size_t j = 1; j < gtoks.size(); ++j)
    ground.push_back(parse_int(gtoks[j], lines[1].number));

  std::vector<std::vector<std::uint32_t>> tuples;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    auto toks = split_ws(lines[li].text);
    if (toks.empty() || toks[0] != "tuple:")
      throw input_error("expected 'tuple:' line", lines[li].number);
    if (toks.size() != 1u + s)
      throw input_error("tuple arity mismatch", lines[li].number);
    std::vector<std::uint32_t> t;
    for (std::size_t j = 1; j < toks.size(); ++j)
      t.push_back(parse_int(toks[j], lines[li].number)
                      .convert_to<std::uint32_t>());
    tuples.push_back(std::move(t));
  }
  return SolutionSet(IntSet(std::move(ground)), s, std::move(tuples));
}

std::string serialize_solutions(const SolutionSet& s) {
  std::string out = "arity " + std::to_string(s.arity()) + "\n";
  out += "ground:";
  for (const Int& v : s.ground().values()) out += ' ' + v.str();
  out += '\n';
  for (const auto& t : s.tuples()) {
    out += "tuple:";
    for (auto i : t) out += ' ' + std::to_string(i);
    out += '\n';
  }
  return out;
}

SolutionHypergraph parse_hypergraph(const std::string& text) {
  SolutionSet s = parse_solutions(text);
  IntSet vertices = s.ground();
  return SolutionHypergraph{std::move(vertices), std::move(s)};
}

std::string serialize_hypergraph(const SolutionHypergraph& g) {
  return serialize_solutions(g.edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

}  // namespace freicond
