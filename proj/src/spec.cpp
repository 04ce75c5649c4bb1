/**
 * @file spec.cpp
 * @brief Parser, emitter and builder for instance description files.
 */
#include "gsym/spec.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "gsym/error.hpp"

namespace gsym {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw Error("parse-error", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool is_vertex_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') return false;
  for (size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

/** Cursor over one line; columns are reported from 1. */
class Cursor {
 public:
  Cursor(const std::string& s, int line, size_t start = 0) : s_(s), line_(line), pos_(start) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) error("expected " + what);
  }
  void expect_arrow() {
    skip_ws();
    if (s_.compare(pos_, 2, "->") != 0) error("expected '->'");
    pos_ += 2;
  }
  long long integer(const std::string& what) {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error("expected " + what);
    }
    if (pos_ - digits > 15) {
      pos_ = start;
      error("integer too large");
    }
    return std::stoll(s_.substr(start, pos_ - start));
  }
  std::string identifier(const std::string& what) {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
    }
    if (pos_ == start) error("expected " + what);
    return s_.substr(start, pos_ - start);
  }
  void end(const std::string& what) {
    if (!done()) error("unexpected text after " + what);
  }
  [[noreturn]] void error(const std::string& msg) { fail(line_, static_cast<int>(pos_) + 1, msg); }
  int column() {
    skip_ws();
    return static_cast<int>(pos_) + 1;
  }
  int line() const { return line_; }

 private:
  const std::string& s_;
  int line_;
  size_t pos_;
};

/** Parses "sign? factor ('*' factor)* (('+'|'-') term)*". */
Combination parse_combination(Cursor& c, const std::map<std::string, int>& arrows, int vertices, bool allow_vertices) {
  Combination out;
  bool first = true;
  while (true) {
    Rational sign(1);
    if (c.accept('-')) {
      sign = Rational(-1);
    } else if (c.accept('+')) {
    } else if (!first) {
      break;
    }
    first = false;
    TermSpec t;
    t.coeff.rational = sign;
    while (true) {
      char ch = c.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        long long num = c.integer("a number");
        long long den = 1;
        if (c.accept('/')) {
          den = c.integer("a denominator");
          if (den <= 0) c.error("denominators must be positive");
        }
        t.coeff.rational = t.coeff.rational * Rational(num, den);
      } else if (c.accept_word("zeta")) {
        c.expect('(', "'(' after zeta");
        long long k = c.integer("the order of the root of unity");
        if (k < 1) c.error("the order of a root of unity must be positive");
        c.expect(')', "')'");
        long long j = 1;
        if (c.accept('^')) j = c.integer("an exponent");
        t.coeff.roots.push_back({static_cast<int>(k), j});
      } else {
        int col = c.column();
        std::string id = c.identifier("a number, zeta(k)^j, an arrow or a vertex");
        if (is_vertex_name(id)) {
          if (!allow_vertices) fail(c.line(), col, "vertex idempotents are not allowed here");
          int v = std::stoi(id.substr(1));
          if (v < 1 || v > vertices) fail(c.line(), col, "unknown vertex " + id);
        } else if (!arrows.count(id)) {
          fail(c.line(), col, "unknown arrow '" + id + "'");
        }
        t.word.push_back(id);
      }
      if (!c.accept('*')) break;
    }
    out.push_back(std::move(t));
    char nx = c.peek();
    if (nx != '+' && nx != '-') break;
  }
  return out;
}

enum class Section { None, Field, Quiver, Relations, Group, Options };

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

Rational abs_rational(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::string emit_combination(const Combination& comb) {
  std::string out;
  if (comb.empty()) return "0";
  for (size_t k = 0; k < comb.size(); ++k) {
    const TermSpec& t = comb[k];
    const bool neg = t.coeff.rational.sign() < 0;
    if (k == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::vector<std::string> factors;
    Rational a = abs_rational(t.coeff.rational);
    if (!a.is_one() || (t.word.empty() && t.coeff.roots.empty())) factors.push_back(a.str());
    for (auto& [kk, j] : t.coeff.roots) factors.push_back("zeta(" + std::to_string(kk) + ")^" + std::to_string(j));
    for (auto& w : t.word) factors.push_back(w);
    for (size_t f = 0; f < factors.size(); ++f) out += (f ? "*" : "") + factors[f];
  }
  return out;
}

Scalar eval_scalar(const FieldCtx* F, const ScalarExpr& s) {
  Scalar v(s.rational);
  for (auto& [k, j] : s.roots) v *= root_of_unity(F, k, j);
  return v;
}

}  // namespace

InstanceSpec parse_spec(const std::string& text) {
  InstanceSpec spec;
  std::map<std::string, int> arrows;
  Section sec = Section::None;
  bool quiver_seen = false, vertices_seen = false;
  int first_data_line = 0;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = strip_comment(raw);
    Cursor c(line, lineno);
    if (c.done()) continue;
    if (c.accept('[')) {
      std::string name = c.identifier("a section name");
      c.expect(']', "']'");
      c.end("the section header");
      if (name == "field") sec = Section::Field;
      else if (name == "quiver") sec = Section::Quiver, quiver_seen = true;
      else if (name == "relations") sec = Section::Relations;
      else if (name == "group") sec = Section::Group;
      else if (name == "options") sec = Section::Options;
      else fail(lineno, 2, "unknown section [" + name + "]");
      continue;
    }
    if (!first_data_line) first_data_line = lineno;
    switch (sec) {
      case Section::None:
        c.error("data outside of a section");
      case Section::Field: {
        if (!c.accept_word("m")) c.error("expected 'm = <int>'");
        c.expect('=', "'='");
        long long m = c.integer("the field conductor");
        if (m < 1) c.error("the field conductor must be positive");
        c.end("the conductor");
        spec.m = static_cast<int>(m);
        break;
      }
      case Section::Quiver: {
        if (c.accept_word("vertices")) {
          c.expect('=', "'='");
          long long v = c.integer("the number of vertices");
          if (v < 1 || v > 10000) c.error("the number of vertices must be between 1 and 10000");
          c.end("the number of vertices");
          spec.vertices = static_cast<int>(v);
          vertices_seen = true;
        } else if (c.accept_word("arrow")) {
          if (!vertices_seen) c.error("declare 'vertices = <int>' before the arrows");
          int col = c.column();
          std::string name = c.identifier("an arrow name");
          if (is_vertex_name(name) || name == "zeta") fail(lineno, col, "reserved arrow name '" + name + "'");
          if (arrows.count(name)) fail(lineno, col, "duplicate arrow '" + name + "'");
          c.expect(':', "':'");
          int scol = c.column();
          long long s = c.integer("the source vertex");
          if (s < 1 || s > spec.vertices) fail(lineno, scol, "vertex out of range");
          c.expect_arrow();
          int tcol = c.column();
          long long t = c.integer("the target vertex");
          if (t < 1 || t > spec.vertices) fail(lineno, tcol, "vertex out of range");
          c.end("the arrow");
          arrows[name] = static_cast<int>(spec.arrows.size());
          spec.arrows.push_back({name, static_cast<int>(s - 1), static_cast<int>(t - 1)});
        } else {
          c.error("expected 'vertices = <int>' or 'arrow <name>: <src> -> <tgt>'");
        }
        break;
      }
      case Section::Relations:
      case Section::Group: {
        if (!quiver_seen || !vertices_seen) c.error("missing [quiver] section before this line");
        if (sec == Section::Relations) {
          if (c.accept_word("truncate")) {
            c.expect('=', "'='");
            long long t = c.integer("the truncation length");
            if (t < 0) c.error("the truncation length must be nonnegative");
            c.end("the truncation length");
            spec.truncate = static_cast<int>(t);
          } else {
            Combination comb = parse_combination(c, arrows, spec.vertices, false);
            c.end("the relation");
            spec.relations.push_back(std::move(comb));
          }
        } else if (c.accept_word("generator")) {
          GeneratorSpec g;
          g.name = c.identifier("a generator name");
          if (!c.accept_word("order")) c.error("expected 'order'");
          long long o = c.integer("the order");
          if (o < 1) c.error("the order must be positive");
          c.end("the generator");
          g.order = static_cast<int>(o);
          spec.generators.push_back(std::move(g));
        } else if (c.accept_word("maps")) {
          if (spec.generators.empty()) c.error("'maps' before any 'generator'");
          MapSpec m;
          m.line = lineno;
          int col = c.column();
          m.source = c.identifier("a vertex or an arrow");
          if (is_vertex_name(m.source)) {
            int v = std::stoi(m.source.substr(1));
            if (v < 1 || v > spec.vertices) fail(lineno, col, "unknown vertex " + m.source);
          } else if (!arrows.count(m.source)) {
            fail(lineno, col, "unknown arrow '" + m.source + "'");
          }
          c.expect_arrow();
          m.image = parse_combination(c, arrows, spec.vertices, true);
          c.end("the image");
          spec.generators.back().maps.push_back(std::move(m));
        } else {
          c.error("expected 'generator <name> order <int>' or 'maps <x> -> <combination>'");
        }
        break;
      }
      case Section::Options: {
        std::string key = c.identifier("an option name");
        c.expect('=', "'='");
        long long v = c.integer("an integer value");
        c.end("the option");
        if (key == "max_length" && v >= 1) spec.max_length = static_cast<int>(v);
        else if (key == "budget" && v >= 1) spec.budget = static_cast<int>(v);
        else fail(lineno, 1, "unknown option or invalid value '" + key + "'");
        break;
      }
    }
  }
  if (!quiver_seen || !vertices_seen) fail(first_data_line ? first_data_line : 1, 1, "missing [quiver] section");
  return spec;
}

std::string emit_spec(const InstanceSpec& spec) {
  std::ostringstream out;
  if (spec.m) out << "[field]\nm = " << *spec.m << "\n";
  out << "[quiver]\nvertices = " << spec.vertices << "\n";
  for (auto& a : spec.arrows) out << "arrow " << a.name << ": " << a.src + 1 << " -> " << a.tgt + 1 << "\n";
  if (!spec.relations.empty() || spec.truncate) {
    out << "[relations]\n";
    for (auto& r : spec.relations) out << emit_combination(r) << "\n";
    if (spec.truncate) out << "truncate = " << spec.truncate << "\n";
  }
  if (!spec.generators.empty()) {
    out << "[group]\n";
    for (auto& g : spec.generators) {
      out << "generator " << g.name << " order " << g.order << "\n";
      for (auto& m : g.maps) out << "maps " << m.source << " -> " << emit_combination(m.image) << "\n";
    }
  }
  if (spec.max_length != 24 || spec.budget != 4096)
    out << "[options]\nmax_length = " << spec.max_length << "\nbudget = " << spec.budget << "\n";
  return out.str();
}

int spec_conductor(const InstanceSpec& spec) {
  if (spec.m) return *spec.m;
  int m = 1;
  for (auto& g : spec.generators) m = std::lcm(m, g.order);
  auto visit = [&](const Combination& c) {
    for (auto& t : c)
      for (auto& [k, j] : t.coeff.roots) m = std::lcm(m, k);
  };
  for (auto& r : spec.relations) visit(r);
  for (auto& g : spec.generators)
    for (auto& mp : g.maps) visit(mp.image);
  return m;
}

Instance build_instance(const InstanceSpec& spec, std::string name) {
  const FieldCtx* F = make_field(spec_conductor(spec));
  AlgebraPresentation p;
  p.field = F;
  p.vertices = spec.vertices;
  std::map<std::string, int> arrow_of;
  for (auto& a : spec.arrows) {
    arrow_of[a.name] = static_cast<int>(p.arrows.size());
    p.arrows.push_back({a.name, a.src, a.tgt});
  }
  for (auto& r : spec.relations) {
    std::vector<PathTerm> rel;
    for (auto& t : r) {
      PathTerm pt;
      pt.coeff = eval_scalar(F, t.coeff);
      for (auto& w : t.word) pt.word.push_back(arrow_of.at(w));
      rel.push_back(std::move(pt));
    }
    p.relations.push_back(std::move(rel));
  }
  p.truncate = spec.truncate;
  p.max_length = spec.max_length;
  AlgebraPtr A = build_algebra(p);

  auto factor = [&](const std::string& f) -> SVec {
    if (is_vertex_name(f)) return svec_unit(A->vertex_index[std::stoi(f.substr(1)) - 1]);
    int idx = A->arrow_index[arrow_of.at(f)];
    return idx < 0 ? SVec{} : svec_unit(static_cast<uint32_t>(idx));
  };
  std::vector<GroupGenerator> gens;
  for (auto& g : spec.generators) {
    std::vector<std::pair<uint32_t, SVec>> images;
    for (auto& m : g.maps) {
      uint32_t src;
      if (is_vertex_name(m.source)) {
        src = A->vertex_index[std::stoi(m.source.substr(1)) - 1];
      } else {
        int idx = A->arrow_index[arrow_of.at(m.source)];
        require(idx >= 0, "bad-presentation",
                "line " + std::to_string(m.line) + ": arrow '" + m.source + "' is zero in the algebra");
        src = static_cast<uint32_t>(idx);
      }
      SVec img;
      for (auto& t : m.image) {
        SVec v = A->one();
        for (auto& w : t.word) v = A->mul(v, factor(w));
        img = svec_axpy(img, eval_scalar(F, t.coeff), v);
      }
      images.push_back({src, std::move(img)});
    }
    gens.push_back({g.name, g.order, generator_matrix(*A, images)});
  }
  GroupActionPtr act = build_group_action(A, gens);
  return {A, act, std::move(name)};
}

}  // namespace gsym
