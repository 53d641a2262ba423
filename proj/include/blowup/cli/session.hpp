#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "blowup/context.hpp"
#include "blowup/parse.hpp"

namespace blowup::cli {

/// Source position. Positions never take part in AST equality, so a
/// pretty-printed session re-parses to an identical tree.
struct Pos {
  std::size_t line = 1, column = 1;
  friend bool operator==(const Pos&, const Pos&) { return true; }
};

struct RingDecl {
  std::string name;
  std::string model;  // poly | semigroup | quotient
  std::vector<std::string> vars;
  std::vector<unsigned> gens;          // semigroup generators
  std::vector<std::string> relations;  // canonical text
  std::vector<std::string> flags;
  Pos pos;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name, ring;
  std::vector<std::string> generators;  // canonical text
  Pos pos;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct ModuleDecl {
  std::string name, base;  // M = R / base
  Pos pos;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct Arg {
  enum class Kind { ring, ideal, module, integer, polynomial };
  Kind kind = Kind::integer;
  std::string text;  // a declared name, a decimal integer, or a canonical polynomial
  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Command {
  std::string op;
  std::vector<Arg> args;
  std::optional<std::uint64_t> horizon, seed, window;
  Pos pos;
  friend bool operator==(const Command&, const Command&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, ModuleDecl, Command>;

/// Argument shapes: required kinds, then '|' and optional kinds matched in order.
/// R ring, I ideal, M module, n natural, z integer, f polynomial.
inline const std::map<std::string, std::string>& signatures() {
  static const std::map<std::string, std::string> table = {
      {"dim", "R"},
      {"colength", "I"},
      {"member", "fI|n"},
      {"equals", "II"},
      {"is_m_primary", "I"},
      {"mingens", "I"},
      {"power", "In"},
      {"product", "II"},
      {"colon", "II"},
      {"intersect", "II"},
      {"rr", "I|nM"},
      {"sstar", "I|M"},
      {"reduction", "I|M"},
      {"reduction_number", "II|M"},
      {"superficial", "fI|M"},
      {"independence", "I|nM"},
      {"reg", "I|M"},
      {"reg_max", "I"},
      {"reg_mafigene", "I|M"},
      {"reg_colon", "I|M"},
      {"reg_postulation", "I"},
      {"rtt", "I"},
      {"section", "IfM"},
      {"hilbert", "Iz|M"},
      {"hilbert_fit", "I|M"},
      {"postulation", "I|M"},
      {"marley", "I|M"},
      {"ulrich", "I|I"},
      {"ulrich_reg", "I"},
      {"ulrich_closed_form", "nnn"},
      {"gorenstein_form", "nnz"},
      {"genitoh", "I|I"},
      {"rees", "I"},
      {"linear_type", "I"},
      {"lintype_rednum", "I"},
  };
  return table;
}

/// Options a run starts from; a command's own clauses take precedence.
struct Defaults {
  std::optional<std::uint64_t> horizon, seed, window;
};

struct Session {
  std::vector<Statement> statements;
  std::map<std::string, Ring> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, CyclicModule> modules;

  /// One power cache per option tuple, so results never depend on command order.
  Context& context(unsigned horizon, std::uint64_t seed, unsigned window) {
    auto& slot = contexts_[{horizon, seed, window}];
    if (!slot) {
      Options o;
      o.horizon = horizon;
      o.seed = seed;
      o.window = window;
      slot = std::make_unique<Context>(o);
    }
    return *slot;
  }

  std::vector<const Command*> commands() const {
    std::vector<const Command*> out;
    for (const auto& s : statements)
      if (const auto* c = std::get_if<Command>(&s)) out.push_back(c);
    return out;
  }

 private:
  std::map<std::tuple<unsigned, std::uint64_t, unsigned>, std::unique_ptr<Context>> contexts_;
};

namespace detail {

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : s_(text) {}

  Session parse() {
    Session out;
    for (;;) {
      skip();
      if (i_ >= s_.size()) break;
      statement(out);
    }
    return out;
  }

 private:
  struct Piece {
    std::string text;
    std::size_t at = 0;
  };

  Pos pos_at(std::size_t i) const {
    Pos p;
    for (std::size_t k = 0; k < i && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void error_at(std::size_t i, const std::string& what) const {
    const Pos p = pos_at(i);
    throw ParseError(what, p.line, p.column);
  }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) error_at(i_, std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident(const char* what) {
    skip();
    if (i_ >= s_.size() || !ident_start(s_[i_])) error_at(i_, std::string("expected ") + what);
    const std::size_t start = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  std::uint64_t natural(const char* what) {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error_at(start, std::string("expected ") + what);
    if (i_ - start > 9) error_at(start, std::string(what) + " too large");
    return std::stoull(std::string(s_.substr(start, i_ - start)));
  }

  /// Peek at the next identifier without consuming it.
  std::string peek_word() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && ident_char(s_[j])) ++j;
    return std::string(s_.substr(i_, j - i_));
  }

  /// Comma-separated raw items up to `stop` at depth 0; the terminator is not consumed.
  std::vector<Piece> pieces(char stop) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = i_;
    for (;; ++i_) {
      const bool end = i_ >= s_.size();
      const char c = end ? '\0' : s_[i_];
      if (!end && c == '(') ++depth;
      if (!end && c == ')' && depth > 0) {
        --depth;
        continue;
      }
      if (end || (depth == 0 && (c == ',' || c == stop || c == ';'))) {
        Piece p{std::string(s_.substr(start, i_ - start)), start};
        while (!p.text.empty() && std::isspace(static_cast<unsigned char>(p.text.front()))) {
          p.text.erase(p.text.begin());
          ++p.at;
        }
        while (!p.text.empty() && std::isspace(static_cast<unsigned char>(p.text.back()))) p.text.pop_back();
        if (p.text.empty()) {
          if (end || c == stop || c == ';') {
            if (!out.empty()) error_at(start, "empty item");
            return out;
          }
          error_at(start, "empty item");
        }
        out.push_back(std::move(p));
        if (end || c != ',') return out;
        start = i_ + 1;
      }
    }
  }

  Polynomial poly(const Piece& p, const std::vector<std::string>& vars) const {
    try {
      return blowup::detail::PolyReader(p.text, vars).parse_all();
    } catch (const ParseError& e) {
      error_at(p.at + (e.column() - 1), e.message());
    }
  }

  void declare(Session& out, const std::string& name, std::size_t at) {
    if (out.rings.count(name) || out.ideals.count(name) || out.modules.count(name))
      error_at(at, "name '" + name + "' is already declared");
  }

  void end_statement() {
    skip();
    if (i_ >= s_.size()) return;
    if (!eat(';')) error_at(i_, "expected ';'");
  }

  void statement(Session& out) {
    const std::size_t at = i_;
    const std::string kw = ident("a statement");
    if (kw == "ring") ring_decl(out, at);
    else if (kw == "ideal") ideal_decl(out, at);
    else if (kw == "module") module_decl(out, at);
    else if (kw == "compute") command(out, at);
    else error_at(at, "unknown statement '" + kw + "'");
    end_statement();
  }

  std::vector<std::string> names_list() {
    std::vector<std::string> v{ident("a variable")};
    while (eat(',')) v.push_back(ident("a variable"));
    return v;
  }

  void ring_decl(Session& out, std::size_t at) {
    RingDecl d;
    d.pos = pos_at(at);
    const std::size_t name_at = (skip(), i_);
    d.name = ident("a ring name");
    declare(out, d.name, name_at);
    expect('=');
    const std::size_t model_at = (skip(), i_);
    d.model = ident("poly, semigroup or quotient");
    expect('(');
    std::vector<Polynomial> rels;
    if (d.model == "poly") {
      d.vars = names_list();
    } else if (d.model == "semigroup") {
      d.gens.push_back(static_cast<unsigned>(natural("a semigroup generator")));
      while (eat(',')) d.gens.push_back(static_cast<unsigned>(natural("a semigroup generator")));
    } else if (d.model == "quotient") {
      d.vars = names_list();
      expect(';');
      for (const auto& p : pieces(')')) {
        rels.push_back(poly(p, d.vars));
        d.relations.push_back(to_string(rels.back(), d.vars));
      }
      if (rels.empty()) error_at(i_, "a quotient needs at least one relation");
    } else {
      error_at(model_at, "unknown ring model '" + d.model + "'");
    }
    expect(')');
    RingFlags flags;
    if (eat('[')) {
      do {
        const std::size_t flag_at = (skip(), i_);
        const std::string f = ident("a flag");
        if (f == "cm") flags.cohen_macaulay = true;
        else if (f == "gorenstein") flags.gorenstein = true;
        else if (f == "buchsbaum") flags.buchsbaum = true;
        else error_at(flag_at, "unknown flag '" + f + "'");
        d.flags.push_back(f);
        eat(',');
        skip();
      } while (i_ < s_.size() && s_[i_] != ']');
      expect(']');
    }
    try {
      Ring r = d.model == "poly"        ? RingSpec::polynomial(d.vars, flags)
               : d.model == "semigroup" ? RingSpec::semigroup(d.gens, flags)
                                        : RingSpec::quotient(d.vars, rels, flags);
      out.rings.emplace(d.name, std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      error_at(at, e.what());
    }
    current_ring_ = d.name;
    out.statements.emplace_back(std::move(d));
  }

  void ideal_decl(Session& out, std::size_t at) {
    IdealDecl d;
    d.pos = pos_at(at);
    const std::size_t name_at = (skip(), i_);
    d.name = ident("an ideal name");
    declare(out, d.name, name_at);
    if (current_ring_.empty()) error_at(at, "ideal declared before any ring");
    d.ring = current_ring_;
    expect('=');
    skip();
    const Ring& R = out.rings.at(d.ring);
    std::vector<Polynomial> gens;
    for (const auto& p : pieces(';')) {
      gens.push_back(poly(p, R->variables()));
      d.generators.push_back(to_string(gens.back(), R->variables()));
    }
    if (gens.empty()) error_at(i_, "an ideal needs at least one generator");
    try {
      out.ideals.emplace(d.name, Ideal(R, std::move(gens)));
    } catch (const Error& e) {
      error_at(at, e.what());
    }
    out.statements.emplace_back(std::move(d));
  }

  void module_decl(Session& out, std::size_t at) {
    ModuleDecl d;
    d.pos = pos_at(at);
    const std::size_t name_at = (skip(), i_);
    d.name = ident("a module name");
    declare(out, d.name, name_at);
    expect('=');
    const std::size_t kw_at = (skip(), i_);
    if (ident("cyclic") != "cyclic") error_at(kw_at, "expected cyclic(...)");
    expect('(');
    const std::size_t base_at = (skip(), i_);
    d.base = ident("an ideal name");
    expect(')');
    try {
      if (auto it = out.ideals.find(d.base); it != out.ideals.end()) {
        out.modules.emplace(d.name, CyclicModule(it->second));
      } else if (auto r = out.rings.find(d.base); r != out.rings.end()) {
        out.modules.emplace(d.name, CyclicModule::whole(r->second));
      } else {
        error_at(base_at, "undeclared name '" + d.base + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      error_at(at, e.what());
    }
    out.statements.emplace_back(std::move(d));
  }

  static bool is_integer(const std::string& t) {
    std::size_t k = t[0] == '-' ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return t.size() <= 10;
  }

  static bool is_identifier(const std::string& t) {
    if (!ident_start(t[0])) return false;
    for (char c : t)
      if (!ident_char(c)) return false;
    return true;
  }

  void command(Session& out, std::size_t at) {
    Command c;
    c.pos = pos_at(at);
    const std::size_t op_at = (skip(), i_);
    c.op = ident("an operation");
    const auto sig_it = signatures().find(c.op);
    if (sig_it == signatures().end()) error_at(op_at, "unknown operation '" + c.op + "'");
    expect('(');
    skip();
    const std::vector<Piece> raw = pieces(')');
    expect(')');

    // classify, then match against the signature
    struct Pending {
      Arg arg;
      std::size_t at;
    };
    std::vector<Pending> args;
    Ring ring;
    const std::size_t args_at = raw.empty() ? i_ : raw.front().at;
    for (const auto& p : raw) {
      Pending a{{Arg::Kind::polynomial, p.text}, p.at};
      if (is_identifier(p.text)) {
        if (auto r = out.rings.find(p.text); r != out.rings.end()) {
          a.arg.kind = Arg::Kind::ring;
          ring = ring ? ring : r->second;
        } else if (auto I = out.ideals.find(p.text); I != out.ideals.end()) {
          a.arg.kind = Arg::Kind::ideal;
          if (ring && ring != I->second.ring()) error_at(p.at, "arguments live in different rings");
          ring = I->second.ring();
        } else if (auto M = out.modules.find(p.text); M != out.modules.end()) {
          a.arg.kind = Arg::Kind::module;
          if (ring && ring != M->second.ring()) error_at(p.at, "arguments live in different rings");
          ring = M->second.ring();
        }
      } else if (is_integer(p.text)) {
        a.arg.kind = Arg::Kind::integer;
      }
      args.push_back(std::move(a));
    }
    for (auto& a : args) {
      if (a.arg.kind != Arg::Kind::polynomial) continue;
      if (!ring) {
        if (is_identifier(a.arg.text)) error_at(a.at, "undeclared name '" + a.arg.text + "'");
        error_at(a.at, "a polynomial argument needs a ring from another argument");
      }
      const Polynomial f = poly({a.arg.text, a.at}, ring->variables());
      a.arg.text = to_string(f, ring->variables());
    }

    const std::string& sig = sig_it->second;
    const std::size_t bar = sig.find('|');
    const std::string req = sig.substr(0, bar), opt = bar == std::string::npos ? "" : sig.substr(bar + 1);
    std::size_t k = 0;
    auto arity = [&](std::size_t where) {
      error_at(where, c.op + " expects (" + describe(req, opt) + ")");
    };
    for (char kind : req) {
      if (k >= args.size() || !accepts(kind, args[k].arg)) arity(k < args.size() ? args[k].at : args_at);
      c.args.push_back(normalize(kind, args[k].arg, ring));
      ++k;
    }
    for (char kind : opt) {
      if (k < args.size() && accepts(kind, args[k].arg)) {
        c.args.push_back(normalize(kind, args[k].arg, ring));
        ++k;
      }
    }
    if (k != args.size()) {
      if (args[k].arg.kind == Arg::Kind::polynomial && is_identifier(args[k].arg.text) && !ring)
        error_at(args[k].at, "undeclared name '" + args[k].arg.text + "'");
      arity(args[k].at);
    }

    for (;;) {
      const std::string w = peek_word();
      std::optional<std::uint64_t>* slot = w == "horizon" ? &c.horizon
                                           : w == "seed"  ? &c.seed
                                           : w == "window" ? &c.window
                                                           : nullptr;
      if (!slot) break;
      const std::size_t clause_at = i_;
      i_ += w.size();
      if (*slot) error_at(clause_at, "repeated " + w + " clause");
      *slot = natural("a natural number");
    }
    out.statements.emplace_back(std::move(c));
  }

  static bool accepts(char kind, const Arg& a) {
    switch (kind) {
      case 'R': return a.kind == Arg::Kind::ring;
      case 'I': return a.kind == Arg::Kind::ideal;
      case 'M': return a.kind == Arg::Kind::module;
      case 'f': return a.kind == Arg::Kind::polynomial || a.kind == Arg::Kind::integer;
      case 'n': return a.kind == Arg::Kind::integer && a.text[0] != '-';
      case 'z': return a.kind == Arg::Kind::integer;
    }
    return false;
  }

  /// Integers in a polynomial slot become constant polynomials.
  static Arg normalize(char kind, const Arg& a, const Ring& ring) {
    if (kind == 'f' && a.kind == Arg::Kind::integer) {
      const Polynomial f = blowup::detail::PolyReader(a.text, ring->variables()).parse_all();
      return {Arg::Kind::polynomial, to_string(f, ring->variables())};
    }
    if (a.kind == Arg::Kind::integer) return {a.kind, std::to_string(std::stoll(a.text))};
    return a;
  }

  static std::string describe(const std::string& req, const std::string& opt) {
    auto word = [](char k) -> std::string {
      switch (k) {
        case 'R': return "ring";
        case 'I': return "ideal";
        case 'M': return "module";
        case 'f': return "polynomial";
        case 'n': return "natural";
        case 'z': return "integer";
      }
      return "?";
    };
    std::string s;
    for (char k : req) s += (s.empty() ? "" : ", ") + word(k);
    for (char k : opt) s += (s.empty() ? "[" : ", [") + word(k) + "]";
    return s;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::string current_ring_;
};

}  // namespace detail

/// Parse a session; declarations are built as they are read.
inline Session parse_session(std::string_view text) { return detail::SessionParser(text).parse(); }

/// Canonical source text; parse_session(to_source(s)) has the same statements.
inline std::string to_source(const Session& s) {
  std::string out;
  auto join = [](const std::vector<std::string>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? ", " : "") + v[i];
    return r;
  };
  for (const auto& st : s.statements) {
    if (const auto* r = std::get_if<RingDecl>(&st)) {
      out += "ring " + r->name + " = " + r->model + "(";
      if (r->model == "semigroup") {
        std::vector<std::string> g;
        for (unsigned a : r->gens) g.push_back(std::to_string(a));
        out += join(g);
      } else {
        out += join(r->vars);
        if (r->model == "quotient") out += "; " + join(r->relations);
      }
      out += ")";
      if (!r->flags.empty()) {
        std::string f;
        for (const auto& x : r->flags) f += (f.empty() ? "" : " ") + x;
        out += " [" + f + "]";
      }
    } else if (const auto* i = std::get_if<IdealDecl>(&st)) {
      out += "ideal " + i->name + " = " + join(i->generators);
    } else if (const auto* m = std::get_if<ModuleDecl>(&st)) {
      out += "module " + m->name + " = cyclic(" + m->base + ")";
    } else {
      const auto& c = std::get<Command>(st);
      std::vector<std::string> a;
      for (const auto& x : c.args) a.push_back(x.text);
      out += "compute " + c.op + "(" + join(a) + ")";
      if (c.horizon) out += " horizon " + std::to_string(*c.horizon);
      if (c.seed) out += " seed " + std::to_string(*c.seed);
      if (c.window) out += " window " + std::to_string(*c.window);
    }
    out += ";\n";
  }
  return out;
}

}  // namespace blowup::cli
