// Copyright 2026 The realvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "realvar/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace realvar {

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = src.substr(i, j - i);
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      t.kind = Tok::Number;
      t.text = src.substr(i, j - i);
      if (t.text == ".") throw ParseError("malformed number", line, col);
      out.push_back(t);
      advance(j - i);
      continue;
    }
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ';': t.kind = Tok::Semi; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(1, c);
    out.push_back(t);
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> names)
      : toks_(std::move(toks)), names_(std::move(names)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.col);
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what, peek());
    ++pos_;
  }

  std::vector<std::string> parse_vars() {
    const Token& t = peek();
    if (!at(Tok::Ident) || t.text != "vars") fail("expected 'vars' declaration", t);
    ++pos_;
    std::vector<std::string> names;
    while (at(Tok::Ident)) {
      const Token& v = peek();
      if (std::find(names.begin(), names.end(), v.text) != names.end())
        fail("variable '" + v.text + "' declared twice", v);
      names.push_back(v.text);
      ++pos_;
    }
    if (names.empty()) fail("'vars' needs at least one variable", peek());
    expect(Tok::Semi, "';' after variable list");
    names_ = names;
    return names;
  }

  Polynomial poly() {
    const int n = static_cast<int>(names_.size());
    Polynomial acc(n);
    bool negate = false;
    if (at(Tok::Plus) || at(Tok::Minus)) negate = take().kind == Tok::Minus;
    acc = term();
    if (negate) acc = -acc;
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = take();
      if (at(Tok::Semi) || at(Tok::End) || at(Tok::RParen))
        fail(std::string("dangling '") + op.text + "'", op);
      Polynomial rhs = term();
      acc = op.kind == Tok::Plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      Token op = take();
      if (at(Tok::Semi) || at(Tok::End) || at(Tok::RParen))
        fail(std::string("dangling '") + op.text + "'", op);
      Token where = peek();
      Polynomial rhs = factor();
      if (op.kind == Tok::Star) {
        acc = acc * rhs;
      } else {
        if (rhs.degree() > 0) fail("division by a non-constant", where);
        double d = rhs.coefficient(Monomial::one(static_cast<int>(names_.size())));
        if (d == 0.0) fail("division by zero", where);
        acc = acc * (1.0 / d);
      }
    }
    if (at(Tok::Ident) || at(Tok::Number) || at(Tok::LParen))
      fail("implicit multiplication is not allowed; use '*'", peek());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (at(Tok::Caret)) {
      ++pos_;
      const Token& e = peek();
      if (!at(Tok::Number)) fail("expected an integer exponent", e);
      if (e.text.find_first_not_of("0123456789") != std::string::npos)
        fail("non-integer exponent '" + e.text + "'", e);
      int k = std::stoi(e.text);
      ++pos_;
      Polynomial r = Polynomial::constant(static_cast<int>(names_.size()), 1.0);
      for (int i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    const int n = static_cast<int>(names_.size());
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        return Polynomial::constant(n, std::stod(t.text));
      }
      case Tok::Ident: {
        auto it = std::find(names_.begin(), names_.end(), t.text);
        if (it == names_.end()) fail("undeclared variable '" + t.text + "'", t);
        ++pos_;
        return Polynomial::variable(n, static_cast<int>(it - names_.begin()));
      }
      case Tok::LParen: {
        ++pos_;
        Polynomial p = poly();
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::Minus: {
        ++pos_;
        return -factor();
      }
      default:
        fail(t.kind == Tok::Semi || t.kind == Tok::End ? "expected an operand" : "unexpected '" + t.text + "'", t);
    }
  }

  std::size_t pos_ = 0;
  std::vector<Token> toks_;
  std::vector<std::string> names_;
};

}  // namespace

PolySystem parse_system(const std::string& text) {
  Parser p(lex(text), {});
  std::vector<std::string> names = p.parse_vars();
  std::vector<Polynomial> gens;
  while (!p.at(Tok::End)) {
    Token start = p.peek();
    if (p.at(Tok::Semi)) p.fail("empty polynomial statement", start);
    Polynomial g = p.poly();
    p.expect(Tok::Semi, "';' or an operator");
    if (g.is_zero()) throw ParseError("polynomial is identically zero", start.line, start.col);
    gens.push_back(std::move(g));
  }
  if (gens.empty()) {
    const Token& e = p.peek();
    throw ParseError("system has no polynomials", e.line, e.col);
  }
  return PolySystem(static_cast<int>(names.size()), std::move(gens), names);
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  Parser p(lex(text), names);
  Polynomial g = p.poly();
  if (p.at(Tok::Semi)) p.take();
  if (!p.at(Tok::End)) p.fail("trailing input", p.peek());
  return g;
}

std::string format_system(const PolySystem& sys) {
  std::ostringstream os;
  os << "vars";
  for (const auto& v : sys.variable_names()) os << ' ' << v;
  os << ";\n";
  for (const auto& g : sys.generators()) os << g.to_string(sys.variable_names()) << ";\n";
  return os.str();
}

namespace {

using nlohmann::json;

const char* mode_name(Mode m) { return m == Mode::Real ? "real" : "complex"; }

json verdict_json(const StopVerdict& v) {
  return json{{"kind", to_string(v.kind)},
              {"s", v.s},
              {"s_below_D", v.s_below_D},
              {"strong", v.strong},
              {"all_s", v.all_s}};
}

json root_json(const Root& r, std::uint64_t seed) {
  json coords = json::array();
  for (Eigen::Index i = 0; i < r.coords.size(); ++i)
    coords.push_back({r.coords[i].real(), r.coords[i].imag()});
  return json{{"coords", coords},
              {"residual", r.residual},
              {"is_real", r.is_real},
              {"cluster_size", r.cluster_size},
              {"seed", seed}};
}

json order_json(const std::optional<std::pair<int, int>>& o) {
  if (!o) return nullptr;
  return json::array({o->first, o->second});
}

}  // namespace

nlohmann::json result_to_json(const PolySystem& sys, const SolveConfig& cfg, const SolveResult& res) {
  json j;
  j["schema"] = kJsonSchemaVersion;
  json gens = json::array();
  for (const auto& g : sys.generators()) gens.push_back(g.to_string(sys.variable_names()));
  j["system"] = {{"vars", sys.variable_names()}, {"generators", gens}, {"D", sys.max_degree()}};
  j["config"] = {{"mode", mode_name(cfg.mode)},
                 {"criterion", to_string(cfg.criterion)},
                 {"policy", to_string(cfg.policy)},
                 {"t_start", cfg.t_start},
                 {"t_max", cfg.t_max},
                 {"rank_tol", cfg.rank_tol.relative},
                 {"imag_tol", cfg.verify.imag_tol},
                 {"residual_tol", cfg.verify.residual_tol},
                 {"seed", cfg.seed}};
  std::string status = res.empty_certificate ? "empty"
                       : res.success         ? "success"
                       : res.t_max_exhausted ? "t_max_exhausted"
                                             : "extraction_failed";
  j["status"] = status;
  j["verdict"] = verdict_json(res.verdict);
  j["verdict"]["t"] = res.t;
  json its = json::array();
  for (const auto& it : res.iterations) {
    json r{{"t", it.t},
           {"dims_G", it.table.dims_G},
           {"dims_Gplus", it.table.dims_Gplus},
           {"verdict", verdict_json(it.verdict)},
           {"rank_profile", it.rank_profile},
           {"h_rows", it.h_rows},
           {"s_rows", it.s_rows},
           {"kernel_polys", it.kernel_polys.size()},
           {"face_reductions", it.face_reductions},
           {"seconds", it.seconds}};
    r["rank_verdict"] = it.rank_verdict ? verdict_json(*it.rank_verdict) : json(nullptr);
    its.push_back(r);
  }
  j["iterations"] = its;
  json basis = json::array();
  for (const auto& m : res.basis.monomials) basis.push_back(m.to_string(sys.variable_names()));
  j["basis"] = basis;
  json border = json::array();
  for (const auto& f : res.border.elements(res.basis.monomials))
    border.push_back(f.to_string(sys.variable_names()));
  j["border_basis"] = border;
  j["commutativity_error"] = res.mult.commutativity_error;
  json roots = json::array(), rejected = json::array();
  for (const auto& r : res.roots) roots.push_back(root_json(r, res.seed));
  for (const auto& r : res.rejected) rejected.push_back(root_json(r, res.seed));
  j["roots"] = roots;
  j["rejected"] = rejected;
  j["radical_certified"] = res.radical_certified;
  j["dims_first"] = order_json(res.dims_first);
  j["rank_first"] = order_json(res.rank_first);
  json attempts = json::array();
  for (const auto& a : res.attempts)
    attempts.push_back({{"t", a.t},
                        {"s", a.s},
                        {"ok", a.ok},
                        {"message", a.message},
                        {"commutativity_error", a.commutativity_error},
                        {"max_residual", a.max_residual},
                        {"verified", a.verified}});
  j["attempts"] = attempts;
  j["message"] = res.message;
  return j;
}

namespace {

std::string cell(const std::vector<int>& v, std::size_t s) {
  return s < v.size() ? std::to_string(v[s]) : "—";
}

// setw counts bytes; labels and the dash cell are multi-byte UTF-8.
std::string pad(const std::string& text, std::size_t width, bool left) {
  std::size_t glyphs = 0;
  for (unsigned char ch : text)
    if ((ch & 0xC0) != 0x80) ++glyphs;
  const std::string fill(glyphs < width ? width - glyphs : 0, ' ');
  return left ? text + fill : fill + text;
}

void table_row(std::ostringstream& os, const std::string& label, const std::vector<int>& v,
               std::size_t width, bool mark_s, int s_mark) {
  os << pad(label, 24, true);
  for (std::size_t s = 0; s < width; ++s) {
    std::string c = cell(v, s);
    if (mark_s && static_cast<int>(s) == s_mark && s < v.size()) c = "*" + c;
    os << pad(c, 6, false);
  }
  os << "\n";
}

}  // namespace

std::string render_tables(const SolveResult& res) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& it : res.iterations)
    width = std::max(width, std::max<std::size_t>(it.table.dims_Gplus.size(), it.rank_profile.size()));
  for (const auto& it : res.iterations) {
    os << "t = " << it.t << "\n";
    os << pad("s", 24, true);
    for (std::size_t s = 0; s < width; ++s) os << pad(std::to_string(s), 6, false);
    os << "\n";
    const bool dims = !it.table.dims_G.empty();
    if (dims) {
      table_row(os, "dim π_s(G_t^⊥)", it.table.dims_G, width, it.verdict.success(), it.verdict.s);
      table_row(os, "dim π_s((G_t^+)^⊥)", it.table.dims_Gplus, width, false, -1);
    }
    if (!it.rank_profile.empty()) {
      bool mark = it.rank_verdict && it.rank_verdict->success();
      table_row(os, "rank M_s(L*)", it.rank_profile, width, mark, mark ? it.rank_verdict->s : -1);
    }
  }
  return os.str();
}

std::string render_summary(const PolySystem& sys, const SolveConfig& cfg, const SolveResult& res) {
  std::ostringstream os;
  os << std::setprecision(6);
  const auto& names = sys.variable_names();
  if (res.empty_certificate) {
    os << "verdict: empty real variety (certificate at t = " << res.t << ")\n";
    return os.str();
  }
  if (!res.success) {
    os << "verdict: " << res.message << "\n";
  } else {
    os << "verdict: " << to_string(res.verdict.kind) << " at (t,s) = (" << res.t << "," << res.s << ")";
    if (res.verdict.s_below_D) os << "  [s < D: roots verified against the input]";
    os << "\n";
  }
  if (cfg.criterion == Criterion::Both) {
    auto show = [](const std::optional<std::pair<int, int>>& o) {
      return o ? "(" + std::to_string(o->first) + "," + std::to_string(o->second) + ")" : std::string("—");
    };
    os << "first success: dims " << show(res.dims_first) << ", rank " << show(res.rank_first) << "\n";
  }
  for (const auto& a : res.attempts)
    if (!a.ok) os << "extraction at (" << a.t << "," << a.s << ") failed: " << a.message << "\n";
  if (!res.success) return os.str();
  os << "basis B (" << res.basis.monomials.size() << "):";
  for (const auto& m : res.basis.monomials) os << ' ' << m.to_string(names);
  os << "\nborder basis F0:\n";
  for (const auto& f : res.border.elements(res.basis.monomials)) os << "  " << f.pruned(1e-10).to_string(names) << "\n";
  os << "c(X) = " << res.mult.commutativity_error << "\n";
  os << "roots (" << res.roots.size() << "):\n";
  auto print_root = [&](const Root& r) {
    os << "  (";
    for (Eigen::Index i = 0; i < r.coords.size(); ++i) {
      if (i) os << ", ";
      double re = r.coords[i].real(), im = r.coords[i].imag();
      if (r.is_real || im == 0.0)
        os << re;
      else
        os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    }
    os << ")  eps = " << r.residual;
    if (r.cluster_size > 1) os << "  multiplicity " << r.cluster_size;
    os << "\n";
  };
  for (const auto& r : res.roots) print_root(r);
  if (!res.rejected.empty()) {
    os << "rejected candidates (" << res.rejected.size() << "):\n";
    for (const auto& r : res.rejected) print_root(r);
  }
  if (cfg.mode == Mode::Real) os << "radical certified: " << (res.radical_certified ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace realvar
