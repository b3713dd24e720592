#include "fincat/dsl/parser.hpp"

#include <cctype>

namespace fincat::dsl {

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

struct Lexer {
  std::string_view src;
  size_t at = 0;
  int line = 1, col = 1;
  std::vector<Diagnostic>* diags;

  void advance(size_t n) {
    for (size_t i = 0; i < n && at < src.size(); ++i, ++at) {
      if (src[at] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  void skip_space() {
    while (at < src.size()) {
      char c = src[at];
      if (c == '#') {
        while (at < src.size() && src[at] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  Token next() {
    skip_space();
    Token t;
    t.pos = {line, col};
    if (at >= src.size()) return t;
    char c = src[at];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      size_t start = at;
      while (at < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[at])) || src[at] == '_'))
        advance(1);
      t.text = std::string(src.substr(start, at - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      size_t start = at;
      while (at < src.size() && std::isdigit(static_cast<unsigned char>(src[at]))) advance(1);
      t.text = std::string(src.substr(start, at - start));
      return t;
    }
    t.kind = Tok::Symbol;
    if (c == '-' && at + 1 < src.size() && src[at + 1] == '>') {
      t.text = "->";
      advance(2);
      return t;
    }
    if (c == '=' && at + 1 < src.size() && src[at + 1] == '>') {
      t.text = "=>";
      advance(2);
      return t;
    }
    t.text = std::string(1, c);
    advance(1);
    return t;
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  std::vector<Diagnostic>& diags;

  explicit Parser(std::string_view text, std::vector<Diagnostic>& d) : diags(d) {
    Lexer lex{text, 0, 1, 1, &d};
    for (;;) {
      Token t = lex.next();
      bool end = t.kind == Tok::End;
      toks.push_back(std::move(t));
      if (end) break;
    }
  }

  const Token& peek(int ahead = 0) const {
    size_t i = at + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token take() { return toks[std::min(at++, toks.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }

  void error(const std::string& message, SourcePos pos) {
    diags.push_back({"E001", message, pos});
  }

  bool expect_symbol(const std::string& s) {
    if (peek().kind == Tok::Symbol && peek().text == s) {
      take();
      return true;
    }
    error("expected '" + s + "' but found '" + peek().text + "'", peek().pos);
    return false;
  }

  bool expect_keyword(const std::string& s) {
    if (peek().kind == Tok::Ident && peek().text == s) {
      take();
      return true;
    }
    error("expected '" + s + "'", peek().pos);
    return false;
  }

  std::optional<std::string> expect_ident(const std::string& what) {
    if (peek().kind == Tok::Ident) return take().text;
    error("expected " + what + " but found '" + peek().text + "'", peek().pos);
    return std::nullopt;
  }

  // Skips to a synchronization point after an error.
  void sync_to_block_end() {
    int depth = 0;
    while (!at_end()) {
      const Token& t = peek();
      if (t.kind == Tok::Symbol && t.text == "{") ++depth;
      if (t.kind == Tok::Symbol && t.text == "}") {
        take();
        if (depth == 0) return;
        --depth;
        continue;
      }
      take();
    }
  }

  std::optional<Rat> parse_rat(bool negative) {
    if (peek().kind != Tok::Int) {
      error("expected a number", peek().pos);
      return std::nullopt;
    }
    SourcePos pos = peek().pos;
    long long num = 0;
    try {
      num = std::stoll(take().text);
    } catch (const std::logic_error&) {
      diags.push_back({"E007", "number out of range", pos});
      return std::nullopt;
    }
    long long den = 1;
    if (peek().kind == Tok::Symbol && peek().text == "/") {
      take();
      if (peek().kind != Tok::Int) {
        error("expected a denominator", peek().pos);
        return std::nullopt;
      }
      try {
        den = std::stoll(take().text);
      } catch (const std::logic_error&) {
        diags.push_back({"E007", "number out of range", peek().pos});
        return std::nullopt;
      }
      if (den == 0) {
        diags.push_back({"E007", "zero denominator", pos});
        return std::nullopt;
      }
    }
    return Rat(negative ? -num : num, den);
  }

  std::optional<AstExpr> parse_expr() {
    AstExpr e;
    e.pos = peek().pos;
    bool negative = false;
    if (peek().kind == Tok::Symbol && (peek().text == "-" || peek().text == "+")) {
      negative = take().text == "-";
    }
    for (;;) {
      AstTerm term;
      term.coeff = negative ? Rat(-1) : Rat(1);
      if (peek().kind == Tok::Int) {
        auto r = parse_rat(negative);
        if (!r) return std::nullopt;
        term.coeff = *r;
        if (peek().kind == Tok::Symbol && peek().text == "*") {
          take();
          auto id = expect_ident("a morphism label");
          if (!id) return std::nullopt;
          term.label = *id;
        } else if (!r->is_zero()) {
          diags.push_back({"E007", "bare scalar in a morphism expression (only 0 is allowed)",
                           e.pos});
          return std::nullopt;
        }
      } else {
        auto id = expect_ident("a morphism label");
        if (!id) return std::nullopt;
        term.label = *id;
      }
      e.terms.push_back(std::move(term));
      if (peek().kind == Tok::Symbol && (peek().text == "+" || peek().text == "-")) {
        negative = take().text == "-";
        continue;
      }
      break;
    }
    return e;
  }

  void parse_category(SpecFile& out) {
    AstCategory cat;
    cat.pos = peek(-1).pos;
    auto name = expect_ident("a category name");
    if (!name || !expect_symbol("{")) {
      sync_to_block_end();
      return;
    }
    cat.name = *name;
    while (!at_end() && !(peek().kind == Tok::Symbol && peek().text == "}")) {
      Token kw = take();
      if (kw.kind != Tok::Ident) {
        error("expected a category entry", kw.pos);
        sync_to_block_end();
        return;
      }
      if (kw.text == "enrichment") {
        auto v = expect_ident("an enrichment (finset or finvec)");
        if (!v) continue;
        if (*v == "finset") {
          cat.mode = Mode::Set;
        } else if (*v == "finvec") {
          cat.mode = Mode::Vec;
        } else {
          diags.push_back({"E007", "unknown enrichment '" + *v + "'", kw.pos});
        }
        cat.mode_declared = true;
      } else if (kw.text == "objects") {
        for (;;) {
          auto o = expect_ident("an object name");
          if (!o) break;
          cat.objects.push_back({*o, kw.pos});
          if (peek().kind == Tok::Symbol && peek().text == ",") {
            take();
            continue;
          }
          break;
        }
      } else if (kw.text == "hom") {
        AstHomDecl h;
        h.pos = kw.pos;
        auto s = expect_ident("a source object");
        auto d = s ? expect_ident("a target object") : std::nullopt;
        if (!s || !d || !expect_symbol("{")) continue;
        h.src = *s;
        h.dst = *d;
        if (!(peek().kind == Tok::Symbol && peek().text == "}")) {
          for (;;) {
            auto l = expect_ident("a morphism label");
            if (!l) break;
            h.labels.push_back(*l);
            if (peek().kind == Tok::Symbol && peek().text == ",") {
              take();
              continue;
            }
            break;
          }
        }
        expect_symbol("}");
        cat.homs.push_back(std::move(h));
      } else if (kw.text == "identity") {
        AstIdentity ident;
        ident.pos = kw.pos;
        auto o = expect_ident("an object name");
        if (!o || !expect_symbol("=")) continue;
        ident.obj = *o;
        auto e = parse_expr();
        if (!e) continue;
        ident.value = *e;
        cat.identities.push_back(std::move(ident));
      } else if (kw.text == "compose") {
        AstCompose comp;
        comp.pos = kw.pos;
        auto g = expect_ident("a morphism label");
        auto f = g ? expect_ident("a morphism label") : std::nullopt;
        if (!g || !f || !expect_symbol("=")) continue;
        comp.g = *g;
        comp.f = *f;
        auto e = parse_expr();
        if (!e) continue;
        comp.rhs = *e;
        cat.composes.push_back(std::move(comp));
      } else {
        error("unknown category entry '" + kw.text + "'", kw.pos);
      }
    }
    expect_symbol("}");
    out.order.push_back({'c', int(out.categories.size())});
    out.categories.push_back(std::move(cat));
  }

  void parse_functor(SpecFile& out) {
    AstFunctor f;
    f.pos = peek(-1).pos;
    auto name = expect_ident("a functor name");
    if (!name || !expect_symbol(":")) {
      sync_to_block_end();
      return;
    }
    f.name = *name;
    auto s = expect_ident("a source category");
    if (!s || !expect_symbol("->")) {
      sync_to_block_end();
      return;
    }
    auto d = expect_ident("a target category");
    if (!d || !expect_symbol("{")) {
      sync_to_block_end();
      return;
    }
    f.src_cat = *s;
    f.dst_cat = *d;
    while (!at_end() && !(peek().kind == Tok::Symbol && peek().text == "}")) {
      Token kw = take();
      if (kw.kind == Tok::Ident && kw.text == "obj") {
        auto a = expect_ident("an object name");
        if (!a || !expect_symbol("->")) continue;
        auto b = expect_ident("an object name");
        if (!b) continue;
        f.objects.push_back({*a, *b, kw.pos});
      } else if (kw.kind == Tok::Ident && kw.text == "mor") {
        auto a = expect_ident("a morphism label");
        if (!a || !expect_symbol("->")) continue;
        auto e = parse_expr();
        if (!e) continue;
        f.morphisms.push_back({*a, *e, kw.pos});
      } else {
        error("unknown functor entry '" + kw.text + "'", kw.pos);
      }
    }
    expect_symbol("}");
    out.order.push_back({'f', int(out.functors.size())});
    out.functors.push_back(std::move(f));
  }

  std::optional<AstFunctorRef> parse_fref() {
    AstFunctorRef ref;
    ref.pos = peek().pos;
    auto n = expect_ident("a functor reference");
    if (!n) return std::nullopt;
    if (*n == "id") {
      if (!expect_symbol("(")) return std::nullopt;
      auto c = expect_ident("a category name");
      if (!c || !expect_symbol(")")) return std::nullopt;
      ref.is_identity = true;
      ref.name = *c;
      return ref;
    }
    ref.name = *n;
    return ref;
  }

  void parse_nat(SpecFile& out) {
    AstNat nat;
    nat.pos = peek(-1).pos;
    auto name = expect_ident("a transformation name");
    if (!name || !expect_symbol(":")) {
      sync_to_block_end();
      return;
    }
    nat.name = *name;
    auto s = parse_fref();
    if (!s || !expect_symbol("=>")) {
      sync_to_block_end();
      return;
    }
    auto t = parse_fref();
    if (!t || !expect_symbol("{")) {
      sync_to_block_end();
      return;
    }
    nat.source = *s;
    nat.target = *t;
    while (!at_end() && !(peek().kind == Tok::Symbol && peek().text == "}")) {
      Token kw = take();
      if (kw.kind == Tok::Ident && kw.text == "at") {
        auto o = expect_ident("an object name");
        if (!o || !expect_symbol("=")) continue;
        auto e = parse_expr();
        if (!e) continue;
        nat.components.push_back({*o, *e});
      } else {
        error("unknown transformation entry '" + kw.text + "'", kw.pos);
      }
    }
    expect_symbol("}");
    out.order.push_back({'n', int(out.nats.size())});
    out.nats.push_back(std::move(nat));
  }

  void parse_directive(SpecFile& out) {
    AstDirective d;
    d.pos = peek(-1).pos;
    auto k = expect_ident("a directive name");
    if (!k || !expect_symbol("=")) return;
    d.key = *k;
    if (peek().kind == Tok::Int || peek().kind == Tok::Ident) {
      d.value = take().text;
    } else {
      error("expected a directive value", peek().pos);
      return;
    }
    out.order.push_back({'d', int(out.directives.size())});
    out.directives.push_back(std::move(d));
  }

  SpecFile parse_spec() {
    SpecFile out;
    while (!at_end()) {
      Token kw = take();
      if (kw.kind != Tok::Ident) {
        error("expected a top-level block", kw.pos);
        break;
      }
      if (kw.text == "category") {
        parse_category(out);
      } else if (kw.text == "functor") {
        parse_functor(out);
      } else if (kw.text == "nat") {
        parse_nat(out);
      } else if (kw.text == "set") {
        parse_directive(out);
      } else {
        error("unknown block '" + kw.text + "'", kw.pos);
        sync_to_block_end();
      }
    }
    return out;
  }
};

}  // namespace

ParseResult parse(std::string_view text) {
  ParseResult out;
  std::vector<Diagnostic> diags;
  Parser p(text, diags);
  SpecFile spec = p.parse_spec();
  out.diagnostics = std::move(diags);
  if (out.diagnostics.empty()) out.spec = std::move(spec);
  return out;
}

std::string expr_str(const AstExpr& e) {
  std::string s;
  for (size_t i = 0; i < e.terms.size(); ++i) {
    const AstTerm& t = e.terms[i];
    Rat c = t.coeff;
    if (i == 0) {
      if (t.label.empty()) {
        s += c.str();
        continue;
      }
      if (c == Rat(-1)) {
        s += "-" + t.label;
        continue;
      }
      if (!c.is_one()) s += c.str() + "*";
      s += t.label;
      continue;
    }
    bool neg = c < Rat(0);
    s += neg ? " - " : " + ";
    Rat a = neg ? -c : c;
    if (t.label.empty()) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += t.label;
    }
  }
  return s;
}

namespace {

void print_category(const AstCategory& c, std::string& s) {
  s += "category " + c.name + " {\n";
  s += "  enrichment " + std::string(c.mode == Mode::Set ? "finset" : "finvec") + "\n";
  if (!c.objects.empty()) {
    s += "  objects ";
    for (size_t i = 0; i < c.objects.size(); ++i) {
      if (i) s += ", ";
      s += c.objects[i].first;
    }
    s += "\n";
  }
  for (const auto& h : c.homs) {
    s += "  hom " + h.src + " " + h.dst + " {";
    for (size_t i = 0; i < h.labels.size(); ++i) s += (i ? ", " : " ") + h.labels[i];
    s += h.labels.empty() ? "}\n" : " }\n";
  }
  for (const auto& i : c.identities) s += "  identity " + i.obj + " = " + expr_str(i.value) + "\n";
  for (const auto& comp : c.composes)
    s += "  compose " + comp.g + " " + comp.f + " = " + expr_str(comp.rhs) + "\n";
  s += "}\n";
}

void print_functor(const AstFunctor& f, std::string& s) {
  s += "functor " + f.name + " : " + f.src_cat + " -> " + f.dst_cat + " {\n";
  for (const auto& o : f.objects) s += "  obj " + o.from + " -> " + o.to + "\n";
  for (const auto& m : f.morphisms) s += "  mor " + m.from + " -> " + expr_str(m.to) + "\n";
  s += "}\n";
}

void print_nat(const AstNat& n, std::string& s) {
  auto fref = [](const AstFunctorRef& r) {
    return r.is_identity ? "id(" + r.name + ")" : r.name;
  };
  s += "nat " + n.name + " : " + fref(n.source) + " => " + fref(n.target) + " {\n";
  for (const auto& [obj, e] : n.components) s += "  at " + obj + " = " + expr_str(e) + "\n";
  s += "}\n";
}

}  // namespace

std::string print(const SpecFile& spec) {
  std::string s;
  bool first = true;
  for (auto [kind, idx] : spec.order) {
    if (!first) s += "\n";
    first = false;
    switch (kind) {
      case 'c':
        print_category(spec.categories[idx], s);
        break;
      case 'f':
        print_functor(spec.functors[idx], s);
        break;
      case 'n':
        print_nat(spec.nats[idx], s);
        break;
      case 'd': {
        const auto& d = spec.directives[idx];
        s += "set " + d.key + " = " + d.value + "\n";
        break;
      }
      default:
        break;
    }
  }
  return s;
}

}  // namespace fincat::dsl
