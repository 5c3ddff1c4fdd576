#include "occat/textio.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "occat/classify.hpp"
#include "occat/error.hpp"

namespace occat {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Failure {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(const Token& at, DiagnosticKind kind, std::string message) {
  throw Failure{{at.line, at.column, kind, std::move(message)}};
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '*';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t len = 1;
    if (ident_start(c)) {
      t.kind = Tok::Ident;
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) {
        ++len;
      }
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::Punct;
      len = 2;
    } else if (std::string_view(";,=[](){}:").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
    } else {
      t.text = std::string(1, c);
      fail(t, DiagnosticKind::Syntax, "unexpected character '" + t.text + "'");
    }
    t.text = std::string(text.substr(i, len));
    out.push_back(std::move(t));
    advance(len);
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

// Source positions of the lines of one cobordism, for validation messages.
struct CobordismPositions {
  Token header;
  std::vector<Token> components;
  std::vector<std::vector<Token>> lines;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Document document(std::vector<CobordismPositions>& positions) {
    Document doc;
    if (peek_word("branes")) {
      next();
      std::vector<std::string> names;
      std::vector<Token> where;
      do {
        where.push_back(peek());
        names.push_back(ident("brane name"));
      } while (accept(","));
      expect(";");
      for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (names[i] == names[j]) {
            fail(where[i], DiagnosticKind::Resolve, "duplicate brane '" + names[i] + "'");
          }
        }
      }
      doc.branes = BraneSet(names);
    }
    while (peek().kind != Tok::End) {
      if (peek_word("object")) {
        object_def(doc);
      } else if (peek_word("cobordism")) {
        positions.emplace_back();
        cobordism_def(doc, positions.back());
      } else {
        fail(peek(), DiagnosticKind::Syntax,
             "expected 'object' or 'cobordism', found " + describe(peek()));
      }
    }
    return doc;
  }

  std::vector<std::vector<Index>> cycles_only() {
    auto c = cycles();
    if (peek().kind != Tok::End) {
      fail(peek(), DiagnosticKind::Syntax, "unexpected " + describe(peek()) + " after cycles");
    }
    return c;
  }

  std::vector<Diagnostic> validation;

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool peek_word(std::string_view w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  bool peek_punct(std::string_view p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }
  bool accept(std::string_view p) {
    if (!peek_punct(p)) return false;
    next();
    return true;
  }
  void expect(std::string_view p) {
    if (!accept(p)) {
      fail(peek(), DiagnosticKind::Syntax,
           "expected '" + std::string(p) + "', found " + describe(peek()));
    }
  }
  void expect_word(std::string_view w) {
    if (!peek_word(w)) {
      fail(peek(), DiagnosticKind::Syntax,
           "expected '" + std::string(w) + "', found " + describe(peek()));
    }
    next();
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) {
      fail(peek(), DiagnosticKind::Syntax,
           std::string("expected ") + what + ", found " + describe(peek()));
    }
    return next().text;
  }
  std::uint32_t integer(const char* what) {
    if (peek().kind != Tok::Int) {
      fail(peek(), DiagnosticKind::Syntax,
           std::string("expected ") + what + ", found " + describe(peek()));
    }
    const Token t = next();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(t, DiagnosticKind::Syntax, std::string(what) + " " + t.text + " is out of range");
    }
    return value;
  }

  void claim_name(const Token& at, const std::string& name) {
    if (!names_.insert(name).second) {
      fail(at, DiagnosticKind::Resolve, "duplicate name '" + name + "'");
    }
  }

  Brane brane(const Document& doc, const Token& at, const std::string& name) {
    auto b = doc.branes.find(name);
    if (!b) fail(at, DiagnosticKind::Resolve, "unknown brane '" + name + "'");
    return *b;
  }

  // Optional brane label; bare labels are allowed only over a single brane.
  Brane label(const Document& doc, const char* what) {
    if (peek().kind == Tok::Ident) {
      const Token at = peek();
      return brane(doc, at, next().text);
    }
    if (doc.branes.size() != 1) {
      fail(peek(), DiagnosticKind::Syntax,
           std::string("expected a brane label after '") + what + "'");
    }
    return Brane{0};
  }

  std::vector<std::vector<Index>> cycles() {
    std::vector<std::vector<Index>> out;
    if (peek_word("id")) {
      next();
      return out;
    }
    if (!peek_punct("(")) {
      fail(peek(), DiagnosticKind::Syntax,
           "expected 'id' or a cycle '(', found " + describe(peek()));
    }
    while (accept("(")) {
      std::vector<Index> cycle;
      do {
        cycle.push_back(integer("cycle element"));
      } while (peek().kind == Tok::Int);
      expect(")");
      out.push_back(std::move(cycle));
    }
    return out;
  }

  void object_def(Document& doc) {
    next();
    const Token name_tok = peek();
    std::string name = ident("object name");
    claim_name(name_tok, name);
    expect("=");
    expect("[");
    std::vector<Entry> entries;
    if (!peek_punct("]")) {
      do {
        if (peek_word("O")) {
          next();
          entries.emplace_back(Circle{});
        } else if (peek_word("I")) {
          next();
          expect("(");
          const Token lt = peek();
          Brane l = brane(doc, lt, ident("left brane"));
          expect(",");
          const Token rt = peek();
          Brane r = brane(doc, rt, ident("right brane"));
          expect(")");
          entries.emplace_back(Interval{l, r});
        } else {
          fail(peek(), DiagnosticKind::Syntax,
               "expected 'O' or 'I(', found " + describe(peek()));
        }
      } while (accept(","));
    }
    expect("]");
    std::vector<std::vector<Index>> sigma_cycles;
    Token sigma_tok = peek();
    if (peek_word("sigma")) {
      next();
      sigma_tok = peek();
      sigma_cycles = cycles();
    }
    expect(";");
    GeneralObject obj(doc.branes, entries);
    try {
      obj = obj.with_sigma(Permutation::from_cycles(obj.interval_indices(), sigma_cycles));
    } catch (const PreconditionError& e) {
      validation.push_back({sigma_tok.line, sigma_tok.column, DiagnosticKind::Validation,
                            "object '" + name + "': sigma: " + e.what()});
    }
    doc.objects.push_back({std::move(name), std::move(obj)});
  }

  const GeneralObject& object_ref(const Document& doc, const Token& at, const std::string& n) {
    if (const NamedObject* o = doc.find_object(n)) return o->object;
    fail(at, DiagnosticKind::Resolve, "unknown object '" + n + "'");
  }

  void cobordism_def(Document& doc, CobordismPositions& where) {
    where.header = next();
    const Token name_tok = peek();
    std::string name = ident("cobordism name");
    claim_name(name_tok, name);
    expect(":");
    const Token src_tok = peek();
    std::string src = ident("source object name");
    expect("->");
    const Token tgt_tok = peek();
    std::string tgt = ident("target object name");
    Cobordism c{object_ref(doc, src_tok, src), object_ref(doc, tgt_tok, tgt), {}};
    expect("{");
    while (peek_word("component")) {
      where.components.push_back(next());
      where.lines.emplace_back();
      expect("{");
      expect_word("genus");
      Component comp;
      comp.genus = integer("genus");
      expect(";");
      while (!peek_punct("}")) {
        where.lines.back().push_back(peek());
        comp.boundary.push_back(boundary_line(doc));
        expect(";");
      }
      expect("}");
      c.components.push_back(std::move(comp));
    }
    if (!peek_punct("}")) {
      fail(peek(), DiagnosticKind::Syntax,
           "expected 'component' or '}', found " + describe(peek()));
    }
    next();
    doc.cobordisms.push_back({std::move(name), std::move(src), std::move(tgt), std::move(c)});
  }

  BoundaryCircle boundary_line(const Document& doc) {
    if (peek_word("in")) {
      next();
      return InClosed{integer("circle index")};
    }
    if (peek_word("out")) {
      next();
      return OutClosed{integer("circle index")};
    }
    if (peek_word("window")) {
      next();
      return Window{label(doc, "window")};
    }
    if (peek_word("mixed")) {
      next();
      expect("[");
      Mixed m;
      do {
        m.cycle.push_back(mixed_entry(doc));
      } while (accept(","));
      expect("]");
      return m;
    }
    fail(peek(), DiagnosticKind::Syntax,
         "expected 'in', 'out', 'window', 'mixed' or '}', found " + describe(peek()));
  }

  MixedEntry mixed_entry(const Document& doc) {
    if (peek_word("in") || peek_word("out")) {
      const Side side = next().text == "in" ? Side::Incoming : Side::Outgoing;
      IntervalRef ref{side, integer("interval index"), default_reversed(side)};
      if (peek_word("rev")) {
        next();
        ref.reversed = !ref.reversed;
      }
      return ref;
    }
    if (peek_word("arc")) {
      next();
      const Brane brane = label(doc, "arc");
      return MixedEntry(std::in_place_type<Arc>, Arc{brane});
    }
    fail(peek(), DiagnosticKind::Syntax,
         "expected 'in', 'out' or 'arc', found " + describe(peek()));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> names_;
};

Token locate(const CobordismPositions& where, const Violation& v) {
  if (!v.component || *v.component >= where.components.size()) return where.header;
  const auto& lines = where.lines[*v.component];
  if (!v.circle || *v.circle >= lines.size()) return where.components[*v.component];
  return lines[*v.circle];
}

void write_label(std::ostream& os, const BraneSet& branes, Brane b) {
  if (!branes.is_default_single()) os << ' ' << branes.name(b);
}

void write_object(std::ostream& os, const NamedObject& no) {
  const BraneSet& branes = no.object.branes();
  os << "object " << no.name << " = [";
  const auto& entries = no.object.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) os << ", ";
    if (const auto* iv = std::get_if<Interval>(&entries[k])) {
      os << "I(" << branes.name(iv->left) << "," << branes.name(iv->right) << ")";
    } else {
      os << "O";
    }
  }
  os << "]";
  if (!no.object.sigma().is_identity()) os << " sigma " << no.object.sigma().to_string();
  os << ";\n";
}

void write_cobordism(std::ostream& os, const BraneSet& branes, const NamedCobordism& nc) {
  os << "cobordism " << nc.name << " : " << nc.source << " -> " << nc.target << " {\n";
  for (const auto& comp : canonical(nc.cobordism).components) {
    os << "  component {\n    genus " << comp.genus << ";\n";
    for (const auto& circle : comp.boundary) {
      os << "    ";
      if (const auto* in = std::get_if<InClosed>(&circle)) {
        os << "in " << in->index;
      } else if (const auto* out = std::get_if<OutClosed>(&circle)) {
        os << "out " << out->index;
      } else if (const auto* w = std::get_if<Window>(&circle)) {
        os << "window";
        write_label(os, branes, w->brane);
      } else {
        os << "mixed [";
        const auto& cyc = std::get<Mixed>(circle).cycle;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
          if (k) os << ", ";
          if (const auto* ref = std::get_if<IntervalRef>(&cyc[k])) {
            os << (ref->side == Side::Incoming ? "in " : "out ") << ref->index;
            if (ref->reversed != default_reversed(ref->side)) os << " rev";
          } else {
            os << "arc";
            write_label(os, branes, std::get<Arc>(cyc[k]).brane);
          }
        }
        os << "]";
      }
      os << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
}

}  // namespace

const NamedObject* Document::find_object(std::string_view name) const {
  for (const auto& o : objects) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

const NamedCobordism* Document::find_cobordism(std::string_view name) const {
  for (const auto& c : cobordisms) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string to_string(const Diagnostic& d) {
  const char* kind = d.kind == DiagnosticKind::Syntax    ? "syntax error"
                     : d.kind == DiagnosticKind::Resolve ? "name error"
                                                         : "invalid";
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + kind + ": " +
         d.message;
}

ParseResult parse(std::string_view text) {
  ParseResult result;
  std::vector<CobordismPositions> positions;
  try {
    Parser parser(text);
    Document doc = parser.document(positions);
    result.diagnostics = std::move(parser.validation);
    for (std::size_t k = 0; k < doc.cobordisms.size(); ++k) {
      for (const auto& v : validate(doc.cobordisms[k].cobordism)) {
        const Token at = locate(positions[k], v);
        result.diagnostics.push_back({at.line, at.column, DiagnosticKind::Validation,
                                      "cobordism '" + doc.cobordisms[k].name + "': " +
                                          to_string(v)});
      }
    }
    result.document = std::move(doc);
  } catch (const Failure& f) {
    result.diagnostics.push_back(f.diagnostic);
  }
  return result;
}

Permutation parse_cycles(std::string_view text, std::vector<Index> domain) {
  try {
    Parser parser(text);
    return Permutation::from_cycles(std::move(domain), parser.cycles_only());
  } catch (const Failure& f) {
    throw PreconditionError("cycles '" + std::string(text) + "': " + to_string(f.diagnostic));
  }
}

Document canonical(const Document& doc) {
  Document out = doc;
  for (auto& nc : out.cobordisms) nc.cobordism = canonical(nc.cobordism);
  return out;
}

std::string serialize(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  auto separate = [&] {
    if (!first) os << '\n';
    first = false;
  };
  if (!doc.branes.is_default_single()) {
    separate();
    os << "branes ";
    for (std::size_t i = 0; i < doc.branes.size(); ++i) {
      os << (i ? ", " : "") << doc.branes.names()[i];
    }
    os << ";\n";
  }
  if (!doc.objects.empty()) {
    separate();
    for (const auto& o : doc.objects) write_object(os, o);
  }
  for (const auto& c : doc.cobordisms) {
    separate();
    write_cobordism(os, doc.branes, c);
  }
  return os.str();
}

Document result_document(const Document& base, const std::string& name,
                         const Cobordism& c) {
  Document out;
  out.branes = c.source.branes();
  auto name_for = [&](const GeneralObject& obj, const std::string& fallback) {
    for (const auto& o : out.objects) {
      if (o.object == obj) return o.name;
    }
    std::string chosen = fallback;
    for (const auto& o : base.objects) {
      if (o.object == obj) {
        chosen = o.name;
        break;
      }
    }
    out.objects.push_back({chosen, obj});
    return chosen;
  };
  const std::string src = name_for(c.source, name + "_src");
  const std::string tgt = name_for(c.target, name + "_tgt");
  out.cobordisms.push_back({name, src, tgt, c});
  return out;
}

}  // namespace occat
