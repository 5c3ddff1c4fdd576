#include "occat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "occat/calculus.hpp"
#include "occat/classify.hpp"
#include "occat/error.hpp"
#include "occat/json_io.hpp"
#include "occat/textio.hpp"

namespace occat {

namespace {

// Thrown to abort a command with a given exit code after printing.
struct Exit {
  int code;
};

struct Options {
  std::string file;
  std::string a;
  std::string b;
  std::string name;
  std::string tau;
  std::string csv;
  bool json = false;
  unsigned genus = 0;
  unsigned windows = 0;
  unsigned times = 1;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  // Loads and parses the file; malformed input exits 2, invalid input exits 1
  // unless `tolerate_invalid`.
  void load(const std::string& path, bool tolerate_invalid = false) {
    std::ifstream in(path);
    if (!in) {
      err_ << path << ": cannot open file\n";
      throw Exit{kExitUsage};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    parsed_ = parse(buffer.str());
    for (const auto& d : parsed_.diagnostics) err_ << path << ":" << to_string(d) << "\n";
    if (parsed_.malformed()) throw Exit{kExitUsage};
    if (!parsed_.diagnostics.empty() && !tolerate_invalid) throw Exit{kExitDomain};
  }

  const Document& doc() const { return *parsed_.document; }
  const ParseResult& parsed() const { return parsed_; }

  const NamedCobordism& cobordism(const std::string& name) const {
    if (const auto* c = doc().find_cobordism(name)) return *c;
    err_ << "no cobordism named '" << name << "'\n";
    throw Exit{kExitUsage};
  }

  const GeneralObject& object(const std::string& name) const {
    if (const auto* o = doc().find_object(name)) return o->object;
    err_ << "no object named '" << name << "'\n";
    throw Exit{kExitUsage};
  }

  void emit_cobordism(const std::string& name, const Cobordism& c, bool as_json) {
    Document result = result_document(doc(), name, c);
    if (as_json) {
      out_ << to_json(canonical(result)).dump(2) << "\n";
    } else {
      out_ << serialize(result);
    }
  }

  void emit_permutation(const Permutation& p, bool as_json) {
    if (as_json) {
      nlohmann::json j = to_json(p);
      j["format"] = kJsonFormat;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << p.to_string() << "\n";
    }
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  ParseResult parsed_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_check(Session& s, const Options& o) {
  s.load(o.file, true);
  const bool ok = s.parsed().diagnostics.empty();
  if (o.json) {
    nlohmann::json diags = nlohmann::json::array();
    for (const auto& d : s.parsed().diagnostics) {
      diags.push_back({{"line", d.line}, {"column", d.column}, {"message", d.message}});
    }
    s.out() << nlohmann::json{{"format", kJsonFormat}, {"ok", ok}, {"diagnostics", diags}}
                   .dump(2)
            << "\n";
  } else if (ok) {
    s.out() << "ok: " << s.doc().objects.size() << " objects, " << s.doc().cobordisms.size()
            << " cobordisms\n";
  }
  return ok ? kExitOk : kExitDomain;
}

int cmd_invariants(Session& s, const Options& o) {
  s.load(o.file);
  const NamedCobordism& nc = s.cobordism(o.a);
  const BraneSet& branes = s.doc().branes;
  const InvariantSummary summary = invariant_summary(nc.cobordism);
  if (o.json) {
    nlohmann::json j = to_json(branes, summary);
    j["format"] = kJsonFormat;
    j["cobordism"] = nc.name;
    s.out() << j.dump(2) << "\n";
    return kExitOk;
  }
  long chi = 0;
  for (std::size_t k = 0; k < summary.components.size(); ++k) {
    const ComponentSummary& c = summary.components[k];
    chi += c.euler;
    s.out() << "component " << (k + 1) << ": g=" << c.genus
            << " w=" << format_counts(branes, c.windows) << " chi=" << c.euler
            << " c=" << c.fixed_boundary << " b=" << bool_text(c.has_outgoing) << "\n";
  }
  s.out() << "total: g=" << summary.total_genus
          << " w=" << format_counts(branes, summary.total_windows) << " chi=" << chi
          << " components=" << summary.component_count
          << " b=" << bool_text(in_b_subcategory(nc.cobordism)) << "\n";
  return kExitOk;
}

int cmd_classify(Session& s, const Options& o) {
  s.load(o.file);
  const GeneralObject& obj = s.object(o.a);
  const BraneSet& branes = s.doc().branes;
  const auto rows = strata_table(obj, o.genus, o.windows);
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) {
      s.err() << o.csv << ": cannot write file\n";
      return kExitUsage;
    }
    csv << "g";
    for (const auto& n : branes.names()) csv << ",w_" << n;
    csv << ",c,b_flag\n";
    for (const auto& r : rows) {
      csv << r.genus;
      for (auto w : r.windows) csv << "," << w;
      csv << "," << r.c << "," << bool_text(r.in_b) << "\n";
    }
  }
  if (o.json) {
    s.out() << nlohmann::json{{"format", kJsonFormat},
                              {"object", o.a},
                              {"c", c_number(obj)},
                              {"rows", to_json(branes, rows)}}
                   .dump(2)
            << "\n";
  } else {
    for (const auto& r : rows) {
      s.out() << "g=" << r.genus << " w=" << format_counts(branes, r.windows)
              << " c=" << r.c << " b=" << bool_text(r.in_b) << "\n";
    }
  }
  return kExitOk;
}

int cmd_iso(Session& s, const Options& o) {
  s.load(o.file);
  const bool iso = is_isomorphic(s.cobordism(o.a).cobordism, s.cobordism(o.b).cobordism);
  if (o.json) {
    s.out() << nlohmann::json{{"format", kJsonFormat}, {"isomorphic", iso}}.dump(2) << "\n";
  } else {
    s.out() << (iso ? "isomorphic" : "not isomorphic") << "\n";
  }
  return iso ? kExitOk : kExitDomain;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("FILE", o.file, "DSL file")->required();
  sub->add_flag("--json", o.json, "emit JSON");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open-closed cobordisms with D-brane labels"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "validate every object and cobordism");
  add_common(check, o);

  auto* compose_cmd = app.add_subcommand("compose", "glue B then A (A after B)");
  add_common(compose_cmd, o);
  compose_cmd->add_option("A", o.a, "second cobordism")->required();
  compose_cmd->add_option("B", o.b, "first cobordism")->required();
  compose_cmd->add_option("-o,--name", o.name, "result name");

  auto* tensor_cmd = app.add_subcommand("tensor", "disjoint union A (x) B");
  add_common(tensor_cmd, o);
  tensor_cmd->add_option("A", o.a)->required();
  tensor_cmd->add_option("B", o.b)->required();
  tensor_cmd->add_option("-o,--name", o.name, "result name");

  auto* swap_cmd = app.add_subcommand("swap", "symmetry n (x) m -> m (x) n");
  add_common(swap_cmd, o);
  swap_cmd->add_option("n", o.a, "object")->required();
  swap_cmd->add_option("m", o.b, "object")->required();
  swap_cmd->add_option("-o,--name", o.name, "result name");

  auto* inv = app.add_subcommand("invariants", "genus, windows, chi, c and b per component");
  add_common(inv, o);
  inv->add_option("A", o.a)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "open boundary permutation (target (0))");
  add_common(sigma_cmd, o);
  sigma_cmd->add_option("A", o.a)->required();

  auto* pull = app.add_subcommand("pullback", "pull a target permutation back to the source");
  add_common(pull, o);
  pull->add_option("A", o.a)->required();
  pull->add_option("--tau", o.tau, "cycles on the target intervals, e.g. \"(1 2)\"")
      ->required();

  auto* iso = app.add_subcommand("iso", "exit 0 iff A and B are isomorphic");
  add_common(iso, o);
  iso->add_option("A", o.a)->required();
  iso->add_option("B", o.b)->required();

  auto* cls = app.add_subcommand("classify", "isomorphism classes of connected OBJ -> (0)");
  add_common(cls, o);
  cls->add_option("OBJ", o.a)->required();
  cls->add_option("-G", o.genus, "maximum genus")->required();
  cls->add_option("-W", o.windows, "maximum windows per brane")->required();
  cls->add_option("--csv", o.csv, "write the strata table as CSV");

  auto* stab = app.add_subcommand("stabilize", "glue T (or T_B) onto the outgoing circle");
  add_common(stab, o);
  stab->add_option("A", o.a)->required();
  stab->add_option("-k", o.times, "number of gluings");
  stab->add_option("-o,--name", o.name, "result name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  Session s(out, err);
  try {
    if (check->parsed()) return cmd_check(s, o);
    if (inv->parsed()) return cmd_invariants(s, o);
    if (cls->parsed()) return cmd_classify(s, o);
    if (iso->parsed()) return cmd_iso(s, o);
    if (compose_cmd->parsed()) {
      s.load(o.file);
      const auto& second = s.cobordism(o.a);
      const auto& first = s.cobordism(o.b);
      s.emit_cobordism(o.name.empty() ? o.a + "_" + o.b : o.name,
                       compose(second.cobordism, first.cobordism), o.json);
      return kExitOk;
    }
    if (tensor_cmd->parsed()) {
      s.load(o.file);
      const auto& a = s.cobordism(o.a);
      const auto& b = s.cobordism(o.b);
      s.emit_cobordism(o.name.empty() ? o.a + "_x_" + o.b : o.name,
                       tensor(a.cobordism, b.cobordism), o.json);
      return kExitOk;
    }
    if (swap_cmd->parsed()) {
      s.load(o.file);
      s.emit_cobordism(o.name.empty() ? "swap_" + o.a + "_" + o.b : o.name,
                       swap_cobordism(s.object(o.a), s.object(o.b)), o.json);
      return kExitOk;
    }
    if (sigma_cmd->parsed()) {
      s.load(o.file);
      s.emit_permutation(boundary_permutation(s.cobordism(o.a).cobordism), o.json);
      return kExitOk;
    }
    if (pull->parsed()) {
      s.load(o.file);
      const Cobordism& c = s.cobordism(o.a).cobordism;
      Permutation tau;
      try {
        tau = parse_cycles(o.tau, c.target.interval_indices());
      } catch (const PreconditionError& e) {
        err << "--tau: " << e.what() << "\n";
        return kExitUsage;
      }
      s.emit_permutation(pullback(c, tau), o.json);
      return kExitOk;
    }
    if (stab->parsed()) {
      s.load(o.file);
      s.emit_cobordism(o.name.empty() ? o.a + "_stab" : o.name,
                       stabilize(s.cobordism(o.a).cobordism, o.times), o.json);
      return kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace occat
