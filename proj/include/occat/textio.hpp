#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occat/surface.hpp"

namespace occat {

struct NamedObject {
  std::string name;
  GeneralObject object;

  friend bool operator==(const NamedObject&, const NamedObject&) = default;
};

struct NamedCobordism {
  std::string name;
  std::string source;  // object names
  std::string target;
  Cobordism cobordism;

  friend bool operator==(const NamedCobordism&, const NamedCobordism&) = default;
};

/// A parsed DSL file: brane declaration, named objects, named cobordisms.
struct Document {
  BraneSet branes;
  std::vector<NamedObject> objects;
  std::vector<NamedCobordism> cobordisms;

  const NamedObject* find_object(std::string_view name) const;
  const NamedCobordism* find_cobordism(std::string_view name) const;

  friend bool operator==(const Document&, const Document&) = default;
};

enum class DiagnosticKind { Syntax, Resolve, Validation };

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  DiagnosticKind kind = DiagnosticKind::Syntax;
  std::string message;
};

/// "3:14: syntax error: expected ';'".
std::string to_string(const Diagnostic& d);

struct ParseResult {
  /// Present unless a syntax or resolve error stopped the parse; may still
  /// carry validation diagnostics.
  std::optional<Document> document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value() && diagnostics.empty(); }
  /// Syntax or resolve errors, as opposed to validation failures.
  bool malformed() const { return !document.has_value(); }
};

ParseResult parse(std::string_view text);

/// Parses the cycle notation used after `sigma` ("id" or "(2 3)(4)") into a
/// permutation on `domain`. Throws PreconditionError on malformed input.
Permutation parse_cycles(std::string_view text, std::vector<Index> domain);

/// Canonical text: cobordisms canonicalized, fixed layout, byte-stable.
std::string serialize(const Document& doc);

/// The document with every cobordism canonicalized.
Document canonical(const Document& doc);

/// A minimal document holding `c` under `name`. Objects equal to one named in
/// `base` keep that name; others are named `<name>_src` / `<name>_tgt`.
Document result_document(const Document& base, const std::string& name,
                         const Cobordism& c);

}  // namespace occat
