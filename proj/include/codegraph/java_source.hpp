#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace codegraph::java {

enum class DeclKind { Class, Interface, Enum, Record, Annotation };

/// Structural skeleton of one Java type declaration: supertype base names,
/// base identifiers of field and constructor-parameter types, and nested
/// declarations in source order.
///
/// Capture rules:
///  - only single-segment, non-primitive type names are captured; `a.b.Foo`
///    captures nothing, `Foo<Bar>` and `Foo[]` capture `Foo`
///  - field types are captured in class, enum, and record bodies (interface
///    and annotation constants are not fields)
///  - constructor parameters are captured for explicit constructors,
///    including a record's explicit canonical constructor; record headers,
///    compact constructors, and varargs parameters capture nothing
///  - fields inside anonymous or enum-constant bodies are not captured, but
///    named declarations found there are still collected
struct TypeDecl {
    std::string name;
    DeclKind kind = DeclKind::Class;
    std::vector<std::string> extends_types;
    std::vector<std::string> implements_types;
    std::vector<std::string> field_types;
    std::vector<std::string> ctor_param_types;
    std::vector<TypeDecl> nested;
};

struct ParseResult {
    std::vector<TypeDecl> decls; // top-level declarations in source order
    bool failed = false;         // declaration keywords seen but nothing recovered
};

/// Error-tolerant structural scan. Never throws on malformed input; it
/// recovers token by token and reports what it could attribute.
ParseResult parse_types(std::string_view source);

} // namespace codegraph::java
