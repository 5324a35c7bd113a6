#include "codegraph/java_source.hpp"

#include <array>
#include <cstddef>

namespace codegraph::java {

namespace {

enum class TokKind { Ident, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text; // ident text
    char ch = 0;      // punct char
};

bool ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    auto at = [&](std::size_t k) -> unsigned char {
        return k < n ? static_cast<unsigned char>(src[k]) : 0;
    };
    while (i < n) {
        unsigned char c = at(i);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == 0x0B) {
            ++i;
            continue;
        }
        if (c == '/' && at(i + 1) == '/') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && at(i + 1) == '*') {
            i += 2;
            while (i < n && !(src[i] == '*' && at(i + 1) == '/')) ++i;
            i = i < n ? i + 2 : n;
            continue;
        }
        if (c == '"' && at(i + 1) == '"' && at(i + 2) == '"') { // text block
            i += 3;
            while (i < n && !(src[i] == '"' && at(i + 1) == '"' && at(i + 2) == '"')) {
                if (src[i] == '\\') ++i;
                ++i;
            }
            i = i < n ? i + 3 : n;
            continue;
        }
        if (c == '"' || c == '\'') {
            char quote = src[i];
            ++i;
            while (i < n && src[i] != quote) {
                if (src[i] == '\\') ++i;
                ++i;
            }
            if (i < n) ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            ++i;
            while (i < n) {
                unsigned char d = at(i);
                if (ident_part(d)) {
                    ++i;
                } else if (d == '.' && at(i + 1) >= '0' && at(i + 1) <= '9') {
                    i += 2;
                } else {
                    break;
                }
            }
            continue;
        }
        if (ident_start(c)) {
            std::size_t start = i;
            ++i;
            while (i < n && ident_part(at(i))) ++i;
            Token t;
            t.kind = TokKind::Ident;
            t.text.assign(src.substr(start, i - start));
            out.push_back(std::move(t));
            continue;
        }
        Token t;
        t.kind = TokKind::Punct;
        t.ch = static_cast<char>(c);
        out.push_back(std::move(t));
        ++i;
    }
    out.push_back(Token{});
    return out;
}

bool is_modifier(const std::string& word) {
    static const std::array<const char*, 14> words = {
        "public", "private", "protected", "static", "final", "abstract", "sealed",
        "strictfp", "transient", "volatile", "synchronized", "native", "default",
        "non"};
    for (const char* w : words) {
        if (word == w) return true;
    }
    return false;
}

bool is_primitive(const std::string& word) {
    static const std::array<const char*, 10> words = {"boolean", "byte", "short", "int", "long",
                                                      "char",    "float", "double", "void", "var"};
    for (const char* w : words) {
        if (word == w) return true;
    }
    return false;
}

struct ParsedType {
    std::string base;
    bool capturable = false;
};

class Scanner {
public:
    explicit Scanner(std::string_view src) : toks_(lex(src)) {}

    ParseResult run() {
        ParseResult result;
        while (!at_end()) {
            if (at_decl_start()) {
                adopt(parse_declaration(), result.decls);
            } else {
                advance();
            }
        }
        result.failed = result.decls.empty() && (saw_decl_keyword_ || truncated_);
        return result;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool saw_decl_keyword_ = false;
    bool truncated_ = false; // input ended inside an unclosed construct

    const Token& peek(std::size_t off = 0) const {
        std::size_t k = pos_ + off;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }

    bool at_end() const { return peek().kind == TokKind::End; }
    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }

    bool punct(char c, std::size_t off = 0) const {
        const Token& t = peek(off);
        return t.kind == TokKind::Punct && t.ch == c;
    }

    bool word(const char* s, std::size_t off = 0) const {
        const Token& t = peek(off);
        return t.kind == TokKind::Ident && t.text == s;
    }

    bool prev_is_dot() const {
        return pos_ > 0 && toks_[pos_ - 1].kind == TokKind::Punct && toks_[pos_ - 1].ch == '.';
    }

    bool at_decl_start() const {
        if (prev_is_dot()) return false;
        if (word("class") || word("interface") || word("enum")) return true;
        if (punct('@') && word("interface", 1)) return true;
        if (word("record") && peek(1).kind == TokKind::Ident && (punct('(', 2) || punct('<', 2))) {
            return true;
        }
        return false;
    }

    static void adopt(TypeDecl&& decl, std::vector<TypeDecl>& into) {
        if (decl.name.empty()) {
            for (auto& nested : decl.nested) into.push_back(std::move(nested));
        } else {
            into.push_back(std::move(decl));
        }
    }

    void skip_annotation() {
        advance(); // '@'
        if (peek().kind != TokKind::Ident) return;
        advance();
        while (punct('.') && peek(1).kind == TokKind::Ident) {
            advance();
            advance();
        }
        if (punct('(')) skip_balanced('(', ')', nullptr);
    }

    /// Skips a balanced pair starting at the current `open` token. When
    /// `host` is given, nested type declarations found inside are parsed and
    /// attached to it.
    void skip_balanced(char open, char close, TypeDecl* host) {
        if (!punct(open)) return;
        advance();
        int depth = 1;
        while (!at_end() && depth > 0) {
            if (host && at_decl_start()) {
                adopt(parse_declaration(), host->nested);
                continue;
            }
            if (punct(open)) {
                ++depth;
            } else if (punct(close)) {
                --depth;
            }
            advance();
        }
        if (depth > 0) truncated_ = true;
    }

    /// Skips to the ';' ending a field or statement, balancing every bracket
    /// pair; nested declarations (anonymous-class members, local types) are
    /// collected into `host`.
    void skip_to_semicolon(TypeDecl* host) {
        int paren = 0, brace = 0, bracket = 0;
        while (!at_end()) {
            if (host && at_decl_start()) {
                adopt(parse_declaration(), host->nested);
                continue;
            }
            if (peek().kind == TokKind::Punct) {
                switch (peek().ch) {
                    case '(': ++paren; break;
                    case ')': --paren; break;
                    case '{': ++brace; break;
                    case '}': --brace; break;
                    case '[': ++bracket; break;
                    case ']': --bracket; break;
                    case ';':
                        if (paren <= 0 && brace <= 0 && bracket <= 0) {
                            advance();
                            return;
                        }
                        break;
                    default: break;
                }
            }
            advance();
        }
        truncated_ = true;
    }

    void skip_generic_args() {
        if (!punct('<')) return;
        advance();
        int depth = 1;
        while (!at_end() && depth > 0) {
            if (punct('<')) ++depth;
            if (punct('>')) --depth;
            if (punct(';')) return; // malformed; bail before eating members
            advance();
        }
    }

    bool parse_type(ParsedType& out) {
        while (punct('@')) skip_annotation();
        if (peek().kind != TokKind::Ident) return false;
        if (is_primitive(peek().text)) {
            out.base = peek().text;
            out.capturable = false;
            advance();
        } else {
            out.base = peek().text;
            out.capturable = true;
            advance();
            while (punct('.') && peek(1).kind == TokKind::Ident) {
                advance();
                advance();
                out.capturable = false; // qualified name, no capture
            }
        }
        if (punct('<')) skip_generic_args();
        while (true) {
            if (punct('@')) {
                skip_annotation();
            } else if (punct('[')) {
                advance();
                while (!at_end() && !punct(']')) advance();
                if (punct(']')) advance();
            } else {
                break;
            }
        }
        return true;
    }

    /// Comma-separated supertype list; captures single-segment base names.
    void parse_type_list(std::vector<std::string>& out, bool single) {
        while (true) {
            ParsedType t;
            if (!parse_type(t)) return;
            if (t.capturable) out.push_back(t.base);
            if (single || !punct(',')) return;
            advance();
        }
    }

    /// Constructor formal parameters; varargs and qualified types capture
    /// nothing.
    void parse_ctor_params(TypeDecl& decl) {
        if (!punct('(')) return;
        advance();
        while (!at_end() && !punct(')')) {
            while (punct('@')) skip_annotation();
            while (word("final")) advance();
            ParsedType t;
            if (!parse_type(t)) {
                advance();
                continue;
            }
            bool varargs = false;
            if (punct('.') && punct('.', 1) && punct('.', 2)) {
                varargs = true;
                advance();
                advance();
                advance();
            }
            if (t.capturable && !varargs) decl.ctor_param_types.push_back(t.base);
            if (peek().kind == TokKind::Ident) advance(); // parameter name
            while (punct('[')) {
                advance();
                if (punct(']')) advance();
            }
            if (punct(',')) advance();
        }
        if (punct(')')) {
            advance();
        } else {
            truncated_ = true;
        }
    }

    /// After a parameter list: throws clause, annotation member defaults,
    /// then body or ';'.
    void skip_member_tail(TypeDecl& decl) {
        while (!at_end()) {
            if (punct('{')) {
                skip_balanced('{', '}', &decl);
                return;
            }
            if (punct(';')) {
                advance();
                return;
            }
            if (at_decl_start()) return; // malformed; yield to the body loop
            advance();
        }
        truncated_ = true;
    }

    /// Members of a class, interface, record, annotation, or the member
    /// section of an enum. Consumes the closing '}'.
    void parse_members(TypeDecl& decl, bool allow_ctor, bool capture_fields) {
        while (!at_end() && !punct('}')) {
            if (punct(';')) {
                advance();
                continue;
            }
            if (punct('@') && !word("interface", 1)) {
                skip_annotation();
                continue;
            }
            if (at_decl_start()) {
                adopt(parse_declaration(), decl.nested);
                continue;
            }
            if (peek().kind == TokKind::Ident && is_modifier(peek().text)) {
                if (word("non") && punct('-', 1) && word("sealed", 2)) {
                    advance();
                    advance();
                }
                advance();
                continue;
            }
            if (punct('{')) { // initializer block
                skip_balanced('{', '}', &decl);
                continue;
            }
            if (punct('<')) { // generic method type parameters
                skip_generic_args();
                continue;
            }
            if (allow_ctor && peek().kind == TokKind::Ident && peek().text == decl.name &&
                punct('(', 1)) {
                advance();
                parse_ctor_params(decl);
                skip_member_tail(decl);
                continue;
            }
            if (decl.kind == DeclKind::Record && peek().kind == TokKind::Ident &&
                peek().text == decl.name && punct('{', 1)) { // compact constructor
                advance();
                skip_balanced('{', '}', &decl);
                continue;
            }
            ParsedType type;
            if (!parse_type(type)) {
                advance();
                continue;
            }
            if (peek().kind == TokKind::Ident) {
                advance(); // member name
                if (punct('(')) {
                    skip_balanced('(', ')', nullptr);
                    skip_member_tail(decl);
                } else {
                    if (capture_fields && type.capturable) decl.field_types.push_back(type.base);
                    skip_to_semicolon(&decl);
                }
            } else if (punct('(')) { // constructor-shaped leftover
                skip_balanced('(', ')', nullptr);
                skip_member_tail(decl);
            } else {
                advance();
            }
        }
        if (punct('}')) {
            advance();
        } else {
            truncated_ = true;
        }
    }

    /// Enum bodies open with a constant list; a ';' switches to members.
    void parse_enum_body(TypeDecl& decl) {
        bool constants = true;
        while (!at_end() && !punct('}') && constants) {
            while (punct('@')) skip_annotation();
            if (punct(';')) {
                advance();
                constants = false;
                break;
            }
            if (punct('}')) break;
            if (peek().kind == TokKind::Ident) {
                advance(); // constant name
                if (punct('(')) skip_balanced('(', ')', &decl);
                if (punct('{')) { // constant body: collect nested decls only
                    TypeDecl anon;
                    anon.kind = DeclKind::Class;
                    skip_balanced('{', '}', &anon);
                    for (auto& nested : anon.nested) decl.nested.push_back(std::move(nested));
                }
                if (punct(',')) advance();
                continue;
            }
            advance();
        }
        if (constants) {
            if (punct('}')) {
                advance();
            } else {
                truncated_ = true;
            }
        } else {
            parse_members(decl, true, true);
        }
    }

    /// pos_ sits on the introducing keyword ('@' for annotation types).
    TypeDecl parse_declaration() {
        saw_decl_keyword_ = true;
        TypeDecl decl;
        if (punct('@')) {
            decl.kind = DeclKind::Annotation;
            advance(); // '@'
            advance(); // 'interface'
        } else if (word("class")) {
            decl.kind = DeclKind::Class;
            advance();
        } else if (word("interface")) {
            decl.kind = DeclKind::Interface;
            advance();
        } else if (word("enum")) {
            decl.kind = DeclKind::Enum;
            advance();
        } else {
            decl.kind = DeclKind::Record;
            advance();
        }
        if (peek().kind != TokKind::Ident) return decl; // malformed, name stays empty
        decl.name = peek().text;
        advance();

        if (punct('<')) skip_generic_args();
        if (decl.kind == DeclKind::Record) skip_balanced('(', ')', nullptr); // header

        while (true) {
            if (word("extends")) {
                advance();
                parse_type_list(decl.extends_types, decl.kind != DeclKind::Interface);
            } else if (word("implements")) {
                advance();
                parse_type_list(decl.implements_types, false);
            } else if (word("permits")) {
                advance();
                std::vector<std::string> ignored;
                parse_type_list(ignored, false);
            } else {
                break;
            }
        }

        if (punct('{')) {
            advance();
            if (decl.kind == DeclKind::Enum) {
                parse_enum_body(decl);
            } else {
                bool allow_ctor = decl.kind == DeclKind::Class || decl.kind == DeclKind::Record;
                bool capture_fields =
                    decl.kind != DeclKind::Interface && decl.kind != DeclKind::Annotation;
                parse_members(decl, allow_ctor, capture_fields);
            }
        } else if (punct(';')) {
            advance();
        }
        return decl;
    }
};

} // namespace

ParseResult parse_types(std::string_view source) { return Scanner(source).run(); }

} // namespace codegraph::java
