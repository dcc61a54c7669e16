#include "aieo/turtle.hpp"

#include "aieo/detail/overloaded.hpp"
#include "aieo/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace aieo {

using detail::Overloaded;

namespace {

enum class Tok { IriRef, PName, A, AtPrefix, SparqlPrefix, String, Dot, Semicolon, Comma, End };

struct Token {
    Tok kind;
    std::string text;  // IRI body, prefixed name, or unescaped literal
    std::optional<std::string> language;
    std::size_t offset = 0;
};

ParseError fail_at(std::string_view source, std::size_t offset, ErrorCode code, std::string message) {
    auto [line, column] = line_column_at(source, offset);
    return ParseError(code, {{line, column, std::move(message), Severity::Error}});
}

bool is_name_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':' || c >= 0x80;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", std::nullopt, pos_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void unsupported(std::size_t at, const std::string& what) const {
        throw fail_at(src_, at, ErrorCode::UnsupportedFeature, what + " is outside the supported Turtle subset");
    }

    [[noreturn]] void syntax(std::size_t at, const std::string& what) const {
        throw fail_at(src_, at, ErrorCode::SyntaxError, what);
    }

    Token next() {
        const std::size_t start = pos_;
        const char c = src_[pos_];
        switch (c) {
            case '.': ++pos_; return {Tok::Dot, ".", std::nullopt, start};
            case ';': ++pos_; return {Tok::Semicolon, ";", std::nullopt, start};
            case ',': ++pos_; return {Tok::Comma, ",", std::nullopt, start};
            case '[':
            case ']': unsupported(start, "blank node '[ ]'");
            case '(':
            case ')': unsupported(start, "collection '( )'");
            case '<': return iri_ref();
            case '"':
            case '\'': return string_literal();
            case '@': return at_keyword();
            default: break;
        }
        if (c == '_' && pos_ + 1 < src_.size() && src_[pos_ + 1] == ':') unsupported(start, "blank node '_:'");
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
            unsupported(start, "numeric literal");
        }
        if (is_name_char(static_cast<unsigned char>(c))) return name();
        syntax(start, std::string("unexpected character '") + c + "'");
    }

    Token iri_ref() {
        const std::size_t start = pos_;
        ++pos_;
        std::string body;
        while (pos_ < src_.size() && src_[pos_] != '>') {
            char c = src_[pos_];
            if (c == '\n' || c == ' ' || c == '<' || c == '"') syntax(pos_, "invalid character in IRI");
            body += c;
            ++pos_;
        }
        if (pos_ >= src_.size()) syntax(start, "unterminated IRI");
        ++pos_;
        if (!is_absolute_iri(body)) unsupported(start, "relative IRI <" + body + ">");
        return {Tok::IriRef, body, std::nullopt, start};
    }

    Token string_literal() {
        const std::size_t start = pos_;
        const char quote = src_[pos_];
        if (src_.substr(pos_, 3) == std::string(3, quote)) unsupported(start, "long string literal");
        ++pos_;
        std::string value;
        while (true) {
            if (pos_ >= src_.size() || src_[pos_] == '\n') syntax(start, "unterminated string literal");
            char c = src_[pos_];
            if (c == quote) {
                ++pos_;
                break;
            }
            if (c == '\\') {
                if (pos_ + 1 >= src_.size()) syntax(pos_, "dangling escape");
                char e = src_[pos_ + 1];
                switch (e) {
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    case 'b': value += '\b'; break;
                    case 'f': value += '\f'; break;
                    case '"': value += '"'; break;
                    case '\'': value += '\''; break;
                    case '\\': value += '\\'; break;
                    default: unsupported(pos_, std::string("escape sequence '\\") + e + "'");
                }
                pos_ += 2;
                continue;
            }
            value += c;
            ++pos_;
        }
        Token tok{Tok::String, std::move(value), std::nullopt, start};
        if (pos_ < src_.size() && src_[pos_] == '@') {
            std::size_t lang_start = ++pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-'))
                ++pos_;
            if (pos_ == lang_start) syntax(lang_start, "empty language tag");
            tok.language = std::string(src_.substr(lang_start, pos_ - lang_start));
        } else if (src_.substr(pos_, 2) == "^^") {
            unsupported(pos_, "datatyped literal");
        }
        return tok;
    }

    Token at_keyword() {
        const std::size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        auto word = src_.substr(start, pos_ - start);
        if (word == "@prefix") return {Tok::AtPrefix, std::string(word), std::nullopt, start};
        if (word == "@base") unsupported(start, "@base directive");
        syntax(start, "unknown directive '" + std::string(word) + "'");
    }

    Token name() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_name_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        // A trailing '.' terminates the statement rather than the name.
        while (pos_ > start + 1 && src_[pos_ - 1] == '.') --pos_;
        std::string word(src_.substr(start, pos_ - start));
        if (word.find(':') != std::string::npos) return {Tok::PName, word, std::nullopt, start};
        if (word == "a") return {Tok::A, word, std::nullopt, start};
        std::string upper = word;
        std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
        if (upper == "PREFIX") return {Tok::SparqlPrefix, word, std::nullopt, start};
        if (upper == "BASE") unsupported(start, "BASE directive");
        if (word == "true" || word == "false") unsupported(start, "boolean literal");
        syntax(start, "unexpected bare word '" + word + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

struct Term {
    bool is_literal = false;
    Iri iri;
    AnnotationValue literal;
    std::size_t offset = 0;
};

struct RawTriple {
    Term subject;
    Term predicate;
    Term object;
    std::size_t group = 0;  // one id per (subject, predicate, object list)
};

class Parser {
public:
    Parser(std::string_view src, std::vector<Token> tokens) : src_(src), tokens_(std::move(tokens)) {}

    std::vector<RawTriple> run(PrefixMap& declared) {
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::AtPrefix) {
                advance();
                prefix_body(declared);
                expect(Tok::Dot, "'.' after @prefix directive");
            } else if (peek().kind == Tok::SparqlPrefix) {
                advance();
                prefix_body(declared);
            } else {
                statement();
            }
        }
        return std::move(triples_);
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    [[noreturn]] void syntax(const Token& at, const std::string& message) const {
        throw fail_at(src_, at.offset, ErrorCode::SyntaxError, message);
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) syntax(peek(), "expected " + what);
        advance();
    }

    void prefix_body(PrefixMap& declared) {
        const Token& name = advance();
        if (name.kind != Tok::PName || name.text.back() != ':' ||
            name.text.find(':') != name.text.size() - 1)
            syntax(name, "expected a prefix name ending in ':'");
        const Token& base = advance();
        if (base.kind != Tok::IriRef) syntax(base, "expected <IRI> for prefix");
        prefixes_.set(name.text.substr(0, name.text.size() - 1), base.text);
        declared.set(name.text.substr(0, name.text.size() - 1), base.text);
    }

    Term iri_term(const Token& tok) {
        if (tok.kind == Tok::IriRef) return Term{false, Iri(tok.text), {}, tok.offset};
        if (tok.kind == Tok::PName) {
            auto colon = tok.text.find(':');
            auto prefix = tok.text.substr(0, colon);
            auto base = prefixes_.base_of(prefix);
            if (!base) throw fail_at(src_, tok.offset, ErrorCode::SyntaxError, "undeclared prefix '" + prefix + ":'");
            auto local = tok.text.substr(colon + 1);
            if (!local.empty() && !is_plain_local_name(local)) syntax(tok, "invalid local name '" + local + "'");
            return Term{false, Iri(*base + local), {}, tok.offset};
        }
        syntax(tok, "expected an IRI");
    }

    void statement() {
        Term subject = iri_term(advance());
        while (true) {
            Term predicate;
            const Token& verb = advance();
            if (verb.kind == Tok::A) {
                predicate = Term{false, vocab::rdf_type(), {}, verb.offset};
            } else {
                predicate = iri_term(verb);
            }
            const std::size_t group = next_group_++;
            while (true) {
                const Token& obj = advance();
                Term object;
                if (obj.kind == Tok::String) {
                    object.is_literal = true;
                    object.literal = AnnotationValue{obj.text, obj.language};
                    object.offset = obj.offset;
                } else {
                    object = iri_term(obj);
                }
                triples_.push_back({subject, predicate, object, group});
                if (peek().kind != Tok::Comma) break;
                advance();
            }
            if (peek().kind == Tok::Dot) {
                advance();
                return;
            }
            if (peek().kind != Tok::Semicolon) syntax(peek(), "expected ';', ',' or '.'");
            while (peek().kind == Tok::Semicolon) advance();
            if (peek().kind == Tok::Dot) {
                advance();
                return;
            }
        }
    }

    std::string_view src_;
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    std::size_t next_group_ = 0;
    PrefixMap prefixes_;
    std::vector<RawTriple> triples_;
};

std::optional<EntityKind> declared_kind_for(const Iri& type) {
    if (type == vocab::owl_Class()) return EntityKind::OwlClass;
    if (type == vocab::owl_ObjectProperty()) return EntityKind::ObjectProperty;
    if (type == vocab::owl_AnnotationProperty()) return EntityKind::AnnotationProperty;
    if (type == vocab::owl_DatatypeProperty()) return EntityKind::DataProperty;
    if (type == vocab::owl_NamedIndividual()) return EntityKind::NamedIndividual;
    return std::nullopt;
}

// Picks the position of the term the error is about, defaulting to the subject.
std::size_t blame_offset(const RawTriple& t, const Error& e) {
    std::string what = e.what();
    for (const Term* term : {&t.predicate, &t.object, &t.subject}) {
        if (!term->is_literal && what.find("<" + term->iri.str() + ">") != std::string::npos) return term->offset;
    }
    return t.subject.offset;
}

class Mapper {
public:
    Mapper(std::string_view src, OntologyStore& store, std::vector<ParseDiagnostic>& warnings)
        : src_(src), store_(store), warnings_(warnings) {}

    void run(const std::vector<RawTriple>& triples) {
        // Pass 1: declarations, wherever they appear.
        for (const auto& t : triples) {
            if (t.predicate.iri == vocab::rdf_type() && !t.object.is_literal) {
                if (auto kind = declared_kind_for(t.object.iri)) guarded(t, [&] { store_.declare(t.subject.iri, *kind); });
            }
        }
        // Pass 2: everything else, with n-ary equivalences assembled per object list.
        std::map<std::size_t, std::pair<const RawTriple*, std::vector<Iri>>> class_groups;
        std::map<std::size_t, std::pair<const RawTriple*, std::vector<Iri>>> property_groups;
        for (const auto& t : triples) {
            const Iri& p = t.predicate.iri;
            if (p == vocab::rdf_type()) {
                if (t.object.is_literal) kind_error(t, "rdf:type needs an IRI object");
                if (declared_kind_for(t.object.iri)) continue;
                if (t.object.iri == vocab::owl_Ontology()) {
                    warn(t.subject.offset, "owl:Ontology header ignored");
                    continue;
                }
                add(t, ClassAssertion{t.object.iri, t.subject.iri});
            } else if (p == vocab::owl_equivalentClass() || p == vocab::owl_equivalentProperty()) {
                if (t.object.is_literal) kind_error(t, "equivalence needs an IRI object");
                auto& groups = p == vocab::owl_equivalentClass() ? class_groups : property_groups;
                auto& [first, members] = groups[t.group];
                if (!first) {
                    first = &t;
                    members.push_back(t.subject.iri);
                }
                members.push_back(t.object.iri);
            } else if (is_schema_predicate(p)) {
                if (t.object.is_literal) kind_error(t, "schema predicate needs an IRI object");
                add(t, schema_axiom(p, t.subject.iri, t.object.iri));
            } else {
                auto kind = store_.kind_of(p);
                if (!kind) {
                    throw fail_at(src_, t.predicate.offset, ErrorCode::UndeclaredEntity,
                                  "predicate <" + p.str() + "> is not declared");
                }
                switch (*kind) {
                    case EntityKind::AnnotationProperty:
                        if (!t.object.is_literal) {
                            throw fail_at(src_, t.object.offset, ErrorCode::UnsupportedFeature,
                                          "IRI-valued annotation is outside the supported Turtle subset");
                        }
                        add(t, AnnotationAssertion{t.subject.iri, p, t.object.literal});
                        break;
                    case EntityKind::ObjectProperty:
                        if (t.object.is_literal) kind_error(t, "object property needs an IRI object");
                        add(t, ObjectPropertyAssertion{t.subject.iri, p, t.object.iri});
                        break;
                    case EntityKind::DataProperty:
                        throw fail_at(src_, t.predicate.offset, ErrorCode::UnsupportedFeature,
                                      "data property assertion is outside the supported Turtle subset");
                    default:
                        throw fail_at(src_, t.predicate.offset, ErrorCode::KindMismatch,
                                      "<" + p.str() + "> is not a property");
                }
            }
        }
        for (auto& [group, entry] : class_groups) add(*entry.first, make_equivalent_classes(entry.second));
        for (auto& [group, entry] : property_groups) add(*entry.first, make_equivalent_properties(entry.second));
    }

private:
    static bool is_schema_predicate(const Iri& p) {
        return p == vocab::rdfs_subClassOf() || p == vocab::owl_disjointWith() || p == vocab::rdfs_subPropertyOf() ||
               p == vocab::rdfs_range() || p == vocab::rdfs_domain() || p == vocab::owl_sameAs();
    }

    static Axiom schema_axiom(const Iri& p, const Iri& s, const Iri& o) {
        if (p == vocab::rdfs_subClassOf()) return SubClassOf{s, o};
        if (p == vocab::owl_disjointWith()) return make_disjoint(s, o);
        if (p == vocab::rdfs_subPropertyOf()) return SubObjectPropertyOf{s, o};
        if (p == vocab::rdfs_range()) return ObjectPropertyRange{s, o};
        if (p == vocab::rdfs_domain()) return ObjectPropertyDomain{s, o};
        return make_same(s, o);
    }

    template <class F>
    void guarded(const RawTriple& t, F&& f) {
        try {
            f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw fail_at(src_, blame_offset(t, e), e.code(), e.what());
        }
    }

    void add(const RawTriple& t, const Axiom& axiom) {
        guarded(t, [&] { store_.add(axiom); });
    }

    [[noreturn]] void kind_error(const RawTriple& t, const std::string& message) {
        throw fail_at(src_, t.object.offset, ErrorCode::KindMismatch, message);
    }

    void warn(std::size_t offset, std::string message) {
        auto [line, column] = line_column_at(src_, offset);
        warnings_.push_back({line, column, std::move(message), Severity::Warning});
    }

    std::string_view src_;
    OntologyStore& store_;
    std::vector<ParseDiagnostic>& warnings_;
};

}  // namespace

TurtleParseResult parse_turtle_with_warnings(std::string_view text) {
    TurtleParseResult result;
    Lexer lexer(text);
    Parser parser(text, lexer.run());
    PrefixMap declared;
    auto triples = parser.run(declared);
    result.store.prefixes().merge(declared);
    Mapper mapper(text, result.store, result.warnings);
    mapper.run(triples);
    return result;
}

OntologyStore parse_turtle(std::string_view text) { return parse_turtle_with_warnings(text).store; }

namespace {

std::string literal_text(const AnnotationValue& value) {
    std::string out = "\"";
    for (char c : value.text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default: out += c;
        }
    }
    out += '"';
    if (value.language) out += "@" + *value.language;
    return out;
}

// One `predicate objects` entry of a subject block.
struct Entry {
    int rank;
    std::string predicate;
    std::vector<std::string> objects;
};

int declaration_rank(EntityKind kind) { return static_cast<int>(kind); }

}  // namespace

std::string serialize_turtle(const OntologyStore& store) {
    const PrefixMap& px = store.prefixes();
    std::ostringstream out;
    for (const auto& [prefix, base] : px.entries()) out << "@prefix " << prefix << ": <" << base << "> .\n";

    // Predicate order within a subject block.
    enum Rank { Type, SubClass, Equivalence, Disjoint, Range, Domain, SubProperty, Assertion, Annotation };

    // subject -> (rank, predicate-sort-key) -> objects; equivalences keep one entry per axiom.
    struct Block {
        std::vector<std::pair<Iri, std::string>> declared_types;  // kind order
        std::map<std::pair<int, Iri>, std::set<std::pair<Iri, std::string>>> grouped;
        std::vector<std::pair<int, std::vector<Iri>>> equivalences;  // 0 = class, 1 = property
    };
    std::map<Iri, Block> blocks;

    auto group = [&](const Iri& subject, int rank, const Iri& predicate, const Iri& sort_key, std::string rendered) {
        blocks[subject].grouped[{rank, predicate}].insert({sort_key, std::move(rendered)});
    };
    const Iri no_key;

    for (const auto& axiom : store.axioms()) {
        std::visit(
            Overloaded{
                [&](const Declaration& ax) {
                    static const Iri types[] = {vocab::owl_Class(), vocab::owl_ObjectProperty(),
                                                vocab::owl_AnnotationProperty(), vocab::owl_DatatypeProperty(),
                                                vocab::owl_NamedIndividual()};
                    const Iri& t = types[declaration_rank(ax.kind)];
                    blocks[ax.iri].declared_types.emplace_back(t, px.compact(t));
                },
                [&](const SubClassOf& ax) {
                    group(ax.sub, SubClass, vocab::rdfs_subClassOf(), ax.sup, px.compact(ax.sup));
                },
                [&](const EquivalentClasses& ax) { blocks[ax.classes.front()].equivalences.push_back({0, ax.classes}); },
                [&](const EquivalentObjectProperties& ax) {
                    blocks[ax.properties.front()].equivalences.push_back({1, ax.properties});
                },
                [&](const SameIndividual& ax) {
                    group(ax.first, Equivalence, vocab::owl_sameAs(), ax.second, px.compact(ax.second));
                },
                [&](const DisjointClasses& ax) {
                    group(ax.first, Disjoint, vocab::owl_disjointWith(), ax.second, px.compact(ax.second));
                },
                [&](const ObjectPropertyRange& ax) {
                    group(ax.property, Range, vocab::rdfs_range(), ax.cls, px.compact(ax.cls));
                },
                [&](const ObjectPropertyDomain& ax) {
                    group(ax.property, Domain, vocab::rdfs_domain(), ax.cls, px.compact(ax.cls));
                },
                [&](const SubObjectPropertyOf& ax) {
                    group(ax.sub, SubProperty, vocab::rdfs_subPropertyOf(), ax.sup, px.compact(ax.sup));
                },
                [&](const ClassAssertion& ax) {
                    group(ax.individual, Type, vocab::rdf_type(), ax.cls, px.compact(ax.cls));
                },
                [&](const ObjectPropertyAssertion& ax) {
                    group(ax.subject, Assertion, ax.property, ax.object, px.compact(ax.object));
                },
                [&](const AnnotationAssertion& ax) {
                    group(ax.subject, Annotation, ax.property, no_key, literal_text(ax.value));
                },
            },
            axiom);
    }

    for (auto& [subject, block] : blocks) {
        std::vector<Entry> entries;
        // `a` objects: declaration types first, then asserted classes.
        std::vector<std::string> type_objects;
        std::sort(block.declared_types.begin(), block.declared_types.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (const auto& [iri, rendered] : block.declared_types) type_objects.push_back(rendered);
        if (auto it = block.grouped.find({Type, vocab::rdf_type()}); it != block.grouped.end()) {
            for (const auto& [key, rendered] : it->second) type_objects.push_back(rendered);
            block.grouped.erase(it);
        }
        if (!type_objects.empty()) entries.push_back({Type, "a", type_objects});

        for (const auto& [key, objects] : block.grouped) {
            if (key.first > Equivalence) continue;
            std::vector<std::string> rendered;
            for (const auto& o : objects) rendered.push_back(o.second);
            entries.push_back({key.first, px.compact(key.second), rendered});
        }
        std::sort(block.equivalences.begin(), block.equivalences.end());
        for (const auto& [which, members] : block.equivalences) {
            std::vector<std::string> rendered;
            for (std::size_t i = 1; i < members.size(); ++i) rendered.push_back(px.compact(members[i]));
            entries.push_back({Equivalence,
                               px.compact(which == 0 ? vocab::owl_equivalentClass() : vocab::owl_equivalentProperty()),
                               rendered});
        }
        for (const auto& [key, objects] : block.grouped) {
            if (key.first <= Equivalence) continue;
            std::vector<std::string> rendered;
            for (const auto& o : objects) rendered.push_back(o.second);
            entries.push_back({key.first, px.compact(key.second), rendered});
        }
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) { return l.rank < r.rank; });

        out << '\n' << px.compact(subject);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            out << (i == 0 ? " " : " ;\n    ") << entries[i].predicate << ' ';
            for (std::size_t j = 0; j < entries[i].objects.size(); ++j) {
                if (j > 0) out << " , ";
                out << entries[i].objects[j];
            }
        }
        out << " .\n";
    }
    return out.str();
}

}  // namespace aieo
