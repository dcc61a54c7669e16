#include "aieo/query.hpp"

#include "aieo/vocabulary.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace aieo {

namespace {

enum class Tok { Word, Var, IriRef, PName, String, LBrace, RBrace, Dot, Star, Other, End };

struct Token {
    Tok kind;
    std::string text;
    std::optional<std::string> language;
    std::size_t offset;
};

ParseError fail(std::string_view src, std::size_t offset, ErrorCode code, std::string message) {
    auto [line, column] = line_column_at(src, offset);
    return ParseError(code, {{line, column, std::move(message), Severity::Error}});
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

bool is_word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '-' || c == ':' || c == '.' || c >= 0x80; }

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (true) {
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        if (pos >= src.size()) {
            out.push_back({Tok::End, "", std::nullopt, pos});
            return out;
        }
        const std::size_t start = pos;
        const char c = src[pos];
        if (c == '{') {
            out.push_back({Tok::LBrace, "{", std::nullopt, pos++});
        } else if (c == '}') {
            out.push_back({Tok::RBrace, "}", std::nullopt, pos++});
        } else if (c == '.') {
            out.push_back({Tok::Dot, ".", std::nullopt, pos++});
        } else if (c == '*') {
            out.push_back({Tok::Star, "*", std::nullopt, pos++});
        } else if (c == '?' || c == '$') {
            ++pos;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) ++pos;
            if (pos == start + 1) throw fail(src, start, ErrorCode::SyntaxError, "empty variable name");
            out.push_back({Tok::Var, std::string(src.substr(start + 1, pos - start - 1)), std::nullopt, start});
        } else if (c == '<') {
            auto end = src.find('>', pos);
            if (end == std::string_view::npos) throw fail(src, start, ErrorCode::SyntaxError, "unterminated IRI");
            out.push_back({Tok::IriRef, std::string(src.substr(pos + 1, end - pos - 1)), std::nullopt, start});
            pos = end + 1;
        } else if (c == '"') {
            ++pos;
            std::string value;
            while (pos < src.size() && src[pos] != '"') {
                if (src[pos] == '\\' && pos + 1 < src.size()) {
                    char e = src[pos + 1];
                    value += e == 'n' ? '\n' : e == 't' ? '\t' : e;
                    pos += 2;
                } else {
                    value += src[pos++];
                }
            }
            if (pos >= src.size()) throw fail(src, start, ErrorCode::SyntaxError, "unterminated string literal");
            ++pos;
            Token tok{Tok::String, value, std::nullopt, start};
            if (pos < src.size() && src[pos] == '@') {
                std::size_t lang = ++pos;
                while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '-')) ++pos;
                tok.language = std::string(src.substr(lang, pos - lang));
            } else if (src.substr(pos, 2) == "^^") {
                throw fail(src, pos, ErrorCode::UnsupportedFeature, "datatyped literals are not supported");
            }
            out.push_back(std::move(tok));
        } else if (is_word_char(static_cast<unsigned char>(c))) {
            while (pos < src.size() && is_word_char(static_cast<unsigned char>(src[pos]))) ++pos;
            while (pos > start + 1 && src[pos - 1] == '.') --pos;
            std::string word(src.substr(start, pos - start));
            out.push_back({word.find(':') != std::string::npos ? Tok::PName : Tok::Word, word, std::nullopt, start});
        } else {
            out.push_back({Tok::Other, std::string(1, c), std::nullopt, pos++});
        }
    }
}

const std::set<std::string>& unsupported_keywords() {
    static const std::set<std::string> words{"OPTIONAL", "FILTER",   "UNION",  "MINUS", "BIND",     "VALUES",
                                             "GRAPH",    "SERVICE",  "ORDER",  "LIMIT", "OFFSET",   "GROUP",
                                             "HAVING",   "ASK",      "CONSTRUCT", "DESCRIBE", "FROM", "BASE",
                                             "REDUCED",  "EXISTS",   "NOT"};
    return words;
}

class QueryParser {
public:
    QueryParser(std::string_view src, PrefixMap prefixes) : src_(src), tokens_(lex(src)), prefixes_(std::move(prefixes)) {
        for (const auto& tok : tokens_) {
            if (tok.kind == Tok::Word && unsupported_keywords().count(upper(tok.text))) {
                throw fail(src_, tok.offset, ErrorCode::UnsupportedFeature,
                           upper(tok.text) + " is outside the supported query subset");
            }
        }
    }

    Query run() {
        Query q;
        while (is_word("PREFIX")) {
            advance();
            const Token& name = advance();
            if (name.kind != Tok::PName || name.text.back() != ':') syntax(name, "expected a prefix name ending in ':'");
            const Token& base = advance();
            if (base.kind != Tok::IriRef || !is_absolute_iri(base.text)) syntax(base, "expected an absolute <IRI>");
            prefixes_.set(name.text.substr(0, name.text.size() - 1), base.text);
        }
        if (!is_word("SELECT")) syntax(peek(), "expected SELECT");
        advance();
        if (is_word("DISTINCT")) {
            advance();
            q.distinct = true;
        }
        bool star = false;
        std::vector<std::pair<std::string, std::size_t>> projected;
        if (peek().kind == Tok::Star) {
            advance();
            star = true;
        } else {
            while (peek().kind == Tok::Var) {
                const Token& v = advance();
                projected.emplace_back(v.text, v.offset);
            }
            if (projected.empty()) syntax(peek(), "expected projected variables or '*'");
        }
        if (is_word("WHERE")) advance();
        if (peek().kind != Tok::LBrace) syntax(peek(), "expected '{'");
        advance();
        while (peek().kind != Tok::RBrace) {
            q.patterns.push_back(pattern());
            if (peek().kind == Tok::Dot) {
                advance();
            } else if (peek().kind != Tok::RBrace) {
                syntax(peek(), "expected '.' or '}'");
            }
        }
        advance();
        if (peek().kind != Tok::End) syntax(peek(), "unexpected text after '}'");
        if (q.patterns.empty()) syntax(peek(), "empty graph pattern");

        std::vector<std::string> seen;
        for (const auto& p : q.patterns) {
            for (const auto* t : {&p.subject, &p.predicate, &p.object}) {
                if (const auto* v = std::get_if<Variable>(t)) {
                    if (std::find(seen.begin(), seen.end(), v->name) == seen.end()) seen.push_back(v->name);
                }
            }
        }
        if (star) {
            q.projected = seen;
        } else {
            for (const auto& [name, offset] : projected) {
                if (std::find(seen.begin(), seen.end(), name) == seen.end()) {
                    throw fail(src_, offset, ErrorCode::SyntaxError, "projected variable ?" + name + " is not bound by any pattern");
                }
                if (std::find(q.projected.begin(), q.projected.end(), name) == q.projected.end()) q.projected.push_back(name);
            }
        }
        check_connectivity(q);
        return q;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
    bool is_word(const char* w) const { return peek().kind == Tok::Word && upper(peek().text) == w; }

    [[noreturn]] void syntax(const Token& at, const std::string& message) const {
        throw fail(src_, at.offset, ErrorCode::SyntaxError, message);
    }

    PatternTerm term(bool predicate_position, bool object_position) {
        const Token& tok = advance();
        switch (tok.kind) {
            case Tok::Var: return Variable{tok.text};
            case Tok::IriRef:
                if (!is_absolute_iri(tok.text)) syntax(tok, "expected an absolute IRI");
                return Iri(tok.text);
            case Tok::PName: {
                auto iri = prefixes_.try_expand(tok.text);
                if (!iri) syntax(tok, "unknown prefix or malformed name '" + tok.text + "'");
                return *iri;
            }
            case Tok::Word:
                if (predicate_position && tok.text == "a") return vocab::rdf_type();
                syntax(tok, "unexpected word '" + tok.text + "'");
            case Tok::String:
                if (!object_position) syntax(tok, "literals are only allowed in object position");
                return AnnotationValue{tok.text, tok.language};
            case Tok::Other:
                if (tok.text == "/" || tok.text == "|" || tok.text == "^" || tok.text == "+" || tok.text == "(") {
                    throw fail(src_, tok.offset, ErrorCode::UnsupportedFeature,
                               "property paths and expressions are outside the supported query subset");
                }
                if (tok.text == "[" || tok.text == "_") {
                    throw fail(src_, tok.offset, ErrorCode::UnsupportedFeature, "blank nodes are not supported");
                }
                syntax(tok, "unexpected '" + tok.text + "'");
            case Tok::Star:
                throw fail(src_, tok.offset, ErrorCode::UnsupportedFeature, "property paths are not supported");
            default: syntax(tok, "expected a term");
        }
    }

    TriplePattern pattern() {
        TriplePattern p;
        p.subject = term(false, false);
        p.predicate = term(true, false);
        if (peek().kind == Tok::Star || (peek().kind == Tok::Other && (peek().text == "/" || peek().text == "|" ||
                                                                       peek().text == "+" || peek().text == "?"))) {
            throw fail(src_, peek().offset, ErrorCode::UnsupportedFeature, "property paths are not supported");
        }
        p.object = term(false, true);
        if (peek().kind == Tok::Other && (peek().text == ";" || peek().text == ",")) {
            throw fail(src_, peek().offset, ErrorCode::UnsupportedFeature,
                       "';' and ',' abbreviations are outside the supported query subset");
        }
        return p;
    }

    void check_connectivity(Query& q) const {
        auto vars_of = [](const TriplePattern& p) {
            std::set<std::string> out;
            for (const auto* t : {&p.subject, &p.predicate, &p.object}) {
                if (const auto* v = std::get_if<Variable>(t)) out.insert(v->name);
            }
            return out;
        };
        for (std::size_t i = 0; i < q.patterns.size(); ++i) {
            const auto mine = vars_of(q.patterns[i]);
            bool linked = std::any_of(mine.begin(), mine.end(), [&](const std::string& v) {
                return std::find(q.projected.begin(), q.projected.end(), v) != q.projected.end();
            });
            for (std::size_t j = 0; j < q.patterns.size() && !linked; ++j) {
                if (j == i) continue;
                const auto theirs = vars_of(q.patterns[j]);
                linked = std::any_of(mine.begin(), mine.end(), [&](const std::string& v) { return theirs.count(v) > 0; });
            }
            if (!linked) {
                q.warnings.push_back({1, 1,
                                      "pattern " + std::to_string(i + 1) +
                                          " shares no variable with the rest of the query (cartesian product)",
                                      Severity::Warning});
            }
        }
    }

    std::string_view src_;
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    PrefixMap prefixes_;
};

const std::vector<std::size_t>& empty_list() {
    static const std::vector<std::size_t> empty;
    return empty;
}

using Bindings = std::map<std::string, Term>;

// Resolves a pattern term under the current bindings: the constant, or nullopt if unbound.
std::optional<Term> resolve(const PatternTerm& t, const Bindings& b) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        auto it = b.find(v->name);
        if (it == b.end()) return std::nullopt;
        return it->second;
    }
    if (const auto* iri = std::get_if<Iri>(&t)) return Term{*iri};
    return Term{std::get<AnnotationValue>(t)};
}

int bound_positions(const TriplePattern& p, const Bindings& b) {
    return int(resolve(p.subject, b).has_value()) + int(resolve(p.predicate, b).has_value()) +
           int(resolve(p.object, b).has_value());
}

// Binds `t` to `value`, failing on a conflicting existing binding.
bool unify(const PatternTerm& t, const Term& value, Bindings& b, std::vector<std::string>& added) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        auto it = b.find(v->name);
        if (it != b.end()) return it->second == value;
        b.emplace(v->name, value);
        added.push_back(v->name);
        return true;
    }
    if (const auto* iri = std::get_if<Iri>(&t)) return Term{*iri} == value;
    return Term{std::get<AnnotationValue>(t)} == value;
}

class Evaluator {
public:
    Evaluator(const Query& q, const FactGraph& g) : query_(q), graph_(g), done_(q.patterns.size(), false) {}

    std::vector<Bindings> run() {
        Bindings b;
        search(b, 0);
        return std::move(solutions_);
    }

private:
    void search(Bindings& b, std::size_t depth) {
        if (depth == query_.patterns.size()) {
            solutions_.push_back(b);
            return;
        }
        // Most-bound pattern first; ties keep textual order.
        std::size_t pick = query_.patterns.size();
        int best = -1;
        for (std::size_t i = 0; i < query_.patterns.size(); ++i) {
            if (done_[i]) continue;
            int score = bound_positions(query_.patterns[i], b);
            if (score > best) {
                best = score;
                pick = i;
            }
        }
        const TriplePattern& p = query_.patterns[pick];
        done_[pick] = true;
        for (std::size_t idx : candidates(p, b)) {
            const Triple& t = graph_.triples()[idx];
            std::vector<std::string> added;
            if (unify(p.subject, Term{t.subject}, b, added) && unify(p.predicate, Term{t.predicate}, b, added) &&
                unify(p.object, t.object, b, added)) {
                search(b, depth + 1);
            }
            for (const auto& name : added) b.erase(name);
        }
        done_[pick] = false;
    }

    std::vector<std::size_t> candidates(const TriplePattern& p, const Bindings& b) const {
        auto s = resolve(p.subject, b);
        auto pr = resolve(p.predicate, b);
        auto o = resolve(p.object, b);
        if (s) {
            if (const auto* iri = std::get_if<Iri>(&*s)) return graph_.with_subject(*iri);
            return {};
        }
        if (o) return graph_.with_object(*o);
        if (pr) {
            if (const auto* iri = std::get_if<Iri>(&*pr)) return graph_.with_predicate(*iri);
            return {};
        }
        std::vector<std::size_t> all(graph_.triples().size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }

    const Query& query_;
    const FactGraph& graph_;
    std::vector<bool> done_;
    std::vector<Bindings> solutions_;
};

std::string quoted(const AnnotationValue& v) {
    std::string out = "\"";
    for (char c : v.text) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else if (c == '\t') {
            out += "\\t";
        } else {
            out += c;
        }
    }
    out += '"';
    if (v.language) out += "@" + *v.language;
    return out;
}

}  // namespace

Query parse_query(std::string_view text, const PrefixMap& prefixes) { return QueryParser(text, prefixes).run(); }

FactGraph::FactGraph(const Materialization& mat) {
    std::set<Triple> all;
    for (const auto& ca : mat.class_assertions()) all.insert({ca.individual, vocab::rdf_type(), ca.cls});
    for (const auto& pa : mat.property_assertions()) all.insert({pa.subject, pa.property, pa.object});
    for (const auto& si : mat.same_individuals()) {
        all.insert({si.first, vocab::owl_sameAs(), si.second});
        all.insert({si.second, vocab::owl_sameAs(), si.first});
    }
    for (const auto& ann : mat.base().all<AnnotationAssertion>()) all.insert({ann.subject, ann.property, ann.value});
    triples_.assign(all.begin(), all.end());
    for (std::size_t i = 0; i < triples_.size(); ++i) {
        by_subject_[triples_[i].subject].push_back(i);
        by_predicate_[triples_[i].predicate].push_back(i);
        by_object_[triples_[i].object].push_back(i);
    }
}

const std::vector<std::size_t>& FactGraph::with_subject(const Iri& s) const {
    auto it = by_subject_.find(s);
    return it == by_subject_.end() ? empty_list() : it->second;
}

const std::vector<std::size_t>& FactGraph::with_predicate(const Iri& p) const {
    auto it = by_predicate_.find(p);
    return it == by_predicate_.end() ? empty_list() : it->second;
}

const std::vector<std::size_t>& FactGraph::with_object(const Term& o) const {
    auto it = by_object_.find(o);
    return it == by_object_.end() ? empty_list() : it->second;
}

ResultSet evaluate(const Query& query, const FactGraph& graph) {
    ResultSet result;
    result.variables = query.projected;
    for (const auto& solution : Evaluator(query, graph).run()) {
        bool keep = std::all_of(query.typeFilters.begin(), query.typeFilters.end(), [&](const TypeFilter& f) {
            auto it = solution.find(f.variable);
            if (it == solution.end()) return false;
            const auto* iri = std::get_if<Iri>(&it->second);
            if (!iri) return false;
            for (std::size_t idx : graph.with_subject(*iri)) {
                const Triple& t = graph.triples()[idx];
                if (t.predicate == vocab::rdf_type() && t.object == Term{f.cls}) return true;
            }
            return false;
        });
        if (!keep) continue;
        std::vector<Term> row;
        row.reserve(query.projected.size());
        for (const auto& v : query.projected) row.push_back(solution.at(v));
        result.rows.push_back(std::move(row));
    }
    std::sort(result.rows.begin(), result.rows.end());
    if (query.distinct) result.rows.erase(std::unique(result.rows.begin(), result.rows.end()), result.rows.end());
    return result;
}

ResultSet evaluate(const Query& query, const Materialization& mat) { return evaluate(query, FactGraph(mat)); }

std::string render_term(const Term& term, const PrefixMap& prefixes) {
    if (const auto* iri = std::get_if<Iri>(&term)) return prefixes.compact(*iri);
    return quoted(std::get<AnnotationValue>(term));
}

std::string to_tsv(const ResultSet& results, const PrefixMap& prefixes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < results.variables.size(); ++i) out << (i ? "\t" : "") << '?' << results.variables[i];
    out << '\n';
    for (const auto& row : results.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << render_term(row[i], prefixes);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const ResultSet& results, const PrefixMap& prefixes) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : results.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[results.variables[i]] = render_term(row[i], prefixes);
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

}  // namespace aieo
