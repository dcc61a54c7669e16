#include "aieo/iri.hpp"

#include "aieo/error.hpp"

#include <cctype>

namespace aieo {

bool is_absolute_iri(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        char c = text[i];
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
    }
    for (char c : text) {
        if (c == ' ' || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '\\' ||
            c == '\n' || c == '\t' || c == '\r')
            return false;
    }
    return colon + 1 < text.size();
}

Iri::Iri(std::string absolute) : value_(std::move(absolute)) {
    if (!is_absolute_iri(value_)) {
        throw Error(ErrorCode::ValidationError, "not an absolute IRI: '" + value_ + "'");
    }
}

std::string_view Iri::local_name() const {
    std::string_view v = value_;
    auto cut = v.find_last_of("#/");
    if (cut == std::string_view::npos || cut + 1 >= v.size()) return v;
    return v.substr(cut + 1);
}

PrefixMap PrefixMap::standard() {
    PrefixMap map;
    map.set("rdf", std::string(ns::rdf));
    map.set("rdfs", std::string(ns::rdfs));
    map.set("owl", std::string(ns::owl));
    map.set("xsd", std::string(ns::xsd));
    map.set("aieo", std::string(ns::aieo));
    return map;
}

void PrefixMap::set(std::string prefix, std::string base) { entries_[std::move(prefix)] = std::move(base); }

std::optional<std::string> PrefixMap::base_of(std::string_view prefix) const {
    auto it = entries_.find(std::string(prefix));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<Iri> PrefixMap::try_expand(std::string_view term) const {
    if (term.size() >= 2 && term.front() == '<' && term.back() == '>') {
        auto inner = term.substr(1, term.size() - 2);
        if (!is_absolute_iri(inner)) return std::nullopt;
        return Iri(std::string(inner));
    }
    auto colon = term.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto prefix = term.substr(0, colon);
    if (auto base = base_of(prefix)) {
        auto local = term.substr(colon + 1);
        if (!local.empty() && !is_plain_local_name(local)) return std::nullopt;
        return Iri(*base + std::string(local));
    }
    if (is_absolute_iri(term) && term.substr(colon + 1, 2) == "//") return Iri(std::string(term));
    return std::nullopt;
}

Iri PrefixMap::expand(std::string_view term) const {
    if (auto iri = try_expand(term)) return *iri;
    throw Error(ErrorCode::ValidationError, "cannot resolve IRI term '" + std::string(term) + "'");
}

std::string PrefixMap::compact(const Iri& iri) const {
    const std::string& value = iri.str();
    std::string best;
    bool found = false;
    for (const auto& [prefix, base] : entries_) {
        if (base.empty() || value.size() <= base.size()) continue;
        if (value.compare(0, base.size(), base) != 0) continue;
        std::string_view local(value.data() + base.size(), value.size() - base.size());
        if (!is_plain_local_name(local)) continue;
        std::string candidate = prefix + ":" + std::string(local);
        if (!found || candidate.size() < best.size() || (candidate.size() == best.size() && candidate < best)) {
            best = std::move(candidate);
            found = true;
        }
    }
    if (found) return best;
    return "<" + value + ">";
}

void PrefixMap::merge(const PrefixMap& other) {
    for (const auto& [prefix, base] : other.entries_) entries_[prefix] = base;
}

bool is_plain_local_name(std::string_view local) {
    if (local.empty()) return false;
    for (std::size_t i = 0; i < local.size(); ++i) {
        auto c = static_cast<unsigned char>(local[i]);
        bool ok = std::isalnum(c) || c == '_' || c >= 0x80 || (i > 0 && (c == '-' || c == '.'));
        if (!ok) return false;
    }
    return local.back() != '.';
}

}  // namespace aieo
