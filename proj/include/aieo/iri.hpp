#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace aieo {

// An absolute IRI. CURIEs are resolved by PrefixMap before an Iri is built,
// so two Iri values are equal iff they name the same entity.
class Iri {
public:
    Iri() = default;
    // Throws Error(ValidationError) unless `absolute` is a non-empty absolute IRI.
    explicit Iri(std::string absolute);

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    // Text after the last '#' or '/', or the whole IRI if neither occurs.
    std::string_view local_name() const;

    auto operator<=>(const Iri&) const = default;

private:
    std::string value_;
};

bool is_absolute_iri(std::string_view text);

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view aieo = "https://w3id.org/aieo#";
}  // namespace ns

class PrefixMap {
public:
    // rdf, rdfs, owl, xsd and the default `aieo:` namespace.
    static PrefixMap standard();

    void set(std::string prefix, std::string base);
    std::optional<std::string> base_of(std::string_view prefix) const;

    // Resolves `prefix:local`, `<absolute>` or an already-absolute IRI.
    // Throws Error(ValidationError) on an unknown prefix or a malformed term.
    Iri expand(std::string_view term) const;
    std::optional<Iri> try_expand(std::string_view term) const;

    // Shortest `prefix:local` form, falling back to `<absolute>`.
    std::string compact(const Iri& iri) const;

    const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

    // Merges `other` into this map; entries in `other` win.
    void merge(const PrefixMap& other);

    bool operator==(const PrefixMap&) const = default;

private:
    std::map<std::string, std::string> entries_;
};

// True when `local` can be written after a prefix without escaping.
bool is_plain_local_name(std::string_view local);

}  // namespace aieo

template <>
struct std::hash<aieo::Iri> {
    std::size_t operator()(const aieo::Iri& iri) const noexcept {
        return std::hash<std::string>{}(iri.str());
    }
};
