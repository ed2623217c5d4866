#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "hopf2x/xmodules.hpp"

namespace hopf2x {

// Any semantic problem in a bundle; `where` is the entry path, e.g. "kc4.mul[2][3]".
class BundleError : public Error {
public:
    BundleError(std::string where, const std::string& what);
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

class UnresolvedReference : public BundleError {
public:
    using BundleError::BundleError;
};

// Malformed JSON; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

using Entry = std::variant<FiniteGroup, LieAlgebra, HopfAlgebra, HopfMorphism, ActionTensor, HopfXMod, Hopf2XMod,
                           TruncatedSimplicialHopf, Group2XMod, Lie2XMod>;

// "group", "lie", "hopf", "morphism", "action", "xmod", "2xmod", "simplicial",
// "group_2xmod", "lie_2xmod"
std::string_view entry_type(const Entry& e);

struct Bundle {
    std::map<std::string, Entry> entries;
    // Load-time validator output per entry, and the entries each one references.
    std::map<std::string, Report> validation;
    std::map<std::string, std::set<std::string>> deps;

    const Entry& at(const std::string& name) const;
    template <class T>
    const T& get(const std::string& name) const;
    // Names reachable from `name` through references, excluding itself.
    std::set<std::string> reachable(const std::string& name) const;
};

struct LoadOptions {
    // Run verify_hopf / verify_morphism / verify_module_bialgebra / verify_lie
    // on entries given by explicit tables; failures are kept in Bundle::validation.
    bool validate = true;
};

Bundle parse_bundle(const std::filesystem::path& path, LoadOptions opts = {});
Bundle parse_bundle_text(std::string_view text, LoadOptions opts = {});

// Canonical serialization: entries sorted by name, every referenced object
// hoisted into a named entry, tensor and smash products kept symbolic.
std::string emit_bundle(const Bundle& b);

template <class T>
const T& Bundle::get(const std::string& name) const
{
    const Entry& e = at(name);
    if (const T* p = std::get_if<T>(&e)) return *p;
    throw BundleError(name, "entry has type " + std::string(entry_type(e)));
}

}  // namespace hopf2x
