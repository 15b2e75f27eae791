#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowtrace/catalog.hpp"

namespace chowtrace {

/// Minimal TOML subset: [section] headers, string / integer scalars, and
/// arrays of strings or integers. Exactly what the variety files need.
struct TomlSection {
    std::map<std::string, std::string> strings;
    std::map<std::string, long> integers;
    std::map<std::string, std::vector<std::string>> string_arrays;
    std::map<std::string, std::vector<long>> integer_arrays;

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    long get_integer(const std::string& key) const;
    std::vector<std::string> get_string_array(const std::string& key) const;
};

std::map<std::string, TomlSection> parse_toml(const std::string& text);

/// Declarative variety description:
///   [variety] name, dim
///   [algebra] mode = builtin|gp|product|presentation|complete_intersection
///             + mode-specific keys
///   [tangent] roots = [...] or chern = [...] (omitted when derivable)
/// Presentation relations are rewrite rules "leading_monomial -> element";
/// the loader runs a confluence smoke test over all ambiguously reducible
/// monomials up to the top codimension.
VarietyPtr load_variety_spec(const std::string& text, const Catalog& catalog);
VarietyPtr load_variety_spec_file(const std::string& path, const Catalog& catalog);

/// Presentation-mode ring builder, exposed for tests: generators "name:codim",
/// rules "monomial -> element" with monomials written as products of
/// generator powers ("h^2*l").
GradedAlgebra::Ptr build_presentation_algebra(const std::string& id, int dim,
                                              const std::vector<std::string>& generators,
                                              const std::vector<std::string>& relations);

} // namespace chowtrace
