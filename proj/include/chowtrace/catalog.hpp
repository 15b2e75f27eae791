#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chowtrace/bundle.hpp"

namespace chowtrace {

enum class Provenance {
    point,
    projective_space,
    split_quadric,
    homogeneous,
    product,
    complete_intersection,
    disjoint_union,
    custom,
};

/// A named variety: dimension, Chow algebra (or ambient handle for complete
/// intersections), tangent data, and provenance.
class Variety {
public:
    using Ptr = std::shared_ptr<const Variety>;

    std::string name;
    int dim = 0;
    Provenance provenance = Provenance::custom;

    GradedAlgebra::Ptr chow;     // intrinsic ring; null for complete intersections
    GradedAlgebra::Ptr carrier;  // where characteristic classes live (ambient for c.i.)
    VirtualBundle::Ptr tangent;  // null only for disjoint unions

    Ptr ambient;                            // complete intersections
    std::vector<RingElement> divisor_classes;
    Ptr left_factor, right_factor;          // products
    std::shared_ptr<const SchubertRing> schubert;  // homogeneous varieties
    std::vector<Ptr> components;            // disjoint unions

    bool is_disjoint_union() const { return provenance == Provenance::disjoint_union; }

    /// Pushforward to the point of a carrier class: the intrinsic degree, or
    /// deg_ambient(prod divisors * x) for a complete intersection.
    Coeff degree_of(const RingElement& x) const;
    /// deg of the top Chern class = Euler characteristic for cellular builtins.
    Int euler_characteristic() const;
};

using VarietyPtr = Variety::Ptr;

/// Read-only registry of the built-in varieties, built lazily. Accepts
/// "P<n>", "Q<n>" (odd: intrinsic ring; even: characteristic numbers via the
/// hypersurface model), "<Type><rank>/P<i>" with Bourbaki numbering, "pt",
/// and products joined by "x" (e.g. "P1xP1").
class Catalog {
public:
    explicit Catalog(std::string cache_dir = "");

    VarietyPtr builtin(const std::string& name) const;
    VarietyPtr product(const VarietyPtr& a, const VarietyPtr& b) const;
    VarietyPtr disjoint_union(const VarietyPtr& a, const VarietyPtr& b) const;
    /// Complete intersection cut out by the given ambient divisor classes.
    VarietyPtr subvariety_by_divisors(const VarietyPtr& v, std::vector<RingElement> divisors) const;
    /// Convenience: n copies of the Schubert divisor class of a G/P builtin.
    VarietyPtr divisor_power_section(const VarietyPtr& v, const std::string& divisor_name,
                                     int copies) const;

    const std::string& cache_dir() const { return cache_dir_; }

private:
    VarietyPtr build(const std::string& name) const;
    VarietyPtr make_pn(int n) const;
    VarietyPtr make_quadric(int n) const;
    VarietyPtr make_gp(char type, int rank, int parabolic_one_based) const;

    std::string cache_dir_;
    mutable std::map<std::string, VarietyPtr> cache_;
};

/// mod-p reduction of an algebra, memoized so repeated calls share the
/// reduced ring (elements from different calls stay combinable).
GradedAlgebra::Ptr reduced_mod_cached(const GradedAlgebra::Ptr& a, long p);

/// Parse "3*h + 2*l1" style element syntax over an algebra's basis names.
RingElement parse_element(const GradedAlgebra::Ptr& alg, const std::string& text);

} // namespace chowtrace
