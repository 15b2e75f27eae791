#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "chowtrace/algebra.hpp"
#include "chowtrace/schubert.hpp"

namespace chowtrace {

/// A virtual bundle presented in one of four ways: explicit degree-1 roots
/// (a formal difference), a total Chern series when roots are unknown, the
/// tangent directions of a Schubert quotient, or a direct sum of embedded
/// pieces. All exposed classes live in the carrier algebra.
class VirtualBundle {
public:
    using Ptr = std::shared_ptr<const VirtualBundle>;
    using Embed = std::function<RingElement(const RingElement&)>;

    virtual ~VirtualBundle() = default;
    virtual long rank() const = 0;
    virtual GradedAlgebra::Ptr carrier() const = 0;
    /// Total Chern class: prod (1 + a_i) * prod (1 + b_j)^{-1}, constant term 1.
    virtual RingElement total_chern() const = 0;
    /// prod (1 + a_i^{p-1}) * prod (1 + b_j^{p-1})^{-1}. The t^i coefficient of
    /// the parametrised series is the codim-i(p-1) graded part.
    virtual RingElement powered(long p) const = 0;
    /// Power sum of the roots: sum a_i^k - sum b_j^k.
    virtual RingElement power_sum(long k) const = 0;
};

/// Explicit root lists. Roots must be homogeneous of codimension 1; zero
/// roots may be omitted, so the virtual rank is stored explicitly.
VirtualBundle::Ptr make_root_bundle(GradedAlgebra::Ptr carrier, std::vector<RingElement> positive,
                                    std::vector<RingElement> negative, long rank);

/// Total-Chern-series presentation (roots unknown); symmetric-function
/// calculus via Newton's identities.
VirtualBundle::Ptr make_series_bundle(GradedAlgebra::Ptr carrier, RingElement series, long rank);

/// Tangent bundle of G/P: roots are the weight forms of Phi+ minus Phi_P+,
/// re-expressed in the quotient's Schubert basis after each symmetric
/// computation.
VirtualBundle::Ptr make_gp_tangent_bundle(std::shared_ptr<const SchubertRing> sr);

/// Direct sum of bundles embedded into a common carrier (product varieties).
VirtualBundle::Ptr make_sum_bundle(
    GradedAlgebra::Ptr carrier,
    std::vector<std::pair<VirtualBundle::Ptr, VirtualBundle::Embed>> parts);

/// base minus a sum of line bundles with the given divisor roots; the
/// adjunction-formula tangent of a complete intersection.
VirtualBundle::Ptr make_ci_tangent_bundle(VirtualBundle::Ptr base, std::vector<RingElement> divisors);

// Free-function surface
RingElement chern_series(const VirtualBundle::Ptr& v);
RingElement powered_class(const VirtualBundle::Ptr& v, long p);
/// t^i coefficient of the parametrised powered class.
RingElement powered_class_coefficient(const VirtualBundle::Ptr& v, long p, long i);
RingElement power_sum(const VirtualBundle::Ptr& v, long k);

/// Newton's identities, both directions. Lists are indexed so that
/// entry [k-1] is the k-th function; symbols beyond the list are zero.
std::vector<RingElement> newton_elementary_to_power_sums(const std::vector<RingElement>& e,
                                                         int up_to);
std::vector<RingElement> newton_power_sums_to_elementary(const std::vector<RingElement>& p,
                                                         int up_to);

/// (1 + x)^{-1} for a nilpotent homogeneous x, by geometric series.
RingElement geometric_inverse_of_one_plus(const RingElement& x);

} // namespace chowtrace
