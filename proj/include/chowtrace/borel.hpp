#pragma once

#include <vector>

#include "chowtrace/poly.hpp"
#include "chowtrace/rootweyl.hpp"

namespace chowtrace {

/// Borel presentation machinery: polynomials in the fundamental weights with
/// the Weyl action, BGG divided-difference operators, and integral Schubert
/// representatives. Representatives are kept as numerators N_w with
/// S_w = N_w / |W|, N_{w_0} = product of the positive roots, so the whole
/// pipeline stays inside integer arithmetic.
class BorelAlgebra {
public:
    BorelAlgebra(const RootSystem& rs, const WeylGroup& weyl);

    const RootSystem& root_system() const { return *rs_; }
    const WeylGroup& weyl() const { return *weyl_; }
    int rank() const { return rs_->rank; }
    Int weyl_order() const { return Int(static_cast<long>(weyl_->size())); }

    /// A root (simple-basis coordinates) as a linear form in the weights.
    ZPoly root_form(const std::vector<long>& root) const;
    ZPoly weight(int i) const { return ZPoly::variable(i, rs_->rank); }

    ZPoly apply_simple(int i, const ZPoly& f) const;
    ZPoly divided_difference(int i, const ZPoly& f) const;
    /// Compose divided differences along a reduced word, rightmost first.
    ZPoly apply_word(const std::vector<int8_t>& word, ZPoly f) const;

    const ZPoly& positive_root_product() const { return top_numerator_; }
    /// N_w = d_{w^{-1} w_0}(prod of positive roots); memoized per element.
    const ZPoly& schubert_numerator(int weyl_index) const;

    /// Coefficient of the Schubert class S_w in a homogeneous integral
    /// polynomial of degree l(w): the constant term of d_w(f).
    Int schubert_coefficient(int weyl_index, const ZPoly& f) const;

    bool is_invariant_under(const ZPoly& f, const std::vector<int>& simple_indices) const;

private:
    const RootSystem* rs_;
    const WeylGroup* weyl_;
    std::vector<ZPoly> alpha_;                               // simple roots as weight forms
    mutable std::vector<std::vector<ZPoly>> alpha_pows_;     // alpha_i^k, grown on demand
    mutable std::vector<std::vector<ZPoly>> neg_alpha_pows_; // (-alpha_i)^k
    ZPoly top_numerator_;
    mutable std::vector<ZPoly> numerators_;
    mutable std::vector<char> numerator_known_;

    const ZPoly& alpha_pow(int i, int k) const;
    const ZPoly& neg_alpha_pow(int i, int k) const;
};

/// Literal-definition divided difference (f - s_i f) / alpha_i with explicit
/// exact division; used as an oracle against the closed form.
ZPoly divided_difference_by_division(const BorelAlgebra& b, int i, const ZPoly& f);

} // namespace chowtrace
