#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowtrace/catalog.hpp"

namespace chowtrace {

/// A cobordism class in one of the two shapes the computations need:
/// [Z -> pt] (codimension m = -dim Z), or a complete intersection inside its
/// cellular ambient (m = number of divisors).
struct CobordismClass {
    VarietyPtr z;
    bool over_point = true;

    int codim_m() const;
};

CobordismClass class_over_point(const VarietyPtr& z);
CobordismClass class_of_complete_intersection(const VarietyPtr& z);

/// Chow trace of the Landweber-Novikov operation S^i_LN on the class:
/// an integral element of CH of the base (the point algebra, or the ambient
/// ring). Computed from elementary symmetric functions of the powered roots
/// of the virtual normal bundle; zero for i < 0 or i = 0 with positive
/// fibre dimension over the point.
RingElement ln_trace(const CobordismClass& c, long p, long i);

/// phi^{t^r}_p: the trace divided by p exactly and reduced mod p; zero when
/// (p-1) does not divide r.
RingElement phi(const CobordismClass& c, long r, long p);

/// phi^{q(t)}_p = sum q_r phi^{t^r}_p for finitely many terms (coefficient,
/// power). Coefficients are residues mod p.
RingElement phi_series(const std::vector<std::pair<long, long>>& q_terms, const CobordismClass& c,
                       long p);
/// Series with ring-element coefficients q_r in the mod-p ring of the base.
RingElement phi_series(const std::vector<std::pair<RingElement, long>>& q_terms,
                       const CobordismClass& c, long p);

/// The shared mod-p point algebra (so residues from different calls combine).
GradedAlgebra::Ptr point_algebra_mod(long p);
GradedAlgebra::Ptr point_algebra_integral();

struct EtaResult {
    Int pre_division;   // deg (c(T)^{(p)})^{-1}, the b_d invariant before division
    Int trace_path_pre; // the same integer through the S^i_LN trace
    Int divided;        // pre_division / p
    long residue;       // eta_p mod p, in 0..p-1
    bool paths_agree;
};

/// Rost number by both routes (the characteristic-class formula and the
/// Landweber-Novikov trace); exact agreement is enforced.
EtaResult rost_number(const VarietyPtr& v, long p);

struct RdfRow {
    long r;
    long lhs;          // phi^{t^r}([U x V])
    long rhs;          // eta_p(U) * trace mod p
    bool holds;
};

struct RdfReport {
    std::string u, v;
    long p;
    std::vector<RdfRow> rows;
    bool all_hold = true;
    bool vanishing_off_grading = true;  // phi^{t^r} = 0 whenever (p-1) does not divide r
};

/// Lemma-style product identity at the base point, both sides computed
/// independently, for all meaningful powers r up to (dim U + dim V) p + p.
RdfReport rdf_check(const VarietyPtr& u, const VarietyPtr& v, long p, const Catalog& catalog);

struct RostReport {
    std::string variety;
    long p = 0;
    int dim = 0;
    bool dim_test = false;      // n = p^s - 1
    long dim_test_s = 0;
    bool eta_defined = false;   // (p-1) | dim and dim > 0
    Int eta_integer = 0;        // pre-division integer b_d
    long eta_mod_p = 0;
    std::string verdict;        // "candidate" or "fails-necessary-conditions"
};

/// Necessary-condition screen for a special correspondence: the dimension
/// test n = p^s - 1 and the eta_p != 0 test. Necessary, not sufficient.
RostReport screen_special_correspondence(const VarietyPtr& v, long p);

std::string rost_report_json(const RostReport& r);

} // namespace chowtrace
