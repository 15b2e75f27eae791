#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowtrace/algebra.hpp"
#include "chowtrace/borel.hpp"
#include "chowtrace/rootweyl.hpp"

namespace chowtrace {

/// Chow ring of G/P in the Schubert basis together with the combinatorial
/// and Borel-presentation machinery it was generated from.
class SchubertRing {
public:
    std::shared_ptr<RootSystem> rs;
    std::shared_ptr<WeylGroup> weyl;
    ParabolicQuotient quotient;
    std::shared_ptr<BorelAlgebra> borel;
    GradedAlgebra::Ptr ring;                 // integral; basis order = quotient.reps
    std::vector<ZPoly> tangent_roots;        // weight forms of Phi+ minus Phi_P+

    int rep_weyl_index(int basis_pos) const { return quotient.reps[basis_pos]; }

    /// Expand a Levi-invariant homogeneous integral polynomial in the
    /// Schubert basis of the quotient.
    RingElement pushdown_homogeneous(const ZPoly& f, int deg) const;
    /// Mixed-degree version, splitting by grade.
    RingElement pushdown(const ZPoly& f) const;
    /// Thorough membership test: every Schubert coefficient outside the
    /// quotient's basis vanishes. Quadratic-ish; meant for tests.
    bool in_pullback_image(const ZPoly& f) const;
};

/// Generate CH(G/P_S) with structure constants from Borel representatives
/// and divided differences. `marked` lists the simple roots omitted from the
/// Levi (0-based), so marked = {3} is P_4 in Bourbaki numbering.
SchubertRing build_schubert_ring(char type, int rank, std::vector<int> marked,
                                 std::size_t weyl_bound = 1000000,
                                 const std::string& cache_dir = "");

/// Multiply by the Schubert divisor class of the marked simple root i0 using
/// only root pairings (Chevalley's rule); no Borel polynomials involved.
RingElement chevalley_multiply(const SchubertRing& sr, int divisor_simple, const RingElement& x);

/// deg(H^power) by iterated Chevalley multiplication.
Int divisor_power_degree_chevalley(const SchubertRing& sr, int divisor_simple, int power);

/// deg(H^power) through the full structure-constant table.
Int divisor_power_degree_table(const SchubertRing& sr, int divisor_simple, int power);

/// Tangent root forms re-expressed: the total Chern class of T_{G/P} as an
/// element of the quotient ring (computed in the Borel presentation and
/// pushed down).
RingElement gp_total_chern_class(const SchubertRing& sr);

std::string structure_constant_cache_key(char type, int rank, const std::vector<int>& marked);
void save_structure_constants(const SchubertRing& sr, const std::string& path);
/// Returns the cached ring when the file matches the quotient combinatorics.
GradedAlgebra::Ptr try_load_structure_constants(const RootSystem& rs, const WeylGroup& weyl,
                                                const ParabolicQuotient& q, const std::string& path);

} // namespace chowtrace
