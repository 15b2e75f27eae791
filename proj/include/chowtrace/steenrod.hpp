#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowtrace/catalog.hpp"

namespace chowtrace {

struct SteenrodGenerator {
    std::string name;
    RingElement cls;                  // a basis class of the mod-p algebra
    int codim = 0;
    std::vector<RingElement> images;  // images[i-1] = S^i, i = 1..codim; zero past the grading
};

enum class TableStatus { closed_form, fixed_input, solved_unique, solution_space };

std::string table_status_name(TableStatus s);

/// A prime, a mod-p algebra, and the images of the reduced power operations
/// on a generating set, with the provenance of the table.
struct SteenrodTable {
    long p = 2;
    GradedAlgebra::Ptr algebra;
    std::vector<SteenrodGenerator> generators;
    TableStatus status = TableStatus::fixed_input;
};

/// Multiplicative (Cartan) extension of a table to the whole algebra.
class SteenrodAction {
public:
    SteenrodAction(const SteenrodTable& table);

    const SteenrodTable& table() const { return table_; }
    const GradedAlgebra::Ptr& algebra() const { return table_.algebra; }

    /// Total operation S = sum_i S^i; mixed degree output.
    RingElement total(const RingElement& x) const;
    /// S^i(x); for mixed x, per-term by codimension.
    RingElement op(long i, const RingElement& x) const;
    /// Total operation on a basis element (precomputed).
    const RingElement& total_on_basis(int index) const { return on_basis_[index]; }

private:
    SteenrodTable table_;
    std::vector<RingElement> on_basis_;
};

/// Greedy generating set of a mod-p algebra: scan codimensions upward and
/// adjoin any basis class outside the subring generated so far.
std::vector<RingElement> discover_generators(const GradedAlgebra::Ptr& a);

/// Closed-form mod-2 table on a split odd quadric:
/// S(h^i) = h^i (1+h)^i and S(l_j) = sum_i C(n+1-j, i) l_{j-i}.
SteenrodTable quadric_closed_form_table(int n, const GradedAlgebra::Ptr& mod2_algebra);

/// Closed-form table on projective space mod p: S(h) = h + h^p.
SteenrodTable projective_closed_form_table(int n, long p, const GradedAlgebra::Ptr& modp_algebra);

/// The class c_{(p)}(-T) = (c(T)^{(p)})^{-1} reduced mod p; the twist of the
/// pushforward compatibility (Wu-type) axiom.
RingElement wu_twist_mod_p(const VarietyPtr& v, long p, const GradedAlgebra::Ptr& modp_algebra);

struct ValidateOptions {
    /// Wu-type degree axiom: deg(S(x) * twist) = deg(x top part) for every
    /// basis class. Enabled when the twist is supplied.
    std::optional<RingElement> wu_twist;
    bool stop_at_first = false;
};

/// Instability and top-power rules, grading, Cartan compatibility with every
/// defining relation of the algebra, Adem relations on every basis element,
/// and the optional pushforward axiom. Empty result = admissible.
std::vector<std::string> validate_table(const SteenrodTable& table, const ValidateOptions& opts = {});

struct SolveOptions {
    std::size_t assignment_bound = 4000000;  // enumerated tables ceiling
    std::optional<RingElement> wu_twist;     // prune with the pushforward axiom
    std::vector<SteenrodGenerator> fixed;    // externally supplied images, re-validated
};

struct SolveResult {
    std::vector<SteenrodTable> admissible;  // canonical enumeration order
    TableStatus status = TableStatus::solution_space;
    std::size_t searched = 0;
};

/// Enumerate all generator-image assignments compatible with the axioms.
/// Throws UnsolvableSteenrod when no table survives, SearchBoundExceeded when
/// the grid is larger than the configured bound.
SolveResult solve_action(const GradedAlgebra::Ptr& a, long p, const SolveOptions& opts = {});

struct S2Codim4Report {
    std::size_t family_size = 0;
    bool s2_trivial = false;      // S^2 kills the whole codim-4 component, all tables
    bool unique = false;
    std::size_t searched = 0;
};

/// The check behind the triviality of S^2 on Ch^4 for a mod-3 homogeneous
/// variety: solve for the action and test the entire admissible family.
S2Codim4Report check_s2_codim4(const VarietyPtr& v, long p = 3);

/// Kunneth product table: factor generators embedded into the product.
SteenrodTable kunneth_table(const SteenrodTable& a, const SteenrodTable& b,
                            const KunnethAlgebra& k);

std::string table_to_json(const SteenrodTable& t);
SteenrodTable table_from_json(const std::string& text, const GradedAlgebra::Ptr& algebra);

} // namespace chowtrace
