#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowtrace/errors.hpp"

namespace chowtrace {

/// Crystallographic root system of classical or exceptional type, with the
/// Bourbaki numbering of simple roots. Roots are integer coordinate vectors
/// in the simple-root basis; the full root list stores positives first and
/// the negative of roots[k] at roots[k + num_positive].
///
/// Numbering and Cartan tables (cartan[i][j] = <alpha_j, alpha_i^vee>):
///   A_n  chain 1-2-...-n, all roots one length
///   B_n  chain with alpha_n short:      cartan[n-1][n-2] = -2
///   C_n  chain with alpha_n long:       cartan[n-2][n-1] = -2
///   D_n  fork: alpha_{n-1}, alpha_n both attached to alpha_{n-2}
///   G_2  alpha_1 short, alpha_2 long:   {{2,-3},{-1,2}}
///   F_4  1-2=>3-4, alpha_1, alpha_2 long, alpha_3, alpha_4 short:
///        {{2,-1,0,0},{-1,2,-1,0},{0,-2,2,-1},{0,0,-1,2}}
/// Half-norms d_i = (alpha_i,alpha_i)/2 are 1 on short roots, 2 (3 for G_2)
/// on long ones, so the parabolic indices P_1..P_rank match the plates.
struct RootSystem {
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<long> half_norm;            // d_i with (alpha_i, alpha_j) = d_i * cartan[i][j]
    std::vector<std::vector<long>> roots;   // all roots, positives first
    int num_positive = 0;
    std::vector<int> simple_index;          // position of alpha_i in the root list

    std::string name() const { return std::string(1, type) + std::to_string(rank); }

    long inner(const std::vector<long>& u, const std::vector<long>& v) const;
    /// <v, alpha^vee> for v and alpha in simple-root coordinates.
    long coroot_pairing(const std::vector<long>& v, const std::vector<long>& alpha) const;
    /// <omega_k, alpha^vee> for a fundamental weight.
    long weight_coroot_pairing(int k, const std::vector<long>& alpha) const;

    std::vector<long> apply_simple_reflection(int i, const std::vector<long>& v) const;
    std::vector<long> apply_reflection(const std::vector<long>& alpha, const std::vector<long>& v) const;

    int root_index(const std::vector<long>& r) const;  // -1 when not a root
    bool is_positive(const std::vector<long>& r) const;
};

RootSystem build_root_system(char type, int rank);
RootSystem build_root_system(const std::string& label);  // e.g. "F4"

/// Degrees of the fundamental invariants; |W| is their product.
std::vector<long> fundamental_degrees(char type, int rank);

/// The full Weyl group, elements stored as permutations of the root list
/// with a memoized canonical reduced word.
class WeylGroup {
public:
    struct Element {
        std::vector<int16_t> perm;  // action on the root list
        std::vector<int8_t> word;   // canonical reduced word (simple-root indices)
        int length = 0;
    };

    static WeylGroup enumerate(const RootSystem& rs, std::size_t bound = 1000000);

    std::size_t size() const { return elements_.size(); }
    const Element& element(int idx) const { return elements_[idx]; }
    int identity() const { return 0; }
    int longest_element() const { return longest_; }
    int length(int idx) const { return elements_[idx].length; }

    /// Index of w * s_i.
    int multiply_simple(int w, int i) const;
    int multiply(int w, int v) const;
    int inverse(int w) const;
    int index_of_perm(const std::vector<int16_t>& perm) const;
    /// Index of the reflection in a positive root.
    int reflection(int positive_root_index) const;

    /// True when l(w s_i) > l(w), i.e. w(alpha_i) stays positive.
    bool ascends(int w, int i) const;

private:
    const RootSystem* rs_ = nullptr;
    std::vector<Element> elements_;
    std::vector<std::pair<std::vector<int16_t>, int>> index_;  // sorted perm -> id
    std::vector<int> reflections_;                             // per positive root
    int longest_ = 0;

    int lookup(const std::vector<int16_t>& perm) const;
};

/// Minimal-length coset representatives for W / W_P. The subset `marked`
/// is the set defining P_S: the marked simple roots are omitted from
/// the Levi, so marked = {i} is the maximal parabolic P_i.
struct ParabolicQuotient {
    const RootSystem* rs = nullptr;
    const WeylGroup* weyl = nullptr;
    std::vector<int> marked;
    std::vector<int> levi;
    std::vector<int> reps;          // Weyl indices ordered by (length, canonical word)
    int dim = 0;                    // max rep length = dim G/P
    std::vector<long> length_histogram;

    int rep_position(int weyl_index) const;  // -1 when not a minimal rep
};

ParabolicQuotient minimal_coset_reps(const RootSystem& rs, const WeylGroup& weyl,
                                     std::vector<int> marked);

/// Coefficient list of the Poincare polynomial: ranks of the Chow components
/// by codimension, i.e. the length generating function of the coset reps.
std::vector<long> poincare_polynomial(const ParabolicQuotient& q);

/// Divide a Poincare polynomial by a motive polynomial; empty result when the
/// division fails or produces a negative coefficient.
std::vector<long> poincare_quotient(const std::vector<long>& total, const std::vector<long>& factor);

} // namespace chowtrace
