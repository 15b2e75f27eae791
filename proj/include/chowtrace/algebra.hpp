#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chowtrace/coeff.hpp"

namespace chowtrace {

struct BasisElement {
    std::string name;
    int codim = 0;
};

/// Finite-dimensional graded commutative ring presented by a basis and
/// structure constants. Grading is by codimension 0..dim; products past the
/// top codimension vanish. Immutable once built.
class GradedAlgebra {
public:
    using Ptr = std::shared_ptr<const GradedAlgebra>;

    struct Term {
        int index;
        Coeff c;
    };
    using SparseVec = std::vector<Term>;

    class Builder {
    public:
        Builder(std::string id, int dim, Domain domain = Domain::integers, long modulus = 0);
        int add_basis(const std::string& name, int codim);
        void set_unit(int index) { unit_ = index; }
        void set_point(int index) { point_ = index; }
        /// Structure constants for a pair of non-unit basis elements.
        void set_product(int i, int j, SparseVec value);
        Ptr build();

    private:
        friend class GradedAlgebra;
        std::string id_;
        int dim_;
        Domain domain_;
        long modulus_;
        std::vector<BasisElement> basis_;
        int unit_ = -1, point_ = -1;
        std::map<std::pair<int, int>, SparseVec> products_;
    };

    const std::string& id() const { return id_; }
    Domain domain() const { return domain_; }
    long modulus() const { return modulus_; }
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int unit_index() const { return unit_; }
    int point_index() const { return point_; }
    const std::vector<int>& component(int codim) const;
    int component_rank(int codim) const { return static_cast<int>(component(codim).size()); }
    /// Index of a named basis element, -1 when absent.
    int index_of(const std::string& name) const;

    const SparseVec& pair_product(int i, int j) const;

    Coeff zero_coeff() const { return Coeff::zero(domain_, modulus_); }
    Coeff one_coeff() const { return Coeff::one(domain_, modulus_); }

private:
    GradedAlgebra() = default;
    static const SparseVec empty_;

    std::string id_;
    Domain domain_ = Domain::integers;
    long modulus_ = 0;
    int dim_ = 0;
    std::vector<BasisElement> basis_;
    int unit_ = -1, point_ = -1;
    std::vector<std::vector<int>> by_codim_;
    // key (i<<20|j) with i<=j, non-unit pairs only
    std::map<long long, SparseVec> products_;
};

/// Sparse element of a GradedAlgebra. Coefficients stored are nonzero.
class RingElement {
public:
    RingElement() = default;
    explicit RingElement(GradedAlgebra::Ptr alg) : alg_(std::move(alg)) {}
    RingElement(GradedAlgebra::Ptr alg, int basis_index, Coeff c);

    const GradedAlgebra::Ptr& algebra() const { return alg_; }
    const std::map<int, Coeff>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Coeff coeff(int basis_index) const;
    void set_coeff(int basis_index, const Coeff& c);
    void add_to(int basis_index, const Coeff& c);

    bool is_homogeneous(int* codim_out = nullptr) const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    GradedAlgebra::Ptr alg_;
    std::map<int, Coeff> coeffs_;
};

RingElement unit_element(const GradedAlgebra::Ptr& a);
RingElement point_element(const GradedAlgebra::Ptr& a);
RingElement basis_element(const GradedAlgebra::Ptr& a, int index);
RingElement basis_element(const GradedAlgebra::Ptr& a, const std::string& name);
RingElement zero_element(const GradedAlgebra::Ptr& a);

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
RingElement scale(const Coeff& c, const RingElement& a);
RingElement multiply(const RingElement& a, const RingElement& b);
RingElement power(const RingElement& a, unsigned long e);
RingElement graded_part(const RingElement& a, int codim);

/// Coefficient of the point class in the top graded part (deg(point) = 1).
Coeff degree(const RingElement& a);

/// Inverse of an element whose constant term is a unit, in the truncated ring.
RingElement invert_unit(const RingElement& a);

/// The same algebra with all structure constants reduced mod p.
GradedAlgebra::Ptr reduce_mod(const GradedAlgebra::Ptr& a, long p);
/// Carry an element into the mod-p reduction of its algebra.
RingElement reduce_element(const RingElement& e, const GradedAlgebra::Ptr& reduced);
/// Lift an element of a mod-p algebra along named basis elements into an
/// integral algebra with the same basis (coefficients lifted to 0..p-1).
RingElement lift_element(const RingElement& e, const GradedAlgebra::Ptr& integral);

/// Chow ring of a product of cellular varieties: basis = pairs, structure
/// constants componentwise.
struct KunnethAlgebra {
    GradedAlgebra::Ptr alg;
    GradedAlgebra::Ptr left, right;
    int pair_index(int i, int j) const;
    RingElement embed_left(const RingElement& x) const;
    RingElement embed_right(const RingElement& x) const;
    RingElement tensor(const RingElement& x, const RingElement& y) const;
};
KunnethAlgebra kunneth_product(const GradedAlgebra::Ptr& a, const GradedAlgebra::Ptr& b);

/// Exhaustive associativity + commutativity + grading check; returns the
/// list of violations (empty when the multiplication is sound).
std::vector<std::string> check_multiplication_axioms(const GradedAlgebra::Ptr& a);

// Built-in cellular algebras
GradedAlgebra::Ptr make_point_algebra(Domain d = Domain::integers, long p = 0);
GradedAlgebra::Ptr make_projective_space(int n);
/// Split quadric of odd dimension n: basis 1, h, ..., h^m, l_m, ..., l_0.
GradedAlgebra::Ptr make_split_quadric_odd(int n);

} // namespace chowtrace
