#include "chowtrace/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace chowtrace {

const GradedAlgebra::SparseVec GradedAlgebra::empty_;

namespace {
long long pair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<long long>(i) << 24) | static_cast<long long>(j);
}
} // namespace

GradedAlgebra::Builder::Builder(std::string id, int dim, Domain domain, long modulus)
    : id_(std::move(id)), dim_(dim), domain_(domain), modulus_(modulus) {}

int GradedAlgebra::Builder::add_basis(const std::string& name, int codim) {
    if (codim < 0 || codim > dim_)
        throw Error("basis codim out of range in " + id_);
    basis_.push_back({name, codim});
    return static_cast<int>(basis_.size()) - 1;
}

void GradedAlgebra::Builder::set_product(int i, int j, SparseVec value) {
    if (i > j) std::swap(i, j);
    // prune zeros, keep sorted by index
    SparseVec v;
    for (auto& t : value)
        if (!t.c.is_zero()) v.push_back(t);
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    products_[{i, j}] = std::move(v);
}

GradedAlgebra::Ptr GradedAlgebra::Builder::build() {
    auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    alg->id_ = id_;
    alg->domain_ = domain_;
    alg->modulus_ = modulus_;
    alg->dim_ = dim_;
    alg->basis_ = basis_;
    alg->unit_ = unit_;
    alg->point_ = point_;
    if (unit_ < 0 || basis_[unit_].codim != 0)
        throw Error("algebra " + id_ + " lacks a codim-0 unit");
    if (point_ < 0 || basis_[point_].codim != dim_)
        throw Error("algebra " + id_ + " lacks a codim-n point class");
    alg->by_codim_.assign(dim_ + 1, {});
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
        alg->by_codim_[basis_[i].codim].push_back(i);
    int nb = static_cast<int>(basis_.size());
    for (auto& [key, vec] : products_) {
        auto [i, j] = key;
        if (i < 0 || j < 0 || i >= nb || j >= nb)
            throw Error("structure constant indexes a missing basis element in " + id_);
        for (auto& t : vec)
            if (t.index < 0 || t.index >= nb)
                throw Error("structure constant indexes a missing basis element in " + id_);
        int total = basis_[i].codim + basis_[j].codim;
        for (auto& t : vec) {
            if (basis_[t.index].codim != total)
                throw Error("ungraded structure constant in " + id_);
            if (t.c.domain() != domain_ || (domain_ == Domain::mod_p && t.c.modulus() != modulus_))
                throw DomainMismatch("structure constant domain mismatch in " + id_);
        }
        alg->products_[pair_key(i, j)] = vec;
    }
    return alg;
}

const std::vector<int>& GradedAlgebra::component(int codim) const {
    static const std::vector<int> none;
    if (codim < 0 || codim > dim_) return none;
    return by_codim_[codim];
}

int GradedAlgebra::index_of(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
        if (basis_[i].name == name) return i;
    return -1;
}

const GradedAlgebra::SparseVec& GradedAlgebra::pair_product(int i, int j) const {
    auto it = products_.find(pair_key(i, j));
    return it == products_.end() ? empty_ : it->second;
}

RingElement::RingElement(GradedAlgebra::Ptr alg, int basis_index, Coeff c) : alg_(std::move(alg)) {
    if (!c.is_zero()) coeffs_[basis_index] = std::move(c);
}

Coeff RingElement::coeff(int basis_index) const {
    auto it = coeffs_.find(basis_index);
    return it == coeffs_.end() ? alg_->zero_coeff() : it->second;
}

void RingElement::set_coeff(int basis_index, const Coeff& c) {
    if (c.is_zero())
        coeffs_.erase(basis_index);
    else
        coeffs_[basis_index] = c;
}

void RingElement::add_to(int basis_index, const Coeff& c) {
    auto it = coeffs_.find(basis_index);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_[basis_index] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

bool RingElement::is_homogeneous(int* codim_out) const {
    int codim = -1;
    for (auto& [i, c] : coeffs_) {
        int k = alg_->basis()[i].codim;
        if (codim < 0)
            codim = k;
        else if (codim != k)
            return false;
    }
    if (codim_out) *codim_out = std::max(codim, 0);
    return true;
}

bool RingElement::operator==(const RingElement& o) const {
    if (alg_.get() != o.alg_.get()) return false;
    return coeffs_ == o.coeffs_;
}

std::string RingElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [i, c] : coeffs_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        out << cs << "*" << alg_->basis()[i].name;
    }
    return out.str();
}

RingElement unit_element(const GradedAlgebra::Ptr& a) {
    return RingElement(a, a->unit_index(), a->one_coeff());
}

RingElement point_element(const GradedAlgebra::Ptr& a) {
    return RingElement(a, a->point_index(), a->one_coeff());
}

RingElement basis_element(const GradedAlgebra::Ptr& a, int index) {
    return RingElement(a, index, a->one_coeff());
}

RingElement basis_element(const GradedAlgebra::Ptr& a, const std::string& name) {
    int i = a->index_of(name);
    if (i < 0) throw Error("no basis element named '" + name + "' in " + a->id());
    return basis_element(a, i);
}

RingElement zero_element(const GradedAlgebra::Ptr& a) { return RingElement(a); }

namespace {
void check_same_algebra(const RingElement& a, const RingElement& b) {
    if (a.algebra().get() != b.algebra().get())
        throw AlgebraMismatch("elements of different algebras never combine ("
                              + (a.algebra() ? a.algebra()->id() : "null") + " vs "
                              + (b.algebra() ? b.algebra()->id() : "null") + ")");
}
} // namespace

RingElement add(const RingElement& a, const RingElement& b) {
    check_same_algebra(a, b);
    RingElement r = a;
    for (auto& [i, c] : b.coeffs()) r.add_to(i, c);
    return r;
}

RingElement sub(const RingElement& a, const RingElement& b) { return add(a, neg(b)); }

RingElement neg(const RingElement& a) {
    RingElement r(a.algebra());
    for (auto& [i, c] : a.coeffs()) r.set_coeff(i, -c);
    return r;
}

RingElement scale(const Coeff& c, const RingElement& a) {
    RingElement r(a.algebra());
    if (c.is_zero()) return r;
    for (auto& [i, v] : a.coeffs()) r.set_coeff(i, c * v);
    return r;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    check_same_algebra(a, b);
    const auto& alg = a.algebra();
    int unit = alg->unit_index();
    RingElement r(alg);
    for (auto& [i, ci] : a.coeffs()) {
        for (auto& [j, cj] : b.coeffs()) {
            Coeff c = ci * cj;
            if (i == unit) {
                r.add_to(j, c);
            } else if (j == unit) {
                r.add_to(i, c);
            } else {
                for (auto& t : alg->pair_product(i, j)) r.add_to(t.index, c * t.c);
            }
        }
    }
    return r;
}

RingElement power(const RingElement& a, unsigned long e) {
    RingElement r = unit_element(a.algebra());
    RingElement b = a;
    while (e) {
        if (e & 1) r = multiply(r, b);
        b = multiply(b, b);
        e >>= 1;
    }
    return r;
}

RingElement graded_part(const RingElement& a, int codim) {
    RingElement r(a.algebra());
    for (auto& [i, c] : a.coeffs())
        if (a.algebra()->basis()[i].codim == codim) r.set_coeff(i, c);
    return r;
}

Coeff degree(const RingElement& a) { return a.coeff(a.algebra()->point_index()); }

RingElement invert_unit(const RingElement& a) {
    const auto& alg = a.algebra();
    Coeff c0 = a.coeff(alg->unit_index());
    // sanity: a constant term hiding in another codim-0 element would be a
    // disconnected algebra, which we do not build
    if (!c0.is_unit())
        throw NotAUnit("constant term " + c0.str() + " is not invertible in " + alg->id());
    Coeff c0inv = c0.inverse();
    RingElement n = scale(c0inv, sub(a, RingElement(alg, alg->unit_index(), c0)));
    // (c0(1+n))^{-1} = c0^{-1} sum (-n)^k, n nilpotent past the top codimension
    RingElement sum = unit_element(alg);
    RingElement pow_term = unit_element(alg);
    RingElement minus_n = neg(n);
    for (int k = 1; k <= alg->dim(); ++k) {
        pow_term = multiply(pow_term, minus_n);
        if (pow_term.is_zero()) break;
        sum = add(sum, pow_term);
    }
    return scale(c0inv, sum);
}

GradedAlgebra::Ptr reduce_mod(const GradedAlgebra::Ptr& a, long p) {
    if (a->domain() != Domain::integers)
        throw DomainMismatch("reduce_mod expects an algebra over the integers");
    GradedAlgebra::Builder b(a->id() + " mod " + std::to_string(p), a->dim(), Domain::mod_p, p);
    for (auto& e : a->basis()) b.add_basis(e.name, e.codim);
    b.set_unit(a->unit_index());
    b.set_point(a->point_index());
    int n = a->rank();
    for (int i = 0; i < n; ++i) {
        if (i == a->unit_index()) continue;
        for (int j = i; j < n; ++j) {
            if (j == a->unit_index()) continue;
            GradedAlgebra::SparseVec v;
            for (auto& t : a->pair_product(i, j)) {
                Coeff c = t.c.reduce_mod(p);
                if (!c.is_zero()) v.push_back({t.index, c});
            }
            if (!v.empty()) b.set_product(i, j, std::move(v));
        }
    }
    return b.build();
}

RingElement reduce_element(const RingElement& e, const GradedAlgebra::Ptr& reduced) {
    long p = reduced->modulus();
    if (reduced->domain() != Domain::mod_p || p < 2)
        throw DomainMismatch("target of reduce_element must be a mod-p algebra");
    if (e.algebra()->rank() != reduced->rank())
        throw AlgebraMismatch("mod-p reduction target has a different basis");
    RingElement r(reduced);
    for (auto& [i, c] : e.coeffs()) r.add_to(i, c.reduce_mod(p));
    return r;
}

RingElement lift_element(const RingElement& e, const GradedAlgebra::Ptr& integral) {
    if (integral->domain() != Domain::integers)
        throw DomainMismatch("lift target must be an integral algebra");
    if (e.algebra()->rank() != integral->rank())
        throw AlgebraMismatch("lift target has a different basis");
    RingElement r(integral);
    for (auto& [i, c] : e.coeffs()) r.add_to(i, Coeff::integer(c.numerator()));
    return r;
}

int KunnethAlgebra::pair_index(int i, int j) const {
    return i * right->rank() + j;
}

RingElement KunnethAlgebra::embed_left(const RingElement& x) const {
    RingElement r(alg);
    int ub = right->unit_index();
    for (auto& [i, c] : x.coeffs()) r.add_to(pair_index(i, ub), c);
    return r;
}

RingElement KunnethAlgebra::embed_right(const RingElement& x) const {
    RingElement r(alg);
    int ua = left->unit_index();
    for (auto& [j, c] : x.coeffs()) r.add_to(pair_index(ua, j), c);
    return r;
}

RingElement KunnethAlgebra::tensor(const RingElement& x, const RingElement& y) const {
    return multiply(embed_left(x), embed_right(y));
}

KunnethAlgebra kunneth_product(const GradedAlgebra::Ptr& a, const GradedAlgebra::Ptr& b) {
    if (a->domain() != b->domain() || a->modulus() != b->modulus())
        throw ModulusMismatch("kunneth factors live over different coefficient domains");
    int ra = a->rank(), rb = b->rank();
    GradedAlgebra::Builder builder(a->id() + "x" + b->id(), a->dim() + b->dim(), a->domain(),
                                   a->modulus());
    auto pair_name = [&](int i, int j) {
        bool ua = i == a->unit_index(), ub = j == b->unit_index();
        if (ua && ub) return std::string("1");
        return a->basis()[i].name + "|" + b->basis()[j].name;
    };
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j)
            builder.add_basis(pair_name(i, j), a->basis()[i].codim + b->basis()[j].codim);
    auto idx = [&](int i, int j) { return i * rb + j; };
    builder.set_unit(idx(a->unit_index(), b->unit_index()));
    builder.set_point(idx(a->point_index(), b->point_index()));

    // componentwise products; unit rows of each factor handled explicitly
    auto factor_product = [](const GradedAlgebra::Ptr& f, int i, int j) {
        GradedAlgebra::SparseVec v;
        if (i == f->unit_index()) {
            v.push_back({j, f->one_coeff()});
        } else if (j == f->unit_index()) {
            v.push_back({i, f->one_coeff()});
        } else {
            v = f->pair_product(i, j);
        }
        return v;
    };
    int total = ra * rb;
    for (int x = 0; x < total; ++x) {
        for (int y = x; y < total; ++y) {
            int i1 = x / rb, j1 = x % rb, i2 = y / rb, j2 = y % rb;
            auto va = factor_product(a, i1, i2);
            auto vb = factor_product(b, j1, j2);
            GradedAlgebra::SparseVec out;
            for (auto& ta : va)
                for (auto& tb : vb) out.push_back({idx(ta.index, tb.index), ta.c * tb.c});
            builder.set_product(x, y, std::move(out));
        }
    }
    KunnethAlgebra result;
    result.alg = builder.build();
    result.left = a;
    result.right = b;
    return result;
}

std::vector<std::string> check_multiplication_axioms(const GradedAlgebra::Ptr& a) {
    std::vector<std::string> bad;
    int n = a->rank();
    auto b = [&](int i) { return basis_element(a, i); };
    for (int i = 0; i < n && bad.size() < 20; ++i) {
        for (int j = i; j < n && bad.size() < 20; ++j) {
            RingElement ij = multiply(b(i), b(j));
            if (multiply(b(j), b(i)) != ij)
                bad.push_back("commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            int total = a->basis()[i].codim + a->basis()[j].codim;
            for (auto& [k, c] : ij.coeffs())
                if (a->basis()[k].codim != total)
                    bad.push_back("grading fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (int k = j; k < n && bad.size() < 20; ++k) {
                if (multiply(ij, b(k)) != multiply(b(i), multiply(b(j), b(k))))
                    bad.push_back("associativity fails at (" + std::to_string(i) + ","
                                  + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    // the degree functional must be nonzero on the top component
    bool top_seen = false;
    for (int i : a->component(a->dim()))
        if (i == a->point_index()) top_seen = true;
    if (!top_seen) bad.push_back("point class missing from the top component");
    return bad;
}

GradedAlgebra::Ptr make_point_algebra(Domain d, long p) {
    GradedAlgebra::Builder b("pt", 0, d, p);
    int one = b.add_basis("1", 0);
    b.set_unit(one);
    b.set_point(one);
    return b.build();
}

GradedAlgebra::Ptr make_projective_space(int n) {
    if (n < 0) throw UnknownVariety("projective space of negative dimension");
    if (n == 0) return make_point_algebra();
    GradedAlgebra::Builder b("P" + std::to_string(n), n);
    std::vector<int> idx(n + 1);
    idx[0] = b.add_basis("1", 0);
    for (int k = 1; k <= n; ++k)
        idx[k] = b.add_basis(k == 1 ? "h" : "h" + std::to_string(k), k);
    b.set_unit(idx[0]);
    b.set_point(idx[n]);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (i + j <= n) b.set_product(idx[i], idx[j], {{idx[i + j], Coeff::integer(1)}});
    return b.build();
}

GradedAlgebra::Ptr make_split_quadric_odd(int n) {
    if (n < 1 || n % 2 == 0)
        throw UnknownVariety("intrinsic split-quadric ring needs odd dimension");
    int m = (n - 1) / 2;
    GradedAlgebra::Builder b("Q" + std::to_string(n), n);
    // 1, h, ..., h^m in codims 0..m; l_m, ..., l_0 in codims m+1..n
    std::vector<int> h(m + 1), l(m + 1);
    h[0] = b.add_basis("1", 0);
    for (int k = 1; k <= m; ++k)
        h[k] = b.add_basis(k == 1 ? "h" : "h" + std::to_string(k), k);
    for (int j = m; j >= 0; --j) l[j] = b.add_basis("l" + std::to_string(j), n - j);
    b.set_unit(h[0]);
    b.set_point(l[0]);
    auto one = Coeff::integer(1);
    auto two = Coeff::integer(2);
    // h^i * h^j = h^{i+j} while i+j <= m, = 2 l_{n-i-j} past the middle
    for (int i = 1; i <= m; ++i) {
        for (int j = i; j <= m; ++j) {
            int s = i + j;
            if (s <= m)
                b.set_product(h[i], h[j], {{h[s], one}});
            else if (s <= n)
                b.set_product(h[i], h[j], {{l[n - s], two}});
        }
        // h^i * l_j = l_{j-i}
        for (int j = m; j >= 0; --j) {
            if (j - i >= 0) b.set_product(h[i], l[j], {{l[j - i], one}});
        }
    }
    // l_i * l_j = 0 (codims exceed n for i + j < n, which always holds here)
    return b.build();
}

} // namespace chowtrace
