#include "chowtrace/bundle.hpp"

namespace chowtrace {

RingElement geometric_inverse_of_one_plus(const RingElement& x) {
    const auto& alg = x.algebra();
    RingElement sum = unit_element(alg);
    RingElement term = unit_element(alg);
    RingElement minus_x = neg(x);
    for (int k = 1; k <= alg->dim(); ++k) {
        term = multiply(term, minus_x);
        if (term.is_zero()) break;
        sum = add(sum, term);
    }
    return sum;
}

namespace {

void check_root(const RingElement& r) {
    int codim = 0;
    if (!r.is_homogeneous(&codim) || (codim != 1 && !r.is_zero()))
        throw Error("bundle roots must be homogeneous of codimension 1");
}

RingElement scalar_div_exact(const RingElement& x, long k) {
    RingElement out(x.algebra());
    Coeff div = Coeff::integer(k);
    for (auto& [i, c] : x.coeffs()) out.set_coeff(i, c.div_exact(div));
    return out;
}

class RootBundle final : public VirtualBundle {
public:
    RootBundle(GradedAlgebra::Ptr carrier, std::vector<RingElement> pos,
               std::vector<RingElement> negv, long rank)
        : carrier_(std::move(carrier)), pos_(std::move(pos)), neg_(std::move(negv)), rank_(rank) {
        for (auto& r : pos_) check_root(r);
        for (auto& r : neg_) check_root(r);
    }

    long rank() const override { return rank_; }
    GradedAlgebra::Ptr carrier() const override { return carrier_; }

    RingElement total_chern() const override { return powered(2); }

    RingElement powered(long p) const override {
        RingElement acc = unit_element(carrier_);
        for (auto& a : pos_)
            acc = multiply(acc, add(unit_element(carrier_), power(a, p - 1)));
        for (auto& b : neg_)
            acc = multiply(acc, geometric_inverse_of_one_plus(power(b, p - 1)));
        return acc;
    }

    RingElement power_sum(long k) const override {
        RingElement acc = zero_element(carrier_);
        for (auto& a : pos_) acc = add(acc, power(a, k));
        for (auto& b : neg_) acc = sub(acc, power(b, k));
        return acc;
    }

private:
    GradedAlgebra::Ptr carrier_;
    std::vector<RingElement> pos_, neg_;
    long rank_;
};

class SeriesBundle final : public VirtualBundle {
public:
    SeriesBundle(GradedAlgebra::Ptr carrier, RingElement series, long rank)
        : carrier_(std::move(carrier)), series_(std::move(series)), rank_(rank) {
        if (series_.coeff(carrier_->unit_index()) != carrier_->one_coeff())
            throw NotAUnit("total-Chern series must have constant term 1");
        if (carrier_->domain() != Domain::integers)
            throw DomainMismatch("series bundles need an integral carrier");
    }

    long rank() const override { return rank_; }
    GradedAlgebra::Ptr carrier() const override { return carrier_; }

    RingElement total_chern() const override { return series_; }

    RingElement powered(long p) const override {
        if (p == 2) return series_;
        int n = carrier_->dim();
        auto pows = all_power_sums();
        // power sums of the powered roots: q_j = p_{j(p-1)}
        std::vector<RingElement> q;
        for (int j = 1; j * (p - 1) <= n; ++j) q.push_back(pows[j * (p - 1) - 1]);
        if (q.empty()) return unit_element(carrier_);
        auto e = newton_power_sums_to_elementary(q, static_cast<int>(q.size()));
        RingElement out = unit_element(carrier_);
        for (auto& ek : e) out = add(out, ek);
        return out;
    }

    RingElement power_sum(long k) const override {
        if (k < 1) throw Error("power sums are indexed from 1");
        auto pows = all_power_sums();
        if (k > static_cast<long>(pows.size())) return zero_element(carrier_);
        return pows[k - 1];
    }

private:
    std::vector<RingElement> all_power_sums() const {
        int n = carrier_->dim();
        std::vector<RingElement> e;
        for (int k = 1; k <= n; ++k) e.push_back(graded_part(series_, k));
        return newton_elementary_to_power_sums(e, n);
    }

    GradedAlgebra::Ptr carrier_;
    RingElement series_;
    long rank_;
};

class GpTangentBundle final : public VirtualBundle {
public:
    explicit GpTangentBundle(std::shared_ptr<const SchubertRing> sr) : sr_(std::move(sr)) {}

    long rank() const override { return sr_->quotient.dim; }
    GradedAlgebra::Ptr carrier() const override { return sr_->ring; }

    RingElement total_chern() const override { return powered(2); }

    RingElement powered(long p) const override {
        int n = sr_->quotient.dim;
        ZPoly acc = ZPoly::constant(1);
        for (auto& alpha : sr_->tangent_roots) {
            ZPoly factor = ZPoly::constant(1);
            ZPoly pw = ZPoly::constant(1);
            for (long k = 0; k < p - 1; ++k) pw = pw.mul(alpha, n);
            factor += pw;
            acc = acc.mul(factor, n);
        }
        return sr_->pushdown(acc);
    }

    RingElement power_sum(long k) const override {
        int n = sr_->quotient.dim;
        ZPoly acc;
        for (auto& alpha : sr_->tangent_roots) {
            ZPoly pw = ZPoly::constant(1);
            for (long j = 0; j < k; ++j) pw = pw.mul(alpha, n);
            acc += pw;
        }
        return sr_->pushdown(acc);
    }

private:
    std::shared_ptr<const SchubertRing> sr_;
};

class SumBundle final : public VirtualBundle {
public:
    SumBundle(GradedAlgebra::Ptr carrier, std::vector<std::pair<Ptr, Embed>> parts)
        : carrier_(std::move(carrier)), parts_(std::move(parts)) {}

    long rank() const override {
        long r = 0;
        for (auto& [b, e] : parts_) r += b->rank();
        return r;
    }
    GradedAlgebra::Ptr carrier() const override { return carrier_; }

    RingElement total_chern() const override {
        RingElement acc = unit_element(carrier_);
        for (auto& [b, embed] : parts_) acc = multiply(acc, embed(b->total_chern()));
        return acc;
    }

    RingElement powered(long p) const override {
        RingElement acc = unit_element(carrier_);
        for (auto& [b, embed] : parts_) acc = multiply(acc, embed(b->powered(p)));
        return acc;
    }

    RingElement power_sum(long k) const override {
        RingElement acc = zero_element(carrier_);
        for (auto& [b, embed] : parts_) acc = add(acc, embed(b->power_sum(k)));
        return acc;
    }

private:
    GradedAlgebra::Ptr carrier_;
    std::vector<std::pair<Ptr, Embed>> parts_;
};

class CiTangentBundle final : public VirtualBundle {
public:
    CiTangentBundle(Ptr base, std::vector<RingElement> divisors)
        : base_(std::move(base)), divisors_(std::move(divisors)) {
        for (auto& d : divisors_) {
            check_root(d);
            if (d.algebra().get() != base_->carrier().get())
                throw AlgebraMismatch("divisor classes must live in the ambient carrier");
        }
    }

    long rank() const override { return base_->rank() - static_cast<long>(divisors_.size()); }
    GradedAlgebra::Ptr carrier() const override { return base_->carrier(); }

    RingElement total_chern() const override { return powered(2); }

    RingElement powered(long p) const override {
        RingElement acc = base_->powered(p);
        for (auto& d : divisors_)
            acc = multiply(acc, geometric_inverse_of_one_plus(power(d, p - 1)));
        return acc;
    }

    RingElement power_sum(long k) const override {
        RingElement acc = base_->power_sum(k);
        for (auto& d : divisors_) acc = sub(acc, power(d, k));
        return acc;
    }

private:
    Ptr base_;
    std::vector<RingElement> divisors_;
};

} // namespace

VirtualBundle::Ptr make_root_bundle(GradedAlgebra::Ptr carrier, std::vector<RingElement> positive,
                                    std::vector<RingElement> negative, long rank) {
    return std::make_shared<RootBundle>(std::move(carrier), std::move(positive),
                                        std::move(negative), rank);
}

VirtualBundle::Ptr make_series_bundle(GradedAlgebra::Ptr carrier, RingElement series, long rank) {
    return std::make_shared<SeriesBundle>(std::move(carrier), std::move(series), rank);
}

VirtualBundle::Ptr make_gp_tangent_bundle(std::shared_ptr<const SchubertRing> sr) {
    return std::make_shared<GpTangentBundle>(std::move(sr));
}

VirtualBundle::Ptr make_sum_bundle(GradedAlgebra::Ptr carrier,
                                   std::vector<std::pair<VirtualBundle::Ptr, VirtualBundle::Embed>> parts) {
    return std::make_shared<SumBundle>(std::move(carrier), std::move(parts));
}

VirtualBundle::Ptr make_ci_tangent_bundle(VirtualBundle::Ptr base, std::vector<RingElement> divisors) {
    return std::make_shared<CiTangentBundle>(std::move(base), std::move(divisors));
}

RingElement chern_series(const VirtualBundle::Ptr& v) { return v->total_chern(); }
RingElement powered_class(const VirtualBundle::Ptr& v, long p) { return v->powered(p); }
RingElement powered_class_coefficient(const VirtualBundle::Ptr& v, long p, long i) {
    return graded_part(v->powered(p), static_cast<int>(i * (p - 1)));
}
RingElement power_sum(const VirtualBundle::Ptr& v, long k) { return v->power_sum(k); }

std::vector<RingElement> newton_elementary_to_power_sums(const std::vector<RingElement>& e,
                                                         int up_to) {
    if (e.empty()) throw Error("newton conversion needs at least the carrier of e_1");
    auto alg = e[0].algebra();
    auto get_e = [&](int k) -> RingElement {
        if (k >= 1 && k <= static_cast<int>(e.size())) return e[k - 1];
        return zero_element(alg);
    };
    std::vector<RingElement> p;
    for (int k = 1; k <= up_to; ++k) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        RingElement acc = scale(Coeff::integer(k % 2 == 1 ? k : -k), get_e(k));
        for (int i = 1; i < k; ++i) {
            RingElement term = multiply(get_e(i), p[k - i - 1]);
            acc = (i % 2 == 1) ? add(acc, term) : sub(acc, term);
        }
        p.push_back(acc);
    }
    return p;
}

std::vector<RingElement> newton_power_sums_to_elementary(const std::vector<RingElement>& p,
                                                         int up_to) {
    if (p.empty()) throw Error("newton conversion needs at least the carrier of p_1");
    auto alg = p[0].algebra();
    auto get_p = [&](int k) -> RingElement {
        if (k >= 1 && k <= static_cast<int>(p.size())) return p[k - 1];
        return zero_element(alg);
    };
    std::vector<RingElement> e;
    for (int k = 1; k <= up_to; ++k) {
        // e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        RingElement acc = zero_element(alg);
        for (int i = 1; i <= k; ++i) {
            RingElement prev = (k - i == 0) ? unit_element(alg) : e[k - i - 1];
            RingElement term = multiply(prev, get_p(i));
            acc = (i % 2 == 1) ? add(acc, term) : sub(acc, term);
        }
        e.push_back(scalar_div_exact(acc, k));
    }
    return e;
}

} // namespace chowtrace
