#include "chowtrace/rost.hpp"

#include <json.hpp>

namespace chowtrace {

int CobordismClass::codim_m() const {
    if (over_point) return -z->dim;
    return static_cast<int>(z->divisor_classes.size());
}

CobordismClass class_over_point(const VarietyPtr& z) {
    return CobordismClass{z, true};
}

CobordismClass class_of_complete_intersection(const VarietyPtr& z) {
    if (z->provenance != Provenance::complete_intersection)
        throw UnsupportedShape("only complete intersections map to a larger base");
    return CobordismClass{z, false};
}

GradedAlgebra::Ptr point_algebra_integral() {
    static GradedAlgebra::Ptr pt = make_point_algebra();
    return pt;
}

GradedAlgebra::Ptr point_algebra_mod(long p) {
    static std::map<long, GradedAlgebra::Ptr> memo;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    auto alg = make_point_algebra(Domain::mod_p, p);
    memo[p] = alg;
    return alg;
}

namespace {

/// e_i of the powered roots of -T_Z via power sums and Newton's identities;
/// fully independent of the series-inversion route.
RingElement normal_bundle_powered_elementary(const VarietyPtr& z, long p, long i) {
    if (i == 0) return unit_element(z->carrier);
    std::vector<RingElement> q;
    for (long j = 1; j <= i; ++j) q.push_back(neg(power_sum(z->tangent, j * (p - 1))));
    auto e = newton_power_sums_to_elementary(q, static_cast<int>(i));
    return e.back();
}

Int over_point_trace(const VarietyPtr& z, long p, long i) {
    if (z->is_disjoint_union()) {
        Int total = 0;
        for (auto& comp : z->components) total += over_point_trace(comp, p, i);
        return total;
    }
    if (!z->tangent) throw UnsupportedShape("variety " + z->name + " carries no tangent data");
    RingElement ei = normal_bundle_powered_elementary(z, p, i);
    return z->degree_of(graded_part(ei, z->dim)).numerator();
}

RingElement ci_trace(const VarietyPtr& z, long p, long i) {
    const auto& divisors = z->divisor_classes;
    auto amb = z->carrier;
    // elementary symmetric functions of the powered divisor roots
    std::vector<RingElement> e;
    e.push_back(unit_element(amb));
    for (auto& d : divisors) {
        RingElement dp = power(d, p - 1);
        e.push_back(zero_element(amb));
        for (std::size_t k = e.size() - 1; k >= 1; --k)
            e[k] = add(e[k], multiply(e[k - 1], dp));
    }
    if (i >= static_cast<long>(e.size())) return zero_element(amb);
    RingElement push = e[static_cast<std::size_t>(i)];
    for (auto& d : divisors) push = multiply(push, d);
    return push;
}

} // namespace

RingElement ln_trace(const CobordismClass& c, long p, long i) {
    if (p < 2) throw Error("prime must be at least 2");
    if (c.over_point) {
        auto base = point_algebra_integral();
        if (i < 0) return zero_element(base);
        Int t = over_point_trace(c.z, p, i);
        return RingElement(base, base->unit_index(), Coeff::integer(t));
    }
    if (c.z->is_disjoint_union()) throw UnsupportedShape("no disjoint unions inside an ambient");
    auto base = c.z->carrier;
    if (i < 0) return zero_element(base);
    return ci_trace(c.z, p, i);
}

namespace {

GradedAlgebra::Ptr reduced_base(const CobordismClass& c, long p) {
    if (c.over_point) return point_algebra_mod(p);
    return reduced_mod_cached(c.z->carrier, p);
}

} // namespace

RingElement phi(const CobordismClass& c, long r, long p) {
    if (r <= 0) throw Error("phi is defined for positive powers r");
    auto base = reduced_base(c, p);
    if (r % (p - 1) != 0) return zero_element(base);
    long i = r / (p - 1) + c.codim_m();
    RingElement trace = ln_trace(c, p, i);
    RingElement divided(trace.algebra());
    for (auto& [k, coeff] : trace.coeffs()) {
        try {
            divided.set_coeff(k, coeff.div_exact(Coeff::integer(p)));
        } catch (const NotDivisibleByP&) {
            throw NotDivisibleByP("Chow trace of S^" + std::to_string(i) + "_LN on " + c.z->name
                                  + " is not divisible by " + std::to_string(p));
        }
    }
    return reduce_element(divided, base);
}

RingElement phi_series(const std::vector<std::pair<long, long>>& q_terms, const CobordismClass& c,
                       long p) {
    auto base = reduced_base(c, p);
    RingElement acc = zero_element(base);
    for (auto& [coeff, r] : q_terms)
        acc = add(acc, scale(Coeff::residue(Int(coeff), p), phi(c, r, p)));
    return acc;
}

RingElement phi_series(const std::vector<std::pair<RingElement, long>>& q_terms,
                       const CobordismClass& c, long p) {
    auto base = reduced_base(c, p);
    RingElement acc = zero_element(base);
    for (auto& [coeff, r] : q_terms) acc = add(acc, multiply(coeff, phi(c, r, p)));
    return acc;
}

EtaResult rost_number(const VarietyPtr& v, long p) {
    if (p < 2) throw Error("prime must be at least 2");
    long d = v->dim;
    if (d <= 0) throw DimensionNotDivisible("Rost numbers need positive dimension");
    if (d % (p - 1) != 0)
        throw DimensionNotDivisible("(p-1) does not divide dim " + v->name + " = "
                                    + std::to_string(d));

    // path one: eta = (1/p) deg (c(T)^{(p)})^{-1}
    Int pre = 0;
    auto components = v->is_disjoint_union() ? v->components : std::vector<VarietyPtr>{v};
    for (auto& comp : components) {
        if (!comp->tangent)
            throw UnsupportedShape("variety " + comp->name + " carries no tangent data");
        RingElement powered = powered_class(comp->tangent, p);
        RingElement inv = invert_unit(powered);
        pre += comp->degree_of(graded_part(inv, comp->dim)).numerator();
    }

    // path two: the trace of S^{d/(p-1)}_LN on [V -> pt]
    Int trace_pre = over_point_trace(v, p, d / (p - 1));

    if (pre != trace_pre)
        throw PathDisagreement("characteristic-class and trace routes disagree on " + v->name + ": "
                               + pre.str() + " vs " + trace_pre.str());
    if (pre % p != 0)
        throw NotDivisibleByP("pre-division integer " + pre.str() + " for " + v->name
                              + " is not divisible by " + std::to_string(p));
    Int div = pre / p;
    Int m = div % p;
    if (m < 0) m += p;
    EtaResult r;
    r.pre_division = pre;
    r.trace_path_pre = trace_pre;
    r.divided = div;
    r.residue = m.convert_to<long>();
    r.paths_agree = true;
    return r;
}

RdfReport rdf_check(const VarietyPtr& u, const VarietyPtr& v, long p, const Catalog& catalog) {
    RdfReport rep;
    rep.u = u->name;
    rep.v = v->name;
    rep.p = p;
    long du = u->dim, dv = v->dim;
    if (du <= 0 || dv <= 0) throw Error("rdf_check needs positive dimensions");

    auto prod = catalog.product(u, v);
    auto c_uv = class_over_point(prod);
    auto c_v = class_over_point(v);

    bool eta_defined = (du % (p - 1) == 0);
    long eta_u = eta_defined ? rost_number(u, p).residue : 0;

    long r_max = (du + dv) * p + p;
    for (long r = 1; r <= r_max; ++r) {
        RdfRow row;
        row.r = r;
        RingElement lhs = phi(c_uv, r, p);
        row.lhs = lhs.is_zero() ? 0 : lhs.coeffs().begin()->second.numerator().convert_to<long>();
        long rhs = 0;
        if (r % (p - 1) == 0 && eta_defined) {
            long i = (r - du * p) / (p - 1) - dv;
            if (i >= 0) {
                Int t = degree(ln_trace(c_v, p, i)).numerator();
                Int m = (Int(eta_u) * t) % p;
                if (m < 0) m += p;
                rhs = m.convert_to<long>();
            }
        }
        row.rhs = rhs;
        row.holds = (row.lhs == rhs);
        rep.all_hold = rep.all_hold && row.holds;
        if (r % (p - 1) != 0 && row.lhs != 0) rep.vanishing_off_grading = false;
        rep.rows.push_back(row);
    }
    return rep;
}

RostReport screen_special_correspondence(const VarietyPtr& v, long p) {
    RostReport rep;
    rep.variety = v->name;
    rep.p = p;
    rep.dim = v->dim;

    long n = v->dim;
    rep.dim_test = false;
    long power = p, s = 1;
    while (power - 1 <= n) {
        if (power - 1 == n && n >= 1) {
            rep.dim_test = true;
            rep.dim_test_s = s;
            break;
        }
        power *= p;
        ++s;
    }

    rep.eta_defined = (n > 0 && n % (p - 1) == 0);
    bool eta_nonzero = false;
    if (rep.eta_defined) {
        auto eta = rost_number(v, p);
        rep.eta_integer = eta.pre_division;
        rep.eta_mod_p = eta.residue;
        eta_nonzero = (eta.residue != 0);
    }
    rep.verdict = (rep.dim_test && rep.eta_defined && eta_nonzero)
                      ? "candidate"
                      : "fails-necessary-conditions";
    return rep;
}

std::string rost_report_json(const RostReport& r) {
    nlohmann::json j;
    j["variety"] = r.variety;
    j["p"] = r.p;
    j["dim"] = r.dim;
    j["dim_test"] = r.dim_test;
    if (r.dim_test) j["dim_test_exponent"] = r.dim_test_s;
    if (r.eta_defined) {
        j["eta_integer"] = r.eta_integer.str();
        j["eta_mod_p"] = r.eta_mod_p;
    } else {
        j["eta_integer"] = nullptr;
        j["eta_mod_p"] = nullptr;
    }
    j["verdict"] = r.verdict;
    if (r.verdict == "candidate") {
        // informational: a candidate of dimension n = p^s - 1 that is d-splitting
        // has canonical p-dimension at least d = n / (p-1)
        j["cd_p_lower_bound"] = r.dim / (r.p - 1);
    }
    return j.dump();
}

} // namespace chowtrace
