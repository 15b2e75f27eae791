#include "chowtrace/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace chowtrace {

Coeff Variety::degree_of(const RingElement& x) const {
    if (is_disjoint_union()) throw UnsupportedShape("disjoint unions have componentwise degrees");
    if (x.algebra().get() != carrier.get())
        throw AlgebraMismatch("class does not live in the degree carrier of " + name);
    if (provenance == Provenance::complete_intersection) {
        RingElement cut = x;
        for (auto& d : divisor_classes) cut = multiply(cut, d);
        return degree(cut);
    }
    return degree(x);
}

Int Variety::euler_characteristic() const {
    if (is_disjoint_union()) {
        Int total = 0;
        for (auto& c : components) total += c->euler_characteristic();
        return total;
    }
    if (!tangent) throw UnsupportedShape("variety " + name + " carries no tangent data");
    auto top = graded_part(chern_series(tangent), dim);
    return degree_of(top).numerator();
}

GradedAlgebra::Ptr reduced_mod_cached(const GradedAlgebra::Ptr& a, long p) {
    static std::map<std::pair<const GradedAlgebra*, long>, GradedAlgebra::Ptr> memo;
    static std::vector<GradedAlgebra::Ptr> keep_alive;
    auto key = std::make_pair(a.get(), p);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto reduced = reduce_mod(a, p);
    memo[key] = reduced;
    keep_alive.push_back(a);
    return reduced;
}

namespace {

std::vector<std::string> split_on_x(const std::string& s) {
    // product separator: 'x' between two name characters that begin a new
    // variety token (digit boundary), e.g. "P1xP1", "Q3xF4/P4"
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == 'x' && !cur.empty() && std::isdigit(static_cast<unsigned char>(s[i - 1]))
            && i + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[i + 1]))) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

} // namespace

Catalog::Catalog(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

VarietyPtr Catalog::builtin(const std::string& name) const {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    auto v = build(name);
    cache_[name] = v;
    return v;
}

VarietyPtr Catalog::build(const std::string& raw) const {
    std::string name = raw;
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (name.empty()) throw UnknownVariety("empty variety name");

    auto factors = split_on_x(name);
    if (factors.size() > 1) {
        VarietyPtr acc = builtin(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, builtin(factors[i]));
        return acc;
    }

    if (name == "pt" || name == "P0") {
        auto v = std::make_shared<Variety>();
        v->name = "pt";
        v->dim = 0;
        v->provenance = Provenance::point;
        v->chow = v->carrier = make_point_algebra();
        v->tangent = make_root_bundle(v->carrier, {}, {}, 0);
        return v;
    }
    if (name[0] == 'P' && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1])))
        return make_pn(std::stoi(name.substr(1)));
    if (name[0] == 'Q' && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1])))
        return make_quadric(std::stoi(name.substr(1)));

    // "<Type><rank>/P<i>", also accepted without the slash ("F4P4")
    std::string flat = name;
    auto slash = flat.find('/');
    if (slash != std::string::npos) flat = flat.substr(0, slash) + flat.substr(slash + 1);
    if (flat.size() >= 4 && std::isalpha(static_cast<unsigned char>(flat[0]))) {
        char type = static_cast<char>(std::toupper(flat[0]));
        std::size_t pos = 1;
        std::string rank_digits;
        while (pos < flat.size() && std::isdigit(static_cast<unsigned char>(flat[pos])))
            rank_digits += flat[pos++];
        if (!rank_digits.empty() && pos < flat.size() && (flat[pos] == 'P' || flat[pos] == 'p')) {
            std::string par_digits = flat.substr(pos + 1);
            if (!par_digits.empty()
                && std::all_of(par_digits.begin(), par_digits.end(),
                               [](unsigned char c) { return std::isdigit(c); })) {
                return make_gp(type, std::stoi(rank_digits), std::stoi(par_digits));
            }
        }
    }
    throw UnknownVariety("no builtin named '" + raw + "'");
}

VarietyPtr Catalog::make_pn(int n) const {
    auto v = std::make_shared<Variety>();
    v->name = "P" + std::to_string(n);
    v->dim = n;
    v->provenance = Provenance::projective_space;
    v->chow = v->carrier = make_projective_space(n);
    // Euler sequence: T = O(1)^{n+1} - O; the trivial root is dropped and the
    // virtual rank kept explicit
    std::vector<RingElement> pos(n > 0 ? static_cast<std::size_t>(n) + 1 : 0,
                                 n > 0 ? basis_element(v->chow, "h") : RingElement());
    v->tangent = make_root_bundle(v->carrier, std::move(pos), {}, n);
    return v;
}

VarietyPtr Catalog::make_quadric(int n) const {
    if (n < 1) throw UnknownVariety("quadric dimension must be positive");
    auto v = std::make_shared<Variety>();
    v->name = "Q" + std::to_string(n);
    v->dim = n;
    if (n % 2 == 1) {
        v->provenance = Provenance::split_quadric;
        v->chow = v->carrier = make_split_quadric_odd(n);
        auto h = basis_element(v->chow, "h");
        std::vector<RingElement> pos(static_cast<std::size_t>(n) + 2, h);
        v->tangent = make_root_bundle(v->carrier, std::move(pos), {scale(Coeff::integer(2), h)}, n);
        return v;
    }
    // even quadrics expose characteristic numbers only, via the hypersurface model
    auto amb = builtin("P" + std::to_string(n + 1));
    auto two_h = scale(Coeff::integer(2), basis_element(amb->chow, "h"));
    auto ci = subvariety_by_divisors(amb, {two_h});
    auto w = std::make_shared<Variety>(*ci);
    w->name = v->name;
    return w;
}

VarietyPtr Catalog::make_gp(char type, int rank, int parabolic_one_based) const {
    if (parabolic_one_based < 1 || parabolic_one_based > rank)
        throw UnknownVariety("parabolic index out of range");
    auto v = std::make_shared<Variety>();
    auto sr = std::make_shared<SchubertRing>(
        build_schubert_ring(type, rank, {parabolic_one_based - 1}, 1000000, cache_dir_));
    v->name = std::string(1, type) + std::to_string(rank) + "/P" + std::to_string(parabolic_one_based);
    v->dim = sr->quotient.dim;
    v->provenance = Provenance::homogeneous;
    v->chow = v->carrier = sr->ring;
    v->schubert = sr;
    v->tangent = make_gp_tangent_bundle(sr);
    return v;
}

VarietyPtr Catalog::product(const VarietyPtr& a, const VarietyPtr& b) const {
    if (a->is_disjoint_union() || b->is_disjoint_union())
        throw UnsupportedCombination("products of disjoint unions are not supported");
    if (!a->chow || !b->chow)
        throw UnsupportedCombination(
            "products need intrinsic rings; complete intersections expose characteristic numbers only");
    std::string key = a->name + "x" + b->name;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    auto v = std::make_shared<Variety>();
    v->name = key;
    v->dim = a->dim + b->dim;
    v->provenance = Provenance::product;
    auto k = kunneth_product(a->chow, b->chow);
    v->chow = v->carrier = k.alg;
    v->left_factor = a;
    v->right_factor = b;
    VirtualBundle::Embed el = [k](const RingElement& x) { return k.embed_left(x); };
    VirtualBundle::Embed er = [k](const RingElement& x) { return k.embed_right(x); };
    v->tangent = make_sum_bundle(v->carrier, {{a->tangent, el}, {b->tangent, er}});
    cache_[key] = v;
    return v;
}

VarietyPtr Catalog::disjoint_union(const VarietyPtr& a, const VarietyPtr& b) const {
    if (a->dim != b->dim)
        throw UnsupportedCombination("disjoint unions are supported for equal dimensions");
    auto v = std::make_shared<Variety>();
    v->name = a->name + "+" + b->name;
    v->dim = a->dim;
    v->provenance = Provenance::disjoint_union;
    auto flatten = [&](const VarietyPtr& x) {
        if (x->is_disjoint_union())
            v->components.insert(v->components.end(), x->components.begin(), x->components.end());
        else
            v->components.push_back(x);
    };
    flatten(a);
    flatten(b);
    return v;
}

VarietyPtr Catalog::subvariety_by_divisors(const VarietyPtr& v,
                                           std::vector<RingElement> divisors) const {
    if (v->is_disjoint_union() || !v->chow)
        throw UnsupportedCombination("ambient variety needs an intrinsic ring");
    if (static_cast<int>(divisors.size()) > v->dim)
        throw DimensionUnderflow("more divisors than the ambient dimension");
    for (auto& d : divisors) {
        int codim = 0;
        if (d.algebra().get() != v->chow.get() || !d.is_homogeneous(&codim) || codim != 1)
            throw Error("divisors must be degree-1 classes of the ambient ring");
    }
    auto w = std::make_shared<Variety>();
    w->name = v->name + "[" + std::to_string(divisors.size()) + " divisors]";
    w->dim = v->dim - static_cast<int>(divisors.size());
    w->provenance = Provenance::complete_intersection;
    w->carrier = v->chow;
    w->ambient = v;
    w->divisor_classes = divisors;
    w->tangent = make_ci_tangent_bundle(v->tangent, std::move(divisors));
    return w;
}

VarietyPtr Catalog::divisor_power_section(const VarietyPtr& v, const std::string& divisor_name,
                                          int copies) const {
    auto d = basis_element(v->chow, divisor_name);
    std::vector<RingElement> divisors(static_cast<std::size_t>(copies), d);
    auto w = subvariety_by_divisors(v, divisors);
    auto named = std::make_shared<Variety>(*w);
    named->name = v->name + "[" + divisor_name + "^" + std::to_string(copies) + "]";
    return named;
}

RingElement parse_element(const GradedAlgebra::Ptr& alg, const std::string& text) {
    RingElement out(alg);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "0") return out;
    std::size_t i = 0;
    while (i < s.size()) {
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        std::string num;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
        Int coeff = num.empty() ? Int(1) : Int(num);
        std::string name;
        if (i < s.size() && s[i] == '*') ++i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') name += s[i++];
        int idx;
        if (name.empty()) {
            idx = alg->unit_index();
        } else {
            idx = alg->index_of(name);
            if (idx < 0) throw SpecParseError("unknown basis element '" + name + "' in " + alg->id());
        }
        Coeff c = alg->domain() == Domain::mod_p ? Coeff::residue(sign * coeff, alg->modulus())
                                                 : Coeff::integer(sign * coeff);
        out.add_to(idx, c);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw SpecParseError("bad element syntax near '" + s.substr(i) + "'");
    }
    return out;
}

} // namespace chowtrace
