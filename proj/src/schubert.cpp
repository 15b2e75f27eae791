#include "chowtrace/schubert.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace chowtrace {

namespace {

std::string rep_name(const WeylGroup& weyl, int w) {
    const auto& word = weyl.element(w).word;
    if (word.empty()) return "e";
    std::string s;
    for (int8_t i : word) s += "s" + std::to_string(i + 1);
    return s;
}

} // namespace

RingElement SchubertRing::pushdown_homogeneous(const ZPoly& f, int deg) const {
    if (!borel->is_invariant_under(f, quotient.levi))
        throw NotInPullbackImage("polynomial is not Levi-invariant");
    RingElement out(ring);
    if (deg > quotient.dim) return out;
    for (int pos = 0; pos < static_cast<int>(quotient.reps.size()); ++pos) {
        int w = quotient.reps[pos];
        if (weyl->length(w) != deg) continue;
        Int c = borel->schubert_coefficient(w, f);
        if (c != 0) out.add_to(pos, Coeff::integer(c));
    }
    return out;
}

RingElement SchubertRing::pushdown(const ZPoly& f) const {
    RingElement out(ring);
    int d = f.degree();
    for (int k = 0; k <= std::min(d, quotient.dim); ++k) {
        ZPoly part = f.graded_part(k);
        if (part.is_zero()) continue;
        out = add(out, pushdown_homogeneous(part, k));
    }
    return out;
}

bool SchubertRing::in_pullback_image(const ZPoly& f) const {
    for (int k = 0; k <= f.degree(); ++k) {
        ZPoly part = f.graded_part(k);
        if (part.is_zero()) continue;
        if (k > quotient.dim) return false;
        for (int w = 0; w < static_cast<int>(weyl->size()); ++w) {
            if (weyl->length(w) != k) continue;
            if (quotient.rep_position(w) >= 0) continue;
            if (borel->schubert_coefficient(w, part) != 0) return false;
        }
    }
    return true;
}

SchubertRing build_schubert_ring(char type, int rank, std::vector<int> marked,
                                 std::size_t weyl_bound, const std::string& cache_dir) {
    SchubertRing sr;
    sr.rs = std::make_shared<RootSystem>(build_root_system(type, rank));
    sr.weyl = std::make_shared<WeylGroup>(WeylGroup::enumerate(*sr.rs, weyl_bound));
    sr.quotient = minimal_coset_reps(*sr.rs, *sr.weyl, marked);
    sr.quotient.rs = sr.rs.get();
    sr.quotient.weyl = sr.weyl.get();
    sr.borel = std::make_shared<BorelAlgebra>(*sr.rs, *sr.weyl);

    // tangent directions: positive roots not supported on the Levi alone
    for (int r = 0; r < sr.rs->num_positive; ++r) {
        bool in_levi = true;
        for (int i : sr.quotient.marked)
            if (sr.rs->roots[r][i] != 0) in_levi = false;
        if (!in_levi) sr.tangent_roots.push_back(sr.borel->root_form(sr.rs->roots[r]));
    }
    if (static_cast<int>(sr.tangent_roots.size()) != sr.quotient.dim)
        throw Error("tangent root count disagrees with dim G/P");

    std::string cache_path;
    if (!cache_dir.empty()) {
        cache_path = cache_dir + "/" + structure_constant_cache_key(type, rank, sr.quotient.marked)
                     + ".json";
        if (auto cached = try_load_structure_constants(*sr.rs, *sr.weyl, sr.quotient, cache_path)) {
            sr.ring = cached;
            return sr;
        }
    }

    const auto& reps = sr.quotient.reps;
    int nb = static_cast<int>(reps.size());
    int dim = sr.quotient.dim;
    GradedAlgebra::Builder builder(std::string(1, type) + std::to_string(rank) + "/P"
                                       + [&] {
                                             std::string s;
                                             for (int i : sr.quotient.marked) s += std::to_string(i + 1);
                                             return s;
                                         }(),
                                   dim);
    for (int pos = 0; pos < nb; ++pos)
        builder.add_basis(rep_name(*sr.weyl, reps[pos]), sr.weyl->length(reps[pos]));
    builder.set_unit(0);
    if (sr.weyl->length(reps[nb - 1]) != dim || (nb >= 2 && sr.weyl->length(reps[nb - 2]) == dim))
        throw Error("top Chow component of G/P is not rank one");
    builder.set_point(nb - 1);

    Int order = sr.borel->weyl_order();
    Int order2 = order * order;
    for (int i = 1; i < nb; ++i) {
        int li = sr.weyl->length(reps[i]);
        const ZPoly& ni = sr.borel->schubert_numerator(reps[i]);
        for (int j = i; j < nb; ++j) {
            int lj = sr.weyl->length(reps[j]);
            if (li + lj > dim) continue;
            ZPoly prod = ni.mul(sr.borel->schubert_numerator(reps[j]));
            GradedAlgebra::SparseVec out;
            for (int k = 0; k < nb; ++k) {
                if (sr.weyl->length(reps[k]) != li + lj) continue;
                Int num = sr.borel->schubert_coefficient(reps[k], prod);
                if (num == 0) continue;
                if (num % order2 != 0)
                    throw IntegralityFailure("non-integral Schubert structure constant");
                out.push_back({k, Coeff::integer(num / order2)});
            }
            if (!out.empty()) builder.set_product(i, j, std::move(out));
        }
    }
    sr.ring = builder.build();

    if (!cache_path.empty()) save_structure_constants(sr, cache_path);
    return sr;
}

RingElement chevalley_multiply(const SchubertRing& sr, int divisor_simple, const RingElement& x) {
    const auto& q = sr.quotient;
    bool marked = false;
    for (int i : q.marked) marked |= (i == divisor_simple);
    if (!marked) throw Error("divisor index is not a marked simple root of this quotient");
    if (x.algebra().get() != sr.ring.get())
        throw AlgebraMismatch("element does not live in this Schubert ring");
    const auto& rs = *sr.rs;
    const auto& weyl = *sr.weyl;
    RingElement out(sr.ring);
    for (auto& [pos, c] : x.coeffs()) {
        int w = q.reps[pos];
        int lw = weyl.length(w);
        for (int r = 0; r < rs.num_positive; ++r) {
            long pairing = rs.weight_coroot_pairing(divisor_simple, rs.roots[r]);
            if (pairing == 0) continue;
            int wsr = weyl.multiply(w, weyl.reflection(r));
            if (weyl.length(wsr) != lw + 1) continue;
            int target = q.rep_position(wsr);
            if (target < 0) continue;
            out.add_to(target, c * Coeff::integer(pairing));
        }
    }
    return out;
}

Int divisor_power_degree_chevalley(const SchubertRing& sr, int divisor_simple, int power) {
    RingElement acc = unit_element(sr.ring);
    for (int k = 0; k < power; ++k) acc = chevalley_multiply(sr, divisor_simple, acc);
    return degree(acc).numerator();
}

Int divisor_power_degree_table(const SchubertRing& sr, int divisor_simple, int power) {
    int divisor_pos = -1;
    for (int pos = 0; pos < sr.ring->rank(); ++pos) {
        int w = sr.quotient.reps[pos];
        if (sr.weyl->length(w) != 1) continue;
        // the Schubert divisor of omega_{i0} is the rep s_{i0}
        if (sr.weyl->element(w).word == std::vector<int8_t>{static_cast<int8_t>(divisor_simple)})
            divisor_pos = pos;
    }
    if (divisor_pos < 0) throw Error("marked divisor class missing from the quotient basis");
    RingElement h = basis_element(sr.ring, divisor_pos);
    RingElement acc = unit_element(sr.ring);
    for (int k = 0; k < power; ++k) acc = multiply(acc, h);
    return degree(acc).numerator();
}

RingElement gp_total_chern_class(const SchubertRing& sr) {
    ZPoly total = ZPoly::constant(1);
    for (const auto& root : sr.tangent_roots) {
        ZPoly factor = ZPoly::constant(1) + root;
        total = total.mul(factor, sr.quotient.dim);
    }
    return sr.pushdown(total);
}

std::string structure_constant_cache_key(char type, int rank, const std::vector<int>& marked) {
    std::string s = std::string(1, type) + std::to_string(rank) + "_P";
    for (int i : marked) s += std::to_string(i + 1);
    return s;
}

void save_structure_constants(const SchubertRing& sr, const std::string& path) {
    nlohmann::json j;
    j["format"] = "chowtrace-schubert-v1";
    j["type"] = std::string(1, sr.rs->type);
    j["rank"] = sr.rs->rank;
    std::vector<int> marked1;
    for (int i : sr.quotient.marked) marked1.push_back(i + 1);
    j["parabolic"] = marked1;
    j["weyl_order"] = static_cast<long>(sr.weyl->size());
    nlohmann::json basis = nlohmann::json::array();
    for (int w : sr.quotient.reps) {
        nlohmann::json b;
        b["codim"] = sr.weyl->length(w);
        b["word"] = std::vector<int>(sr.weyl->element(w).word.begin(), sr.weyl->element(w).word.end());
        basis.push_back(b);
    }
    j["basis"] = basis;
    nlohmann::json constants = nlohmann::json::array();
    int nb = sr.ring->rank();
    for (int i = 1; i < nb; ++i) {
        for (int jj = i; jj < nb; ++jj) {
            const auto& v = sr.ring->pair_product(i, jj);
            if (v.empty()) continue;
            nlohmann::json terms = nlohmann::json::array();
            for (auto& t : v) terms.push_back({t.index, t.c.numerator().str()});
            constants.push_back({i, jj, terms});
        }
    }
    j["constants"] = constants;

    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

GradedAlgebra::Ptr try_load_structure_constants(const RootSystem& rs, const WeylGroup& weyl,
                                                const ParabolicQuotient& q, const std::string& path) {
    std::ifstream in(path);
    if (!in) return nullptr;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("format") != "chowtrace-schubert-v1") return nullptr;
        if (j.at("type") != std::string(1, rs.type) || j.at("rank") != rs.rank) return nullptr;
        if (j.at("weyl_order") != static_cast<long>(weyl.size())) return nullptr;
        auto basis = j.at("basis");
        if (basis.size() != q.reps.size()) return nullptr;
        for (std::size_t i = 0; i < q.reps.size(); ++i) {
            auto word = basis[i].at("word").get<std::vector<int>>();
            const auto& expect = weyl.element(q.reps[i]).word;
            if (word.size() != expect.size()) return nullptr;
            for (std::size_t k = 0; k < word.size(); ++k)
                if (word[k] != expect[k]) return nullptr;
        }
        GradedAlgebra::Builder builder(std::string(1, rs.type) + std::to_string(rs.rank) + "/P"
                                           + [&] {
                                                 std::string s;
                                                 for (int i : q.marked) s += std::to_string(i + 1);
                                                 return s;
                                             }(),
                                       q.dim);
        for (int w : q.reps) builder.add_basis(rep_name(weyl, w), weyl.length(w));
        builder.set_unit(0);
        builder.set_point(static_cast<int>(q.reps.size()) - 1);
        for (auto& entry : j.at("constants")) {
            int i = entry[0], jj = entry[1];
            GradedAlgebra::SparseVec v;
            for (auto& t : entry[2]) v.push_back({t[0].get<int>(), Coeff::integer(Int(t[1].get<std::string>()))});
            builder.set_product(i, jj, std::move(v));
        }
        return builder.build();
    } catch (...) {
        return nullptr;
    }
}

} // namespace chowtrace
