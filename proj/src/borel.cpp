#include "chowtrace/borel.hpp"

#include "chowtrace/errors.hpp"

namespace chowtrace {

BorelAlgebra::BorelAlgebra(const RootSystem& rs, const WeylGroup& weyl) : rs_(&rs), weyl_(&weyl) {
    alpha_.reserve(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        // alpha_i = sum_j <alpha_i, alpha_j^vee> omega_j = sum_j cartan[j][i] omega_j
        std::vector<Int> coeffs(rs.rank);
        for (int j = 0; j < rs.rank; ++j) coeffs[j] = rs.cartan[j][i];
        alpha_.push_back(ZPoly::linear(coeffs));
    }
    alpha_pows_.assign(rs.rank, {});
    neg_alpha_pows_.assign(rs.rank, {});
    top_numerator_ = ZPoly::constant(1);
    for (int r = 0; r < rs.num_positive; ++r)
        top_numerator_ = top_numerator_.mul(root_form(rs.roots[r]));
    numerators_.resize(weyl.size());
    numerator_known_.assign(weyl.size(), 0);
}

ZPoly BorelAlgebra::root_form(const std::vector<long>& root) const {
    std::vector<Int> coeffs(rs_->rank, 0);
    for (int j = 0; j < rs_->rank; ++j)
        for (int i = 0; i < rs_->rank; ++i) coeffs[j] += Int(rs_->cartan[j][i]) * root[i];
    return ZPoly::linear(coeffs);
}

const ZPoly& BorelAlgebra::alpha_pow(int i, int k) const {
    auto& pows = alpha_pows_[i];
    if (pows.empty()) pows.push_back(ZPoly::constant(1));
    while (static_cast<int>(pows.size()) <= k) pows.push_back(pows.back().mul(alpha_[i]));
    return pows[k];
}

const ZPoly& BorelAlgebra::neg_alpha_pow(int i, int k) const {
    auto& pows = neg_alpha_pows_[i];
    if (pows.empty()) pows.push_back(ZPoly::constant(1));
    while (static_cast<int>(pows.size()) <= k) pows.push_back(pows.back().mul(-alpha_[i]));
    return pows[k];
}

ZPoly BorelAlgebra::apply_simple(int i, const ZPoly& f) const {
    // omega_i -> omega_i - alpha_i, all other weights fixed
    ZPoly out;
    int n = rs_->rank;
    for (auto& [key, c] : f.terms()) {
        auto e = ZPoly::unpack(key, n);
        int k = e[i];
        if (k == 0) {
            out.add_term(key, c);
            continue;
        }
        auto rest = e;
        rest[i] = 0;
        uint64_t rest_key = ZPoly::pack(rest);
        for (int j = 0; j <= k; ++j) {
            // binomial expansion of (omega_i - alpha_i)^k
            Int scalar = c * binomial(k, j);
            std::vector<int> mono(n, 0);
            mono[i] = k - j;
            uint64_t mono_key = ZPoly::pack(mono) + rest_key;
            for (auto& [ak, ac] : neg_alpha_pow(i, j).terms()) out.add_term(mono_key + ak, scalar * ac);
        }
    }
    return out;
}

ZPoly BorelAlgebra::divided_difference(int i, const ZPoly& f) const {
    // d_i(omega_i^k R) = R sum_{j=1..k} C(k,j) (-1)^{j+1} omega_i^{k-j} alpha_i^{j-1}
    ZPoly out;
    int n = rs_->rank;
    for (auto& [key, c] : f.terms()) {
        auto e = ZPoly::unpack(key, n);
        int k = e[i];
        if (k == 0) continue;
        auto rest = e;
        rest[i] = 0;
        uint64_t rest_key = ZPoly::pack(rest);
        for (int j = 1; j <= k; ++j) {
            Int scalar = c * binomial(k, j);
            if (j % 2 == 0) scalar = -scalar;
            std::vector<int> mono(n, 0);
            mono[i] = k - j;
            uint64_t mono_key = ZPoly::pack(mono) + rest_key;
            for (auto& [ak, ac] : alpha_pow(i, j - 1).terms()) out.add_term(mono_key + ak, scalar * ac);
        }
    }
    return out;
}

ZPoly BorelAlgebra::apply_word(const std::vector<int8_t>& word, ZPoly f) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        f = divided_difference(*it, f);
        if (f.is_zero()) break;
    }
    return f;
}

const ZPoly& BorelAlgebra::schubert_numerator(int w) const {
    if (!numerator_known_[w]) {
        int w0 = weyl_->longest_element();
        int chain = weyl_->multiply(weyl_->inverse(w), w0);
        numerators_[w] = apply_word(weyl_->element(chain).word, top_numerator_);
        numerator_known_[w] = 1;
    }
    return numerators_[w];
}

Int BorelAlgebra::schubert_coefficient(int w, const ZPoly& f) const {
    return apply_word(weyl_->element(w).word, f).constant_term();
}

bool BorelAlgebra::is_invariant_under(const ZPoly& f, const std::vector<int>& simple_indices) const {
    for (int i : simple_indices)
        if (apply_simple(i, f) != f) return false;
    return true;
}

ZPoly divided_difference_by_division(const BorelAlgebra& b, int i, const ZPoly& f) {
    ZPoly num = f - b.apply_simple(i, f);
    // divide by alpha_i = sum_j cartan[j][i] omega_j: synthetic division in a
    // pivot variable with a nonzero coefficient
    const auto& rs = b.root_system();
    int n = rs.rank;
    int pivot = -1;
    for (int j = 0; j < n; ++j)
        if (rs.cartan[j][i] != 0) {
            pivot = j;
            break;
        }
    std::vector<Int> alpha(n);
    for (int j = 0; j < n; ++j) alpha[j] = rs.cartan[j][i];
    ZPoly quot;
    ZPoly rem = num;
    while (!rem.is_zero()) {
        // pick the term with the highest pivot exponent
        uint64_t best = 0;
        int best_exp = -1;
        for (auto& [k, c] : rem.terms()) {
            int e = static_cast<int>((k >> (8 * pivot)) & 0xff);
            if (e > best_exp) {
                best_exp = e;
                best = k;
            }
        }
        if (best_exp <= 0) throw DivisionFailure("remainder survives division by alpha");
        Int c = rem.terms().at(best);
        if (c % alpha[pivot] != 0) throw DivisionFailure("leading coefficient not divisible");
        Int q = c / alpha[pivot];
        auto e = ZPoly::unpack(best, n);
        e[pivot] -= 1;
        ZPoly qterm;
        qterm.add_term(ZPoly::pack(e), q);
        quot += qterm;
        rem -= qterm.mul(ZPoly::linear(alpha));
    }
    return quot;
}

} // namespace chowtrace
