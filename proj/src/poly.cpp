#include "chowtrace/poly.hpp"

#include <sstream>

#include "chowtrace/errors.hpp"

namespace chowtrace {

uint64_t ZPoly::pack(const std::vector<int>& exps) {
    if (exps.size() > max_vars) throw Error("too many variables for ZPoly");
    uint64_t key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > max_exp) throw Error("exponent out of range");
        key |= static_cast<uint64_t>(exps[i]) << (8 * i);
    }
    return key;
}

std::vector<int> ZPoly::unpack(uint64_t key, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>((key >> (8 * i)) & 0xff);
    return e;
}

int ZPoly::key_degree(uint64_t key) {
    int d = 0;
    while (key) {
        d += static_cast<int>(key & 0xff);
        key >>= 8;
    }
    return d;
}

ZPoly ZPoly::constant(const Int& c) {
    ZPoly p;
    if (c != 0) p.terms_[0] = c;
    return p;
}

ZPoly ZPoly::variable(int i, int nvars) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    ZPoly p;
    p.terms_[pack(e)] = 1;
    return p;
}

ZPoly ZPoly::linear(const std::vector<Int>& coeffs) {
    ZPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::vector<int> e(coeffs.size(), 0);
        e[i] = 1;
        p.terms_[pack(e)] = coeffs[i];
    }
    return p;
}

Int ZPoly::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Int(0) : it->second;
}

int ZPoly::degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, key_degree(k));
    return d;
}

bool ZPoly::is_homogeneous(int* deg_out) const {
    int d = -1;
    for (auto& [k, c] : terms_) {
        int kd = key_degree(k);
        if (d < 0)
            d = kd;
        else if (d != kd)
            return false;
    }
    if (deg_out) *deg_out = std::max(d, 0);
    return true;
}

void ZPoly::add_term(uint64_t key, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r = *this;
    r += o;
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    ZPoly r = *this;
    r -= o;
    return r;
}

ZPoly ZPoly::operator-() const {
    ZPoly r;
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

ZPoly ZPoly::scaled(const Int& c) const {
    ZPoly r;
    if (c == 0) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

ZPoly ZPoly::mul(const ZPoly& o, int truncate) const {
    ZPoly r;
    for (auto& [ka, ca] : terms_) {
        int da = key_degree(ka);
        for (auto& [kb, cb] : o.terms_) {
            if (truncate >= 0 && da + key_degree(kb) > truncate) continue;
            r.add_term(ka + kb, ca * cb);
        }
    }
    return r;
}

ZPoly ZPoly::graded_part(int deg) const {
    ZPoly r;
    for (auto& [k, c] : terms_)
        if (key_degree(k) == deg) r.terms_[k] = c;
    return r;
}

std::string ZPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [k, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        out << cs;
        auto e = unpack(k, static_cast<int>(var_names.size()));
        for (std::size_t i = 0; i < var_names.size(); ++i) {
            if (e[i] == 0) continue;
            out << "*" << var_names[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace chowtrace
