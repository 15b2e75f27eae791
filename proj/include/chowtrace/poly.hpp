#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowtrace/coeff.hpp"

namespace chowtrace {

/// Sparse integral polynomial in up to 8 variables. Exponents are packed
/// 8 bits per variable, so term keys add under multiplication.
class ZPoly {
public:
    static constexpr int max_vars = 8;
    static constexpr int max_exp = 255;

    ZPoly() = default;

    static uint64_t pack(const std::vector<int>& exps);
    static std::vector<int> unpack(uint64_t key, int nvars);
    static int key_degree(uint64_t key);

    static ZPoly constant(const Int& c);
    static ZPoly variable(int i, int nvars);
    /// Linear form sum_j coeffs[j] * x_j.
    static ZPoly linear(const std::vector<Int>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    const std::map<uint64_t, Int>& terms() const { return terms_; }
    Int constant_term() const;
    int degree() const;
    bool is_homogeneous(int* deg_out = nullptr) const;

    void add_term(uint64_t key, const Int& c);
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly scaled(const Int& c) const;

    /// Product, dropping terms of degree above `truncate` when truncate >= 0.
    ZPoly mul(const ZPoly& o, int truncate = -1) const;
    ZPoly graded_part(int deg) const;

    bool operator==(const ZPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& var_names) const;

private:
    std::map<uint64_t, Int> terms_;
};

/// Binomial coefficients as exact integers.
Int binomial(long n, long k);

} // namespace chowtrace
