#include "chowtrace/rootweyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace chowtrace {

long RootSystem::inner(const std::vector<long>& u, const std::vector<long>& v) const {
    long s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s += u[i] * v[j] * half_norm[i] * cartan[i][j];
    return s;
}

long RootSystem::coroot_pairing(const std::vector<long>& v, const std::vector<long>& alpha) const {
    long num = 2 * inner(v, alpha);
    long den = inner(alpha, alpha);
    if (den == 0 || num % den != 0) throw Error("coroot pairing is not integral");
    return num / den;
}

long RootSystem::weight_coroot_pairing(int k, const std::vector<long>& alpha) const {
    // (omega_k, alpha_i) = delta_{ki} d_i, hence <omega_k, alpha^vee> = 2 c_k d_k / (alpha,alpha)
    long num = 2 * alpha[k] * half_norm[k];
    long den = inner(alpha, alpha);
    if (den == 0 || num % den != 0) throw Error("weight-coroot pairing is not integral");
    return num / den;
}

std::vector<long> RootSystem::apply_simple_reflection(int i, const std::vector<long>& v) const {
    long pairing = 0;
    for (int k = 0; k < rank; ++k) pairing += cartan[i][k] * v[k];
    std::vector<long> r = v;
    r[i] -= pairing;  // subtract <v, alpha_i^vee> alpha_i
    return r;
}

std::vector<long> RootSystem::apply_reflection(const std::vector<long>& alpha,
                                               const std::vector<long>& v) const {
    long c = coroot_pairing(v, alpha);
    std::vector<long> r = v;
    for (int k = 0; k < rank; ++k) r[k] -= c * alpha[k];
    return r;
}

int RootSystem::root_index(const std::vector<long>& r) const {
    for (int i = 0; i < static_cast<int>(roots.size()); ++i)
        if (roots[i] == r) return i;
    return -1;
}

bool RootSystem::is_positive(const std::vector<long>& r) const {
    for (long c : r)
        if (c != 0) return c > 0;
    return false;
}

namespace {

void chain_bond(std::vector<std::vector<long>>& a, int i, int j) {
    a[i][j] = -1;
    a[j][i] = -1;
}

struct TypeData {
    std::vector<std::vector<long>> cartan;
    std::vector<long> half_norm;
};

TypeData cartan_data(char type, int n) {
    TypeData t;
    t.cartan.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) t.cartan[i][i] = 2;
    t.half_norm.assign(n, 1);
    switch (type) {
    case 'A':
        if (n < 1) throw UnknownType("A rank must be >= 1");
        for (int i = 0; i + 1 < n; ++i) chain_bond(t.cartan, i, i + 1);
        break;
    case 'B':
        if (n < 2) throw UnknownType("B rank must be >= 2");
        for (int i = 0; i + 1 < n; ++i) chain_bond(t.cartan, i, i + 1);
        t.cartan[n - 1][n - 2] = -2;  // alpha_n short
        for (int i = 0; i + 1 < n; ++i) t.half_norm[i] = 2;
        break;
    case 'C':
        if (n < 2) throw UnknownType("C rank must be >= 2");
        for (int i = 0; i + 1 < n; ++i) chain_bond(t.cartan, i, i + 1);
        t.cartan[n - 2][n - 1] = -2;  // alpha_n long
        t.half_norm[n - 1] = 2;
        break;
    case 'D':
        if (n < 3) throw UnknownType("D rank must be >= 3");
        for (int i = 0; i + 1 < n - 1; ++i) chain_bond(t.cartan, i, i + 1);
        chain_bond(t.cartan, n - 3, n - 1);
        break;
    case 'G':
        if (n != 2) throw UnknownType("G rank must be 2");
        t.cartan = {{2, -3}, {-1, 2}};
        t.half_norm = {1, 3};
        break;
    case 'F':
        if (n != 4) throw UnknownType("F rank must be 4");
        t.cartan = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
        t.half_norm = {2, 2, 1, 1};
        break;
    default:
        throw UnknownType(std::string("unknown type ") + type);
    }
    // symmetry of the invariant form
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t.half_norm[i] * t.cartan[i][j] != t.half_norm[j] * t.cartan[j][i])
                throw Error("cartan table is not symmetrizable");
    return t;
}

} // namespace

RootSystem build_root_system(char type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    auto data = cartan_data(type, rank);
    rs.cartan = data.cartan;
    rs.half_norm = data.half_norm;

    // close the simple roots under simple reflections
    std::set<std::vector<long>> all;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<long> e(rank, 0);
        e[i] = 1;
        all.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            auto w = rs.apply_simple_reflection(i, v);
            if (all.insert(w).second) queue.push_back(w);
        }
    }
    std::vector<std::vector<long>> pos;
    for (auto& r : all)
        if (rs.is_positive(r)) pos.push_back(r);
    auto height = [](const std::vector<long>& r) {
        return std::accumulate(r.begin(), r.end(), 0L);
    };
    std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
        long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.num_positive = static_cast<int>(pos.size());
    rs.roots = pos;
    for (auto& r : pos) {
        std::vector<long> m(rank);
        for (int i = 0; i < rank; ++i) m[i] = -r[i];
        rs.roots.push_back(m);
    }
    rs.simple_index.resize(rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<long> e(rank, 0);
        e[i] = 1;
        rs.simple_index[i] = rs.root_index(e);
    }
    return rs;
}

RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2) throw UnknownType("bad type label '" + label + "'");
    char t = static_cast<char>(std::toupper(label[0]));
    int rank = std::stoi(label.substr(1));
    return build_root_system(t, rank);
}

std::vector<long> fundamental_degrees(char type, int rank) {
    std::vector<long> d;
    switch (type) {
    case 'A':
        for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
        break;
    case 'D':
        for (int i = 1; i + 1 <= rank; ++i) d.push_back(2 * i);
        d.push_back(rank);
        break;
    case 'G':
        d = {2, 6};
        break;
    case 'F':
        d = {2, 6, 8, 12};
        break;
    default:
        throw UnknownType(std::string("unknown type ") + type);
    }
    return d;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t bound) {
    WeylGroup g;
    g.rs_ = &rs;
    int nroots = static_cast<int>(rs.roots.size());
    int npos = rs.num_positive;

    // permutation of the root list induced by each simple reflection
    std::vector<std::vector<int16_t>> simple_perm(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        simple_perm[i].resize(nroots);
        for (int r = 0; r < nroots; ++r) {
            int idx = rs.root_index(rs.apply_simple_reflection(i, rs.roots[r]));
            if (idx < 0) throw Error("reflection does not permute the root set");
            simple_perm[i][r] = static_cast<int16_t>(idx);
        }
    }

    Element id;
    id.perm.resize(nroots);
    for (int r = 0; r < nroots; ++r) id.perm[r] = static_cast<int16_t>(r);
    id.length = 0;
    g.elements_.push_back(id);

    std::map<std::vector<int16_t>, int> seen;
    seen[id.perm] = 0;

    // breadth-first by length; canonical word = first discovery order
    std::size_t head = 0;
    while (head < g.elements_.size()) {
        int w = static_cast<int>(head++);
        for (int i = 0; i < rs.rank; ++i) {
            // l(w s_i) = l(w) + 1 iff w(alpha_i) > 0
            if (g.elements_[w].perm[rs.simple_index[i]] >= npos) continue;
            std::vector<int16_t> next(nroots);
            const auto& pw = g.elements_[w].perm;
            const auto& ps = simple_perm[i];
            for (int r = 0; r < nroots; ++r) next[r] = pw[ps[r]];
            auto it = seen.find(next);
            if (it != seen.end()) continue;
            if (g.elements_.size() >= bound)
                throw BoundExceeded("Weyl group larger than the configured bound");
            Element e;
            e.perm = std::move(next);
            e.word = g.elements_[w].word;
            e.word.push_back(static_cast<int8_t>(i));
            e.length = g.elements_[w].length + 1;
            seen[e.perm] = static_cast<int>(g.elements_.size());
            g.elements_.push_back(std::move(e));
        }
    }

    g.index_.reserve(g.elements_.size());
    for (int i = 0; i < static_cast<int>(g.elements_.size()); ++i)
        g.index_.push_back({g.elements_[i].perm, i});
    std::sort(g.index_.begin(), g.index_.end());

    g.longest_ = 0;
    for (int i = 0; i < static_cast<int>(g.elements_.size()); ++i)
        if (g.elements_[i].length > g.elements_[g.longest_].length) g.longest_ = i;

    g.reflections_.resize(npos);
    for (int r = 0; r < npos; ++r) {
        std::vector<int16_t> perm(nroots);
        for (int j = 0; j < nroots; ++j) {
            int idx = rs.root_index(rs.apply_reflection(rs.roots[r], rs.roots[j]));
            if (idx < 0) throw Error("root reflection does not permute the root set");
            perm[j] = static_cast<int16_t>(idx);
        }
        g.reflections_[r] = g.lookup(perm);
        if (g.reflections_[r] < 0) throw Error("root reflection missing from the Weyl group");
    }
    return g;
}

int WeylGroup::lookup(const std::vector<int16_t>& perm) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), perm,
                               [](const auto& a, const std::vector<int16_t>& key) { return a.first < key; });
    if (it == index_.end() || it->first != perm) return -1;
    return it->second;
}

int WeylGroup::index_of_perm(const std::vector<int16_t>& perm) const { return lookup(perm); }

int WeylGroup::reflection(int positive_root_index) const { return reflections_[positive_root_index]; }

bool WeylGroup::ascends(int w, int i) const {
    return elements_[w].perm[rs_->simple_index[i]] < rs_->num_positive;
}

int WeylGroup::multiply_simple(int w, int i) const {
    // compose with the reflection permutation: (w s)(r) = w(s(r))
    const auto& pw = elements_[w].perm;
    int nroots = static_cast<int>(pw.size());
    std::vector<int16_t> next(nroots);
    for (int r = 0; r < nroots; ++r) {
        auto sr = rs_->apply_simple_reflection(i, rs_->roots[r]);
        next[r] = pw[rs_->root_index(sr)];
    }
    int idx = lookup(next);
    if (idx < 0) throw Error("product left the enumerated group");
    return idx;
}

int WeylGroup::multiply(int w, int v) const {
    const auto& pw = elements_[w].perm;
    const auto& pv = elements_[v].perm;
    std::vector<int16_t> next(pw.size());
    for (std::size_t r = 0; r < pw.size(); ++r) next[r] = pw[pv[r]];
    int idx = lookup(next);
    if (idx < 0) throw Error("product left the enumerated group");
    return idx;
}

int WeylGroup::inverse(int w) const {
    const auto& pw = elements_[w].perm;
    std::vector<int16_t> inv(pw.size());
    for (std::size_t r = 0; r < pw.size(); ++r) inv[pw[r]] = static_cast<int16_t>(r);
    int idx = lookup(inv);
    if (idx < 0) throw Error("inverse left the enumerated group");
    return idx;
}

int ParabolicQuotient::rep_position(int weyl_index) const {
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
        if (reps[i] == weyl_index) return i;
    return -1;
}

ParabolicQuotient minimal_coset_reps(const RootSystem& rs, const WeylGroup& weyl,
                                     std::vector<int> marked) {
    std::sort(marked.begin(), marked.end());
    for (int i : marked)
        if (i < 0 || i >= rs.rank) throw Error("marked simple root out of range");
    ParabolicQuotient q;
    q.rs = &rs;
    q.weyl = &weyl;
    q.marked = marked;
    for (int i = 0; i < rs.rank; ++i)
        if (!std::binary_search(marked.begin(), marked.end(), i)) q.levi.push_back(i);

    // w is the minimal element of w W_P iff it keeps every Levi simple root positive
    for (int w = 0; w < static_cast<int>(weyl.size()); ++w) {
        bool minimal = true;
        for (int i : q.levi)
            if (!weyl.ascends(w, i)) {
                minimal = false;
                break;
            }
        if (minimal) q.reps.push_back(w);
    }
    std::sort(q.reps.begin(), q.reps.end(), [&](int a, int b) {
        if (weyl.length(a) != weyl.length(b)) return weyl.length(a) < weyl.length(b);
        return weyl.element(a).word < weyl.element(b).word;
    });
    q.dim = q.reps.empty() ? 0 : weyl.length(q.reps.back());
    q.length_histogram.assign(q.dim + 1, 0);
    for (int w : q.reps) q.length_histogram[weyl.length(w)] += 1;
    return q;
}

std::vector<long> poincare_polynomial(const ParabolicQuotient& q) { return q.length_histogram; }

std::vector<long> poincare_quotient(const std::vector<long>& total, const std::vector<long>& factor) {
    if (factor.empty() || factor[0] == 0) return {};
    if (total.size() < factor.size()) return {};
    std::vector<long> rem = total;
    std::vector<long> quot(total.size() - factor.size() + 1, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (rem[i] % factor[0] != 0) return {};
        long c = rem[i] / factor[0];
        if (c < 0) return {};
        quot[i] = c;
        for (std::size_t j = 0; j < factor.size(); ++j) rem[i + j] -= c * factor[j];
    }
    for (long r : rem)
        if (r != 0) return {};
    return quot;
}

} // namespace chowtrace
