#include "chowtrace/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace chowtrace {

bool TomlSection::has(const std::string& key) const {
    return strings.count(key) || integers.count(key) || string_arrays.count(key)
           || integer_arrays.count(key);
}

std::string TomlSection::get_string(const std::string& key) const {
    auto it = strings.find(key);
    if (it == strings.end()) throw SpecParseError("missing string key '" + key + "'");
    return it->second;
}

long TomlSection::get_integer(const std::string& key) const {
    auto it = integers.find(key);
    if (it == integers.end()) throw SpecParseError("missing integer key '" + key + "'");
    return it->second;
}

std::vector<std::string> TomlSection::get_string_array(const std::string& key) const {
    auto it = string_arrays.find(key);
    if (it == string_arrays.end()) throw SpecParseError("missing array key '" + key + "'");
    return it->second;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_array_items(const std::string& inner) {
    std::vector<std::string> items;
    std::string cur;
    bool in_string = false;
    for (char c : inner) {
        if (c == '"') {
            in_string = !in_string;
            cur += c;
        } else if (c == ',' && !in_string) {
            items.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) items.push_back(strip(cur));
    return items;
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    throw SpecParseError("expected a quoted string, found " + s);
}

bool integer_like(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

std::map<std::string, TomlSection> parse_toml(const std::string& text) {
    std::map<std::string, TomlSection> out;
    std::string section = "";
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw SpecParseError("bad section header: " + line);
            section = strip(line.substr(1, line.size() - 2));
            out[section];
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw SpecParseError("expected key = value: " + line);
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        auto& sec = out[section];
        if (val.empty()) throw SpecParseError("empty value for " + key);
        if (val.front() == '[') {
            if (val.back() != ']') throw SpecParseError("unterminated array for " + key);
            auto items = split_array_items(val.substr(1, val.size() - 2));
            bool all_int = !items.empty();
            for (auto& item : items) all_int = all_int && integer_like(item);
            if (all_int) {
                std::vector<long> nums;
                for (auto& item : items) nums.push_back(std::stol(item));
                sec.integer_arrays[key] = nums;
            } else {
                std::vector<std::string> strs;
                for (auto& item : items) strs.push_back(unquote(item));
                sec.string_arrays[key] = strs;
            }
        } else if (val.front() == '"') {
            sec.strings[key] = unquote(val);
        } else if (integer_like(val)) {
            sec.integers[key] = std::stol(val);
        } else {
            throw SpecParseError("unsupported value for " + key + ": " + val);
        }
    }
    return out;
}

namespace {

using Exps = std::vector<int>;

struct Rewriter {
    std::vector<std::string> gen_names;
    std::vector<int> gen_codims;
    struct Rule {
        Exps lm;
        std::vector<std::pair<Int, Exps>> rhs;
        std::string text;
    };
    std::vector<Rule> rules;

    int codim_of(const Exps& e) const {
        int c = 0;
        for (std::size_t i = 0; i < e.size(); ++i) c += e[i] * gen_codims[i];
        return c;
    }

    int gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < gen_names.size(); ++i)
            if (gen_names[i] == name) return static_cast<int>(i);
        throw SpecParseError("unknown generator '" + name + "'");
    }

    Exps parse_monomial(const std::string& text) const {
        Exps e(gen_names.size(), 0);
        std::string s = strip(text);
        if (s == "1") return e;
        std::istringstream in(s);
        std::string factor;
        while (std::getline(in, factor, '*')) {
            factor = strip(factor);
            auto caret = factor.find('^');
            std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
            int exp = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
            e[static_cast<std::size_t>(gen_index(strip(name)))] += exp;
        }
        return e;
    }

    /// "3*h^2*l - 2*l^2 + 1" into coefficient/monomial pairs.
    std::vector<std::pair<Int, Exps>> parse_poly(const std::string& text) const {
        std::vector<std::pair<Int, Exps>> out;
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty() || s == "0") return out;
        std::size_t i = 0;
        while (i < s.size()) {
            Int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                if (s[i] == '-') sign = -1;
                ++i;
            }
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
            Int coeff = num.empty() ? Int(1) : Int(num);
            if (i < s.size() && s[i] == '*') ++i;
            std::string mon;
            while (i < s.size() && s[i] != '+' && s[i] != '-') mon += s[i++];
            Exps e = mon.empty() ? Exps(gen_names.size(), 0) : parse_monomial(mon);
            out.push_back({sign * coeff, e});
        }
        return out;
    }

    static bool divides(const Exps& lm, const Exps& m) {
        for (std::size_t i = 0; i < lm.size(); ++i)
            if (lm[i] > m[i]) return false;
        return true;
    }

    /// One rewrite step of monomial m by rule r (which must divide m).
    std::map<Exps, Int> step(const Exps& m, const Rule& r) const {
        std::map<Exps, Int> out;
        Exps q = m;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= r.lm[i];
        for (auto& [c, e] : r.rhs) {
            Exps t = q;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += e[i];
            out[t] += c;
        }
        return out;
    }

    const Rule* reducer(const Exps& m) const {
        for (auto& r : rules)
            if (divides(r.lm, m)) return &r;
        return nullptr;
    }

    std::map<Exps, Int> normal_form(std::map<Exps, Int> v, int truncate) const {
        while (true) {
            const Rule* rule = nullptr;
            Exps target;
            Int coeff;
            for (auto& [m, c] : v) {
                if (c == 0) continue;
                if (codim_of(m) > truncate) {
                    rule = nullptr;
                    target = m;
                    coeff = c;
                    goto do_truncate;
                }
                if (auto* r = reducer(m)) {
                    rule = r;
                    target = m;
                    coeff = c;
                    break;
                }
            }
            if (!rule) {
                // drop zero terms and anything past the truncation codimension
                for (auto it = v.begin(); it != v.end();) {
                    if (it->second == 0 || codim_of(it->first) > truncate)
                        it = v.erase(it);
                    else
                        ++it;
                }
                return v;
            }
        do_truncate:
            if (!rule) {
                v.erase(target);
                continue;
            }
            v.erase(target);
            for (auto& [m2, c2] : step(target, *rule)) {
                v[m2] += coeff * c2;
                if (v[m2] == 0) v.erase(m2);
            }
        }
    }

    std::string monomial_name(const Exps& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += ".";
            s += gen_names[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

} // namespace

GradedAlgebra::Ptr build_presentation_algebra(const std::string& id, int dim,
                                              const std::vector<std::string>& generators,
                                              const std::vector<std::string>& relations) {
    Rewriter rw;
    for (auto& g : generators) {
        auto colon = g.find(':');
        if (colon == std::string::npos)
            throw SpecParseError("generator must be 'name:codim', found " + g);
        rw.gen_names.push_back(strip(g.substr(0, colon)));
        int c = std::stoi(g.substr(colon + 1));
        if (c < 1) throw SpecParseError("generator codim must be positive");
        rw.gen_codims.push_back(c);
    }
    for (auto& r : relations) {
        auto arrow = r.find("->");
        if (arrow == std::string::npos)
            throw SpecParseError("relation must be 'monomial -> element', found " + r);
        Rewriter::Rule rule;
        rule.lm = rw.parse_monomial(r.substr(0, arrow));
        rule.rhs = rw.parse_poly(r.substr(arrow + 2));
        rule.text = r;
        int lm_codim = rw.codim_of(rule.lm);
        for (auto& [c, e] : rule.rhs) {
            if (rw.codim_of(e) != lm_codim)
                throw SpecParseError("relation is not graded: " + r);
            if (!(e < rule.lm))
                throw SpecParseError("rewrite must decrease the monomial order: " + r);
        }
        rw.rules.push_back(std::move(rule));
    }

    // enumerate monomials of codim <= dim; keep the irreducible as the basis
    std::vector<Exps> all;
    Exps cur(rw.gen_names.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int used) {
        if (idx == cur.size()) {
            all.push_back(cur);
            return;
        }
        for (int e = 0; used + e * rw.gen_codims[idx] <= dim; ++e) {
            cur[idx] = e;
            rec(idx + 1, used + e * rw.gen_codims[idx]);
        }
        cur[idx] = 0;
    };
    rec(0, 0);
    std::sort(all.begin(), all.end(), [&](const Exps& a, const Exps& b) {
        int ca = rw.codim_of(a), cb = rw.codim_of(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<Exps> basis;
    for (auto& m : all)
        if (!rw.reducer(m)) basis.push_back(m);

    // confluence smoke test: every monomial reducible by two rules reduces to
    // the same normal form through either first step
    for (auto& m : all) {
        std::vector<const Rewriter::Rule*> reducers;
        for (auto& r : rw.rules)
            if (Rewriter::divides(r.lm, m)) reducers.push_back(&r);
        if (reducers.size() < 2) continue;
        std::map<Exps, Int> first;
        bool have_first = false;
        for (auto* r : reducers) {
            auto v = rw.normal_form(rw.step(m, *r), dim);
            if (!have_first) {
                first = v;
                have_first = true;
            } else if (v != first) {
                throw SpecParseError("relations are not confluent at monomial " + rw.monomial_name(m));
            }
        }
    }

    GradedAlgebra::Builder builder(id, dim);
    std::map<Exps, int> index_of;
    for (auto& m : basis) {
        index_of[m] = builder.add_basis(rw.monomial_name(m), rw.codim_of(m));
    }
    builder.set_unit(index_of.at(Exps(rw.gen_names.size(), 0)));
    // the degree functional needs a rank-one top component
    std::vector<Exps> top;
    for (auto& m : basis)
        if (rw.codim_of(m) == dim) top.push_back(m);
    if (top.size() != 1)
        throw SpecParseError("presentation needs exactly one basis monomial in codim "
                             + std::to_string(dim) + ", found " + std::to_string(top.size()));
    builder.set_point(index_of.at(top[0]));

    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            int total = rw.codim_of(basis[i]) + rw.codim_of(basis[j]);
            if (total > dim) continue;
            Exps m = basis[i];
            for (std::size_t k = 0; k < m.size(); ++k) m[k] += basis[j][k];
            auto nf = rw.normal_form({{m, Int(1)}}, dim);
            GradedAlgebra::SparseVec out;
            for (auto& [mono, c] : nf) {
                auto it = index_of.find(mono);
                if (it == index_of.end())
                    throw SpecParseError("normal form left the basis at " + rw.monomial_name(mono));
                out.push_back({it->second, Coeff::integer(c)});
            }
            builder.set_product(static_cast<int>(i), static_cast<int>(j), std::move(out));
        }
    }
    auto alg = builder.build();
    auto bad = check_multiplication_axioms(alg);
    if (!bad.empty()) throw SpecParseError("presentation algebra is not associative: " + bad[0]);
    return alg;
}

VarietyPtr load_variety_spec(const std::string& text, const Catalog& catalog) {
    auto doc = parse_toml(text);
    if (!doc.count("variety") || !doc.count("algebra"))
        throw SpecParseError("variety files need [variety] and [algebra] sections");
    auto& var = doc.at("variety");
    auto& alg = doc.at("algebra");
    std::string mode = alg.get_string("mode");

    if (mode == "builtin") {
        auto v = catalog.builtin(alg.get_string("name"));
        if (var.has("dim") && var.get_integer("dim") != v->dim)
            throw SpecParseError("declared dim disagrees with the builtin");
        return v;
    }
    if (mode == "gp") {
        std::string group = alg.get_string("group");
        long parabolic = alg.get_integer("parabolic");
        return catalog.builtin(group + "/P" + std::to_string(parabolic));
    }
    if (mode == "product") {
        auto factors = alg.get_string_array("factors");
        if (factors.empty()) throw SpecParseError("product needs factors");
        auto v = catalog.builtin(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            v = catalog.product(v, catalog.builtin(factors[i]));
        return v;
    }
    if (mode == "complete_intersection") {
        auto ambient = catalog.builtin(alg.get_string("ambient"));
        std::vector<RingElement> divisors;
        for (auto& d : alg.get_string_array("divisors"))
            divisors.push_back(parse_element(ambient->chow, d));
        return catalog.subvariety_by_divisors(ambient, divisors);
    }
    if (mode == "presentation") {
        std::string name = var.get_string("name");
        int dim = static_cast<int>(var.get_integer("dim"));
        auto ring = build_presentation_algebra(name, dim, alg.get_string_array("generators"),
                                               alg.get_string_array("relations"));
        auto v = std::make_shared<Variety>();
        v->name = name;
        v->dim = dim;
        v->provenance = Provenance::custom;
        v->chow = v->carrier = ring;
        if (doc.count("tangent")) {
            auto& tan = doc.at("tangent");
            if (tan.has("roots")) {
                std::vector<RingElement> pos, negv;
                for (auto& r : tan.get_string_array("roots")) pos.push_back(parse_element(ring, r));
                if (tan.has("negative_roots"))
                    for (auto& r : tan.get_string_array("negative_roots"))
                        negv.push_back(parse_element(ring, r));
                v->tangent = make_root_bundle(ring, pos, negv, dim);
            } else if (tan.has("chern")) {
                RingElement series = unit_element(ring);
                for (auto& piece : tan.get_string_array("chern"))
                    series = add(series, parse_element(ring, piece));
                v->tangent = make_series_bundle(ring, series, dim);
            }
        }
        return v;
    }
    throw SpecParseError("unknown algebra mode '" + mode + "'");
}

VarietyPtr load_variety_spec_file(const std::string& path, const Catalog& catalog) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_variety_spec(text, catalog);
}

} // namespace chowtrace
