#include "chowtrace/steenrod.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace chowtrace {

std::string table_status_name(TableStatus s) {
    switch (s) {
    case TableStatus::closed_form: return "closed-form";
    case TableStatus::fixed_input: return "fixed-input";
    case TableStatus::solved_unique: return "solved-unique";
    case TableStatus::solution_space: return "solution-space";
    }
    return "?";
}

namespace {

long norm_mod(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::vector<long> coords_of(const RingElement& x, const std::vector<int>& comp, long p) {
    std::vector<long> v(comp.size(), 0);
    for (auto& [i, c] : x.coeffs()) {
        auto it = std::find(comp.begin(), comp.end(), i);
        if (it == comp.end()) throw Error("element leaves its graded component");
        v[static_cast<std::size_t>(it - comp.begin())] = c.numerator().convert_to<long>();
    }
    return v;
}

/// Solve A x = b over Z/p; A row-major.
std::optional<std::vector<long>> solve_mod_p(std::vector<std::vector<long>> a, std::vector<long> b,
                                             long p) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (norm_mod(a[i][c], p) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        long inv = Coeff::residue(Int(a[r][c]), p).inverse().numerator().convert_to<long>();
        for (int j = c; j < cols; ++j) a[r][j] = norm_mod(a[r][j] * inv, p);
        b[r] = norm_mod(b[r] * inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = norm_mod(a[i][c], p);
            if (!f) continue;
            for (int j = c; j < cols; ++j) a[i][j] = norm_mod(a[i][j] - f * a[r][j], p);
            b[i] = norm_mod(b[i] - f * b[r], p);
        }
        pivot_of_col[c] = r;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (norm_mod(b[i], p) != 0) return std::nullopt;
    std::vector<long> x(cols, 0);
    for (int c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = b[pivot_of_col[c]];
    return x;
}

/// Basis of the null space of A over Z/p.
std::vector<std::vector<long>> kernel_mod_p(std::vector<std::vector<long>> a, long p) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (norm_mod(a[i][c], p) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[r]);
        long inv = Coeff::residue(Int(a[r][c]), p).inverse().numerator().convert_to<long>();
        for (int j = c; j < cols; ++j) a[r][j] = norm_mod(a[r][j] * inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = norm_mod(a[i][c], p);
            if (!f) continue;
            for (int j = c; j < cols; ++j) a[i][j] = norm_mod(a[i][j] - f * a[r][j], p);
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<long>> kernel;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<long> v(cols, 0);
        v[c] = 1;
        for (int c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = norm_mod(-a[pivot_of_col[c2]][c], p);
        kernel.push_back(v);
    }
    return kernel;
}

struct Monomial {
    std::vector<int> exps;
    int codim = 0;
    RingElement value;
};

/// Shared expression/relation context of a generating set.
struct GenContext {
    GradedAlgebra::Ptr alg;
    long p = 2;
    std::vector<RingElement> gens;
    std::vector<int> gen_codim;
    std::vector<Monomial> monomials;  // sorted by (codim, lex exps)
    std::vector<std::vector<int>> monomials_by_codim;
    // expression of each basis element over monomials of its codim; empty
    // optional when the generators do not span (partial tables)
    std::vector<std::optional<std::vector<std::pair<int, long>>>> expressions;
    // kernel vectors: (codim, coefficients over that codim's monomial list)
    std::vector<std::pair<int, std::vector<long>>> relations;
};

void enumerate_monomials(const GradedAlgebra::Ptr& alg, const std::vector<RingElement>& gens,
                         const std::vector<int>& codims, GenContext& ctx) {
    int n = alg->dim();
    std::vector<Monomial> out;
    std::vector<int> exps(gens.size(), 0);
    // lexicographic recursion over exponents with codimension budget
    std::function<void(std::size_t, int, RingElement)> rec = [&](std::size_t idx, int used,
                                                                 RingElement value) {
        if (idx == gens.size()) {
            out.push_back({exps, used, value});
            return;
        }
        RingElement acc = value;
        for (int e = 0;; ++e) {
            if (used + e * codims[idx] > n) break;
            exps[idx] = e;
            if (e > 0) acc = multiply(acc, gens[idx]);
            rec(idx + 1, used + e * codims[idx], acc);
        }
        exps[idx] = 0;
    };
    rec(0, 0, unit_element(alg));
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return a.exps < b.exps;
    });
    ctx.monomials = std::move(out);
    ctx.monomials_by_codim.assign(static_cast<std::size_t>(n) + 1, {});
    for (int m = 0; m < static_cast<int>(ctx.monomials.size()); ++m)
        ctx.monomials_by_codim[ctx.monomials[m].codim].push_back(m);
}

GenContext build_context(const GradedAlgebra::Ptr& alg, std::vector<RingElement> gens) {
    if (alg->domain() != Domain::mod_p)
        throw DomainMismatch("Steenrod tables live over mod-p algebras");
    GenContext ctx;
    ctx.alg = alg;
    ctx.p = alg->modulus();
    ctx.gens = std::move(gens);
    for (auto& g : ctx.gens) {
        int c = 0;
        if (!g.is_homogeneous(&c) || c < 1)
            throw Error("Steenrod generators must be homogeneous of positive codimension");
        ctx.gen_codim.push_back(c);
    }
    enumerate_monomials(alg, ctx.gens, ctx.gen_codim, ctx);

    ctx.expressions.assign(alg->rank(), std::nullopt);
    ctx.expressions[alg->unit_index()] = std::vector<std::pair<int, long>>{{0, 1}};
    for (int c = 1; c <= alg->dim(); ++c) {
        const auto& comp = alg->component(c);
        if (comp.empty()) continue;
        const auto& ms = ctx.monomials_by_codim[c];
        std::vector<std::vector<long>> a(comp.size(), std::vector<long>(ms.size(), 0));
        for (std::size_t j = 0; j < ms.size(); ++j) {
            auto col = coords_of(ctx.monomials[ms[j]].value, comp, ctx.p);
            for (std::size_t r = 0; r < comp.size(); ++r) a[r][j] = col[r];
        }
        for (std::size_t r = 0; r < comp.size(); ++r) {
            std::vector<long> b(comp.size(), 0);
            b[r] = 1;
            auto sol = solve_mod_p(a, b, ctx.p);
            if (!sol) continue;
            std::vector<std::pair<int, long>> expr;
            for (std::size_t j = 0; j < ms.size(); ++j)
                if ((*sol)[j]) expr.push_back({ms[j], (*sol)[j]});
            ctx.expressions[comp[r]] = std::move(expr);
        }
        for (auto& v : kernel_mod_p(a, ctx.p)) ctx.relations.push_back({c, v});
    }
    return ctx;
}

RingElement eval_images_total(const GenContext& ctx, const std::vector<RingElement>& gen_totals,
                              const Monomial& mon) {
    RingElement acc = unit_element(ctx.alg);
    for (std::size_t g = 0; g < ctx.gens.size(); ++g)
        for (int e = 0; e < mon.exps[g]; ++e) acc = multiply(acc, gen_totals[g]);
    return acc;
}

struct ActionData {
    std::vector<RingElement> gen_totals;
    std::vector<RingElement> mono_totals;  // aligned with ctx.monomials
    std::vector<std::optional<RingElement>> basis_totals;
};

ActionData extend_action(const GenContext& ctx, const std::vector<SteenrodGenerator>& gens) {
    ActionData d;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        RingElement total = gens[g].cls;
        for (auto& img : gens[g].images) total = add(total, img);
        d.gen_totals.push_back(total);
    }
    d.mono_totals.reserve(ctx.monomials.size());
    // exponent-incremental products: find a predecessor monomial
    std::map<std::vector<int>, int> index_of;
    for (int m = 0; m < static_cast<int>(ctx.monomials.size()); ++m) {
        const auto& mon = ctx.monomials[m];
        int lowered = -1, which = -1;
        for (std::size_t g = 0; g < mon.exps.size(); ++g)
            if (mon.exps[g] > 0) {
                auto prev = mon.exps;
                prev[static_cast<std::size_t>(g)] -= 1;
                auto it = index_of.find(prev);
                if (it != index_of.end()) {
                    lowered = it->second;
                    which = static_cast<int>(g);
                    break;
                }
            }
        if (lowered < 0) {
            d.mono_totals.push_back(eval_images_total(ctx, d.gen_totals, mon));
        } else {
            d.mono_totals.push_back(multiply(d.mono_totals[lowered], d.gen_totals[which]));
        }
        index_of[mon.exps] = m;
    }
    d.basis_totals.assign(ctx.alg->rank(), std::nullopt);
    for (int b = 0; b < ctx.alg->rank(); ++b) {
        if (!ctx.expressions[b]) continue;
        RingElement acc = zero_element(ctx.alg);
        for (auto& [m, c] : *ctx.expressions[b])
            acc = add(acc, scale(Coeff::residue(Int(c), ctx.p), d.mono_totals[m]));
        d.basis_totals[b] = acc;
    }
    return d;
}

RingElement total_of(const GenContext& ctx, const ActionData& d, const RingElement& x) {
    if (x.algebra().get() != ctx.alg.get())
        throw AlgebraMismatch("element does not live in the table's algebra");
    RingElement acc = zero_element(ctx.alg);
    for (auto& [b, c] : x.coeffs()) {
        if (!d.basis_totals[b])
            throw NotInGeneratedSubring("basis class " + ctx.alg->basis()[b].name
                                        + " is not in the generated subring");
        acc = add(acc, scale(c, *d.basis_totals[b]));
    }
    return acc;
}

RingElement op_of(const GenContext& ctx, const ActionData& d, long i, const RingElement& x) {
    RingElement acc = zero_element(ctx.alg);
    for (auto& [b, c] : x.coeffs()) {
        if (!d.basis_totals[b])
            throw NotInGeneratedSubring("basis class " + ctx.alg->basis()[b].name
                                        + " is not in the generated subring");
        int target = ctx.alg->basis()[b].codim + static_cast<int>(i * (ctx.p - 1));
        acc = add(acc, scale(c, graded_part(*d.basis_totals[b], target)));
    }
    return acc;
}

long adem_coefficient(long p, long a, long b, long t) {
    Int c = binomial((p - 1) * (b - t) - 1, a - p * t);
    if ((a + t) % 2 == 1) c = -c;
    Int m = c % p;
    if (m < 0) m += p;
    return m.convert_to<long>();
}

std::vector<std::string> validate_with_context(const GenContext& ctx,
                                               const std::vector<SteenrodGenerator>& gens,
                                               const ValidateOptions& opts) {
    std::vector<std::string> bad;
    auto done = [&]() { return opts.stop_at_first && !bad.empty(); };
    long p = ctx.p;
    const auto& alg = ctx.alg;
    int n = alg->dim();

    // generator image ranges and grading
    for (auto& g : gens) {
        if (static_cast<int>(g.images.size()) != g.codim) {
            bad.push_back("generator " + g.name + " must store images for i = 1.." + std::to_string(g.codim));
            if (done()) return bad;
            continue;
        }
        for (int i = 1; i <= g.codim; ++i) {
            const auto& img = g.images[i - 1];
            int c = 0;
            if (!img.is_homogeneous(&c) || (!img.is_zero() && c != g.codim + i * static_cast<int>(p - 1))) {
                bad.push_back("image S^" + std::to_string(i) + "(" + g.name + ") is not graded correctly");
                if (done()) return bad;
            }
        }
        // top power: S^{codim}(g) = g^p
        if (g.images[g.codim - 1] != power(g.cls, static_cast<unsigned long>(p))) {
            bad.push_back("instability violation: S^" + std::to_string(g.codim) + "(" + g.name
                          + ") != " + g.name + "^p");
            if (done()) return bad;
        }
    }

    ActionData d = extend_action(ctx, gens);

    // relation compatibility: the multiplicative extension respects every
    // linear dependence among generator monomials
    for (auto& [codim, vec] : ctx.relations) {
        RingElement acc = zero_element(alg);
        const auto& ms = ctx.monomials_by_codim[codim];
        for (std::size_t j = 0; j < ms.size(); ++j)
            if (vec[j]) acc = add(acc, scale(Coeff::residue(Int(vec[j]), p), d.mono_totals[ms[j]]));
        if (!acc.is_zero()) {
            bad.push_back("Cartan extension breaks a defining relation in codim "
                          + std::to_string(codim));
            if (done()) return bad;
        }
    }

    // instability and top power on every basis element
    for (int b = 0; b < alg->rank(); ++b) {
        if (!d.basis_totals[b]) continue;
        int c = alg->basis()[b].codim;
        const auto& tot = *d.basis_totals[b];
        for (auto& [k, coeff] : tot.coeffs()) {
            int kc = alg->basis()[k].codim;
            if ((kc - c) % (p - 1) != 0) {
                bad.push_back("operation output off the p-power grading on " + alg->basis()[b].name);
                if (done()) return bad;
            }
        }
        long top_i = c;
        RingElement top = graded_part(tot, c + static_cast<int>(top_i * (p - 1)));
        if (top != power(basis_element(alg, b), static_cast<unsigned long>(p))) {
            bad.push_back("top power S^codim != x^p on basis " + alg->basis()[b].name);
            if (done()) return bad;
        }
        for (long i = top_i + 1; c + i * (p - 1) <= n; ++i) {
            if (!graded_part(tot, c + static_cast<int>(i * (p - 1))).is_zero()) {
                bad.push_back("instability: S^" + std::to_string(i) + " nonzero past the codimension on "
                              + alg->basis()[b].name);
                if (done()) return bad;
            }
        }
    }

    // Cartan on basis pairs (redundant with relations; kept as a cross-check)
    for (int i = 0; i < alg->rank() && !done(); ++i) {
        if (!d.basis_totals[i]) continue;
        for (int j = i; j < alg->rank(); ++j) {
            if (!d.basis_totals[j]) continue;
            auto product = multiply(basis_element(alg, i), basis_element(alg, j));
            bool expressible = true;
            for (auto& [k, c] : product.coeffs())
                if (!d.basis_totals[k]) expressible = false;
            if (!expressible) continue;
            if (total_of(ctx, d, product)
                != multiply(*d.basis_totals[i], *d.basis_totals[j])) {
                bad.push_back("Cartan formula fails on a basis pair (" + alg->basis()[i].name + ", "
                              + alg->basis()[j].name + ")");
                if (done()) return bad;
            }
        }
    }

    // Adem relations on every basis element
    for (long b = 1; (1 + b) * (p - 1) <= n && !done(); ++b) {
        for (long a = 1; a < p * b && (a + b) * (p - 1) <= n && !done(); ++a) {
            for (int idx = 0; idx < alg->rank(); ++idx) {
                if (!d.basis_totals[idx]) continue;
                auto x = basis_element(alg, idx);
                RingElement lhs = op_of(ctx, d, a, op_of(ctx, d, b, x));
                RingElement rhs = zero_element(alg);
                for (long t = 0; p * t <= a; ++t) {
                    long coef = adem_coefficient(p, a, b, t);
                    if (!coef) continue;
                    RingElement inner = (t == 0) ? x : op_of(ctx, d, t, x);
                    rhs = add(rhs, scale(Coeff::residue(Int(coef), p),
                                         op_of(ctx, d, a + b - t, inner)));
                }
                if (lhs != rhs) {
                    bad.push_back("Adem relation S^" + std::to_string(a) + " S^" + std::to_string(b)
                                  + " fails on " + alg->basis()[idx].name);
                    if (done()) return bad;
                    break;
                }
            }
        }
    }

    // pushforward (Wu-type) axiom: deg(S(x) * twist) = deg of the top part
    if (opts.wu_twist) {
        for (int b = 0; b < alg->rank(); ++b) {
            if (!d.basis_totals[b]) continue;
            auto lhs = degree(multiply(*d.basis_totals[b], *opts.wu_twist));
            auto rhs = (alg->basis()[b].codim == n) ? degree(basis_element(alg, b))
                                                    : alg->zero_coeff();
            if (lhs != rhs) {
                bad.push_back("pushforward degree axiom fails on " + alg->basis()[b].name);
                if (done()) return bad;
            }
        }
    }

    return bad;
}

std::vector<SteenrodGenerator> forced_generator_shell(const GenContext& ctx) {
    std::vector<SteenrodGenerator> gens;
    for (std::size_t g = 0; g < ctx.gens.size(); ++g) {
        SteenrodGenerator sg;
        int b = ctx.gens[g].coeffs().begin()->first;
        sg.name = ctx.alg->basis()[b].name;
        sg.cls = ctx.gens[g];
        sg.codim = ctx.gen_codim[g];
        sg.images.assign(static_cast<std::size_t>(sg.codim), zero_element(ctx.alg));
        sg.images[static_cast<std::size_t>(sg.codim) - 1] =
            power(sg.cls, static_cast<unsigned long>(ctx.p));
        gens.push_back(std::move(sg));
    }
    return gens;
}

} // namespace

SteenrodAction::SteenrodAction(const SteenrodTable& table) : table_(table) {
    std::vector<RingElement> gen_classes;
    for (auto& g : table.generators) gen_classes.push_back(g.cls);
    auto ctx = build_context(table.algebra, gen_classes);
    auto d = extend_action(ctx, table.generators);
    on_basis_.reserve(table.algebra->rank());
    for (int b = 0; b < table.algebra->rank(); ++b) {
        if (!d.basis_totals[b])
            throw NotInGeneratedSubring("table generators do not span " + table.algebra->id());
        on_basis_.push_back(*d.basis_totals[b]);
    }
}

RingElement SteenrodAction::total(const RingElement& x) const {
    if (x.algebra().get() != table_.algebra.get())
        throw AlgebraMismatch("element does not live in the table's algebra");
    RingElement acc = zero_element(table_.algebra);
    for (auto& [b, c] : x.coeffs()) acc = add(acc, scale(c, on_basis_[b]));
    return acc;
}

RingElement SteenrodAction::op(long i, const RingElement& x) const {
    if (i == 0) return x;
    RingElement acc = zero_element(table_.algebra);
    for (auto& [b, c] : x.coeffs()) {
        int target = table_.algebra->basis()[b].codim + static_cast<int>(i * (table_.p - 1));
        acc = add(acc, scale(c, graded_part(on_basis_[b], target)));
    }
    return acc;
}

std::vector<RingElement> discover_generators(const GradedAlgebra::Ptr& a) {
    if (a->domain() != Domain::mod_p)
        throw DomainMismatch("generator discovery expects a mod-p algebra");
    long p = a->modulus();
    std::vector<RingElement> gens;
    std::vector<int> codims;
    for (int c = 1; c <= a->dim(); ++c) {
        const auto& comp = a->component(c);
        if (comp.empty()) continue;
        while (true) {
            GenContext probe;
            probe.alg = a;
            probe.p = p;
            probe.gens = gens;
            probe.gen_codim = codims;
            enumerate_monomials(a, gens, codims, probe);
            const auto& ms = probe.monomials_by_codim[c];
            std::vector<std::vector<long>> mat(comp.size(), std::vector<long>(ms.size(), 0));
            for (std::size_t j = 0; j < ms.size(); ++j) {
                auto col = coords_of(probe.monomials[ms[j]].value, comp, p);
                for (std::size_t r = 0; r < comp.size(); ++r) mat[r][j] = col[r];
            }
            int missing = -1;
            for (std::size_t r = 0; r < comp.size(); ++r) {
                std::vector<long> b(comp.size(), 0);
                b[r] = 1;
                if (!solve_mod_p(mat, b, p)) {
                    missing = comp[r];
                    break;
                }
            }
            if (missing < 0) break;
            gens.push_back(basis_element(a, missing));
            codims.push_back(c);
        }
    }
    return gens;
}

SteenrodTable quadric_closed_form_table(int n, const GradedAlgebra::Ptr& mod2) {
    if (n % 2 == 0) throw UnknownVariety("closed form is for split odd quadrics");
    int m = (n - 1) / 2;
    SteenrodTable t;
    t.p = 2;
    t.algebra = mod2;
    t.status = TableStatus::closed_form;

    SteenrodGenerator h;
    h.name = "h";
    h.cls = basis_element(mod2, "h");
    h.codim = 1;
    h.images = {multiply(h.cls, h.cls)};
    t.generators.push_back(h);

    SteenrodGenerator lm;
    lm.name = "l" + std::to_string(m);
    lm.cls = basis_element(mod2, lm.name);
    lm.codim = n - m;
    for (int i = 1; i <= lm.codim; ++i) {
        Int c = binomial(n + 1 - m, i);
        RingElement img = zero_element(mod2);
        if (m - i >= 0 && c % 2 != 0) img = basis_element(mod2, "l" + std::to_string(m - i));
        lm.images.push_back(img);
    }
    t.generators.push_back(lm);
    return t;
}

SteenrodTable projective_closed_form_table(int n, long p, const GradedAlgebra::Ptr& modp) {
    SteenrodTable t;
    t.p = p;
    t.algebra = modp;
    t.status = TableStatus::closed_form;
    SteenrodGenerator h;
    h.name = "h";
    h.cls = basis_element(modp, "h");
    h.codim = 1;
    h.images = {power(h.cls, static_cast<unsigned long>(p))};
    t.generators.push_back(h);
    (void)n;
    return t;
}

RingElement wu_twist_mod_p(const VarietyPtr& v, long p, const GradedAlgebra::Ptr& modp) {
    if (!v->chow) throw UnsupportedShape("Steenrod actions need an intrinsic ring");
    auto powered = powered_class(v->tangent, p);
    return reduce_element(invert_unit(powered), modp);
}

std::vector<std::string> validate_table(const SteenrodTable& table, const ValidateOptions& opts) {
    std::vector<RingElement> gen_classes;
    for (auto& g : table.generators) gen_classes.push_back(g.cls);
    auto ctx = build_context(table.algebra, gen_classes);
    return validate_with_context(ctx, table.generators, opts);
}

SolveResult solve_action(const GradedAlgebra::Ptr& a, long p, const SolveOptions& opts) {
    if (a->domain() != Domain::mod_p || a->modulus() != p)
        throw DomainMismatch("solve_action expects the mod-p reduction of the ring");
    auto gen_classes = discover_generators(a);
    auto ctx = build_context(a, gen_classes);
    auto gens = forced_generator_shell(ctx);

    // apply externally fixed images (re-validated like everything else)
    for (auto& f : opts.fixed) {
        for (auto& g : gens)
            if (g.cls == f.cls) g.images = f.images;
    }
    std::vector<char> is_fixed(gens.size(), 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (auto& f : opts.fixed)
            if (gens[g].cls == f.cls) is_fixed[g] = 1;

    // free slots: (generator, i) with a nonempty target component, i below the
    // top power, not externally fixed
    struct Slot {
        std::size_t gen;
        int i;
        std::vector<int> comp;
    };
    std::vector<Slot> slots;
    double grid = 1;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (is_fixed[g]) continue;
        for (int i = 1; i < gens[g].codim; ++i) {
            int target = gens[g].codim + i * static_cast<int>(p - 1);
            if (target > a->dim()) continue;
            const auto& comp = a->component(target);
            if (comp.empty()) continue;
            slots.push_back({g, i, comp});
            for (std::size_t k = 0; k < comp.size(); ++k) grid *= static_cast<double>(p);
        }
    }
    if (grid > static_cast<double>(opts.assignment_bound))
        throw SearchBoundExceeded("assignment grid of size " + std::to_string(grid)
                                  + " exceeds the bound");

    SolveResult result;
    std::vector<std::vector<long>> digits(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) digits[s].assign(slots[s].comp.size(), 0);

    ValidateOptions vopts;
    vopts.wu_twist = opts.wu_twist;
    vopts.stop_at_first = true;

    while (true) {
        ++result.searched;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            RingElement img(a);
            for (std::size_t k = 0; k < slots[s].comp.size(); ++k)
                if (digits[s][k]) img.set_coeff(slots[s].comp[k], Coeff::residue(Int(digits[s][k]), p));
            gens[slots[s].gen].images[static_cast<std::size_t>(slots[s].i) - 1] = img;
        }
        if (validate_with_context(ctx, gens, vopts).empty()) {
            SteenrodTable t;
            t.p = p;
            t.algebra = a;
            t.generators = gens;
            t.status = TableStatus::solution_space;
            result.admissible.push_back(std::move(t));
        }
        // odometer, last slot fastest
        std::size_t s = slots.size();
        while (s > 0) {
            --s;
            std::size_t k = digits[s].size();
            bool carried = true;
            while (k > 0) {
                --k;
                if (digits[s][k] + 1 < p) {
                    digits[s][k] += 1;
                    std::fill(digits[s].begin() + static_cast<long>(k) + 1, digits[s].end(), 0);
                    carried = false;
                    break;
                }
            }
            if (!carried) break;
            std::fill(digits[s].begin(), digits[s].end(), 0);
            if (s == 0) {
                if (result.admissible.empty())
                    throw UnsolvableSteenrod("no admissible Steenrod table on " + a->id());
                result.status = result.admissible.size() == 1 ? TableStatus::solved_unique
                                                              : TableStatus::solution_space;
                for (auto& t : result.admissible) t.status = result.status;
                return result;
            }
        }
        if (slots.empty()) {
            if (result.admissible.empty())
                throw UnsolvableSteenrod("no admissible Steenrod table on " + a->id());
            result.status = TableStatus::solved_unique;
            for (auto& t : result.admissible) t.status = result.status;
            return result;
        }
    }
}

S2Codim4Report check_s2_codim4(const VarietyPtr& v, long p) {
    if (!v->chow) throw UnsupportedShape("Steenrod actions need an intrinsic ring");
    auto modp = reduced_mod_cached(v->chow, p);
    SolveOptions opts;
    opts.wu_twist = wu_twist_mod_p(v, p, modp);
    auto solved = solve_action(modp, p, opts);
    S2Codim4Report rep;
    rep.family_size = solved.admissible.size();
    rep.unique = solved.status == TableStatus::solved_unique;
    rep.searched = solved.searched;
    rep.s2_trivial = true;
    for (auto& t : solved.admissible) {
        SteenrodAction act(t);
        for (int b : modp->component(4))
            if (!act.op(2, basis_element(modp, b)).is_zero()) rep.s2_trivial = false;
    }
    return rep;
}

SteenrodTable kunneth_table(const SteenrodTable& a, const SteenrodTable& b,
                            const KunnethAlgebra& k) {
    if (a.p != b.p) throw ModulusMismatch("kunneth table factors have different primes");
    SteenrodTable t;
    t.p = a.p;
    t.algebra = k.alg;
    t.status = TableStatus::fixed_input;
    for (auto& g : a.generators) {
        SteenrodGenerator ng;
        ng.name = g.name + "|1";
        ng.cls = k.embed_left(g.cls);
        ng.codim = g.codim;
        for (auto& img : g.images) ng.images.push_back(k.embed_left(img));
        t.generators.push_back(std::move(ng));
    }
    for (auto& g : b.generators) {
        SteenrodGenerator ng;
        ng.name = "1|" + g.name;
        ng.cls = k.embed_right(g.cls);
        ng.codim = g.codim;
        for (auto& img : g.images) ng.images.push_back(k.embed_right(img));
        t.generators.push_back(std::move(ng));
    }
    return t;
}

std::string table_to_json(const SteenrodTable& t) {
    nlohmann::json j;
    j["prime"] = t.p;
    j["algebra_id"] = t.algebra->id();
    j["status"] = table_status_name(t.status);
    nlohmann::json gens = nlohmann::json::array();
    for (auto& g : t.generators) {
        nlohmann::json jg;
        jg["name"] = g.name;
        jg["codim"] = g.codim;
        nlohmann::json imgs;
        for (std::size_t i = 0; i < g.images.size(); ++i)
            imgs[std::to_string(i + 1)] = g.images[i].str();
        jg["images"] = imgs;
        gens.push_back(jg);
    }
    j["generators"] = gens;
    return j.dump();
}

SteenrodTable table_from_json(const std::string& text, const GradedAlgebra::Ptr& algebra) {
    nlohmann::json j = nlohmann::json::parse(text);
    SteenrodTable t;
    t.p = j.at("prime").get<long>();
    if (algebra->modulus() != t.p) throw ModulusMismatch("table prime does not match the algebra");
    t.algebra = algebra;
    t.status = TableStatus::fixed_input;
    for (auto& jg : j.at("generators")) {
        SteenrodGenerator g;
        g.name = jg.at("name").get<std::string>();
        g.cls = basis_element(algebra, g.name);
        g.codim = jg.at("codim").get<int>();
        g.images.assign(static_cast<std::size_t>(g.codim), zero_element(algebra));
        for (auto& [key, val] : jg.at("images").items()) {
            int i = std::stoi(key);
            g.images[static_cast<std::size_t>(i) - 1] = parse_element(algebra, val.get<std::string>());
        }
        t.generators.push_back(std::move(g));
    }
    return t;
}

} // namespace chowtrace
