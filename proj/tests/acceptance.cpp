// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is enforced.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chowtrace/rost.hpp"
#include "chowtrace/specfile.hpp"
#include "chowtrace/steenrod.hpp"

using namespace chowtrace;

namespace {

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    std::function<void(std::ostringstream&)> run;  // throws or streams "FAIL:..." on failure
};

int failures = 0;

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("check failed: " + what);
}

Catalog& cat() {
    static Catalog c;
    return c;
}

const std::vector<std::string>& small_family() {
    static std::vector<std::string> f = {"P1", "P2", "P3", "Q3", "Q5"};
    return f;
}

void run_all(std::vector<Criterion>& list) {
    for (auto& c : list) {
        std::ostringstream note;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        try {
            c.run(note);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            detail = "over budget";
        }
        if (!ok) ++failures;
        std::printf("%s criterion-%02d: %s (%.2fs / %.0fs)%s%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.description.c_str(), elapsed, c.budget_seconds, note.str().empty() ? "" : " ",
                    note.str().c_str(), detail.empty() ? "" : (" -- " + detail).c_str());
    }
}

} // namespace

int main() {
    std::vector<Criterion> list;

    list.push_back({1, "eta_2(Q3) = 1 by both the characteristic-class and trace routes", 1.0,
                    [](std::ostringstream&) {
                        auto eta = rost_number(cat().builtin("Q3"), 2);
                        require(eta.residue == 1, "eta_2(Q3) = 1");
                        require(eta.paths_agree, "two-path agreement");
                        require(eta.pre_division == eta.trace_path_pre, "exact equality of routes");
                    }});

    list.push_back({2, "eta_p vanishes on all products from {P1,P2,P3,Q3,Q5}, p in {2,3}", 10.0,
                    [](std::ostringstream& note) {
                        int checked = 0;
                        for (auto& a : small_family()) {
                            for (auto& b : small_family()) {
                                auto u = cat().builtin(a);
                                auto v = cat().builtin(b);
                                for (long p : {2L, 3L}) {
                                    if ((u->dim + v->dim) % (p - 1) != 0) continue;
                                    auto eta = rost_number(cat().product(u, v), p);
                                    require(eta.residue == 0, "eta_" + std::to_string(p) + "(" + a
                                                                  + " x " + b + ") = 0");
                                    ++checked;
                                }
                            }
                        }
                        note << "[" << checked << " products]";
                    }});

    list.push_back(
        {3, "two-path Rost numbers agree exactly on the catalog, p in {2,3,5}, with p-divisibility",
         30.0, [](std::ostringstream& note) {
             std::vector<VarietyPtr> family;
             for (auto name : {"P1", "P2", "P3", "P4", "Q3", "Q4", "Q5", "Q7", "B2/P1", "A2/P1",
                               "P1xP1", "P2xP2", "P1xQ3", "F4/P4"})
                 family.push_back(cat().builtin(name));
             family.push_back(cat().divisor_power_section(cat().builtin("F4/P4"), "s4", 7));
             int checked = 0;
             for (auto& v : family) {
                 for (long p : {2L, 3L, 5L}) {
                     if (v->dim <= 0 || v->dim % (p - 1) != 0) continue;
                     auto eta = rost_number(v, p);  // throws on disagreement
                     require(eta.pre_division % p == 0, "divisibility by p on " + v->name);
                     ++checked;
                 }
             }
             note << "[" << checked << " (variety, prime) pairs]";
         }});

    list.push_back(
        {4, "base-point product identity holds and phi^{t^r} = 0 off the (p-1) grading", 30.0,
         [](std::ostringstream& note) {
             int pairs = 0;
             for (auto& a : small_family()) {
                 for (auto& b : small_family()) {
                     for (long p : {2L, 3L}) {
                         auto rep = rdf_check(cat().builtin(a), cat().builtin(b), p, cat());
                         require(rep.all_hold, "identity rows for " + a + " x " + b + " at p="
                                                   + std::to_string(p));
                         require(rep.vanishing_off_grading, "phi vanishes off grading for " + a + " x "
                                                                + b);
                         ++pairs;
                     }
                 }
             }
             note << "[" << pairs << " (pair, prime) reports]";
         }});

    list.push_back({5, "Weyl/Schubert substrate: |W(F4)|, roots, cells, dimensions, ranks", 60.0,
                    [](std::ostringstream&) {
                        auto rs = build_root_system('F', 4);
                        require(rs.num_positive == 24, "24 positive roots");
                        auto weyl = WeylGroup::enumerate(rs);
                        require(weyl.size() == 1152, "|W(F4)| = 1152");
                        auto f4p4 = cat().builtin("F4/P4");
                        auto f4p1 = cat().builtin("F4/P1");
                        require(f4p4->dim == 15 && f4p1->dim == 15, "dimension 15");
                        require(f4p4->chow->rank() == 24 && f4p1->chow->rank() == 24, "24 cells");
                        auto poly1 = poincare_polynomial(f4p1->schubert->quotient);
                        for (int k = 12; k <= 15; ++k)
                            require(poly1[k] == 1, "rank 1 in codim " + std::to_string(k));
                        require(f4p4->chow->component_rank(4) == 2, "codim-4 rank 2");
                    }});

    list.push_back(
        {6, "F4/P4 structure constants: nonnegative integers, duality permutation, deg H^15", 300.0,
         [](std::ostringstream& note) {
             auto f4p4 = cat().builtin("F4/P4");
             const auto& ring = f4p4->chow;
             for (int i = 0; i < ring->rank(); ++i)
                 for (int j = i; j < ring->rank(); ++j)
                     for (auto& t : ring->pair_product(i, j))
                         require(t.c.numerator() >= 0, "nonnegative structure constants");
             int n = ring->dim();
             for (int i = 0; i < ring->rank(); ++i) {
                 int ones = 0;
                 for (int j = 0; j < ring->rank(); ++j) {
                     if (ring->basis()[i].codim + ring->basis()[j].codim != n) continue;
                     Coeff d = degree(multiply(basis_element(ring, i), basis_element(ring, j)));
                     require(d == Coeff::integer(0) || d == Coeff::integer(1), "pairing in {0,1}");
                     if (d == Coeff::integer(1)) ++ones;
                 }
                 require(ones == 1, "unique dual partner");
             }
             const auto& sr = *f4p4->schubert;
             Int d1 = divisor_power_degree_chevalley(sr, 3, 15);
             Int d2 = divisor_power_degree_table(sr, 3, 15);
             require(d1 == d2, "two-method degree agreement");
             require(d1 == 78, "deg H^15 frozen after dual-route agreement");
             note << "[deg H^15 = " << d1.str() << "]";
         }});

    list.push_back({7, "deg c_15(T) of F4/P4 equals the cell count 24", 60.0,
                    [](std::ostringstream&) {
                        auto f4p4 = cat().builtin("F4/P4");
                        require(f4p4->euler_characteristic() == 24, "Euler characteristic 24");
                    }});

    list.push_back({8, "eta_3(Z) != 0 mod 3 for Z cut out by seven H-divisors in F4/P4", 300.0,
                    [](std::ostringstream& note) {
                        auto z = cat().divisor_power_section(cat().builtin("F4/P4"), "s4", 7);
                        require(z->dim == 8, "dim Z = 8");
                        auto eta = rost_number(z, 3);
                        require(eta.pre_division % 3 == 0, "pre-division divisibility");
                        require(eta.residue != 0, "eta_3(Z) nonzero");
                        note << "[pre-division " << eta.pre_division.str() << ", residue "
                             << eta.residue << "]";
                    }});

    list.push_back(
        {9, "Steenrod: quadric closed forms validate; F4/P4 mod-3 family has S^2(Ch^4) = 0", 600.0,
         [](std::ostringstream& note) {
             for (int n : {3, 5, 7}) {
                 auto v = cat().builtin("Q" + std::to_string(n));
                 auto mod2 = reduced_mod_cached(v->chow, 2);
                 ValidateOptions opts;
                 opts.wu_twist = wu_twist_mod_p(v, 2, mod2);
                 auto violations = validate_table(quadric_closed_form_table(n, mod2), opts);
                 require(violations.empty(), "closed form on Q" + std::to_string(n));
             }
             auto f4p4 = cat().builtin("F4/P4");
             auto rep = check_s2_codim4(f4p4, 3);
             require(rep.family_size > 0, "nonempty admissible family");
             require(rep.s2_trivial, "S^2(Ch^4) = 0 across the family");
             // the Cartan sub-fact, independently: S(H) = H + H^3 gives
             // S^2(H^4) = C(4,2) H^8 = 6 H^8 = 0 mod 3
             auto mod3 = reduced_mod_cached(f4p4->chow, 3);
             auto h = basis_element(mod3, "s4");
             auto sh = add(h, power(h, 3));
             RingElement sh4 = unit_element(mod3);
             for (int k = 0; k < 4; ++k) sh4 = multiply(sh4, sh);
             require(graded_part(sh4, 8).is_zero(), "S^2(H^4) = 6 H^8 = 0 mod 3");
             require(binomial(4, 2) % 3 == 0, "binomial 6 vanishes mod 3");
             note << "[family size " << rep.family_size << "]";
         }});

    list.push_back({10, "screens: (F4/P4, 2) candidate; (F4/P4, 3) fails dim; (P1xP1, 2) fails eta",
                    60.0, [](std::ostringstream&) {
                        auto r2 = screen_special_correspondence(cat().builtin("F4/P4"), 2);
                        require(r2.dim_test && r2.dim_test_s == 4, "15 = 2^4 - 1");
                        require(r2.eta_mod_p != 0, "eta_2(F4/P4) != 0");
                        require(r2.verdict == "candidate", "verdict candidate");
                        auto r3 = screen_special_correspondence(cat().builtin("F4/P4"), 3);
                        require(!r3.dim_test, "15 != 3^s - 1");
                        require(r3.verdict != "candidate", "p=3 not a candidate");
                        auto rp = screen_special_correspondence(cat().builtin("P1xP1"), 2);
                        require(rp.eta_defined && rp.eta_mod_p == 0, "eta_2(P1xP1) = 0");
                        require(rp.verdict != "candidate", "product not a candidate");
                    }});

    list.push_back(
        {11, "property suites and schedule-independent determinism", 300.0,
         [](std::ostringstream&) {
             // associativity/commutativity on every built algebra
             std::vector<GradedAlgebra::Ptr> algebras = {
                 cat().builtin("P3")->chow, cat().builtin("Q5")->chow, cat().builtin("Q7")->chow,
                 cat().builtin("B2/P1")->chow, cat().builtin("F4/P4")->chow,
                 cat().builtin("P1xQ3")->chow};
             for (auto& a : algebras)
                 require(check_multiplication_axioms(a).empty(), "axioms on " + a->id());
             // Poincare-duality rank symmetry
             for (auto& a : algebras)
                 for (int k = 0; k <= a->dim(); ++k)
                     require(a->component_rank(k) == a->component_rank(a->dim() - k),
                             "rank symmetry on " + a->id());
             // invert_unit round trip on seeded elements
             unsigned long seed = 4242;
             auto next = [&seed]() {
                 seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
                 return static_cast<long>((seed >> 33) % 9) - 4;
             };
             for (auto& a : algebras) {
                 for (int trial = 0; trial < 5; ++trial) {
                     RingElement x = unit_element(a);
                     for (int i = 0; i < a->rank(); ++i)
                         if (i != a->unit_index()) x.add_to(i, Coeff::integer(next()));
                     require(invert_unit(invert_unit(x)) == x, "involution on " + a->id());
                 }
             }
             // Newton round trip
             auto p8 = make_projective_space(8);
             for (int trial = 0; trial < 5; ++trial) {
                 std::vector<RingElement> e;
                 for (int k = 1; k <= 8; ++k)
                     e.push_back(scale(Coeff::integer(next()),
                                       power(basis_element(p8, "h"), static_cast<unsigned long>(k))));
                 auto pw = newton_elementary_to_power_sums(e, 8);
                 auto back = newton_power_sums_to_elementary(pw, 8);
                 for (std::size_t i = 0; i < e.size(); ++i)
                     require(back[i] == e[i], "newton round trip");
             }
             // eta additivity over disjoint unions
             auto q3 = cat().builtin("Q3");
             auto p3 = cat().builtin("P3");
             auto uni = cat().disjoint_union(q3, p3);
             require(rost_number(uni, 2).pre_division
                         == rost_number(q3, 2).pre_division + rost_number(p3, 2).pre_division,
                     "additivity");
             // determinism: two independent generations serialize identically
             auto sr1 = build_schubert_ring('B', 3, {0});
             auto sr2 = build_schubert_ring('B', 3, {0});
             save_structure_constants(sr1, "acceptance_cache_a.json");
             save_structure_constants(sr2, "acceptance_cache_b.json");
             std::ifstream fa("acceptance_cache_a.json"), fb("acceptance_cache_b.json");
             std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
             std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
             std::remove("acceptance_cache_a.json");
             std::remove("acceptance_cache_b.json");
             require(!sa.empty() && sa == sb, "byte-identical structure-constant serialization");
         }});

    run_all(list);
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all %zu criteria pass\n", list.size());
    return 0;
}
