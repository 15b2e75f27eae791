#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chowtrace/rost.hpp"
#include "chowtrace/specfile.hpp"
#include "chowtrace/steenrod.hpp"

namespace py = pybind11;
using namespace chowtrace;

namespace {

Catalog& catalog() {
    static Catalog c([] {
        const char* env = std::getenv("CHOWTRACE_CACHE_DIR");
        return std::string(env ? env : "");
    }());
    return c;
}

py::object big(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

VarietyPtr resolve(const std::string& name) { return catalog().builtin(name); }

py::dict eta_dict(const VarietyPtr& v, long p) {
    auto eta = rost_number(v, p);
    py::dict d;
    d["variety"] = v->name;
    d["prime"] = p;
    d["dim"] = v->dim;
    d["eta_integer"] = big(eta.pre_division);
    d["eta_div_p"] = big(eta.divided);
    d["eta_mod_p"] = eta.residue;
    d["paths_agree"] = eta.paths_agree;
    return d;
}

} // namespace

PYBIND11_MODULE(_chowtrace, m) {
    m.doc() = "exact Chow-trace, Rost-number, and Schubert/Steenrod calculator";

    py::register_exception<NotDivisibleByP>(m, "NotDivisibleByP");
    py::register_exception<PathDisagreement>(m, "PathDisagreement");
    py::register_exception<DimensionNotDivisible>(m, "DimensionNotDivisible");
    py::register_exception<UnknownVariety>(m, "UnknownVariety");

    m.def(
        "eta", [](const std::string& variety, long p) { return eta_dict(resolve(variety), p); },
        py::arg("variety"), py::arg("prime"),
        "Rost number eta_p of a builtin variety, by both computation routes");

    m.def(
        "eta_from_file",
        [](const std::string& path, long p) {
            return eta_dict(load_variety_spec_file(path, catalog()), p);
        },
        py::arg("path"), py::arg("prime"), "Rost number of a variety described by a TOML file");

    m.def(
        "poincare",
        [](const std::string& group, int parabolic) {
            auto v = resolve(group + "/P" + std::to_string(parabolic));
            return poincare_polynomial(v->schubert->quotient);
        },
        py::arg("group"), py::arg("parabolic"),
        "Poincare polynomial coefficients of G/P by codimension");

    m.def(
        "weyl_order",
        [](const std::string& label) {
            auto rs = build_root_system(label);
            return static_cast<long>(WeylGroup::enumerate(rs).size());
        },
        py::arg("type"), "order of the Weyl group, e.g. weyl_order('F4')");

    m.def(
        "divisor_power_degree",
        [](const std::string& group, int parabolic, int power) {
            auto v = resolve(group + "/P" + std::to_string(parabolic));
            const auto& sr = *v->schubert;
            Int a = divisor_power_degree_chevalley(sr, parabolic - 1, power);
            Int b = divisor_power_degree_table(sr, parabolic - 1, power);
            if (a != b) throw PathDisagreement("degree routes disagree");
            return big(a);
        },
        py::arg("group"), py::arg("parabolic"), py::arg("power"),
        "deg(H^power) on G/P, cross-checked between Chevalley and the table");

    m.def(
        "check_special",
        [](const std::string& variety, long p) {
            auto rep = screen_special_correspondence(resolve(variety), p);
            py::dict d;
            d["variety"] = rep.variety;
            d["p"] = rep.p;
            d["dim"] = rep.dim;
            d["dim_test"] = rep.dim_test;
            if (rep.eta_defined) {
                d["eta_integer"] = big(rep.eta_integer);
                d["eta_mod_p"] = rep.eta_mod_p;
            } else {
                d["eta_integer"] = py::none();
                d["eta_mod_p"] = py::none();
            }
            d["verdict"] = rep.verdict;
            return d;
        },
        py::arg("variety"), py::arg("prime"),
        "necessary-condition screen for a special correspondence");

    m.def(
        "phi",
        [](const std::string& variety, long r, long p) {
            auto c = class_over_point(resolve(variety));
            auto x = phi(c, r, p);
            return x.is_zero() ? 0L : x.coeffs().begin()->second.numerator().convert_to<long>();
        },
        py::arg("variety"), py::arg("r"), py::arg("prime"),
        "phi^{t^r}_p of the class [V -> pt], as a residue");

    m.def(
        "steenrod_s2_check",
        [](const std::string& variety, long p) {
            auto rep = check_s2_codim4(resolve(variety), p);
            py::dict d;
            d["variety"] = variety;
            d["prime"] = p;
            d["family_size"] = rep.family_size;
            d["unique"] = rep.unique;
            d["searched"] = rep.searched;
            d["s2_codim4_trivial"] = rep.s2_trivial;
            return d;
        },
        py::arg("variety"), py::arg("prime") = 3,
        "solve the reduced-power action and test S^2 on the codim-4 component");

    m.def(
        "euler_characteristic",
        [](const std::string& variety) { return big(resolve(variety)->euler_characteristic()); },
        py::arg("variety"), "deg of the top Chern class of the tangent bundle");
}
