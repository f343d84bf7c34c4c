#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsg/apery.hpp"
#include "nsg/core.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/euclid3.hpp"
#include "nsg/format.hpp"
#include "nsg/grobner.hpp"
#include "nsg/oracle.hpp"

namespace py = pybind11;
using namespace nsg;

namespace {

std::vector<std::vector<Int>> exps_list(const std::vector<ExponentVector>& v) {
    std::vector<std::vector<Int>> out;
    out.reserve(v.size());
    for (const auto& m : v) out.push_back(m.exps);
    return out;
}

GeneratorSet normalize_list(const std::vector<Int>& gens,
                            std::size_t param_index) {
    return normalize(std::span<const Int>(gens), param_index);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact numerical semigroup computations: Apery sets, Frobenius "
              "numbers, knapsack membership, toric Groebner bases, "
              "Hilbert-Poincare series.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const OverflowError& e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<GeneratorSet>(m, "GeneratorSet")
        .def_readonly("raw", &GeneratorSet::raw)
        .def_readonly("sorted", &GeneratorSet::sorted)
        .def_readonly("reduced", &GeneratorSet::reduced)
        .def_readonly("lambda_", &GeneratorSet::lambda)
        .def_readonly("param_index", &GeneratorSet::param_index)
        .def_property_readonly("parameter", &GeneratorSet::param)
        .def("__repr__", [](const GeneratorSet& g) {
            std::string s = "GeneratorSet(";
            for (std::size_t i = 0; i < g.sorted.size(); ++i) {
                if (i) s += ", ";
                s += std::to_string(g.sorted[i]);
            }
            return s + ")";
        });

    py::class_<AperyTable>(m, "AperyTable")
        .def_readonly("base", &AperyTable::base)
        .def_readonly("lambda_", &AperyTable::lambda)
        .def_readonly("values", &AperyTable::values)
        .def_readonly("levels_scanned", &AperyTable::levels_scanned)
        .def_property_readonly("scaled_values",
                               [](const AperyTable& t) {
                                   std::vector<Int> out;
                                   out.reserve(t.values.size());
                                   for (Int r = 0; r < t.base; ++r)
                                       out.push_back(t.scaled_value(r));
                                   return out;
                               })
        .def("witness",
             [](const AperyTable& t, Int r) { return t.witness_vec(r).exps; })
        .def_property_readonly("witnesses", [](const AperyTable& t) {
            std::vector<std::vector<Int>> out;
            for (Int r = 0; r < t.base; ++r)
                out.push_back(t.witness_vec(r).exps);
            return out;
        });

    py::class_<MembershipCertificate>(m, "MembershipCertificate")
        .def_readonly("member", &MembershipCertificate::member)
        .def_readonly("representation", &MembershipCertificate::representation)
        .def_readonly("blocking", &MembershipCertificate::blocking)
        .def("__bool__",
             [](const MembershipCertificate& c) { return c.member; });

    py::class_<HilbertSeries>(m, "HilbertSeries")
        .def_readonly("numerator_exponents", &HilbertSeries::numerator_exponents)
        .def_readonly("denominator_exponent",
                      &HilbertSeries::denominator_exponent)
        .def_readonly("degree", &HilbertSeries::degree);

    py::class_<Binomial>(m, "Binomial")
        .def_property_readonly("lead",
                               [](const Binomial& b) { return b.lead.exps; })
        .def_readonly("e", &Binomial::tail_param_exp)
        .def_property_readonly(
            "tail", [](const Binomial& b) { return b.tail_witness.exps; })
        .def("__repr__", [](const Binomial& b) { return binomial_string(b); });

    py::class_<StaircaseReport>(m, "StaircaseReport")
        .def_property_readonly(
            "standard",
            [](const StaircaseReport& r) { return exps_list(r.standard); })
        .def_property_readonly(
            "generators",
            [](const StaircaseReport& r) { return exps_list(r.generators); })
        .def_readonly("max_standard_totaldeg",
                      &StaircaseReport::max_standard_totaldeg);

    py::class_<Euclid3Table>(m, "Euclid3Table")
        .def_readonly("a", &Euclid3Table::a)
        .def_readonly("b", &Euclid3Table::b)
        .def_readonly("c", &Euclid3Table::c)
        .def_readonly("q", &Euclid3Table::q)
        .def_readonly("s", &Euclid3Table::s)
        .def_readonly("p", &Euclid3Table::p)
        .def_readonly("r", &Euclid3Table::r)
        .def_readonly("mu", &Euclid3Table::mu);

    py::class_<Gb3Result>(m, "Gb3Result")
        .def_readonly("table", &Gb3Result::table)
        .def_readonly("binomials", &Gb3Result::binomials)
        .def_readonly("staircase", &Gb3Result::staircase)
        .def_readonly("staircase_size", &Gb3Result::staircase_size)
        .def_readonly("frobenius", &Gb3Result::frobenius)
        .def_readonly("used_fallback", &Gb3Result::used_fallback);

    py::class_<oracle::CheckResult>(m, "CheckResult")
        .def_readonly("name", &oracle::CheckResult::name)
        .def_readonly("pass_", &oracle::CheckResult::pass)
        .def_readonly("detail", &oracle::CheckResult::detail);

    py::class_<oracle::VerificationReport>(m, "VerificationReport")
        .def_readonly("checks", &oracle::VerificationReport::checks)
        .def_readonly("overall", &oracle::VerificationReport::overall)
        .def("__bool__",
             [](const oracle::VerificationReport& r) { return r.overall; });

    m.def("normalize", &normalize_list, py::arg("generators"),
          py::arg("param_index") = 0,
          "Validate, sort, deduplicate and gcd-reduce generators.");
    m.def(
        "compute_apery",
        [](const GeneratorSet& g, unsigned threads) {
            AperyParams p;
            p.threads = threads;
            py::gil_scoped_release release;
            return compute_apery(g, p);
        },
        py::arg("generators"), py::arg("threads") = 1);
    m.def("frobenius", [](const AperyTable& t) { return frobenius(t); });
    m.def("is_member", &is_member, py::arg("table"), py::arg("generators"),
          py::arg("b"));
    m.def("hilbert_series", &hilbert_series);
    m.def("module_decomposition", &module_decomposition);
    m.def("standard_monomials",
          [](const GeneratorSet& g, const AperyTable& t) {
              return exps_list(standard_monomials(g, t));
          });
    m.def("initial_ideal", [](const GeneratorSet& g, const AperyTable& t) {
        return exps_list(initial_ideal(g, t));
    });
    m.def("groebner_basis", &groebner_basis);
    m.def("normal_form",
          [](const GeneratorSet& g, const AperyTable& t, Int e,
             const std::vector<Int>& rest) {
              NormalFormResult nf =
                  normal_form(g, t, e, ExponentVector(rest));
              return std::make_pair(nf.param_exp, nf.witness.exps);
          },
          py::arg("generators"), py::arg("table"), py::arg("x1_exponent"),
          py::arg("exponents"));
    m.def("level_vectors",
          [](const GeneratorSet& g, Int s, Int cap) {
              return exps_list(level_vectors(g, s, cap));
          });
    m.def("count_level", &count_level);
    m.def("weighted_degree",
          [](const std::vector<Int>& k, const GeneratorSet& g) {
              return weighted_degree(ExponentVector(k), g);
          });
    m.def(
        "compare",
        [](const GeneratorSet& g, Int e1, const std::vector<Int>& k1, Int e2,
           const std::vector<Int>& k2) {
            Cmp c = compare(g, e1, ExponentVector(k1), e2, ExponentVector(k2));
            return c == Cmp::Less ? -1 : c == Cmp::Greater ? 1 : 0;
        },
        py::arg("generators"), py::arg("e1"), py::arg("k1"), py::arg("e2"),
        py::arg("k2"),
        "Weighted degrevlex comparison of x1^e1*k1 vs x1^e2*k2; returns "
        "-1, 0 or 1.");
    m.def("gb3", &gb3, py::arg("a"), py::arg("b"), py::arg("c"),
          "Closed-form basis for three generators; a is the parameter.");
    m.def("sequences3", &sequences3);
    m.def("frobenius2", &frobenius2);
    m.def("apery_shortest_path", &oracle::apery_shortest_path);
    m.def("member_dp", &oracle::member_dp);
    m.def("verify_groebner", &oracle::verify_groebner, py::arg("generators"),
          py::arg("basis"), py::arg("table"), py::arg("run_spairs") = true);
    m.def("monomial_string", [](const std::vector<Int>& k) {
        return monomial_string(std::span<const Int>(k));
    });
}
