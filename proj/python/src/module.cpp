#include "heckekit/errors.hpp"
#include "heckekit/serialize.hpp"
#include "heckekit/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace heckekit;

namespace {

Weight to_weight(const std::vector<int>& coords) { return Weight::from_span(coords); }
std::vector<int> from_weight(const Weight& w) { return {w.begin(), w.end()}; }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::shared_ptr<const RootDatum> build_datum(const std::string& label, const std::string& lattice,
                                             const std::vector<std::vector<int>>& basis) {
  std::vector<Weight> b;
  for (const auto& c : basis) b.push_back(to_weight(c));
  return RootDatum::build(label, parse_lattice_kind(lattice), b);
}

/// One root datum with its affine Weyl group, Hecke algebra and anti-spherical module.
struct Algebra {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const AntisphericalModule> module;

  Algebra(const std::string& label, const std::string& lattice, const std::vector<std::vector<int>>& basis,
          std::optional<int> max_length) {
    ResourceBudget budget = ResourceBudget::from_environment();
    if (max_length) budget.max_length = *max_length;
    datum = build_datum(label, lattice, basis);
    group = AffineWeylGroup::create(datum, budget);
    hecke = HeckeAlgebra::create(group);
    module = AntisphericalModule::create(hecke);
  }

  AffineWeylElement elem(const std::string& text) const { return group->parse(text); }
};

}  // namespace

PYBIND11_MODULE(_heckekit, m) {
  m.doc() = "Exact affine Hecke algebra computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DatumMismatch>(m, "DatumMismatch", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<HeckeElement>(m, "HeckeElement")
      .def("__add__", [](const HeckeElement& a, const HeckeElement& b) { return a + b; })
      .def("__sub__", [](const HeckeElement& a, const HeckeElement& b) { return a - b; })
      .def("__mul__", [](const HeckeElement& a, const HeckeElement& b) { return a * b; })
      .def("__eq__", [](const HeckeElement& a, const HeckeElement& b) { return a == b; })
      .def("__str__", &HeckeElement::to_string)
      .def("__repr__", [](const HeckeElement& h) { return "<HeckeElement " + h.to_string() + ">"; })
      .def("is_zero", &HeckeElement::is_zero)
      .def("coefficient",
           [](const HeckeElement& h, const std::string& w) { return h.coefficient(h.group().parse(w)).to_string(); })
      .def("to_json", [](const HeckeElement& h) { return json_to_py(to_json(h)); });

  py::class_<AntisphericalElement>(m, "AntisphericalElement")
      .def("__add__", [](const AntisphericalElement& a, const AntisphericalElement& b) { return a + b; })
      .def("__sub__", [](const AntisphericalElement& a, const AntisphericalElement& b) { return a - b; })
      .def("__eq__", [](const AntisphericalElement& a, const AntisphericalElement& b) { return a == b; })
      .def("__str__", &AntisphericalElement::to_string)
      .def("__repr__", [](const AntisphericalElement& x) { return "<AntisphericalElement " + x.to_string() + ">"; })
      .def("is_zero", &AntisphericalElement::is_zero)
      .def("to_json", [](const AntisphericalElement& x) { return json_to_py(to_json(x)); });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<const std::string&, const std::string&, const std::vector<std::vector<int>>&, std::optional<int>>(),
           py::arg("label"), py::arg("lattice") = "weight", py::arg("lattice_basis") = std::vector<std::vector<int>>{},
           py::arg("max_length") = py::none())
      .def_property_readonly("label", [](const Algebra& a) { return a.datum->label(); })
      .def_property_readonly("rank", [](const Algebra& a) { return a.datum->rank(); })
      .def("length", [](const Algebra& a, const std::string& w) { return a.group->length(a.elem(w)); })
      .def("multiply",
           [](const Algebra& a, const std::string& x, const std::string& y) {
             return a.group->to_string(a.group->multiply(a.elem(x), a.elem(y)));
           })
      .def("inverse", [](const Algebra& a, const std::string& w) { return a.group->to_string(a.group->inverse(a.elem(w))); })
      .def("translation",
           [](const Algebra& a, const std::vector<int>& l) { return a.group->to_string(a.group->translation(to_weight(l))); })
      .def("simple", [](const Algebra& a, int g) { return a.group->to_string(a.group->simple(g)); })
      .def("omega",
           [](const Algebra& a) {
             std::vector<std::string> out;
             for (const auto& p : a.group->omega()) out.push_back(a.group->to_string(p));
             return out;
           })
      .def("reduced_word",
           [](const Algebra& a, const std::string& w) {
             const auto r = a.group->reduced_word(a.elem(w));
             return py::make_tuple(r.omega, r.word);
           })
      .def("bruhat_leq",
           [](const Algebra& a, const std::string& x, const std::string& w) { return a.group->bruhat_leq(a.elem(x), a.elem(w)); })
      .def("kappa", [](const Algebra& a, const std::vector<int>& l) { return a.group->to_string(a.group->kappa(to_weight(l))); })
      .def("coset_weight", [](const Algebra& a, const std::string& w) { return from_weight(a.group->coset_weight(a.elem(w))); })
      .def("is_f_minimal", [](const Algebra& a, const std::string& w) { return a.group->is_f_minimal(a.elem(w)); })
      .def("elements",
           [](const Algebra& a, int max_length) {
             std::vector<std::string> out;
             for (const auto& w : a.group->enumerate_up_to_length(max_length)) out.push_back(a.group->to_string(w));
             return out;
           })
      .def("weights_of",
           [](const Algebra& a, const std::vector<int>& l) {
             py::dict out;
             for (const auto& [mu, mult] : a.datum->weights_of(to_weight(l))) out[py::tuple(py::cast(from_weight(mu)))] = mult;
             return out;
           })
      .def("T", [](const Algebra& a, const std::string& w) { return a.hecke->T(a.elem(w)); })
      .def("T_inverse", [](const Algebra& a, const std::string& w) { return a.hecke->t_inverse(a.elem(w)); })
      .def("one", [](const Algebra& a) { return a.hecke->one(); })
      .def("parse_hecke", [](const Algebra& a, const std::string& text) { return parse_hecke(a.group, text); })
      .def("theta", [](const Algebra& a, const std::vector<int>& l) { return a.hecke->theta(to_weight(l)); })
      .def("center_element", [](const Algebra& a, const std::vector<int>& l) { return a.hecke->center_element(to_weight(l)); })
      .def("bar", [](const Algebra& a, const HeckeElement& h) { return a.hecke->bar(h); })
      .def("kl_basis", [](const Algebra& a, const std::string& w) { return a.hecke->kl_basis(a.elem(w)); })
      .def("kl_polynomial",
           [](const Algebra& a, const std::string& x, const std::string& w) {
             return a.hecke->kl_polynomial(a.elem(x), a.elem(w)).to_string("q");
           })
      .def("specialize",
           [](const Algebra& a, const HeckeElement& h) { return json_to_py(to_json(a.hecke->specialize_v1(h))); })
      .def("wakimoto_class", [](const Algebra& a, const std::string& w) { return json_to_py(to_json(a.hecke->wakimoto_class(a.elem(w)))); })
      .def("euler_pairing",
           [](const Algebra& a, const std::string& w, const std::string& wp) {
             return a.hecke->euler_pairing(a.elem(w), a.elem(wp)).convert_to<long long>();
           })
      .def("m", [](const Algebra& a, const std::string& w) { return a.module->m(a.elem(w)); })
      .def("act", [](const Algebra& a, const AntisphericalElement& x, const HeckeElement& h) { return a.module->act(x, h); })
      .def("project", [](const Algebra& a, const HeckeElement& h) { return a.module->project_from_hecke(h); })
      .def("theta_basis", [](const Algebra& a, const std::vector<int>& l) { return a.module->theta_basis(to_weight(l)); })
      .def("freeness_certified", [](const Algebra& a, int L) { return a.module->a_freeness_matrix(L).certifies_freeness(); })
      .def("whittaker_table",
           [](const Algebra& a, const std::vector<int>& l) { return json_to_py(to_json(*a.group, whittaker_table(*a.group, to_weight(l)))); })
      .def("whittaker_csv",
           [](const Algebra& a, const std::vector<int>& l) { return to_csv(*a.group, whittaker_table(*a.group, to_weight(l))); });

  m.def(
      "lusztig_q_analogue",
      [](const std::string& label, const std::vector<int>& l, const std::vector<int>& mu) {
        return lusztig_q_analogue(*RootDatum::build(label), to_weight(l), to_weight(mu)).to_string("q");
      },
      py::arg("label"), py::arg("lam"), py::arg("mu"));
  m.def(
      "whittaker_trace",
      [](const std::string& label, const std::vector<int>& l, const std::vector<int>& mu) {
        return whittaker_trace(*RootDatum::build(label), to_weight(l), to_weight(mu)).to_string("t");
      },
      py::arg("label"), py::arg("lam"), py::arg("mu"));
  m.def(
      "run_suite",
      [](const std::string& name, const std::string& label, int bound, std::uint64_t seed, const std::string& lattice,
         std::optional<int> max_length) {
        ResourceBudget budget = ResourceBudget::from_environment();
        if (max_length) budget.max_length = *max_length;
        return json_to_py(run_suite(name, build_datum(label, lattice, {}), bound, seed, budget).to_json());
      },
      py::arg("name"), py::arg("label"), py::arg("bound"), py::arg("seed") = 0, py::arg("lattice") = "weight",
      py::arg("max_length") = py::none());
  m.def("suite_names", &suite_names);
}
