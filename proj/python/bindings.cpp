#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobdepth/commands.hpp"
#include "frobdepth/invariants.hpp"

namespace py = pybind11;
using namespace frobdepth;

namespace {

RingCtx make_ring(std::uint32_t p, std::vector<std::string> vars, const std::string& order) {
  MonomialOrder o;
  if (order == "lex")
    o.kind = OrderKind::Lex;
  else if (order != "grevlex")
    throw Error(ErrorKind::InvalidArgument, "order must be 'grevlex' or 'lex'");
  return RingCtx(p, std::move(vars), o);
}

Ideal make_ideal(const RingCtx& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, r));
  return Ideal(r, std::move(g));
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps, const RingCtx& r) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_frobdepth, m) {
  m.doc() = "Frobenius nilpotency of Ext chains over F_p[x1..xn]";

  static py::exception<Error> exc(m, "FrobdepthError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.what());
    }
  });

  py::class_<RingCtx>(m, "Ring")
      .def(py::init(&make_ring), py::arg("p"), py::arg("vars"), py::arg("order") = "grevlex")
      .def_property_readonly("p", &RingCtx::p)
      .def_property_readonly("n", &RingCtx::n)
      .def_property_readonly("vars", &RingCtx::var_names)
      .def("normalize", [](const RingCtx& r, const std::string& s) {
        return to_string(parse_polynomial(s, r), r);
      });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("ring"), py::arg("gens"))
      .def_property_readonly("ring", &Ideal::ring)
      .def_property_readonly("gens", [](const Ideal& I) { return strings(I.gens(), I.ring()); })
      .def("groebner_basis", [](const Ideal& I) { return strings(I.groebner_basis(), I.ring()); })
      .def("contains", [](const Ideal& I, const std::string& f) {
        return membership(parse_polynomial(f, I.ring()), I);
      })
      .def("is_homogeneous", &Ideal::is_homogeneous)
      .def("is_monomial", &Ideal::is_monomial)
      .def("__repr__", [](const Ideal& I) {
        std::string s = "Ideal(";
        auto g = strings(I.gens(), I.ring());
        for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i];
        return s + ")";
      });

  m.def("frobenius_power", &frobenius_power, py::arg("ideal"), py::arg("e") = 1);
  m.def("eliminate", [](const Ideal& I, const std::vector<std::string>& names) {
    std::vector<std::size_t> drop;
    for (const auto& v : names) {
      int k = I.ring().var_index(v);
      if (k < 0) throw Error(ErrorKind::InvalidArgument, "unknown variable " + v);
      drop.push_back(static_cast<std::size_t>(k));
    }
    return eliminate(I, drop);
  });
  m.def("minimal_generators", [](const Ideal& I) { return strings(minimal_generators(I), I.ring()); });

  m.def("free_resolution", [](const Ideal& I) {
    FreeComplex c = free_resolution(I);
    std::vector<std::vector<int>> shifts;
    for (const auto& f : c.modules) shifts.push_back(f.shifts);
    py::dict d;
    d["betti"] = c.betti();
    d["shifts"] = shifts;
    return d;
  });
  m.def("pd", &pd);
  m.def("depth", &depth_quotient);
  m.def("dim", &dim_quotient);
  m.def("height", &height);

  m.def("frobenius_chain", [](const Ideal& I, int j, int max_e) {
    ChainResult r = FrobeniusAnalysis(I).chain(j, max_e);
    py::dict d;
    d["j"] = r.j;
    d["verdict"] = to_string(r.verdict);
    d["stab_e"] = r.capped ? py::object(py::none()) : py::object(py::int_(r.stab_e));
    d["capped"] = r.capped;
    return d;
  }, py::arg("ideal"), py::arg("j"), py::arg("max_e") = 8);
  m.def("cd", &cd, py::arg("ideal"), py::arg("max_e") = 8);
  m.def("fdepth", &fdepth_quotient, py::arg("ideal"), py::arg("max_e") = 8);
  m.def("fgrade", &fgrade, py::arg("ideal"), py::arg("max_e") = 8);
  m.def("monomial_oracle_cd", &monomial_oracle_cd);
  m.def("cofinality_check", &cofinality_check);
  m.def("report_json", [](const Ideal& I, int max_e, const std::string& label) {
    return report_json(report(I, max_e), label);
  }, py::arg("ideal"), py::arg("max_e") = 8, py::arg("label") = "");
}
