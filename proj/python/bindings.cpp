#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sumsys/arith.hpp"
#include "sumsys/cli.hpp"
#include "sumsys/counting.hpp"
#include "sumsys/jof.hpp"
#include "sumsys/systems.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Python int <-> sumsys::Integer through the decimal form; values beyond 128 bits raise OverflowError.
template <>
struct type_caster<sumsys::Integer> {
  PYBIND11_TYPE_CASTER(sumsys::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = sumsys::Integer::parse(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const sumsys::Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.to_string().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace sumsys;

using Pairs = std::vector<std::pair<int, std::int64_t>>;

Jof jof_from(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_jof(obj.cast<std::string>());
  Pairs pairs = obj.cast<Pairs>();
  std::vector<JofEntry> entries;
  for (const auto& [part, factor] : pairs) entries.push_back({part, factor});
  return Jof(std::move(entries));
}

Pairs pairs_from(const Jof& jof) {
  Pairs out;
  for (const auto& e : jof.entries()) out.emplace_back(e.part, e.factor);
  return out;
}

std::vector<Component> to_vectors(std::span<const Component> comps) { return {comps.begin(), comps.end()}; }

py::tuple verdict(const Verdict& v) { return py::make_tuple(v.ok, v.diagnostic); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sum systems, joint ordered factorisations and their counting functions.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "IntegerOverflowError", PyExc_OverflowError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

  // arith
  m.def("factorise", [](std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    const PrimeFactorisation f = factorise(n);
    for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
    return out;
  }, py::arg("n"));
  m.def("divisors", &divisors, py::arg("n"));
  m.def("big_omega", &big_omega, py::arg("n"));
  m.def("mobius", &mobius, py::arg("n"));
  m.def("modified_mobius", &modified_mobius, py::arg("n"));
  m.def("classical_divisor", &classical_divisor, py::arg("j"), py::arg("n"));
  m.def("nontrivial_divisor", &nontrivial_divisor, py::arg("j"), py::arg("n"));
  m.def("associated_divisor", &associated_divisor, py::arg("j"), py::arg("r"), py::arg("n"));
  m.def("squarefree_ordered_count", &squarefree_ordered_count, py::arg("length"), py::arg("n"));

  // jof
  m.def("enumerate_jofs", [](const std::vector<std::int64_t>& tuple, std::size_t cap) {
    std::vector<Pairs> out;
    for (const Jof& jof : enumerate_jofs(TargetTuple(tuple), cap)) out.push_back(pairs_from(jof));
    return out;
  }, py::arg("tuple"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("count_for_tuple", [](const std::vector<std::int64_t>& tuple) {
    return count_for_tuple(TargetTuple(tuple));
  }, py::arg("tuple"));
  m.def("validate_jof", [](const py::object& jof, const std::vector<std::int64_t>& tuple) {
    return verdict(validate(jof_from(jof), TargetTuple(tuple)));
  }, py::arg("jof"), py::arg("tuple"));
  m.def("partial_products", [](const py::object& jof) { return partial_products(jof_from(jof)); },
        py::arg("jof"));

  // systems
  m.def("build_sum_system", [](const py::object& jof) {
    return to_vectors(build_sum_system(jof_from(jof)).components());
  }, py::arg("jof"));
  m.def("build_centred", [](const py::object& jof) {
    return to_vectors(build_centred(jof_from(jof)).doubled_components());
  }, py::arg("jof"), "Centred components with every value doubled.");
  m.def("to_sum_and_distance", [](const py::object& jof) {
    const SumAndDistanceSystem b = to_sum_and_distance(build_centred(jof_from(jof)));
    return py::make_tuple(b.doubled_components, b.even_parts, b.odd_parts);
  }, py::arg("jof"), "(doubled B components, even parts, odd parts) of the system built from a JOF.");
  m.def("verify_sum_system", [](std::vector<Component> comps, std::int64_t n) {
    return verdict(verify_sum_system(SumSystem(std::move(comps), n)));
  }, py::arg("components"), py::arg("n"));
  m.def("verify_centred", [](std::vector<Component> doubled, std::int64_t n) {
    return verdict(verify_centred(CentredSumSystem(std::move(doubled), n)));
  }, py::arg("doubled_components"), py::arg("n"));
  m.def("sigma_a", [](std::vector<Component> comps, std::int64_t n) {
    return sigma_a(SumSystem(std::move(comps), n));
  }, py::arg("components"), py::arg("n"));
  m.def("_tau_c", [](std::vector<Component> doubled, std::int64_t n) {
    const Rational r = tau_c(CentredSumSystem(std::move(doubled), n));
    return py::make_tuple(r.numerator(), r.denominator());
  }, py::arg("doubled_components"), py::arg("n"));

  // counting
  m.def("stirling2", &stirling2, py::arg("rows"), py::arg("parts"));
  m.def("count_m_part", [](std::int64_t n, int parts) { return count_m_part(n, parts).value; },
        py::arg("n"), py::arg("m"));
  m.def("count_two_part", [](std::int64_t n) { return count_two_part(n).value; }, py::arg("n"));
  m.def("count_unordered", [](std::int64_t n, int parts) { return count_unordered(n, parts).value; },
        py::arg("n"), py::arg("m"));
  m.def("brute_force_count", [](std::int64_t n, int parts, std::size_t cap) {
    return brute_force_count(n, parts, cap).value;
  }, py::arg("n"), py::arg("m"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("two_dim_fixed_tuple", [](std::int64_t n) { return two_dim_fixed_tuple(n).value; }, py::arg("n"));
  m.def("divisor_sum_check", [](std::int64_t n, int parts) {
    const DivisorSumReport r = divisor_sum_check(n, parts);
    py::dict out;
    out["ordered"] = r.ordered;
    out["unordered"] = r.unordered;
    out["ordered_recurrence"] = r.ordered_recurrence;
    out["ordered_mobius"] = r.ordered_mobius;
    out["unordered_recurrence"] = r.unordered_recurrence;
    out["unordered_mobius"] = r.unordered_mobius;
    out["all_zero"] = r.all_zero();
    return out;
  }, py::arg("n"), py::arg("m"));
  m.def("binomial_inversion", [](const std::vector<Integer>& a) { return binomial_inversion(a); },
        py::arg("a"));
  m.def("binomial_transform", [](const std::vector<Integer>& b) { return binomial_transform(b); },
        py::arg("b"));

  // cli
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
