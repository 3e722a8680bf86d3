// Python bindings: plain lists/strings/dicts in, exact Python ints out.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "palcomp/asymptotics.hpp"
#include "palcomp/bijection_m2.hpp"
#include "palcomp/bijection_m3.hpp"
#include "palcomp/counting.hpp"
#include "palcomp/golden_tables.hpp"
#include "palcomp/oracle.hpp"
#include "palcomp/structural.hpp"
#include "palcomp/verification.hpp"

namespace py = pybind11;
using namespace palcomp;

namespace {

Modulus to_modulus(const py::object& m) {
  if (py::isinstance<py::int_>(m))
    return Modulus::parse(std::to_string(m.cast<long long>()));
  if (py::isinstance<py::str>(m)) return Modulus::parse(m.cast<std::string>());
  if (m.is_none()) return Modulus::infinity();
  throw std::invalid_argument("modulus must be an int, a string like 'inf', or None");
}

py::int_ to_pyint(const BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Composition to_composition(const std::vector<std::int64_t>& parts) {
  return Composition(parts);
}

py::list comp_list(const std::vector<Composition>& comps) {
  py::list out;
  for (const auto& sigma : comps) out.append(sigma.parts());
  return out;
}

py::dict golden_dict(const GoldenCheck& check) {
  py::dict d;
  d["passed"] = check.passed;
  d["cells"] = check.cells;
  d["mismatches"] = check.mismatches;
  d["first_mismatch"] = check.first_mismatch;
  return d;
}

} // namespace

PYBIND11_MODULE(palcomp, mod) {
  mod.doc() = "compositions of n that are palindromic modulo m: counting, "
              "explicit bijections, structural maps, and growth constants";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OracleCapError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  mod.def(
      "count",
      [](int n, const py::object& m, const std::string& method, int oracle_cap) {
        const Modulus mm = to_modulus(m);
        if (method == "oracle") return to_pyint(oracle_count(n, mm, oracle_cap));
        if (method == "closed") return to_pyint(closed_form_count(n, mm));
        if (method == "recurrence") {
          if (mm.is_infinite()) return to_pyint(closed_form_count(n, mm));
          return to_pyint(recurrence_count(n, static_cast<int>(mm.value())));
        }
        throw std::invalid_argument("method must be 'oracle', 'recurrence', or 'closed'");
      },
      py::arg("n"), py::arg("m"), py::arg("method") = "recurrence",
      py::arg("oracle_cap") = kDefaultOracleCap,
      "pc(n, m): the number of compositions of n palindromic mod m "
      "(m an int, 'inf', or None for exact palindromes)");

  mod.def(
      "count_series",
      [](const py::object& m, int n_max) {
        const Modulus mm = to_modulus(m);
        if (mm.is_infinite()) {
          py::list out;
          for (int n = 0; n <= n_max; ++n)
            out.append(to_pyint(n == 0 ? BigInt(0) : closed_form_count(n, mm)));
          return out;
        }
        py::list out;
        for (const auto& value : recurrence_counts(static_cast<int>(mm.value()), n_max))
          out.append(to_pyint(value));
        return out;
      },
      py::arg("m"), py::arg("n_max"),
      "[pc(0,m), pc(1,m), ..., pc(n_max,m)] with pc(0,m) = 0");

  mod.def(
      "palindromic_compositions",
      [](int n, const py::object& m, int oracle_cap) {
        return comp_list(oracle_list(n, to_modulus(m), oracle_cap));
      },
      py::arg("n"), py::arg("m"), py::arg("oracle_cap") = kDefaultOracleCap,
      "every composition of n palindromic mod m, in canonical order");

  mod.def(
      "is_palindromic",
      [](const std::vector<std::int64_t>& parts, const py::object& m) {
        return is_palindromic_mod(to_composition(parts), to_modulus(m));
      },
      py::arg("parts"), py::arg("m"));

  mod.def(
      "word_to_composition",
      [](const std::string& word, const std::string& family) {
        const FamilyTag tag = family == "marked" ? FamilyTag::marked : FamilyTag::plain;
        return word_to_composition(parse_ternary_word(word), tag).parts();
      },
      py::arg("word"), py::arg("family") = "plain",
      "ternary word + family -> mod-2 palindromic composition of even total");

  mod.def(
      "composition_to_word",
      [](const std::vector<std::int64_t>& parts) {
        const WordFamily wf = composition_to_word(to_composition(parts));
        return py::make_tuple(format_ternary_word(wf.word),
                              wf.family == FamilyTag::marked ? "marked" : "plain");
      },
      py::arg("parts"), "inverse of word_to_composition; returns (word, family)");

  mod.def(
      "parity_lift",
      [](const std::vector<std::int64_t>& parts, const py::object& m) {
        return parity_lift(to_composition(parts), to_modulus(m)).parts();
      },
      py::arg("parts"), py::arg("m") = 2,
      "even-total -> odd-total companion: center grows by one");

  mod.def(
      "parity_drop",
      [](const std::vector<std::int64_t>& parts, const py::object& m) {
        return parity_drop(to_composition(parts), to_modulus(m)).parts();
      },
      py::arg("parts"), py::arg("m") = 2, "inverse of parity_lift");

  mod.def(
      "m3_forward",
      [](const std::vector<int>& word) { return m3_forward(TwoOneWord(word)).parts(); },
      py::arg("word"),
      "{1,2}-word starting (1,1) or (2) -> mod-3 palindromic composition");

  mod.def(
      "m3_inverse",
      [](const std::vector<std::int64_t>& parts) {
        return m3_inverse(to_composition(parts)).parts();
      },
      py::arg("parts"), "inverse of m3_forward");

  mod.def(
      "two_one_domain",
      [](int n) {
        py::list out;
        for (const auto& word : two_one_domain(n)) out.append(word.parts());
        return out;
      },
      py::arg("n"), "the 2*fib(n-1) words of total n feeding m3_forward");

  mod.def(
      "involution_partner",
      [](const std::vector<std::int64_t>& parts, const py::object& m) {
        const InvolutionStep step = involution_partner(to_composition(parts), to_modulus(m));
        return py::make_tuple(step.partner.parts(), pair_rule_name(step.rule));
      },
      py::arg("parts"), py::arg("m"),
      "fixed-point-free involution witnessing even counts; returns (partner, rule)");

  mod.def(
      "stabilization_threshold",
      [](int n, int oracle_cap) { return stabilization_threshold(n, oracle_cap); },
      py::arg("n"), py::arg("oracle_cap") = kDefaultOracleCap,
      "least m beyond which pc(n, m) = 2^floor(n/2)");

  mod.def(
      "is_count_stabilized",
      [](int n, const py::object& m) { return is_count_stabilized(n, to_modulus(m)); },
      py::arg("n"), py::arg("m"));

  mod.def(
      "asymptotics",
      [](const py::object& m) {
        const AsymptoticProfile p = asymptotic_profile(to_modulus(m));
        py::dict d;
        d["m"] = p.m.str();
        d["alpha"] = p.alpha;
        d["growth"] = p.growth;
        d["c"] = p.c;
        d["d"] = p.d;
        return d;
      },
      py::arg("m"),
      "growth constants: pc(n,m) ~ (c + (-1)^n d) * growth^n");

  mod.def(
      "verify",
      [](int n_max, int m_max, int oracle_cap) {
        py::list out;
        for (const auto& check : run_verification_suite(n_max, m_max, oracle_cap)) {
          py::dict d;
          d["name"] = check.name;
          d["passed"] = check.passed;
          d["detail"] = check.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max") = 10, py::arg("m_max") = 4,
      py::arg("oracle_cap") = kDefaultOracleCap,
      "run the full property suite; returns one dict per property");

  mod.def(
      "verify_goldens",
      []() {
        py::dict d;
        d["table1"] = golden_dict(verify_table1());
        d["table2"] = golden_dict(verify_table2());
        return d;
      },
      "regenerate both fixture tables from the algorithms and diff");
}
