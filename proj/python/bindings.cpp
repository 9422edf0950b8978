/*
 * Copyright (C) 2026 The flipcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flipcheck/cli.hpp"
#include "flipcheck/designs.hpp"
#include "flipcheck/oracles.hpp"
#include "flipcheck/pit.hpp"
#include "flipcheck/queries.hpp"

namespace py = pybind11;
using namespace flipcheck;

namespace {

// Python ints cross the boundary as decimal strings.
BigInt from_py(const py::int_& v) { return parse_bigint(py::str(py::handle(v)).cast<std::string>()); }

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::vector<BigInt> from_py_list(const std::vector<py::int_>& xs) {
  std::vector<BigInt> out;
  for (const auto& x : xs) out.push_back(from_py(x));
  return out;
}

py::list to_py_list(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

MatrixAssignment square_matrix(const std::vector<std::vector<py::int_>>& rows) {
  std::vector<BigInt> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ShapeMismatch("matrix must be square");
    for (const auto& x : row) entries.push_back(from_py(x));
  }
  return MatrixAssignment(Shape::square(rows.size()), std::move(entries));
}

DesignParams design_params(std::size_t l, std::size_t r, std::size_t k_cap, std::size_t rows) {
  DesignParams p;
  p.l = l;
  p.r = r;
  p.k_cap = k_cap;
  p.m_prime = rows;
  return p;
}

std::vector<std::vector<std::size_t>> rows_as_sets(const Design& d) {
  std::vector<std::vector<std::size_t>> out;
  for (auto row : d.rows) {
    std::vector<std::size_t> set;
    for (std::size_t e = 0; e < 64; ++e)
      if ((row >> e) & 1) set.push_back(e + 1);
    out.push_back(std::move(set));
  }
  return out;
}

Design design_from_sets(std::size_t l, std::size_t r, std::size_t k_cap,
                        const std::vector<std::vector<std::size_t>>& sets) {
  Design d{design_params(l, r, k_cap, sets.size()), {}};
  for (const auto& set : sets) {
    std::uint64_t mask = 0;
    for (auto e : set) {
      if (e < 1 || e > l || e > 64) throw IndexOutOfRange("element " + std::to_string(e) + " outside the universe");
      mask |= std::uint64_t{1} << (e - 1);
    }
    d.rows.push_back(mask);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic-circuit verification, identity testing and design tools";

  static py::exception<Error> base(m, "FlipcheckError");
  static py::exception<ConfigError> config(m, "ConfigError", PyExc_ValueError);
  static py::exception<BudgetError> budget(m, "BudgetError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      config(e.what());
    } catch (const BudgetError& e) {
      budget(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::class_<Circuit>(m, "Circuit")
      .def_static("parse", [](const std::string& text) { return Circuit::parse(text); })
      .def_static("load", &Circuit::load)
      .def("serialize", &Circuit::serialize)
      .def_property_readonly("num_inputs", &Circuit::num_inputs)
      .def_property_readonly("size", &Circuit::size)
      .def_property_readonly("bitsize", &Circuit::bitsize)
      .def_property_readonly("formal_degree", &Circuit::formal_degree)
      .def("evaluate",
           [](const Circuit& c, const std::vector<py::int_>& point) {
             const auto xs = from_py_list(point);
             return to_py(evaluate(c, std::span<const BigInt>(xs)));
           })
      .def("expand", [](const Circuit& c, std::size_t max_terms) { return expand_to_polynomial(c, max_terms).to_string(); },
           py::arg("max_terms") = 1u << 20)
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit inputs=" + std::to_string(c.num_inputs()) + " size=" + std::to_string(c.size()) + ">";
      });

  m.def("permanent", [](const std::vector<std::vector<py::int_>>& rows) { return to_py(permanent(square_matrix(rows))); });
  m.def("determinant",
        [](const std::vector<std::vector<py::int_>>& rows) { return to_py(determinant(square_matrix(rows))); });
  m.def("efun", [](std::size_t mm, std::size_t k, const std::vector<py::int_>& entries) {
    return to_py(efun(MatrixAssignment(Shape::block(mm, k), from_py_list(entries))));
  });
  m.def("efun_degree", &efun_degree);
  m.def("permanent_circuit", &permanent_circuit);
  m.def("determinant_circuit", &determinant_circuit);
  m.def("efun_circuit", [](std::size_t mm, std::size_t k) { return efun_circuit(mm, k); });

  m.def(
      "verify_perm",
      [](const Circuit& c, std::size_t n, std::uint64_t seed, bool exhaustive) {
        py::dict out;
        if (exhaustive) {
          const auto v = verify_claims_perm_exhaustive(c, n, true);
          out["accept"] = v.accept;
          out["failed"] = v.failed;
          return out;
        }
        const auto rep = verify_claims_perm(c, n, VerifyConfig{}, seed);
        out["accept"] = rep.accept;
        out["transcript"] = rep.transcript;
        out["error_bound"] = rep.error_bound;
        return out;
      },
      py::arg("circuit"), py::arg("n"), py::arg("seed") = 1, py::arg("exhaustive") = false);
  m.def(
      "verify_efun",
      [](const Circuit& c, std::size_t mm, std::size_t k, std::uint64_t seed) {
        const auto rep = verify_claims_efun(c, mm, k, VerifyConfig{}, seed);
        py::dict out;
        out["accept"] = rep.accept;
        out["transcript"] = rep.transcript;
        return out;
      },
      py::arg("circuit"), py::arg("m"), py::arg("k"), py::arg("seed") = 1);

  m.def(
      "pit_random",
      [](const Circuit& c, std::size_t trials, std::uint64_t seed, const py::int_& box) {
        const auto r = pit_random(c, trials, seed, from_py(box));
        return py::make_tuple(r.nonzero, to_py_list(r.witness));
      },
      py::arg("circuit"), py::arg("trials") = 20, py::arg("seed") = 1, py::arg("box") = 1024);
  m.def("count_circuits", [](const std::string& cls) { return count_circuits(ClassParams::parse(cls)); });

  m.def(
      "build_design",
      [](std::size_t l, std::size_t r, std::size_t k_cap, std::size_t rows, std::uint64_t seed) {
        return rows_as_sets(build_design_greedy(design_params(l, r, k_cap, rows), seed));
      },
      py::arg("l"), py::arg("r"), py::arg("k_cap"), py::arg("rows"), py::arg("seed") = 1);
  m.def("verify_design", [](std::size_t l, std::size_t r, std::size_t k_cap,
                            const std::vector<std::vector<std::size_t>>& sets) {
    const auto v = verify_design(design_from_sets(l, r, k_cap, sets));
    return py::make_tuple(v.valid(), v.describe());
  });
  m.def("encode_design", [](std::size_t l, std::size_t r, std::size_t k_cap,
                            const std::vector<std::vector<std::size_t>>& sets) {
    const auto bytes = encode_design(design_from_sets(l, r, k_cap, sets));
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  });
  m.def("decode_design", [](const py::bytes& data) {
    const std::string s = data;
    const auto d = decode_design(std::vector<std::uint8_t>(s.begin(), s.end()));
    py::dict out;
    out["l"] = d.params.l;
    out["r"] = d.params.r;
    out["k_cap"] = d.params.k_cap;
    out["rows"] = rows_as_sets(d);
    return out;
  });
  m.def("count_designs", [](std::size_t l, std::size_t r, std::size_t k_cap, std::size_t rows) {
    return to_py(count_designs_exhaustive(design_params(l, r, k_cap, rows)));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
