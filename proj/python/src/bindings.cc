// Copyright 2026 The submax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON in, JSON out: the Python side parses with the json module.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "submax/cli_ops.h"
#include "submax/instance.h"
#include "submax/reference.h"

namespace py = pybind11;
using nlohmann::json;

namespace {

submax::Instance Parse(const std::string& text) {
  return submax::InstanceFromJson(json::parse(text));
}

std::string Generate(const std::string& matroid, const std::string& function,
                     int n, uint64_t seed) {
  submax::GenOptions o;
  o.matroid = submax::ParseMatroidKind(matroid);
  o.function = submax::ParseFunctionKind(function);
  o.n = n;
  o.seed = seed;
  return submax::InstanceToJson(submax::GenerateInstance(o)).dump();
}

std::string Run(const std::string& instance, const std::string& algorithm,
                double epsilon, uint64_t seed, int threads) {
  submax::RunOptions o;
  o.algorithm = algorithm;
  o.config.epsilon = epsilon;
  o.config.seed = seed;
  o.config.threads = threads;
  const submax::Instance inst = Parse(instance);
  py::gil_scoped_release release;
  return submax::RunInstance(inst, o).dump();
}

std::string Verify(const std::string& instance, const std::string& result) {
  const submax::VerifyReport rep =
      submax::VerifyResult(Parse(instance), json::parse(result));
  return json{{"ok", rep.ok}, {"failures", rep.failures},
              {"details", rep.details}}
      .dump();
}

py::tuple BruteForce(const std::string& instance) {
  const submax::Instance inst = Parse(instance);
  const submax::reference::OptResult r =
      submax::reference::BruteForceOpt(inst.function, inst.matroid);
  return py::make_tuple(r.set, r.value);
}

}  // namespace

PYBIND11_MODULE(_submax, m) {
  py::register_exception<submax::DomainError>(m, "DomainError",
                                              PyExc_ValueError);
  m.def("generate", &Generate, py::arg("matroid"), py::arg("function"),
        py::arg("n"), py::arg("seed") = 1);
  m.def("run", &Run, py::arg("instance"), py::arg("algorithm") = "full",
        py::arg("epsilon") = 0.2, py::arg("seed") = 1, py::arg("threads") = 1);
  m.def("verify", &Verify, py::arg("instance"), py::arg("result"));
  m.def("brute_force_opt", &BruteForce, py::arg("instance"));
}
