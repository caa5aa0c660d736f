// Copyright 2026 The realvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "realvar/corpus.hpp"

#include "realvar/io.hpp"

namespace realvar {

const std::vector<BenchSystem>& corpus() {
  static const std::vector<BenchSystem> systems = {
      {"ex45", "monomial ideal with the origin as only root",
       "vars x1 x2;\nx1^2;\nx2^2;\nx1*x2;\n"},
      {"ex46", "single sum of squares, complex variety is two lines",
       "vars x1 x2;\nx1^2 + x2^2;\n"},
      {"cox98", "three quadrics and cubics in three variables, 2 real of 8 complex roots",
       "vars x1 x2 x3;\n"
       "x1^2 - 2*x1*x3 + 5;\n"
       "x1*x2^2 + x2*x3 + 1;\n"
       "3*x2^2 - 8*x1*x3;\n"},
      {"cox98_posdim", "cox98 generators times 1 + |x|^2, positive-dimensional complex variety",
       "vars x1 x2 x3;\n"
       "(x1^2 - 2*x1*x3 + 5) * (1 + x1^2 + x2^2 + x3^2);\n"
       "(x1*x2^2 + x2*x3 + 1) * (1 + x1^2 + x2^2 + x3^2);\n"
       "(3*x2^2 - 8*x1*x3) * (1 + x1^2 + x2^2 + x3^2);\n"},
      {"cox3", "two variables with an 8-fold root at the origin",
       "vars x1 x2;\n"
       "x2^4*x1 + 3*x1^3 - x2^4 - 3*x1^2;\n"
       "x1^2*x2 - 2*x1^2;\n"
       "2*x2^4*x1 - x1^3 - 2*x2^4 + x1^2;\n"},
      {"gauss", "two-node Gaussian quadrature conditions",
       "vars x1 x2 x3 x4;\n"
       "x1 + x2 - 2;\n"
       "x1*x3 + x2*x4;\n"
       "x1*x3^2 + x2*x4^2 - 2/3;\n"
       "x1*x3^3 + x2*x4^3;\n"},
      {"katsura5", "Katsura system in six variables, 12 real of 32 complex roots",
       "vars x1 x2 x3 x4 x5 x6;\n"
       "2*x6^2 + 2*x5^2 + 2*x4^2 + 2*x3^2 + 2*x2^2 + x1^2 - x1;\n"
       "x6*x5 + x5*x4 + 2*x4*x3 + 2*x3*x2 + 2*x2*x1 - x2;\n"
       "2*x6*x4 + 2*x5*x3 + 2*x4*x2 + x2^2 + 2*x3*x1 - x3;\n"
       "2*x6*x3 + 2*x5*x2 + 2*x3*x2 + 2*x4*x1 - x4;\n"
       "x3^2 + 2*x6*x1 + 2*x5*x1 + 2*x4*x1 - x5;\n"
       "2*x6 + 2*x5 + 2*x4 + 2*x3 + 2*x2 + x1 - 1;\n"},
      {"linear1", "single linear equation", "vars x1;\nx1 - 1;\n"},
      {"twopoints", "two real points on a line", "vars x1;\nx1^2 - 1;\n"},
      {"noreal1", "no real roots in one variable", "vars x1;\nx1^2 + 1;\n"},
      {"noreal2", "no real roots in two variables", "vars x1 x2;\nx1^2 + x2^2 + 1;\n"},
  };
  return systems;
}

std::optional<BenchSystem> find_bench(const std::string& name) {
  for (const auto& b : corpus())
    if (b.name == name) return b;
  return std::nullopt;
}

PolySystem load_bench(const std::string& name) {
  auto b = find_bench(name);
  if (!b) throw Error("unknown benchmark system '" + name + "'");
  return parse_system(b->text);
}

}  // namespace realvar
