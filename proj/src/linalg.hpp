// Copyright 2026 The scheme-explorer Authors
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

// Small dense linear algebra over a field Domain.  Internal.

#pragma once

#include <optional>
#include <vector>

#include "schemex/arith.hpp"

namespace schemex::linalg {

// First linear dependency among the columns: coefficients c, zero past the
// first dependent column j, with c_j = 1 and sum c_i v_i = 0.
inline std::optional<std::vector<Scalar>> first_dependency(const Domain& f, const std::vector<std::vector<Scalar>>& cols) {
  // Row-reduce incrementally: keep an echelon basis with back-expressions.
  struct Row {
    std::vector<Scalar> v;
    std::vector<Scalar> combo;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  const std::size_t n = cols.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> v = cols[j];
    std::vector<Scalar> combo(n, f.zero());
    combo[j] = f.one();
    for (auto& b : basis) {
      Scalar c = v[b.pivot];
      if (f.is_zero(c)) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], f.mul(c, b.v[i]));
      for (std::size_t i = 0; i < n; ++i) combo[i] = f.sub(combo[i], f.mul(c, b.combo[i]));
    }
    std::size_t pivot = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!f.is_zero(v[i])) {
        pivot = i;
        break;
      }
    if (pivot == v.size()) return combo;
    Scalar inv = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    basis.push_back(Row{v, combo, pivot});
  }
  return std::nullopt;
}

}  // namespace schemex::linalg
