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

// Generators and oracles shared by the sheaf unit tests and the acceptance
// runner.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "schemex/finite_sheaf.hpp"
#include "schemex/presented.hpp"

namespace schemex::testing {

// Random finite space from a random preorder: closure[x] = specializations.
inline FiniteSpace random_space(std::mt19937_64& g, std::size_t n) {
  std::vector<OpenSet> cl(n);
  for (std::size_t x = 0; x < n; ++x) {
    cl[x] = OpenSet{1} << x;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && g() % 4 == 0) cl[x] |= OpenSet{1} << y;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (cl[x] >> k & 1) cl[x] |= cl[k];
  std::vector<std::string> pts;
  for (std::size_t x = 0; x < n; ++x) pts.push_back("p" + std::to_string(x));
  return FiniteSpace::from_closures(pts, cl);
}

// F(U) = projection to U of a random set R of tuples; over the whole space
// each tuple may carry one of two tags, dropped on restriction, so the
// presheaf is usually not separated.
inline FinitePresheaf random_presheaf(std::mt19937_64& g, const FiniteSpace& sp) {
  const std::size_t n = sp.size();
  std::vector<unsigned> width(n);
  std::size_t total = 1;
  for (auto& w : width) {
    w = 1 + static_cast<unsigned>(g() % 2);
    total *= w;
  }
  std::vector<std::vector<unsigned>> rel;
  for (std::size_t code = 0; code < total; ++code) {
    if (g() % 3 == 0 && !(code + 1 == total && rel.empty())) continue;
    std::vector<unsigned> t;
    std::size_t c = code;
    for (auto w : width) {
      t.push_back(static_cast<unsigned>(c % w));
      c /= w;
    }
    rel.push_back(t);
  }
  bool tagged = g() % 2 == 0;
  const auto& opens = sp.opens();
  auto label = [&](OpenSet u, const std::vector<unsigned>& t) {
    std::string s;
    for (std::size_t x = 0; x < n; ++x)
      if (u >> x & 1) s += std::to_string(t[x]);
    return s;
  };
  std::vector<std::vector<std::string>> secs(opens.size());
  for (std::size_t u = 0; u < opens.size(); ++u) {
    std::set<std::string> s;
    for (auto& t : rel) {
      if (tagged && opens[u] == sp.whole()) {
        s.insert(label(opens[u], t) + "a");
        s.insert(label(opens[u], t) + "b");
      } else {
        s.insert("[" + label(opens[u], t) + "]");
      }
    }
    secs[u].assign(s.begin(), s.end());
  }
  auto restrict = [&](std::size_t u, std::size_t v, std::size_t s) -> std::size_t {
    std::string lab = secs[u][s];
    std::string digits = lab[0] == '[' ? lab.substr(1, lab.size() - 2) : lab.substr(0, lab.size() - 1);
    std::vector<unsigned> t(n);
    std::size_t k = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (opens[u] >> x & 1) t[x] = static_cast<unsigned>(digits[k++] - '0');
    std::string want = (tagged && opens[v] == sp.whole()) ? lab : "[" + label(opens[v], t) + "]";
    auto it = std::find(secs[v].begin(), secs[v].end(), want);
    return static_cast<std::size_t>(it - secs[v].begin());
  };
  return FinitePresheaf(sp, secs, restrict);
}

inline FinitePresheaf constant_presheaf(const FiniteSpace& sp, std::size_t k) {
  std::vector<std::vector<std::string>> secs(sp.opens().size());
  for (auto& s : secs)
    for (std::size_t a = 0; a < k; ++a) s.push_back(std::to_string(a));
  return FinitePresheaf(sp, secs, [](std::size_t, std::size_t, std::size_t s) { return s; });
}

// A_f as fractions a / f^k, k < |A|, identified when f^m (a f^l - b f^k) = 0.
inline std::size_t fraction_oracle(const FiniteRing& a, std::size_t f) {
  const std::size_t n = a.size();
  const unsigned big = static_cast<unsigned>(n);
  std::vector<std::pair<std::size_t, unsigned>> reps;
  for (std::size_t x = 0; x < n; ++x)
    for (unsigned k = 0; k < big; ++k) {
      bool fresh = true;
      for (auto& [y, l] : reps) {
        std::size_t d = a.sub(a.mul[x][a.pow(f, l)], a.mul[y][a.pow(f, k)]);
        if (a.mul[a.pow(f, big)][d] == a.zero) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.emplace_back(x, k);
    }
  return reps.size();
}

inline std::vector<FiniteRing> example_rings() {
  return {FiniteRing::integers_mod(12), FiniteRing::integers_mod(30),
          FiniteRing::from_algebra(parse_algebra("GF(5)[e]/(e^2)")),
          FiniteRing::product(FiniteRing::integers_mod(7), FiniteRing::integers_mod(5))};
}

}  // namespace schemex::testing
