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

#include "schemex/finite_sheaf.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "schemex/groebner.hpp"
#include "schemex/spectrum.hpp"

namespace schemex {

namespace {

constexpr std::size_t kMaxPoints = 20;
constexpr std::size_t kMaxRingSize = 4096;

bool inside(OpenSet v, OpenSet u) { return (v & ~u) == 0; }

std::string join_labels(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + labels[idx[k]];
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Spaces

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<OpenSet> opens) : points_(std::move(points)) {
  if (points_.size() > kMaxPoints) fail(ErrorCode::InvalidArgument, "finite spaces are limited to 20 points");
  std::set<OpenSet> fam(opens.begin(), opens.end());
  const OpenSet all = whole();
  if (!fam.count(0) || !fam.count(all)) fail(ErrorCode::InvalidArgument, "the opens must contain the empty set and the whole space");
  for (OpenSet u : fam) {
    if (!inside(u, all)) fail(ErrorCode::InvalidArgument, "an open mentions a point outside the space");
    for (OpenSet v : fam)
      if (!fam.count(u | v) || !fam.count(u & v))
        fail(ErrorCode::InvalidArgument, "the opens are not closed under union and intersection");
  }
  opens_.assign(fam.begin(), fam.end());
  std::stable_sort(opens_.begin(), opens_.end(), [](OpenSet a, OpenSet b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::size_t i = 0; i < opens_.size(); ++i) index_[opens_[i]] = i;
  for (std::size_t x = 0; x < points_.size(); ++x) {
    OpenSet m = all;
    for (OpenSet u : opens_)
      if (u >> x & 1) m &= u;
    minimal_.push_back(m);
  }
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> points) {
  if (points.size() > kMaxPoints) fail(ErrorCode::InvalidArgument, "finite spaces are limited to 20 points");
  std::vector<OpenSet> opens;
  for (OpenSet u = 0; u < (OpenSet{1} << points.size()); ++u) opens.push_back(u);
  return FiniteSpace(std::move(points), opens);
}

FiniteSpace FiniteSpace::from_closures(std::vector<std::string> points, const std::vector<OpenSet>& closure) {
  const std::size_t n = points.size();
  if (n > kMaxPoints || closure.size() != n) fail(ErrorCode::InvalidArgument, "one closure per point, at most 20 points");
  std::vector<OpenSet> opens;
  for (OpenSet u = 0; u < (OpenSet{1} << n); ++u) {
    bool open = true;
    // y in U and y a specialization of x force x in U
    for (std::size_t x = 0; x < n && open; ++x)
      if (!(u >> x & 1) && (closure[x] & u)) open = false;
    if (open) opens.push_back(u);
  }
  return FiniteSpace(std::move(points), opens);
}

std::size_t FiniteSpace::open_index(OpenSet u) const {
  auto it = index_.find(u);
  if (it == index_.end()) fail(ErrorCode::InvalidArgument, describe(u) + " is not open");
  return it->second;
}

std::vector<std::vector<std::size_t>> FiniteSpace::covers(OpenSet u) const {
  std::vector<std::vector<std::size_t>> out;
  if (u == 0) return {{}};
  std::vector<std::size_t> in;
  for (std::size_t k = 0; k < opens_.size(); ++k)
    if (opens_[k] != 0 && inside(opens_[k], u)) in.push_back(k);
  if (in.size() <= 12) {
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << in.size()); ++sub) {
      OpenSet uni = 0;
      std::vector<std::size_t> c;
      for (std::size_t k = 0; k < in.size(); ++k)
        if (sub >> k & 1) {
          uni |= opens_[in[k]];
          c.push_back(in[k]);
        }
      if (uni == u) out.push_back(std::move(c));
    }
    return out;
  }
  std::set<std::size_t> mins;
  for (std::size_t x = 0; x < points_.size(); ++x)
    if (u >> x & 1) mins.insert(open_index(minimal_[x]));
  out.emplace_back(mins.begin(), mins.end());
  for (std::size_t a = 0; a < in.size(); ++a)
    for (std::size_t b = a + 1; b < in.size(); ++b)
      if ((opens_[in[a]] | opens_[in[b]]) == u) out.push_back({in[a], in[b]});
  return out;
}

std::string FiniteSpace::describe(OpenSet u) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t x = 0; x < points_.size(); ++x)
    if (u >> x & 1) {
      s += (first ? "" : ",") + points_[x];
      first = false;
    }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Finite rings

std::size_t FiniteRing::neg(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (add[a][b] == zero) return b;
  fail(ErrorCode::InvalidArgument, "no additive inverse in " + name);
}

std::size_t FiniteRing::pow(std::size_t a, unsigned e) const {
  std::size_t r = one;
  for (unsigned k = 0; k < e; ++k) r = mul[r][a];
  return r;
}

std::optional<std::size_t> FiniteRing::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (mul[a][b] == one) return b;
  return std::nullopt;
}

std::vector<std::size_t> FiniteRing::units() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (is_unit(a)) out.push_back(a);
  return out;
}

std::size_t FiniteRing::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) fail(ErrorCode::InvalidArgument, "no element " + label + " in " + name);
  return static_cast<std::size_t>(it - labels.begin());
}

bool FiniteRing::is_ring() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (add[a][zero] != a || mul[a][one] != a) return false;
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a] || mul[a][b] != mul[b][a]) return false;
      has_neg = has_neg || add[a][b] == zero;
      for (std::size_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) return false;
      }
    }
    if (!has_neg) return false;
  }
  return true;
}

FiniteRing FiniteRing::integers_mod(long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "ZZ/n needs n >= 1");
  FiniteRing r;
  r.name = "ZZ/" + std::to_string(n);
  auto un = static_cast<std::size_t>(n);
  r.add.assign(un, std::vector<std::size_t>(un));
  r.mul = r.add;
  for (std::size_t a = 0; a < un; ++a) {
    r.labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < un; ++b) {
      r.add[a][b] = (a + b) % un;
      r.mul[a][b] = (a * b) % un;
    }
  }
  r.one = 1 % un;
  return r;
}

FiniteRing FiniteRing::from_algebra(const PresentedAlgebra& a) {
  const Domain& k = a.base();
  if (!k.is_finite()) fail(ErrorCode::InfiniteSpectrum, a.to_string() + " is not a finite ring");
  FiniteRing r;
  r.name = a.to_string();
  std::vector<Poly> elems;
  std::vector<std::vector<Scalar>> coords;
  std::vector<Monomial> basis;
  auto scalars = k.elements();
  if (a.ring().nvars() == 0) {
    basis.push_back(Monomial{});
    for (auto& c : scalars) coords.push_back({c});
  } else {
    if (!k.is_field()) fail(ErrorCode::Unsupported, "finite rings over " + k.name() + " with variables are not supported");
    auto sm = a.groebner_basis().standard_monomials();
    if (!sm) fail(ErrorCode::InfiniteSpectrum, a.to_string() + " is infinite");
    basis = *sm;
    double est = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) est *= static_cast<double>(scalars.size());
    if (est > kMaxRingSize) fail(ErrorCode::Unsupported, a.to_string() + " has too many elements to tabulate");
    coords.push_back({});
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<std::vector<Scalar>> next;
      for (auto& c : coords)
        for (auto& s : scalars) {
          auto w = c;
          w.push_back(s);
          next.push_back(std::move(w));
        }
      coords = std::move(next);
    }
  }
  std::map<std::vector<std::string>, std::size_t> index;
  auto key = [&](const std::vector<Scalar>& c) {
    std::vector<std::string> kk;
    for (auto& s : c) kk.push_back(k.to_string(s));
    return kk;
  };
  for (auto& c : coords) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i) terms.push_back(Term{basis[i], c[i]});
    Poly p = Poly::from_terms(a.ring(), std::move(terms));
    index[key(c)] = elems.size();
    r.labels.push_back(p.to_string());
    elems.push_back(p);
  }
  auto locate = [&](const Poly& p) {
    Poly nf = a.normal_form(p);
    std::vector<Scalar> c;
    for (auto& m : basis) c.push_back(nf.coeff(m));
    return index.at(key(c));
  };
  const std::size_t n = elems.size();
  r.add.assign(n, std::vector<std::size_t>(n));
  r.mul = r.add;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      r.add[i][j] = r.add[j][i] = locate(elems[i] + elems[j]);
      r.mul[i][j] = r.mul[j][i] = locate(elems[i] * elems[j]);
    }
  r.zero = locate(Poly(a.ring()));
  r.one = locate(Poly::from_int(a.ring(), 1));
  r.polys = std::move(elems);
  return r;
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b) {
  FiniteRing r;
  r.name = a.name + " x " + b.name;
  const std::size_t n = a.size() * b.size();
  auto idx = [&](std::size_t x, std::size_t y) { return x * b.size() + y; };
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) r.labels.push_back("(" + a.labels[x] + "," + b.labels[y] + ")");
  r.add.assign(n, std::vector<std::size_t>(n));
  r.mul = r.add;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t x1 = i / b.size(), y1 = i % b.size(), x2 = j / b.size(), y2 = j % b.size();
      r.add[i][j] = idx(a.add[x1][x2], b.add[y1][y2]);
      r.mul[i][j] = idx(a.mul[x1][x2], b.mul[y1][y2]);
    }
  r.zero = idx(a.zero, b.zero);
  r.one = idx(a.one, b.one);
  return r;
}

std::pair<FiniteRing, std::vector<std::size_t>> FiniteRing::quotient(const FiniteRing& a, const std::vector<bool>& ideal) {
  const std::size_t n = a.size();
  std::vector<std::size_t> cls(n, n), reps;
  std::vector<std::size_t> negs(n);
  for (std::size_t x = 0; x < n; ++x) negs[x] = a.neg(x);
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != n) continue;
    for (std::size_t y = x; y < n; ++y)
      if (cls[y] == n && ideal[a.add[x][negs[y]]]) cls[y] = reps.size();
    reps.push_back(x);
  }
  FiniteRing q;
  q.name = a.name;
  const std::size_t m = reps.size();
  q.add.assign(m, std::vector<std::size_t>(m));
  q.mul = q.add;
  for (std::size_t i = 0; i < m; ++i) {
    q.labels.push_back(a.labels[reps[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      q.add[i][j] = cls[a.add[reps[i]][reps[j]]];
      q.mul[i][j] = cls[a.mul[reps[i]][reps[j]]];
    }
  }
  q.zero = cls[a.zero];
  q.one = cls[a.one];
  for (auto r : reps)
    if (!a.polys.empty()) q.polys.push_back(a.polys[r]);
  return {q, cls};
}

bool is_ring_homomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<std::size_t>& map) {
  if (map.size() != a.size() || map[a.one] != b.one) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (map[a.add[x][y]] != b.add[map[x]][map[y]] || map[a.mul[x][y]] != b.mul[map[x]][map[y]]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Presheaves

FinitePresheaf::FinitePresheaf(FiniteSpace space, std::vector<std::vector<std::string>> sections, const Restriction& restrict)
    : space_(std::move(space)), sections_(std::move(sections)) {
  const auto& opens = space_.opens();
  const std::size_t m = opens.size();
  if (sections_.size() != m) fail(ErrorCode::InvalidArgument, "one section list per open is required");
  restrict_.assign(m, std::vector<std::vector<std::size_t>>(m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      if (!inside(opens[v], opens[u])) continue;
      for (std::size_t s = 0; s < sections_[u].size(); ++s) {
        std::size_t t = restrict(u, v, s);
        if (t >= sections_[v].size()) fail(ErrorCode::InvalidArgument, "restriction lands outside the sections");
        restrict_[u][v].push_back(t);
      }
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t s = 0; s < sections_[u].size(); ++s) {
      if (restrict_[u][u][s] != s) fail(ErrorCode::InvalidArgument, "restriction to the same open is not the identity");
      for (std::size_t v = 0; v < m; ++v) {
        if (!inside(opens[v], opens[u])) continue;
        for (std::size_t w = 0; w < m; ++w)
          if (inside(opens[w], opens[v]) && restrict_[v][w][restrict_[u][v][s]] != restrict_[u][w][s])
            fail(ErrorCode::InvalidArgument, "restrictions do not compose on " + space_.describe(opens[u]));
      }
    }
}

FinitePresheaf::FinitePresheaf(FiniteSpace space, std::vector<FiniteRing> rings, const Restriction& restrict)
    : FinitePresheaf(
          space,
          [&] {
            std::vector<std::vector<std::string>> s;
            for (auto& r : rings) s.push_back(r.labels);
            return s;
          }(),
          restrict) {
  rings_ = std::move(rings);
  const auto& opens = space_.opens();
  for (std::size_t u = 0; u < opens.size(); ++u)
    for (std::size_t v = 0; v < opens.size(); ++v)
      if (inside(opens[v], opens[u]) && !is_ring_homomorphism(rings_[u], rings_[v], restrict_[u][v]))
        fail(ErrorCode::InvalidArgument, "a restriction is not a ring homomorphism");
}

std::size_t FinitePresheaf::restrict(std::size_t u, std::size_t v, std::size_t s) const {
  if (restrict_[u][v].empty() && !sections_[u].empty())
    fail(ErrorCode::InvalidArgument, space_.describe(space_.opens()[v]) + " is not inside " + space_.describe(space_.opens()[u]));
  return restrict_[u][v][s];
}

std::vector<std::vector<std::size_t>> FinitePresheaf::compatible_families(const std::vector<std::size_t>& cover) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  const auto& opens = space_.opens();
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cover.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = 0; s < sections_[cover[k]].size(); ++s) {
      bool ok = true;
      for (std::size_t l = 0; l < k && ok; ++l) {
        std::size_t w = space_.open_index(opens[cover[k]] & opens[cover[l]]);
        ok = restrict_[cover[k]][w][s] == restrict_[cover[l]][w][cur[l]];
      }
      if (!ok) continue;
      cur.push_back(s);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<std::string> FinitePresheaf::sheaf_defect() const {
  const auto& opens = space_.opens();
  for (std::size_t u = 0; u < opens.size(); ++u)
    for (auto& cover : space_.covers(opens[u])) {
      auto fams = compatible_families(cover);
      std::set<std::vector<std::size_t>> images;
      for (std::size_t s = 0; s < sections_[u].size(); ++s) {
        std::vector<std::size_t> img;
        for (auto c : cover) img.push_back(restrict_[u][c][s]);
        images.insert(img);
      }
      std::string where = space_.describe(opens[u]) + " with a cover of " + std::to_string(cover.size()) + " opens";
      if (images.size() != sections_[u].size()) return "two sections over " + where + " agree locally";
      if (images.size() != fams.size()) return "a compatible family over " + where + " does not glue";
    }
  return std::nullopt;
}

bool FinitePresheaf::is_sheaf() const { return !sheaf_defect().has_value(); }

// ---------------------------------------------------------------------------
// Sheafification

Sheafification sheafify(const FinitePresheaf& f) {
  const FiniteSpace& sp = f.space();
  const auto& opens = sp.opens();
  const std::size_t m = opens.size();
  std::vector<std::vector<std::vector<std::size_t>>> fams(m);  // per open, germ families over its points
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(m);
  std::vector<std::vector<std::size_t>> pts(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t x = 0; x < sp.size(); ++x)
      if (opens[u] >> x & 1) pts[u].push_back(x);
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == pts[u].size()) {
        index[u][cur] = fams[u].size();
        fams[u].push_back(cur);
        return;
      }
      std::size_t x = pts[u][k];
      std::size_t ux = f.stalk_open(x);
      for (std::size_t g = 0; g < f.sections(ux).size(); ++g) {
        bool ok = true;
        // g_y = g_x | U_y whenever y lies in U_x, in either direction
        for (std::size_t l = 0; l < k && ok; ++l) {
          std::size_t y = pts[u][l];
          std::size_t uy = f.stalk_open(y);
          if (sp.minimal_open(x) >> y & 1) ok = ok && f.restrict(ux, uy, g) == cur[l];
          if (sp.minimal_open(y) >> x & 1) ok = ok && f.restrict(uy, ux, cur[l]) == g;
        }
        if (!ok) continue;
        cur.push_back(g);
        self(self, k + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  auto restriction = [&](std::size_t u, std::size_t v, std::size_t s) {
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < pts[u].size(); ++k)
      if (opens[v] >> pts[u][k] & 1) sub.push_back(fams[u][s][k]);
    return index[v].at(sub);
  };
  std::vector<std::vector<std::size_t>> comparison(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t s = 0; s < f.sections(u).size(); ++s) {
      std::vector<std::size_t> germs;
      for (auto x : pts[u]) germs.push_back(f.restrict(u, f.stalk_open(x), s));
      comparison[u].push_back(index[u].at(germs));
    }
  if (!f.has_rings()) {
    std::vector<std::vector<std::string>> labels(m);
    for (std::size_t u = 0; u < m; ++u)
      for (auto& fam : fams[u]) {
        std::vector<std::string> parts;
        for (std::size_t k = 0; k < fam.size(); ++k) parts.push_back(f.sections(f.stalk_open(pts[u][k]))[fam[k]]);
        std::vector<std::size_t> ids(parts.size());
        for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
        labels[u].push_back(join_labels(parts, ids));
      }
    return Sheafification{FinitePresheaf(sp, labels, restriction), comparison};
  }
  std::vector<FiniteRing> rings(m);
  for (std::size_t u = 0; u < m; ++u) {
    FiniteRing& r = rings[u];
    r.name = "Gamma(" + sp.describe(opens[u]) + ")";
    const std::size_t n = fams[u].size();
    auto combine = [&](std::size_t a, std::size_t b, bool times) {
      std::vector<std::size_t> c;
      for (std::size_t k = 0; k < pts[u].size(); ++k) {
        const FiniteRing& st = f.ring(f.stalk_open(pts[u][k]));
        c.push_back(times ? st.mul[fams[u][a][k]][fams[u][b][k]] : st.add[fams[u][a][k]][fams[u][b][k]]);
      }
      return index[u].at(c);
    };
    r.add.assign(n, std::vector<std::size_t>(n));
    r.mul = r.add;
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::string> parts;
      for (std::size_t k = 0; k < pts[u].size(); ++k) parts.push_back(f.ring(f.stalk_open(pts[u][k])).labels[fams[u][a][k]]);
      std::vector<std::size_t> ids(parts.size());
      for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
      r.labels.push_back(join_labels(parts, ids));
      for (std::size_t b = 0; b < n; ++b) {
        r.add[a][b] = combine(a, b, false);
        r.mul[a][b] = combine(a, b, true);
      }
    }
    std::vector<std::size_t> z, o;
    for (auto x : pts[u]) {
      z.push_back(f.ring(f.stalk_open(x)).zero);
      o.push_back(f.ring(f.stalk_open(x)).one);
    }
    r.zero = index[u].at(z);
    r.one = index[u].at(o);
  }
  return Sheafification{FinitePresheaf(sp, std::move(rings), restriction), comparison};
}

bool Sheafification::stalk_bijective(std::size_t x) const {
  std::size_t u = sheaf.stalk_open(x);
  const auto& pi = comparison[u];
  std::set<std::size_t> img(pi.begin(), pi.end());
  return img.size() == pi.size() && img.size() == sheaf.sections(u).size();
}

// ---------------------------------------------------------------------------
// Images

bool PresheafMorphism::is_natural() const {
  const auto& opens = source.space().opens();
  if (maps.size() != opens.size()) return false;
  for (std::size_t u = 0; u < opens.size(); ++u) {
    if (maps[u].size() != source.sections(u).size()) return false;
    for (std::size_t v = 0; v < opens.size(); ++v) {
      if (!inside(opens[v], opens[u])) continue;
      for (std::size_t s = 0; s < maps[u].size(); ++s)
        if (target.restrict(u, v, maps[u][s]) != maps[v][source.restrict(u, v, s)]) return false;
    }
  }
  return true;
}

SheafImage sheaf_image(const PresheafMorphism& phi) {
  if (!phi.is_natural()) fail(ErrorCode::InvalidArgument, "the maps are not natural in the open");
  if (!phi.target.is_sheaf()) fail(ErrorCode::InvalidArgument, "the target is not a sheaf");
  const FiniteSpace& sp = phi.target.space();
  const auto& opens = sp.opens();
  SheafImage out;
  for (std::size_t u = 0; u < opens.size(); ++u) {
    std::set<std::size_t> img(phi.maps[u].begin(), phi.maps[u].end());
    out.presheaf_image.emplace_back(img.begin(), img.end());
  }
  for (std::size_t u = 0; u < opens.size(); ++u) {
    std::vector<std::size_t> locally;
    for (std::size_t t = 0; t < phi.target.sections(u).size(); ++t) {
      bool ok = true;
      for (std::size_t x = 0; x < sp.size() && ok; ++x) {
        if (!(opens[u] >> x & 1)) continue;
        std::size_t ux = phi.target.stalk_open(x);
        const auto& hit = out.presheaf_image[ux];
        ok = std::binary_search(hit.begin(), hit.end(), phi.target.restrict(u, ux, t));
      }
      if (ok) locally.push_back(t);
    }
    out.sheaf_image.push_back(std::move(locally));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure sheaves

namespace {

// unit_at[i][s]: e_i s is a unit of e_i A
std::vector<std::vector<bool>> local_units(const FiniteRing& a, const std::vector<std::size_t>& idem) {
  std::vector<std::vector<bool>> out(idem.size(), std::vector<bool>(a.size(), false));
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t s = 0; s < a.size(); ++s) {
      std::size_t es = a.mul[idem[i]][s];
      for (std::size_t t = 0; t < a.size() && !out[i][s]; ++t) out[i][s] = a.mul[es][t] == idem[i];
    }
  return out;
}

std::vector<std::size_t> primitive_idempotents(const FiniteRing& a) {
  std::vector<std::size_t> idem, prim;
  for (std::size_t e = 0; e < a.size(); ++e)
    if (a.mul[e][e] == e && e != a.zero) idem.push_back(e);
  for (auto e : idem) {
    bool p = true;
    for (auto f : idem) p = p && (a.mul[e][f] == a.zero || a.mul[e][f] == e);
    if (p) prim.push_back(e);
  }
  return prim;
}

StructureSheaf build_structure_sheaf(const FiniteRing& a, const std::vector<std::size_t>& idem,
                                     const std::vector<std::string>& labels) {
  FiniteSpace space = FiniteSpace::discrete(labels);
  auto unit_at = local_units(a, idem);
  const auto& opens = space.opens();
  std::vector<FiniteRing> rings;
  std::vector<std::vector<std::size_t>> proj;
  for (OpenSet u : opens) {
    std::vector<std::size_t> S;
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool in = true;
      for (std::size_t i = 0; i < idem.size() && in; ++i)
        if (u >> i & 1) in = unit_at[i][s];
      if (in) S.push_back(s);
    }
    std::vector<bool> killed(a.size(), false);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (auto s : S) killed[x] = killed[x] || a.mul[s][x] == a.zero;
    auto [q, p] = FiniteRing::quotient(a, killed);
    q.name = "S(" + space.describe(u) + ")^-1 " + a.name;
    rings.push_back(std::move(q));
    proj.push_back(std::move(p));
  }
  // representatives pushed forward along the localization maps
  std::vector<std::vector<std::size_t>> rep(opens.size());
  for (std::size_t u = 0; u < opens.size(); ++u) {
    rep[u].assign(rings[u].size(), 0);
    for (std::size_t x = a.size(); x-- > 0;) rep[u][proj[u][x]] = x;
  }
  auto restriction = [&](std::size_t u, std::size_t v, std::size_t s) { return proj[v][rep[u][s]]; };
  auto pre = std::make_shared<FinitePresheaf>(space, std::move(rings), restriction);
  auto sh = std::make_shared<Sheafification>(sheafify(*pre));
  return StructureSheaf{a, idem, space, pre, sh, proj};
}

}  // namespace

StructureSheaf structure_sheaf(const FiniteRing& a, std::vector<std::string> labels) {
  if (a.size() == 0) fail(ErrorCode::InvalidArgument, "empty ring table");
  auto idem = primitive_idempotents(a);
  if (labels.empty())
    for (auto e : idem) labels.push_back("x_{" + a.labels[e] + "}");
  if (labels.size() != idem.size()) fail(ErrorCode::InvalidArgument, "one label per point is required");
  return build_structure_sheaf(a, idem, labels);
}

StructureSheaf structure_sheaf(const PresentedAlgebra& a) {
  FiniteRing r = FiniteRing::from_algebra(a);
  auto idem = primitive_idempotents(r);
  std::vector<std::size_t> order;
  std::vector<std::string> labels;
  try {
    auto cat = SpecCatalogue::recognize(a);
    if (cat.finite_spectrum()) {
      // catalogue order; the prime of the i-th factor contains 1 - e_i
      for (auto& x : cat.points())
        for (auto e : idem)
          if (cat.vanishes(Poly::from_int(a.ring(), 1) - r.polys[e], x)) {
            order.push_back(e);
            labels.push_back(x.label);
          }
    }
  } catch (const Error&) {
    // uncatalogued finite rings keep the idempotent labels
  }
  if (order.size() != idem.size() || std::set<std::size_t>(order.begin(), order.end()).size() != idem.size())
    return structure_sheaf(r);
  return build_structure_sheaf(r, order, labels);
}

OpenSet StructureSheaf::basic_open(std::size_t f) const {
  auto unit_at = local_units(ring, idempotents);
  OpenSet u = 0;
  for (std::size_t i = 0; i < idempotents.size(); ++i)
    if (unit_at[i][f]) u |= OpenSet{1} << i;
  return u;
}

std::size_t StructureSheaf::global_to(OpenSet u, std::size_t a) const {
  std::size_t k = space.open_index(u);
  return sheaf->comparison[k][localization_maps[k][a]];
}

std::pair<FiniteRing, std::vector<std::size_t>> localize(const FiniteRing& a, std::size_t f) {
  // ann(f^k) is increasing in k and stabilizes before k = |A|
  std::size_t fn = a.pow(f, static_cast<unsigned>(a.size()));
  std::vector<bool> torsion(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) torsion[x] = a.mul[fn][x] == a.zero;
  auto q = FiniteRing::quotient(a, torsion);
  q.first.name = a.name + "_" + a.labels[f];
  return q;
}

LocalizationCertificate certify_basic_open(const StructureSheaf& o, std::size_t f) {
  const FiniteRing& a = o.ring;
  OpenSet u = o.basic_open(f);
  const FiniteRing& gamma = o.sections(u);
  std::vector<std::size_t> psi(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) psi[x] = o.global_to(u, x);
  LocalizationCertificate c{f, localize(a, f).first.size(), gamma.size(), is_ring_homomorphism(a, gamma, psi), false, true};
  std::set<std::size_t> img(psi.begin(), psi.end());
  c.surjective = img.size() == gamma.size();
  std::size_t fn = a.pow(f, static_cast<unsigned>(a.size()));
  for (std::size_t x = 0; x < a.size(); ++x)
    c.kernel_is_torsion = c.kernel_is_torsion && ((psi[x] == gamma.zero) == (a.mul[fn][x] == a.zero));
  return c;
}

// ---------------------------------------------------------------------------
// Cocycles

namespace {

std::size_t res(const StructureSheaf& o, OpenSet u, OpenSet v, std::size_t s) {
  const FinitePresheaf& sh = o.sheaf->sheaf;
  return sh.restrict(o.space.open_index(u), o.space.open_index(v), s);
}

void check_cover(const StructureSheaf& o, const std::vector<OpenSet>& cover) {
  OpenSet uni = 0;
  for (OpenSet u : cover) {
    if (!o.space.is_open(u)) fail(ErrorCode::InvalidArgument, o.space.describe(u) + " is not open");
    uni |= u;
  }
  if (uni != o.space.whole()) fail(ErrorCode::InvalidArgument, "the cover misses a point");
}

UnitCocycle inverse(const StructureSheaf& o, const UnitCocycle& c) {
  UnitCocycle out{c.cover, {}};
  for (auto& [ij, f] : c.f) {
    const FiniteRing& r = o.sections(c.cover[ij.first] & c.cover[ij.second]);
    auto inv = r.inverse(f);
    if (!inv) fail(ErrorCode::NonInvertibleUnit, r.labels[f] + " is not a unit");
    out.f[ij] = *inv;
  }
  return out;
}

}  // namespace

bool is_cocycle(const StructureSheaf& o, const UnitCocycle& c) {
  const std::size_t n = c.cover.size();
  OpenSet uni = 0;
  for (OpenSet u : c.cover) {
    if (!o.space.is_open(u)) return false;
    uni |= u;
  }
  if (uni != o.space.whole()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!c.f.count({i, j})) return false;
      OpenSet uij = c.cover[i] & c.cover[j];
      const FiniteRing& r = o.sections(uij);
      if (c.at(i, j) >= r.size() || !r.is_unit(c.at(i, j))) return false;
      if (i == j && c.at(i, i) != r.one) return false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        OpenSet w = c.cover[i] & c.cover[j] & c.cover[k];
        const FiniteRing& r = o.sections(w);
        std::size_t lhs = r.mul[res(o, c.cover[i] & c.cover[j], w, c.at(i, j))][res(o, c.cover[j] & c.cover[k], w, c.at(j, k))];
        if (lhs != res(o, c.cover[i] & c.cover[k], w, c.at(i, k))) return false;
      }
  return true;
}

UnitCocycle coboundary(const StructureSheaf& o, const std::vector<OpenSet>& cover, const std::vector<std::size_t>& a) {
  check_cover(o, cover);
  if (a.size() != cover.size()) fail(ErrorCode::InvalidArgument, "one unit per open is required");
  UnitCocycle c{cover, {}};
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = 0; j < cover.size(); ++j) {
      OpenSet w = cover[i] & cover[j];
      const FiniteRing& r = o.sections(w);
      auto inv = r.inverse(res(o, cover[j], w, a[j]));
      if (!inv || !o.sections(cover[i]).is_unit(a[i])) fail(ErrorCode::NonInvertibleUnit, "a coboundary needs units");
      c.f[{i, j}] = r.mul[res(o, cover[i], w, a[i])][*inv];
    }
  return c;
}

UnitCocycle two_cover_cocycle(const StructureSheaf& o, OpenSet u0, OpenSet u1, std::size_t u) {
  check_cover(o, {u0, u1});
  const FiniteRing& r = o.sections(u0 & u1);
  if (u >= r.size()) fail(ErrorCode::InvalidArgument, "no such section on the overlap");
  auto inv = r.inverse(u);
  if (!inv) fail(ErrorCode::NonInvertibleUnit, r.labels[u] + " is not a unit on the overlap");
  UnitCocycle c{{u0, u1}, {}};
  c.f[{0, 0}] = o.sections(u0).one;
  c.f[{1, 1}] = o.sections(u1).one;
  c.f[{0, 1}] = u;
  c.f[{1, 0}] = *inv;
  return c;
}

UnitCocycle multiply(const StructureSheaf& o, const UnitCocycle& a, const UnitCocycle& b) {
  if (a.cover != b.cover) fail(ErrorCode::InvalidArgument, "cocycles on different covers");
  UnitCocycle c{a.cover, {}};
  for (auto& [ij, f] : a.f) c.f[ij] = o.sections(a.cover[ij.first] & a.cover[ij.second]).mul[f][b.f.at(ij)];
  return c;
}

std::optional<std::vector<std::size_t>> trivialization(const StructureSheaf& o, const UnitCocycle& c) {
  const std::size_t n = c.cover.size();
  std::vector<std::vector<std::size_t>> units;
  for (OpenSet u : c.cover) units.push_back(o.sections(u).units());
  std::vector<std::size_t> a;
  std::optional<std::vector<std::size_t>> found;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == n) {
      found = a;
      return;
    }
    for (auto x : units[k]) {
      bool ok = true;
      // f_ik = a_i / a_k, i.e. f_ik a_k = a_i on the overlap
      for (std::size_t i = 0; i < k && ok; ++i) {
        OpenSet w = c.cover[i] & c.cover[k];
        const FiniteRing& r = o.sections(w);
        ok = r.mul[c.at(i, k)][res(o, c.cover[k], w, x)] == res(o, c.cover[i], w, a[i]);
      }
      if (!ok) continue;
      a.push_back(x);
      self(self, k + 1);
      a.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

bool cohomologous(const StructureSheaf& o, const UnitCocycle& a, const UnitCocycle& b) {
  return trivialization(o, multiply(o, a, inverse(o, b))).has_value();
}

// ---------------------------------------------------------------------------
// Twisted sheaves

std::vector<std::vector<std::size_t>> TwistedSheaf::sections(OpenSet v) const {
  const StructureSheaf& o = *o_;
  const auto& cover = c_.cover;
  const std::size_t n = cover.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    OpenSet wk = v & cover[k];
    for (std::size_t s = 0; s < o.sections(wk).size(); ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        OpenSet w = v & cover[i] & cover[k];
        const FiniteRing& r = o.sections(w);
        std::size_t fik = res(o, cover[i] & cover[k], w, c_.at(i, k));
        ok = res(o, v & cover[i], w, cur[i]) == r.mul[fik][res(o, wk, w, s)];
      }
      if (!ok) continue;
      cur.push_back(s);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::size_t> TwistedSheaf::act(OpenSet v, std::size_t a, const std::vector<std::size_t>& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    OpenSet w = v & c_.cover[i];
    out.push_back(o_->sections(w).mul[res(*o_, v, w, a)][s[i]]);
  }
  return out;
}

std::vector<std::size_t> TwistedSheaf::restrict(OpenSet v, OpenSet w, const std::vector<std::size_t>& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(res(*o_, v & c_.cover[i], w & c_.cover[i], s[i]));
  return out;
}

bool TwistedSheaf::locally_trivial() const {
  for (std::size_t i = 0; i < c_.cover.size(); ++i)
    for (OpenSet v : o_->space.opens()) {
      if (!inside(v, c_.cover[i])) continue;
      auto secs = sections(v);
      std::set<std::size_t> comp;
      for (auto& s : secs) comp.insert(s[i]);
      if (comp.size() != secs.size() || comp.size() != o_->sections(v).size()) return false;
    }
  return true;
}

TwistedSheaf trivial_bundle(std::shared_ptr<const StructureSheaf> o, const std::vector<OpenSet>& cover) {
  check_cover(*o, cover);
  UnitCocycle c{cover, {}};
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = 0; j < cover.size(); ++j) c.f[{i, j}] = o->sections(cover[i] & cover[j]).one;
  return TwistedSheaf(std::move(o), std::move(c));
}

TwistedSheaf twist_by_cocycle(const TwistedSheaf& l0, const UnitCocycle& c) {
  const StructureSheaf& o = l0.base();
  if (c.cover != l0.cocycle().cover) fail(ErrorCode::InvalidArgument, "the cocycle lives on a different cover");
  for (auto& [ij, f] : c.f) {
    const FiniteRing& r = o.sections(c.cover[ij.first] & c.cover[ij.second]);
    if (f >= r.size() || !r.is_unit(f)) fail(ErrorCode::NonInvertibleUnit, "transition functions must be units");
  }
  if (!is_cocycle(o, c)) fail(ErrorCode::InvalidArgument, "the cocycle conditions fail");
  return TwistedSheaf(l0.o_, multiply(o, l0.cocycle(), c));
}

UnitCocycle cocycle_of(const TwistedSheaf& l) {
  const StructureSheaf& o = l.base();
  const auto& cover = l.cocycle().cover;
  std::vector<std::vector<std::size_t>> gens;
  for (OpenSet u : cover) {
    auto secs = l.sections(u);
    std::optional<std::vector<std::size_t>> gen;
    for (auto& t : secs) {
      std::set<std::vector<std::size_t>> span;
      for (std::size_t a = 0; a < o.sections(u).size(); ++a) span.insert(l.act(u, a, t));
      if (span.size() == secs.size()) {
        gen = t;
        break;
      }
    }
    if (!gen) fail(ErrorCode::InvalidArgument, "no generator over " + o.space.describe(u));
    gens.push_back(*gen);
  }
  UnitCocycle h{cover, {}};
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = 0; j < cover.size(); ++j) {
      OpenSet w = cover[i] & cover[j];
      auto ti = l.restrict(cover[i], w, gens[i]);
      auto tj = l.restrict(cover[j], w, gens[j]);
      std::optional<std::size_t> found;
      for (auto u : o.sections(w).units())
        if (l.act(w, u, ti) == tj) {
          found = u;
          break;
        }
      if (!found) fail(ErrorCode::InvalidArgument, "generators do not differ by a unit on an overlap");
      h.f[{i, j}] = *found;
    }
  return h;
}

std::vector<std::pair<OpenSet, OpenSet>> two_covers(const FiniteSpace& s) {
  std::vector<std::pair<OpenSet, OpenSet>> out;
  for (OpenSet a : s.opens())
    for (OpenSet b : s.opens())
      if ((a | b) == s.whole() && a != 0 && b != 0) out.emplace_back(a, b);
  return out;
}

}  // namespace schemex
