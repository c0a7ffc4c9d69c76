#include "rank2/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rank2 {

namespace {

MatQ gram_for(RootKind k) {
  switch (k) {
    case RootKind::A1:
      return MatQ{{Rational(2)}};
    case RootKind::A2:
      return MatQ{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
    case RootKind::B2:  // a1 long
      return MatQ{{Rational(4), Rational(-2)}, {Rational(-2), Rational(2)}};
    case RootKind::G2:  // a1 short, squared length 2
      return MatQ{{Rational(2), Rational(-3)}, {Rational(-3), Rational(6)}};
  }
  throw std::invalid_argument("unsupported root system kind");
}

bool lex_less(const VecQ& a, const VecQ& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::A1: return "A1";
    case RootKind::A2: return "A2";
    case RootKind::B2: return "B2";
    case RootKind::G2: return "G2";
  }
  return "?";
}

Rational RootSystem::inner(const VecQ& a, const VecQ& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) s += a[i] * gram(i, j) * b[j];
  return s;
}

bool RootSystem::is_root(const VecQ& v) const {
  return std::find(allRoots.begin(), allRoots.end(), v) != allRoots.end();
}

std::size_t RootSystem::positive_index(const VecQ& v) const {
  for (std::size_t i = 0; i < positiveRoots.size(); ++i)
    if (positiveRoots[i] == v) return i;
  return static_cast<std::size_t>(-1);
}

VecQ RootSystem::negate(const VecQ& v) const {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Rational RootSystem::height(const VecQ& v) const {
  Rational h = 0;
  for (const auto& c : v) h += c;
  return h;
}

std::string RootSystem::label(const VecQ& v) const {
  bool neg = height(v) < 0;
  const VecQ w = neg ? negate(v) : v;
  std::string s;
  for (std::size_t i = 0; i < rank; ++i) {
    if (w[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    if (w[i] != 1) s += to_string(w[i]);
    s += "a" + std::to_string(i + 1);
  }
  if (s.empty()) return "0";
  return neg ? "-(" + s + ")" : s;
}

RootSystem build_root_system(RootKind kind) {
  RootSystem rs;
  rs.kind = kind;
  rs.rank = (kind == RootKind::A1) ? 1 : 2;
  rs.gram = gram_for(kind);

  for (std::size_t i = 0; i < rs.rank; ++i) {
    VecQ e(rs.rank, Rational(0));
    e[i] = 1;
    rs.simpleRoots.push_back(e);
  }

  // Close the simple roots under the simple reflections.
  std::set<VecQ> closed(rs.simpleRoots.begin(), rs.simpleRoots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VecQ> cur(closed.begin(), closed.end());
    for (const auto& b : cur) {
      for (std::size_t i = 0; i < rs.rank; ++i) {
        Rational c = 2 * rs.inner(b, rs.simpleRoots[i]) / rs.gram(i, i);
        VecQ refl = b;
        refl[i] -= c;
        if (closed.insert(refl).second) grew = true;
      }
    }
  }
  rs.allRoots.assign(closed.begin(), closed.end());

  for (const auto& r : rs.allRoots) {
    bool nonneg = true;
    for (const auto& c : r) nonneg = nonneg && c >= 0;
    if (nonneg) rs.positiveRoots.push_back(r);
  }
  std::sort(rs.positiveRoots.begin(), rs.positiveRoots.end(), [&](const VecQ& a, const VecQ& b) {
    Rational ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });

  rs.cartanMatrix = MatQ(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) {
      Rational c = 2 * rs.gram(i, j) / rs.gram(j, j);
      if (denominator(c) != 1) throw InvariantError("Cartan integer is not an integer");
      rs.cartanMatrix(i, j) = c;
    }

  // Structural sanity: negation closure and positive/negative partition.
  for (const auto& r : rs.allRoots)
    if (!rs.is_root(rs.negate(r))) throw InvariantError("root set not closed under negation");
  if (rs.allRoots.size() != 2 * rs.positiveRoots.size())
    throw InvariantError("positive system does not halve the root set");
  return rs;
}

std::pair<int, int> root_string(const RootSystem& rs, const VecQ& a, const VecQ& b) {
  if (!rs.is_root(a) || !rs.is_root(b)) throw std::invalid_argument("root_string: not roots");
  if (a == b || a == rs.negate(b)) throw std::invalid_argument("root_string: a = +-b");
  int p = 0, q = 0;
  VecQ v = b;
  for (;;) {
    for (std::size_t i = 0; i < rs.rank; ++i) v[i] -= a[i];
    if (!rs.is_root(v)) break;
    ++p;
  }
  v = b;
  for (;;) {
    for (std::size_t i = 0; i < rs.rank; ++i) v[i] += a[i];
    if (!rs.is_root(v)) break;
    ++q;
  }
  return {p, q};
}

namespace {

VecQ vec_add(const VecQ& a, const VecQ& b) {
  VecQ s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}
VecQ vec_sub(const VecQ& a, const VecQ& b) {
  VecQ s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}
bool is_zero_vec(const VecQ& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

/// Structure-constant builder.  Extraspecial pairs get sign +(p+1); all
/// other pairs follow from the Jacobi identity and the standard transfer
/// relation N(x,y)/<z,z> = N(y,z)/<x,x> = N(z,x)/<y,y> for x+y+z = 0.
class ConstantBuilder {
 public:
  explicit ConstantBuilder(const RootSystem& rs) : rs_(rs) {
    for (std::size_t gi = 0; gi < rs.positiveRoots.size(); ++gi) {
      const VecQ& gamma = rs.positiveRoots[gi];
      // Special pairs (alpha, beta), idx(alpha) < idx(beta), alpha+beta = gamma.
      std::vector<std::pair<std::size_t, std::size_t>> special;
      for (std::size_t ai = 0; ai < rs.positiveRoots.size(); ++ai) {
        const VecQ beta = vec_sub(gamma, rs.positiveRoots[ai]);
        std::size_t bi = rs.positive_index(beta);
        if (bi == static_cast<std::size_t>(-1) || ai >= bi) continue;
        special.emplace_back(ai, bi);
      }
      if (special.empty()) continue;
      std::sort(special.begin(), special.end());
      const auto [xsi, xbi] = special.front();  // extraspecial: minimal first member
      const VecQ& xs = rs.positiveRoots[xsi];
      const VecQ& xb = rs.positiveRoots[xbi];
      sp_[{xsi, xbi}] = root_string(rs, xs, xb).first + 1;
      for (std::size_t s = 1; s < special.size(); ++s) {
        const auto [ai, bi] = special[s];
        const VecQ& alpha = rs.positiveRoots[ai];
        const VecQ& beta = rs.positiveRoots[bi];
        // Jacobi on (e_xs, e_xb, e_{-alpha}); every term lies in the
        // e_beta line.
        Rational t = 0;
        const VecQ d1 = vec_sub(xb, alpha);
        if (rs.is_root(d1)) t += n_any(xb, rs.negate(alpha)) * n_any(d1, xs);
        const VecQ d2 = vec_sub(xs, alpha);
        if (rs.is_root(d2)) t += n_any(rs.negate(alpha), xs) * n_any(d2, xb);
        const Rational n_gamma_minus_alpha = -t / sp_.at({xsi, xbi});
        // Transfer (gamma, -alpha, -beta) back to N(alpha, beta).
        Rational n_ab = -n_gamma_minus_alpha * rs.inner(gamma, gamma) / rs.inner(beta, beta);
        const int p = root_string(rs, alpha, beta).first;
        if (n_ab != p + 1 && n_ab != -(p + 1))
          throw InvariantError("structure constant violates |N| = p+1");
        sp_[{ai, bi}] = n_ab;
      }
    }
  }

  Rational n_any(const VecQ& a, const VecQ& b) const {
    const VecQ sum = vec_add(a, b);
    if (is_zero_vec(sum) || !rs_.is_root(sum)) return 0;
    const std::size_t ai = rs_.positive_index(a), bi = rs_.positive_index(b);
    const bool apos = ai != static_cast<std::size_t>(-1);
    const bool bpos = bi != static_cast<std::size_t>(-1);
    if (apos && bpos) {
      if (ai < bi) return sp_.at({ai, bi});
      return -sp_.at({bi, ai});
    }
    if (!apos && !bpos) return -n_any(rs_.negate(a), rs_.negate(b));
    if (!apos) return -n_any(b, a);
    // a positive, b negative; z = -(a+b).
    const VecQ z = rs_.negate(sum);
    if (rs_.positive_index(z) != static_cast<std::size_t>(-1))
      return n_any(z, a) * rs_.inner(z, z) / rs_.inner(b, b);
    return n_any(b, z) * rs_.inner(z, z) / rs_.inner(a, a);
  }

 private:
  const RootSystem& rs_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> sp_;
};

}  // namespace

Rational ChevalleyConstants::n(const RootSystem& rs, const VecQ& a, const VecQ& b) const {
  auto it = pairs.find({rs.label(a), rs.label(b)});
  return it == pairs.end() ? Rational(0) : it->second;
}

ChevalleyConstants chevalley_constants(const RootSystem& rs) {
  ConstantBuilder builder(rs);
  ChevalleyConstants cc;
  for (const auto& a : rs.allRoots)
    for (const auto& b : rs.allRoots) {
      const VecQ sum = vec_add(a, b);
      if (is_zero_vec(sum) || !rs.is_root(sum)) continue;
      const Rational n = builder.n_any(a, b);
      cc.pairs[{rs.label(a), rs.label(b)}] = n;
      const int p = root_string(rs, a, b).first;
      cc.rootStrings[{rs.label(a), rs.label(b)}] = p;
      if (n != p + 1 && n != -(p + 1)) throw InvariantError("|N| != p+1");
    }
  // Antisymmetry across the whole table.
  for (const auto& [key, n] : cc.pairs)
    if (cc.pairs.at({key.second, key.first}) != -n)
      throw InvariantError("structure constants not antisymmetric");
  return cc;
}

std::size_t ChevalleyAlgebra::root_basis_index(const VecQ& root) const {
  for (std::size_t i = rs.rank; i < dim; ++i)
    if (basisRoot[i] == root) return i;
  throw std::invalid_argument("no basis vector for root " + rs.label(root));
}

ChevalleyAlgebra chevalley_algebra(const RootSystem& rs, const ChevalleyConstants& cc) {
  ChevalleyAlgebra alg;
  alg.rs = rs;
  alg.dim = rs.rank + rs.allRoots.size();
  alg.labels.resize(alg.dim);
  alg.basisRoot.resize(alg.dim);
  for (std::size_t i = 0; i < rs.rank; ++i) alg.labels[i] = "h" + std::to_string(i + 1);
  std::size_t idx = rs.rank;
  for (const auto& a : rs.positiveRoots) {
    alg.labels[idx] = "e[" + rs.label(a) + "]";
    alg.basisRoot[idx++] = a;
  }
  for (const auto& a : rs.positiveRoots) {
    const VecQ m = rs.negate(a);
    alg.labels[idx] = "e[" + rs.label(m) + "]";
    alg.basisRoot[idx++] = m;
  }

  // Coroot of alpha in the basis of simple coroots.
  auto coroot_coeffs = [&](const VecQ& a) {
    VecQ c(rs.rank);
    const Rational len = rs.inner(a, a);
    for (std::size_t i = 0; i < rs.rank; ++i) c[i] = a[i] * rs.gram(i, i) / len;
    return c;
  };

  alg.table.assign(alg.dim, std::vector<std::vector<std::pair<std::size_t, Rational>>>(alg.dim));
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      auto& out = alg.table[i][j];
      const bool hi = i < rs.rank, hj = j < rs.rank;
      if (hi && hj) continue;
      if (hi && !hj) {
        const VecQ& b = alg.basisRoot[j];
        Rational v = 2 * rs.inner(b, rs.simpleRoots[i]) / rs.gram(i, i);
        if (!v.is_zero()) out.push_back({j, v});
        continue;
      }
      if (!hi && hj) {
        const VecQ& a = alg.basisRoot[i];
        Rational v = -2 * rs.inner(a, rs.simpleRoots[j]) / rs.gram(j, j);
        if (!v.is_zero()) out.push_back({i, v});
        continue;
      }
      const VecQ& a = alg.basisRoot[i];
      const VecQ& b = alg.basisRoot[j];
      const VecQ sum = vec_add(a, b);
      if (is_zero_vec(sum)) {
        const VecQ c = coroot_coeffs(a);
        for (std::size_t k = 0; k < rs.rank; ++k)
          if (!c[k].is_zero()) out.push_back({k, c[k]});
        continue;
      }
      if (!rs.is_root(sum)) continue;
      const Rational n = cc.n(rs, a, b);
      if (!n.is_zero()) out.push_back({alg.root_basis_index(sum), n});
    }
  return alg;
}

bool chevalley_jacobi_holds(const ChevalleyAlgebra& alg) {
  const std::size_t d = alg.dim;
  auto bracket_basis_vec = [&](std::size_t i, const VecQ& v) {
    VecQ out(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& [k, c] : alg.table[i][j]) out[k] += v[j] * c;
    }
    return out;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      VecQ bij(d, Rational(0));
      for (const auto& [m, c] : alg.table[i][j]) bij[m] += c;
      for (std::size_t k = 0; k < d; ++k) {
        VecQ bjk(d, Rational(0));
        for (const auto& [m, c] : alg.table[j][k]) bjk[m] += c;
        VecQ bik(d, Rational(0));
        for (const auto& [m, c] : alg.table[i][k]) bik[m] += c;
        // [i,[j,k]] - [j,[i,k]] - [[i,j],k] = 0, with [[i,j],k] = -[k,[i,j]].
        const VecQ u1 = bracket_basis_vec(i, bjk);
        const VecQ u2 = bracket_basis_vec(j, bik);
        const VecQ u3 = bracket_basis_vec(k, bij);
        for (std::size_t m = 0; m < d; ++m)
          if (u1[m] - u2[m] + u3[m] != 0) return false;
      }
    }
  return true;
}

}  // namespace rank2
