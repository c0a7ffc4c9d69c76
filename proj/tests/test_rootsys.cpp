#include <set>

#include "doctest.h"
#include "rank2/rootsys.hpp"

using namespace rank2;

namespace {

// Independent root-string oracle: plain scan over the stored root list.
std::pair<int, int> string_oracle(const RootSystem& rs, const VecQ& a, const VecQ& b) {
  auto shift = [&](const VecQ& v, int k) {
    VecQ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + Rational(k) * a[i];
    return out;
  };
  int p = 0, q = 0;
  while (rs.is_root(shift(b, -(p + 1)))) ++p;
  while (rs.is_root(shift(b, q + 1))) ++q;
  return {p, q};
}

VecQ coeffs(std::initializer_list<int> c) {
  VecQ v;
  for (int x : c) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("positive systems match the classified lists") {
  const RootSystem g2 = build_root_system(RootKind::G2);
  REQUIRE(g2.positiveRoots.size() == 6);
  const std::set<std::string> g2labels = {"a1",        "a2",        "a1+a2",
                                          "2a1+a2",    "3a1+a2",    "3a1+2a2"};
  std::set<std::string> found;
  for (const auto& r : g2.positiveRoots) found.insert(g2.label(r));
  CHECK(found == g2labels);
  CHECK(g2.allRoots.size() == 12);

  const RootSystem a2 = build_root_system(RootKind::A2);
  REQUIRE(a2.positiveRoots.size() == 3);
  std::set<std::string> a2found;
  for (const auto& r : a2.positiveRoots) a2found.insert(a2.label(r));
  CHECK(a2found == std::set<std::string>{"a1", "a2", "a1+a2"});
  CHECK(a2.allRoots.size() == 6);

  const RootSystem b2 = build_root_system(RootKind::B2);
  REQUIRE(b2.positiveRoots.size() == 4);
  std::set<std::string> b2found;
  for (const auto& r : b2.positiveRoots) b2found.insert(b2.label(r));
  CHECK(b2found == std::set<std::string>{"a1", "a2", "a1+a2", "a1+2a2"});
  CHECK(b2.allRoots.size() == 8);
  CHECK(b2.inner(b2.simpleRoots[0], b2.simpleRoots[0]) >
        b2.inner(b2.simpleRoots[1], b2.simpleRoots[1]));  // a1 long
}

TEST_CASE("length ratios and Cartan integers") {
  const RootSystem g2 = build_root_system(RootKind::G2);
  Rational longest = 0, shortest = 0;
  for (const auto& r : g2.allRoots) {
    const Rational l = g2.inner(r, r);
    if (longest == 0 || l > longest) longest = l;
    if (shortest == 0 || l < shortest) shortest = l;
  }
  CHECK(longest / shortest == 3);
  CHECK(g2.inner(g2.simpleRoots[0], g2.simpleRoots[0]) == shortest);  // a1 shortest

  const RootSystem b2 = build_root_system(RootKind::B2);
  Rational blong = 0, bshort = 0;
  for (const auto& r : b2.allRoots) {
    const Rational l = b2.inner(r, r);
    if (blong == 0 || l > blong) blong = l;
    if (bshort == 0 || l < bshort) bshort = l;
  }
  CHECK(blong / bshort == 2);

  for (const RootKind kind : {RootKind::A1, RootKind::A2, RootKind::B2, RootKind::G2}) {
    const RootSystem rs = build_root_system(kind);
    for (std::size_t i = 0; i < rs.rank; ++i)
      for (std::size_t j = 0; j < rs.rank; ++j)
        CHECK(rs.cartanMatrix(i, j) ==
              2 * rs.inner(rs.simpleRoots[i], rs.simpleRoots[j]) /
                  rs.inner(rs.simpleRoots[j], rs.simpleRoots[j]));
    // every positive root is a nonnegative integer combination of simples
    for (const auto& r : rs.positiveRoots)
      for (const auto& c : r) {
        CHECK(c >= 0);
        CHECK(denominator(c) == 1);
      }
    // closure under negation, disjoint positive/negative split
    for (const auto& r : rs.positiveRoots) CHECK(rs.is_root(rs.negate(r)));
  }
}

TEST_CASE("root strings") {
  const RootSystem a2 = build_root_system(RootKind::A2);
  CHECK(string_oracle(a2, coeffs({1, 0}), coeffs({0, 1})) == std::pair<int, int>{0, 1});
  CHECK(root_string(a2, coeffs({1, 0}), coeffs({0, 1})) == std::pair<int, int>{0, 1});

  const RootSystem g2 = build_root_system(RootKind::G2);
  CHECK(string_oracle(g2, coeffs({1, 0}), coeffs({0, 1})) == std::pair<int, int>{0, 3});
  CHECK(root_string(g2, coeffs({1, 0}), coeffs({0, 1})) == std::pair<int, int>{0, 3});

  // beta with beta + a and beta - a both outside the system
  CHECK(root_string(g2, coeffs({1, 0}), coeffs({3, 2})) == std::pair<int, int>{0, 0});

  CHECK_THROWS_AS(root_string(a2, coeffs({1, 0}), coeffs({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(root_string(a2, coeffs({1, 0}), coeffs({-1, 0})), std::invalid_argument);

  // implementation matches the oracle on every admissible pair
  for (const RootKind kind : {RootKind::A2, RootKind::B2, RootKind::G2}) {
    const RootSystem rs = build_root_system(kind);
    for (const auto& a : rs.allRoots)
      for (const auto& b : rs.allRoots) {
        if (a == b || a == rs.negate(b)) continue;
        CHECK(root_string(rs, a, b) == string_oracle(rs, a, b));
      }
  }
}

TEST_CASE("Chevalley constants: magnitudes, antisymmetry, Jacobi") {
  for (const RootKind kind : {RootKind::A1, RootKind::A2, RootKind::B2, RootKind::G2}) {
    const RootSystem rs = build_root_system(kind);
    const ChevalleyConstants cc = chevalley_constants(rs);
    for (const auto& a : rs.allRoots)
      for (const auto& b : rs.allRoots) {
        VecQ sum(rs.rank);
        for (std::size_t i = 0; i < rs.rank; ++i) sum[i] = a[i] + b[i];
        bool zero = true;
        for (const auto& c : sum) zero = zero && c.is_zero();
        if (zero) continue;
        const Rational n = cc.n(rs, a, b);
        if (!rs.is_root(sum)) {
          CHECK(n == 0);
          continue;
        }
        const int p = string_oracle(rs, a, b).first;
        CHECK(abs(n) == p + 1);
        CHECK(cc.n(rs, b, a) == -n);
      }
    const ChevalleyAlgebra alg = chevalley_algebra(rs, cc);
    CHECK(chevalley_jacobi_holds(alg));
  }
}

TEST_CASE("specific structure constant magnitudes") {
  const RootSystem a2 = build_root_system(RootKind::A2);
  const ChevalleyConstants ca = chevalley_constants(a2);
  CHECK(abs(ca.n(a2, coeffs({1, 0}), coeffs({0, 1}))) == 1);

  const RootSystem g2 = build_root_system(RootKind::G2);
  const ChevalleyConstants cg = chevalley_constants(g2);
  const int p = string_oracle(g2, coeffs({1, 0}), coeffs({1, 1})).first;
  CHECK(p == 1);
  CHECK(abs(cg.n(g2, coeffs({1, 0}), coeffs({1, 1}))) == 2);
}

TEST_CASE("constants are deterministic across rebuilds") {
  const RootSystem g2a = build_root_system(RootKind::G2);
  const RootSystem g2b = build_root_system(RootKind::G2);
  CHECK(chevalley_constants(g2a).pairs == chevalley_constants(g2b).pairs);
}
