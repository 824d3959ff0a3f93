#include "rbhopf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "rbhopf/descendent.hpp"
#include "rbhopf/fixtures.hpp"

namespace rbhopf::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
  void require_report(const Report& r, const std::string& what) {
    require(r.ok(), what + " (" + std::to_string(r.violations.size()) + " violations)");
  }
  void require_reports(const std::vector<Report>& rs, const std::string& what) {
    for (const auto& r : rs) require_report(r, what + ": " + r.axiom);
  }
};

// Test-only oracle, independent of the search it cross-checks: all maps with
// B(gh) = B(g)B(h), found by plain filtering over every image array.
std::vector<GroupMap> enumerate_endomorphisms(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<GroupMap> out;
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool endo = true;
    for (int a = 0; a < n && endo; ++a)
      for (int b = 0; b < n && endo; ++b)
        if (g.mul(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]) !=
            image[static_cast<std::size_t>(g.mul(a, b))])
          endo = false;
    if (endo) out.push_back(GroupMap{image});
    int i = 0;
    while (i < n && image[static_cast<std::size_t>(i)] == n - 1)
      image[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++image[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Fixtures {
  LieAlgebra lie = sl2();
  LieOperator r = sl2_standard_operator();
  UniversalEnveloping uea{sl2()};
  GroupAlgebra fs3{builtin_group("S3")};

  RBOperator<PbwMonomial> uea_ext;
  RBOperator<PbwMonomial> uea_antipode;
  RBOperator<int> fs3_antipode;
  RBOperator<int> fs3_split;
  GroupMap split_map;

  std::vector<PbwMonomial> uea_sample3;
  std::vector<int> fs3_sample;

  Fixtures() {
    uea_ext = extend_lie_rb(uea, r);
    uea_antipode = antipode_rb(uea);
    fs3_antipode = antipode_rb(fs3);
    auto [g1, g2] = s3_factorization();
    split_map = split_rb_group(fs3.group(), g1, g2);
    fs3_split = extend_group_rb(fs3, split_map);
    uea_sample3 = uea.basis_up_to(3);
    fs3_sample = fs3.basis();
  }
};

CriterionResult timed(int id, const std::string& name, double limit_seconds,
                      const std::function<void(Checker&)>& body) {
  CriterionResult res{id, name, false, 0.0, {}};
  Checker c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && res.seconds >= limit_seconds)
    c.require(false, "runtime limit exceeded");
  res.pass = c.ok;
  res.detail = c.detail.str();
  return res;
}

void c1_closed_form(Checker& c, Fixtures& f) {
  int checked = 0;
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j)
      for (int k = 0; i + j + k <= 5; ++k) {
        PbwMonomial m{{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                       static_cast<std::uint32_t>(k)}};
        ++checked;
        if (f.uea_ext.apply(m) != sl2_closed_form(f.uea, i, j, k)) {
          c.require(false, "mismatch at " + f.uea.label_string(m));
          return;
        }
      }
  c.require(checked == 56, "expected 56 monomials, saw " + std::to_string(checked));
}

void c2_rb_identity(Checker& c, Fixtures& f) {
  c.require_report(check_rb_hopf(f.uea, f.uea_ext, f.uea_sample3), "sl2 extension");
  c.require_report(check_rb_hopf(f.uea, f.uea_antipode, f.uea_sample3), "antipode on U(sl2)");
  c.require_report(check_rb_hopf(f.fs3, f.fs3_antipode, f.fs3_sample), "antipode on F[S3]");
  c.require_report(check_rb_hopf(f.fs3, f.fs3_split, f.fs3_sample), "split extension on F[S3]");
}

void c3_coalgebra_map(Checker& c, Fixtures& f) {
  c.require_report(check_coalgebra_map(f.uea, f.uea_ext, f.uea.basis_up_to(4)),
                   "sl2 extension, degree <= 4");
}

template <HopfInstance H>
void tilde_case(Checker& c, const H& h, const RBOperator<LabelOf<H>>& b,
                const std::vector<LabelOf<H>>& sample, const std::string& what) {
  auto tb = tilde_hopf(h, b);
  c.require_report(check_rb_hopf(h, tb, sample), what + ": tilde fails the identity");
  auto ttb = tilde_hopf(h, tb);
  for (const auto& m : sample)
    if (ttb.apply(m) != b.apply(m)) {
      c.require(false, what + ": tilde is not involutive at " + h.label_string(m));
      break;
    }
}

void c4_tilde(Checker& c, Fixtures& f) {
  tilde_case(c, f.uea, f.uea_ext, f.uea_sample3, "sl2 extension");
  tilde_case(c, f.uea, f.uea_antipode, f.uea_sample3, "antipode on U(sl2)");
  tilde_case(c, f.fs3, f.fs3_antipode, f.fs3_sample, "antipode on F[S3]");
  tilde_case(c, f.fs3, f.fs3_split, f.fs3_sample, "split extension on F[S3]");
  c.require(restrict_to_primitives(f.uea, tilde_hopf(f.uea, f.uea_ext)) ==
                companion(restrict_to_primitives(f.uea, f.uea_ext)),
            "tilde restriction is not -R-id (sl2 extension)");
  c.require(restrict_to_primitives(f.uea, tilde_hopf(f.uea, f.uea_antipode)) ==
                companion(restrict_to_primitives(f.uea, f.uea_antipode)),
            "tilde restriction is not -R-id (antipode)");
}

void c5_descendent(Checker& c, Fixtures& f) {
  c.require_reports(verify_descendent(DescendentHopf(f.uea, f.uea_ext), f.uea_sample3),
                    "descendent of sl2 extension");
  c.require_reports(verify_descendent(DescendentHopf(f.uea, f.uea_antipode), f.uea_sample3),
                    "descendent of U(sl2) antipode");
  c.require_reports(verify_descendent(DescendentHopf(f.fs3, f.fs3_antipode), f.fs3_sample),
                    "descendent of F[S3] antipode");
  c.require_reports(verify_descendent(DescendentHopf(f.fs3, f.fs3_split), f.fs3_sample),
                    "descendent of F[S3] split");
}

void c6_post_lie_oracle(Checker& c, Fixtures& f) {
  for (const auto& m : f.uea_sample3)
    for (const auto& n : f.uea_sample3) {
      auto lhs = post_lie_dot(f.uea, f.uea_ext, LinComb<PbwMonomial>::basis(m),
                              LinComb<PbwMonomial>::basis(n));
      auto rhs = post_lie_dot_recursive(f.uea, f.r, LinComb<PbwMonomial>::basis(m),
                                        LinComb<PbwMonomial>::basis(n));
      if (lhs != rhs) {
        c.require(false, "mismatch at (" + f.uea.label_string(m) + ", " + f.uea.label_string(n) + ")");
        return;
      }
    }
}

void c7_homomorphism(Checker& c, Fixtures& f) {
  c.require_reports(check_b_homomorphism(DescendentHopf(f.uea, f.uea_ext), f.uea_sample3),
                    "sl2 extension");
  c.require_reports(check_b_homomorphism(DescendentHopf(f.uea, f.uea_antipode), f.uea_sample3),
                    "U(sl2) antipode");
  c.require_reports(check_b_homomorphism(DescendentHopf(f.fs3, f.fs3_antipode), f.fs3_sample),
                    "F[S3] antipode");
  c.require_reports(check_b_homomorphism(DescendentHopf(f.fs3, f.fs3_split), f.fs3_sample),
                    "F[S3] split");
}

void c8_enumeration(Checker& c, Fixtures& f) {
  FiniteGroup c2 = builtin_group("C2");
  auto ops_c2 = enumerate_rb_group(c2);
  c.require(ops_c2.size() == 2, "C2: expected 2 operators, got " + std::to_string(ops_c2.size()));
  c.require(ops_c2 == enumerate_endomorphisms(c2), "C2: operators != endomorphisms");

  FiniteGroup v4 = builtin_group("V4");
  auto ops_v4 = enumerate_rb_group(v4);
  c.require(ops_v4.size() == 16, "V4: expected 16 operators, got " + std::to_string(ops_v4.size()));
  c.require(ops_v4 == enumerate_endomorphisms(v4), "V4: operators != endomorphisms");

  const FiniteGroup& s3 = f.fs3.group();
  auto ops_s3 = enumerate_rb_group(s3);
  bool has_split = false, has_inverse = false;
  GroupMap inverse_map;
  for (int g = 0; g < s3.order(); ++g) inverse_map.image.push_back(s3.inv(g));
  for (const auto& b : ops_s3) {
    if (b == f.split_map) has_split = true;
    if (b == inverse_map) has_inverse = true;
  }
  c.require(has_split, "S3: split operator missing from enumeration");
  c.require(has_inverse, "S3: inverse map missing from enumeration");

  // Mirror of the split map: g1 g2 -> g1^{-1}. Not a Rota-Baxter operator.
  auto [g1, g2] = s3_factorization();
  std::vector<std::pair<int, int>> factor(6, {-1, -1});
  for (int a : g1)
    for (int b : g2) factor[static_cast<std::size_t>(s3.mul(a, b))] = {a, b};
  GroupMap mirror;
  for (int g = 0; g < 6; ++g)
    mirror.image.push_back(s3.inv(factor[static_cast<std::size_t>(g)].first));
  c.require(!check_rb_group(s3, mirror).ok(), "S3: mirror map wrongly accepted");
}

void c9_round_trips(Checker& c, Fixtures& f) {
  auto ops_s3 = enumerate_rb_group(f.fs3.group());
  for (const auto& b : ops_s3) {
    GroupMap back = restrict_to_grouplikes(f.fs3, extend_group_rb(f.fs3, b));
    if (!(back == b)) {
      c.require(false, "S3: extend/restrict round trip broke an operator");
      break;
    }
  }
  c.require(restrict_to_primitives(f.uea, f.uea_ext) == f.r,
            "sl2: restrict(extend(R)) != R");
}

void c10_descendent_consistency(Checker& c, Fixtures& f) {
  const FiniteGroup& s3 = f.fs3.group();
  GroupMap inverse_map;
  for (int g = 0; g < s3.order(); ++g) inverse_map.image.push_back(s3.inv(g));
  FiniteGroup desc_inv = descendent_group(s3, inverse_map);
  bool opposite = true;
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b)
      if (desc_inv.mul(a, b) != s3.mul(b, a)) opposite = false;
  c.require(opposite, "descendent of (S3, inverse) is not the opposite group");

  // Group-likes of the descendent Hopf algebra reproduce the descendent group.
  FiniteGroup desc_split = descendent_group(s3, f.split_map);
  DescendentHopf d(f.fs3, f.fs3_split);
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b) {
      const LinComb<int>& p = d.mul(a, b);
      if (p.size() != 1 || !(p.coeff(desc_split.mul(a, b)) == Rational(1))) {
        c.require(false, "star product of group-likes disagrees with the descendent group");
        return;
      }
    }

  // Star commutators of primitives realize the descendent bracket.
  LieAlgebra desc = descendent_bracket(f.lie, f.r);
  c.require(desc.bracket(1, 2) == LinComb<int>::basis(2), "{h,y} != y");
  c.require(desc.bracket(0, 2).is_zero(), "{x,y} != 0");
  DescendentHopf du(f.uea, f.uea_ext);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LinComb<PbwMonomial> comm =
          du.mul(f.uea.generator(i), f.uea.generator(j)) -
          du.mul(f.uea.generator(j), f.uea.generator(i));
      if (comm != f.uea.embed(desc.bracket(i, j))) {
        c.require(false, "star commutator != descendent bracket at (" +
                             f.lie.name(i) + ", " + f.lie.name(j) + ")");
        return;
      }
    }
}

}  // namespace

std::vector<CriterionResult> run_all() {
  Fixtures f;
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "sl2 extension matches the closed form on all 56 monomials of degree <= 5",
                      5.0, [&](Checker& c) { c1_closed_form(c, f); }));
  out.push_back(timed(2, "defining identity holds for extension, antipode and split operators",
                      30.0, [&](Checker& c) { c2_rb_identity(c, f); }));
  out.push_back(timed(3, "sl2 extension is a coalgebra map up to degree 4", 0.0,
                      [&](Checker& c) { c3_coalgebra_map(c, f); }));
  out.push_back(timed(4, "tilde of each operator passes, is involutive, restricts to -R-id", 0.0,
                      [&](Checker& c) { c4_tilde(c, f); }));
  out.push_back(timed(5, "descendent Hopf algebras satisfy all axioms and both derived identities",
                      0.0, [&](Checker& c) { c5_descendent(c, f); }));
  out.push_back(timed(6, "operator route equals recursive route for the post-Lie product", 0.0,
                      [&](Checker& c) { c6_post_lie_oracle(c, f); }));
  out.push_back(timed(7, "B is a homomorphism into the descendent algebra and stays Rota-Baxter",
                      0.0, [&](Checker& c) { c7_homomorphism(c, f); }));
  out.push_back(timed(8, "enumeration: 2 operators on C2, 16 on V4 (= endomorphisms); S3 set",
                      60.0, [&](Checker& c) { c8_enumeration(c, f); }));
  out.push_back(timed(9, "extend/restrict round trips are the identity", 0.0,
                      [&](Checker& c) { c9_round_trips(c, f); }));
  out.push_back(timed(10, "descendent group, group-like star table and bracket all agree", 0.0,
                      [&](Checker& c) { c10_descendent_consistency(c, f); }));
  return out;
}

int run_and_print(std::ostream& os) {
  auto results = run_all();
  bool all = true;
  for (const auto& r : results) {
    os << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
    os << buf;
    if (!r.pass && !r.detail.empty()) os << " -- " << r.detail;
    os << "\n";
    all = all && r.pass;
  }
  os << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
  return all ? 0 : 1;
}

}  // namespace rbhopf::acceptance
