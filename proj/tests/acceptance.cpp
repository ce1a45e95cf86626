// Acceptance run: one line per criterion, exit status 0 iff all selected pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "assemble.hpp"
#include "chartab.hpp"
#include "error.hpp"
#include "promod.hpp"
#include "repring.hpp"
#include "selfcheck.hpp"
#include "specio.hpp"

using namespace kbgq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& msg) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

std::string fixture_dir = KBGQ_FIXTURE_DIR;

SpecFile load(const std::string& name) {
  std::ifstream in(fixture_dir + "/" + name);
  if (!in) throw std::runtime_error("cannot open fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

KRationalResult result_of(const std::string& name) { return k_rational(load(name).spec); }

std::string counts(const PrimeCounts& c) {
  std::string s = "{";
  for (auto [p, n] : c) s += (s.size() > 1 ? "," : "") + std::to_string(p) + ":" + std::to_string(n);
  return s + "}";
}

Outcome c1() {
  Outcome o;
  auto r = result_of("sl3z.json");
  if (r.k0.rational_rank != 1) o.fail("k0 rational rank " + std::to_string(r.k0.rational_rank));
  if (r.k0.p_adic != PrimeCounts{{2, 4}, {3, 2}}) o.fail("k0 p_adic " + counts(r.k0.p_adic));
  if (r.k1.rational_rank != 0 || !r.k1.p_adic.empty()) o.fail("k1 nonzero");
  o.detail = o.pass ? "k0 = Q x Q2^4 x Q3^2, k1 = 0" : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  const std::pair<const char*, PermGroup> groups[] = {
      {"Z2", library::cyclic(2)},      {"Z3", library::cyclic(3)},       {"Z4", library::cyclic(4)},
      {"Z5", library::cyclic(5)},      {"S3", library::symmetric(3)},    {"D4", library::dihedral(4)},
      {"Q8", library::quaternion8()},  {"A4", library::alternating(4)},  {"S4", library::symmetric(4)}};
  for (const auto& [name, g] : groups) {
    auto k = completed_k0(g);
    for (auto p : prime_divisors(g.order_u64())) {
      RpResult rp;
      try {
        rp = r_p(g, p);
      } catch (const std::exception& e) {
        o.fail(std::string(name) + " p=" + std::to_string(p) + ": " + e.what());
        continue;
      }
      if (rp.class_count != rp.lattice_rank) o.fail(std::string(name) + " routes disagree");
      if (k.p_adic[p] != rp.class_count) o.fail(std::string(name) + " completed rank differs");
    }
    if (k.free_rank != 1) o.fail(std::string(name) + " free rank");
  }
  for (std::uint64_t p : {2, 3, 5})
    if (completed_k0(library::cyclic(p)).p_adic != std::map<std::uint64_t, std::size_t>{{p, p - 1}})
      o.fail("Z/" + std::to_string(p) + " rank is not p-1");
  if (o.pass) o.detail = "9 groups, class count == lattice rank for every p";
  return o;
}

Outcome c3() {
  Outcome o;
  auto f = load("crystallographic_zeta3.json");
  const auto& cs = std::get<CrystalSpec>(f.spec);
  auto r = k_rational(f.spec);
  auto h = h1_and_fixed(cs);
  auto b = betti_crystallographic(cs);
  if (r.k0.p_adic != PrimeCounts{{3, 6}}) o.fail("p_adic " + counts(r.k0.p_adic));
  if (h.h1_order != 3) o.fail("|H1| = " + h.h1_order.get_str());
  if (h.fixed_rank != 0) o.fail("fixed rank " + std::to_string(h.fixed_rank));
  if (b != Betti{1, 0, 1}) o.fail("betti list");
  bool note = false;
  for (const auto& n : r.notes) note |= n.code == "rational_part_discrepancy";
  if (!note) o.fail("discrepancy note missing");
  if (o.pass) o.detail = "{3:6}, |H1| = 3, fixed rank 0, betti (1,0,1), note attached";
  return o;
}

Outcome c4() {
  Outcome o;
  auto r = result_of("fuchsian_2_3_4.json");
  if (r.k1.rational_rank != 4) o.fail("k1 rank " + std::to_string(r.k1.rational_rank));
  if (r.k0.rational_rank != 2) o.fail("k0 rank " + std::to_string(r.k0.rational_rank));
  if (r.k0.p_adic != PrimeCounts{{2, 3}, {3, 2}}) o.fail("p_adic " + counts(r.k0.p_adic));
  if (o.pass) o.detail = "k1 rank 4, k0 rank 2 with {2:3,3:2}";
  return o;
}

Outcome c5() {
  Outcome o;
  auto f = load("one_relator_ab2.json");
  auto d = one_relator_analyze(std::get<OneRelatorSpec>(f.spec));
  if (d.root != Word{1, 2} || d.m != 2) o.fail("root extraction");
  auto r = k_rational(f.spec);
  if (r.k0.rational_rank != 1 || r.k0.p_adic != PrimeCounts{{2, 1}}) o.fail("k0 " + counts(r.k0.p_adic));
  if (r.k1.rational_rank != 1) o.fail("k1 rank");
  auto t = result_of("one_relator_torus.json");
  if (!t.k0.p_adic.empty() || !t.k1.p_adic.empty()) o.fail("torus p_adic nonempty");
  if (torsion_criterion(t)) o.fail("torus flagged as torsion");
  if (o.pass) o.detail = "s = ab, m = 2, {2:1}, k1 rank 1; torus torsionfree";
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t checks = 0;
  auto corpus = selfcheck_corpus(24);
  for (const auto& [name, g] : corpus) {
    auto t = character_table(g);
    ++checks;
    if (!verify_orthogonality(t).pass) o.fail("orthogonality " + name);
    const auto primes = prime_divisors(g.order_u64());
    for (auto p : primes) {
      ++checks;
      if (!verify_sylow_image(g, p).pass()) o.fail("sylow image " + name + " p=" + std::to_string(p));
      for (auto q : primes) {
        if (q == p) continue;
        ++checks;
        if (!verify_sylow_double_cosets(g, p, q).pass())
          o.fail("sylow double cosets " + name + " " + std::to_string(p) + "," + std::to_string(q));
      }
    }
    ++checks;
    if (!verify_restriction_sequence(g, 8).pass()) o.fail("restriction sequence " + name);
  }
  for (const auto& g : {library::symmetric(3), library::dihedral(4), library::alternating(4)}) {
    auto subs = all_subgroups(g);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        ++checks;
        if (!verify_double_coset(g, h, k).pass()) o.fail("double coset");
      }
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks over " + std::to_string(corpus.size()) + " groups, 0 failures";
  return o;
}

Outcome c7() {
  Outcome o;
  std::string found;
  for (std::uint64_t n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto p = prime_divisors(n).front();
    auto e = find_exponents(library::cyclic(n), p, 12);
    auto show = [](const std::optional<unsigned>& x) { return x ? std::to_string(*x) : std::string(">12"); };
    found += " Z" + std::to_string(n) + "(" + show(e.a) + "," + show(e.b) + "," + show(e.c) + ")";
    if (!e.found()) o.fail("Z/" + std::to_string(n) + " exponents not within 12");
    if (n == 2 && (!e.found() || *e.a != 1 || *e.b != 2)) o.fail("Z/2 must give a = 1, b = 2");
  }
  for (const auto& [name, g] : std::vector<std::pair<std::string, PermGroup>>{
           {"Z2", library::cyclic(2)}, {"Z3", library::cyclic(3)}, {"Z4", library::cyclic(4)}, {"S3", library::symmetric(3)}})
    if (!verify_pro_iso_chain(g, 6).report.pass()) o.fail("chain " + name);

  auto scalar = [](long v) {
    IntMatrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  const std::size_t d = 6;
  auto ct = [&](Int inv, long map) { return Tower::constant(Subquotient::finite_abelian({inv}), scalar(map), d); };
  auto cm = [&](long v) { return StrictMap{std::vector<IntMatrix>(d + 1, scalar(v))}; };
  auto zero = Tower::constant(Subquotient::zero(1), IntMatrix::identity(1), d);
  if (!six_term_check(ct(2, 1), ct(4, 1), ct(2, 1), cm(2), cm(1)).pass()) o.fail("six-term Z2 Z4 Z2");
  if (!six_term_check(zero, ct(2, 0), zero, cm(0), cm(0)).pass()) o.fail("six-term zero maps");
  if (!six_term_check(zero, ct(0, 1), ct(0, 1), cm(0), cm(1)).pass()) o.fail("six-term Z");
  o.detail = (o.pass ? "" : o.detail + ";") + " exponents" + found;
  return o;
}

Outcome c8() {
  Outcome o;
  for (std::size_t n : {2, 3, 4, 5, 8, 9}) {
    auto cd = cyclic_data(library::cyclic(n));
    if (!verify_theta(cd).pass()) o.fail("theta Z/" + std::to_string(n));
    if (!verify_cyclic_evaluation(cd).pass()) o.fail("evaluation Z/" + std::to_string(n));
  }
  std::size_t subgroups = 0;
  for (const auto& [name, g] : selfcheck_corpus(24)) {
    for (const auto& h : subgroup_class_representatives(g)) {
      ++subgroups;
      const auto n = h.order_u64();
      const auto primes = prime_divisors(n);
      const bool cyclic_p = n == 1 || (primes.size() == 1 && is_cyclic(h));
      const std::size_t expect = cyclic_p ? euler_phi(n) : 0;
      auto t = t_rank(h);
      if (t.rank != expect)
        o.fail(name + " subgroup of order " + std::to_string(n) + ": t_rank " + std::to_string(t.rank));
    }
  }
  if (o.pass) o.detail = "theta and evaluation on 6 cyclic groups; t_rank on " + std::to_string(subgroups) + " subgroups";
  return o;
}

Outcome c9() {
  Outcome o;
  auto a = padic_root_check(3, 3, 2);
  auto b = padic_root_check(4, 5, 2);
  if (a.exists || !a.decided) o.fail("(3,3) should be false");
  if (!b.exists || !b.decided) o.fail("(4,5) should be true");
  if (o.pass) o.detail = "(3,3) = false, (4,5) = true";
  return o;
}

Outcome c10() {
  Outcome o;
  struct Case {
    std::string label;
    GroupSpec spec;
    bool torsion;
  };
  std::vector<Case> cases;
  for (const char* f : {"s3.json", "a5.json", "sl3z.json", "crystallographic_zeta3.json", "fuchsian_2_3_4.json",
                        "one_relator_ab2.json", "one_relator_a3.json"})
    cases.push_back({f, load(f).spec, true});
  cases.push_back({"one_relator_torus.json", load("one_relator_torus.json").spec, false});
  cases.push_back({"Z2", library::cyclic(2), true});
  cases.push_back({"Q8", library::quaternion8(), true});
  cases.push_back({"trivial", library::cyclic(1), false});
  cases.push_back({"surface genus 2", FuchsianSpec{2, {}}, false});
  for (const auto& c : cases)
    if (torsion_criterion(k_rational(c.spec)) != c.torsion) o.fail(c.label);
  try {
    validate(FuchsianSpec{1, {}});
    o.fail("non-hyperbolic signature accepted");
  } catch (const ValidationError&) {
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " instances classified, non-hyperbolic input rejected";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance run"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion");
  app.add_option("--fixtures", fixture_dir, "fixture directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "SL3(Z) fixture", 1.0, c1},
      {2, "finite groups, two-route r(p)", 30.0, c2},
      {3, "crystallographic zeta_3", 1.0, c3},
      {4, "Fuchsian (2; 3, 4)", 1.0, c4},
      {5, "one-relator <a,b | (ab)^2> and torus", 1.0, c5},
      {6, "identity suite on the order <= 24 corpus", 180.0, c6},
      {7, "tower suite", 60.0, c7},
      {8, "theta / T suite", 60.0, c8},
      {9, "p-adic roots of unity", 1.0, c9},
      {10, "torsion criterion", 300.0, c10},
  };

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s  %-40s %7.3f s / %.0f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                c.limit_s, o.detail.c_str());
  }
  if (!only) {
    const double total = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("total %.3f s / 300 s, %d failed\n", total, failed);
    if (total > 300.0) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
