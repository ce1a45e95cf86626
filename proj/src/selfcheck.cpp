#include "selfcheck.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "assemble.hpp"
#include "error.hpp"
#include "promod.hpp"
#include "repring.hpp"

namespace kbgq {

namespace {

using Task = std::function<Report()>;

Report guarded(const std::string& name, const Task& task) {
  try {
    Report r = task();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    Report r{name, {}, {}};
    r.fail(std::string("exception: ") + e.what());
    return r;
  }
}

std::vector<Report> run_all(const std::vector<std::pair<std::string, Task>>& tasks, unsigned threads) {
  std::vector<Report> out(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) out[i] = guarded(tasks[i].first, tasks[i].second);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

const PermGroup* find_group(const std::vector<NamedGroup>& corpus, const std::string& name) {
  for (const auto& g : corpus)
    if (g.name == name) return &g.group;
  return nullptr;
}

Tower constant_tower(const std::vector<Int>& invariants, long map, std::size_t depth) {
  IntMatrix m(1, 1);
  m(0, 0) = map;
  return Tower::constant(Subquotient::finite_abelian(invariants), m, depth);
}

StrictMap constant_map(long v, std::size_t depth) {
  IntMatrix m(1, 1);
  m(0, 0) = v;
  return {std::vector<IntMatrix>(depth + 1, m)};
}

}  // namespace

bool is_inconclusive(const Report& r) {
  if (r.pass()) return false;
  for (const auto& f : r.failures)
    if (f.rfind("inconclusive", 0) != 0) return false;
  return true;
}

std::vector<NamedGroup> selfcheck_corpus(std::uint64_t max_order) {
  std::vector<NamedGroup> all;
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 12, 16}) all.push_back({"Z" + std::to_string(n), library::cyclic(n)});
  all.push_back({"V4", library::klein_four()});
  all.push_back({"S3", library::symmetric(3)});
  all.push_back({"D4", library::dihedral(4)});
  all.push_back({"Q8", library::quaternion8()});
  all.push_back({"Z2xZ4", library::direct_product(library::cyclic(2), library::cyclic(4))});
  all.push_back({"D5", library::dihedral(5)});
  all.push_back({"A4", library::alternating(4)});
  all.push_back({"D6", library::dihedral(6)});
  all.push_back({"S4", library::symmetric(4)});
  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.group.order() <= max_order) out.push_back(std::move(g));
  return out;
}

Report verify_ring_constants(const RingStructure& rs, const RepRing& sylow_ring, const std::string& name) {
  Report rep{name, {}, {}};
  const auto n = rs.basis.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto prod = sylow_ring.mult.multiply(rs.basis.row(a), rs.basis.row(b));
      std::vector<Int> expect(prod.size(), 0);
      for (std::size_t c = 0; c < n; ++c) {
        auto row = rs.basis.row(c);
        for (std::size_t k = 0; k < row.size(); ++k) expect[k] += rs.constants.at(a, b, c) * row[k];
      }
      if (prod != expect)
        rep.fail("structure constant mismatch for basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  rep.note("rank " + std::to_string(n));
  return rep;
}

SelfcheckResult selfcheck(const SelfcheckOptions& opt) {
  if (opt.depth < 2) throw ValidationError("depth must be at least 2");
  const auto corpus = selfcheck_corpus(opt.max_order);
  std::vector<std::pair<std::string, Task>> tasks;
  const auto depth = opt.depth;

  for (const auto& [name, g] : corpus) {
    tasks.emplace_back("orthogonality/" + name, [g = g, seed = opt.seed] {
      Report r;
      auto t = character_table(g, seed);
      auto o = verify_orthogonality(t);
      for (const auto& f : o.failures)
        r.fail(std::string(f.kind == OrthogonalityFailure::Kind::row ? "row " : "column ") + std::to_string(f.a) +
               "," + std::to_string(f.b) + ": " + f.detail);
      r.note(std::to_string(t.size()) + " classes");
      return r;
    });
  }
  for (const char* name : {"S3", "D4", "A4"}) {
    const auto* g = find_group(corpus, name);
    if (!g) continue;
    tasks.emplace_back(std::string("double_coset/") + name, [g = *g] {
      Report r;
      auto subs = all_subgroups(g);
      for (const auto& h : subs)
        for (const auto& k : subs) {
          auto one = verify_double_coset(g, h, k);
          for (const auto& f : one.failures) r.fail(f);
        }
      r.note(std::to_string(subs.size() * subs.size()) + " subgroup pairs");
      return r;
    });
  }
  for (const auto& [name, g] : corpus) {
    const auto primes = prime_divisors(g.order_u64());
    for (auto p : primes) {
      tasks.emplace_back("sylow_image/" + name + "/" + std::to_string(p),
                         [g = g, p] { return verify_sylow_image(g, p); });
      tasks.emplace_back("r_p/" + name + "/" + std::to_string(p), [g = g, p] {
        Report r;
        auto res = r_p(g, p);
        auto classes = con_p(g, p).size();
        if (res.value != classes)
          r.fail("rank " + std::to_string(res.value) + " but |con_p| = " + std::to_string(classes));
        r.note("class count " + std::to_string(res.class_count) + ", lattice rank " + std::to_string(res.lattice_rank));
        return r;
      });
      tasks.emplace_back("ring_constants/" + name + "/" + std::to_string(p),
                         [g = g, p, corrupt = opt.corrupt_constant && name == corpus.front().name] {
                           auto rs = ring_structure_I_p(g, p);
                           if (corrupt && rs.basis.rows() > 0) rs.constants.at(0, 0, 0) += 1;
                           auto t = character_table(g);
                           auto e = embed(t, sylow(g, p));
                           return verify_ring_constants(rs, rep_ring(e.sub_table), "");
                         });
      for (auto q : primes)
        if (q != p)
          tasks.emplace_back("sylow_double_cosets/" + name + "/" + std::to_string(p) + "," + std::to_string(q),
                             [g = g, p, q] { return verify_sylow_double_cosets(g, p, q); });
    }
    tasks.emplace_back("restriction_sequence/" + name, [g = g] { return verify_restriction_sequence(g, 8); });
    tasks.emplace_back("t_rank/" + name, [g = g] {
      Report r;
      for (const auto& h : subgroup_class_representatives(g)) {
        const auto order = h.order_u64();
        const bool cyclic_p = prime_divisors(order).size() <= 1 && is_cyclic(h);
        const std::size_t expect = cyclic_p ? euler_phi(order) : 0;
        auto got = t_rank(h).rank;
        if (got != expect)
          r.fail("subgroup of order " + std::to_string(order) + ": rank " + std::to_string(got) + ", expected " +
                 std::to_string(expect));
      }
      return r;
    });
    tasks.emplace_back("completed_k0/" + name, [g = g] {
      Report r;
      auto d = completed_k0(g);
      std::size_t total = 0, classes = 0;
      for (auto [p, v] : d.p_adic) total += v;
      for (auto p : prime_divisors(g.order_u64())) classes += con_p(g, p).size();
      if (total != classes)
        r.fail("total p-adic rank " + std::to_string(total) + " differs from class count " + std::to_string(classes));
      return r;
    });
    if (g.order_u64() <= 12)
      tasks.emplace_back("ideal_sequence/" + name, [g = g, depth] { return verify_ideal_sequence_pro_exact(g, depth); });
  }
  for (std::uint64_t n : {2, 3, 4, 5, 8, 9}) {
    tasks.emplace_back("theta/Z" + std::to_string(n), [n] { return verify_theta(cyclic_data(library::cyclic(n))); });
    tasks.emplace_back("cyclic_evaluation/Z" + std::to_string(n),
                       [n] { return verify_cyclic_evaluation(cyclic_data(library::cyclic(n))); });
  }
  for (std::uint64_t n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    tasks.emplace_back("exponents/Z" + std::to_string(n), [n] {
      Report r;
      auto p = prime_divisors(n).front();
      auto e = find_exponents(library::cyclic(n), p, 16);
      if (!e.found()) {
        r.fail("inconclusive: exponents not found within bound 16");
        return r;
      }
      r.note("a = " + std::to_string(*e.a) + ", b = " + std::to_string(*e.b) + ", c = " + std::to_string(*e.c));
      // (x - 1)^(n-1) is congruent to the norm element mod p, which is not in p I
      if (*e.b != n) r.fail("b = " + std::to_string(*e.b) + ", expected |C| = " + std::to_string(n));
      if (n == 2 && (*e.a != 1 || *e.b != 2)) r.fail("Z/2 must give a = 1, b = 2");
      return r;
    });
  }
  for (const char* name : {"Z2", "Z3", "Z4", "S3"}) {
    const auto* g = find_group(corpus, name);
    if (!g) continue;
    tasks.emplace_back(std::string("pro_iso_chain/") + name, [g = *g, depth] {
      auto c = verify_pro_iso_chain(g, depth);
      return c.report;
    });
  }
  tasks.emplace_back("six_term/constant_Z2_Z4_Z2", [depth] {
    return six_term_check(constant_tower({2}, 1, depth), constant_tower({4}, 1, depth), constant_tower({2}, 1, depth),
                          constant_map(2, depth), constant_map(1, depth));
  });
  tasks.emplace_back("six_term/zero_maps", [depth] {
    auto zero = Tower::constant(Subquotient::zero(1), IntMatrix::identity(1), depth);
    return six_term_check(zero, constant_tower({2}, 0, depth), zero, constant_map(0, depth), constant_map(0, depth));
  });
  tasks.emplace_back("six_term/constant_Z", [depth] {
    auto zero = Tower::constant(Subquotient::zero(1), IntMatrix::identity(1), depth);
    auto z = constant_tower({0}, 1, depth);
    return six_term_check(zero, z, z, constant_map(0, depth), constant_map(1, depth));
  });
  tasks.emplace_back("padic_roots", [] {
    Report r;
    auto check = [&](std::uint64_t l, std::uint64_t p, bool expect) {
      auto res = padic_root_check(l, p, 2);
      if (!res.decided || res.exists != expect)
        r.fail("l = " + std::to_string(l) + ", p = " + std::to_string(p) + ": expected " + (expect ? "true" : "false"));
    };
    check(3, 3, false);
    check(4, 5, true);
    check(4, 2, false);
    check(2, 2, true);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      check(1, p, true);
      for (std::uint64_t l = 2; l <= 12; ++l) {
        auto res = padic_root_check(l, p, 1);
        if (res.teichmuller && res.decided && res.exists != *res.teichmuller)
          r.fail("l = " + std::to_string(l) + ", p = " + std::to_string(p) + ": search and l | p - 1 disagree");
      }
    }
    return r;
  });

  SelfcheckResult out;
  out.checks = run_all(tasks, opt.threads);
  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : out.checks) {
    if (r.pass()) continue;
    (is_inconclusive(r) ? any_inconclusive : any_fail) = true;
  }
  out.outcome = any_fail ? SelfcheckOutcome::fail
                         : any_inconclusive ? SelfcheckOutcome::inconclusive : SelfcheckOutcome::pass;
  return out;
}

}  // namespace kbgq
