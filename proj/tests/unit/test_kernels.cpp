#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace parakernel;
using namespace pktest;

namespace {

Digraph our_graph() { return fixture_graph("delta.gnf"); }

// a with a loop, a -> b, b <-> c
Digraph loop_graph() { return fixture_graph("loop.edges"); }

std::vector<AtomSet> sets(const Digraph& g, std::initializer_list<std::vector<std::string>> names) {
  std::vector<AtomSet> out;
  for (const auto& n : names) out.push_back(g.set_of(n));
  return out;
}

}  // namespace

TEST_CASE("classify subsets") {
  const Digraph g = our_graph();
  const SubsetReport a = classify_subset(g, g.set_of({"a"}));
  CHECK(a == SubsetReport{true, false, true, true, true});
  const SubsetReport ap = classify_subset(g, g.set_of({"a'"}));
  CHECK(ap.semikernel);
  CHECK_FALSE(ap.inverse_closed);
  CHECK_FALSE(ap.psk);

  const Digraph f1 = fixture_graph("f1.gnf");
  CHECK(classify_subset(f1, f1.set_of({"s"})).kernel);
  CHECK_THROWS_AS(classify_subset(g, AtomSet(3)), Error);
}

TEST_CASE("partitions of independent sets") {
  const Digraph g = our_graph();
  const Partition3 p = partition_of(g, g.set_of({"a"}));
  CHECK(p == Partition3{g.set_of({"a"}), g.set_of({"a'", "b"}), g.set_of({"c", "d", "e"})});
  CHECK(partition_of(g, g.universe().empty_set()) ==
        Partition3{g.universe().empty_set(), g.universe().empty_set(), g.universe().all()});
  const Digraph f1 = fixture_graph("f1.gnf");
  CHECK(partition_of(f1, f1.set_of({"s"})) == Partition3{f1.set_of({"s"}), f1.set_of({"f"}), f1.universe().empty_set()});
  CHECK_THROWS_AS(partition_of(g, g.set_of({"a", "a'"})), Error);
}

TEST_CASE("kernels") {
  CHECK(enumerate_kernels(our_graph()).empty());
  const Digraph l = loop_graph();
  CHECK(enumerate_kernels(l) == sets(l, {{"b"}}));
  const Digraph no_loop = io::parse_edge_list("a -> b\nb -> c\nc -> b\n");
  CHECK(enumerate_kernels(no_loop) == sets(no_loop, {{"b"}, {"a", "c"}}));
}

TEST_CASE("semikernels") {
  const Digraph g = our_graph();
  CHECK(enumerate_semikernels(g) == sets(g, {{}, {"a"}, {"a'"}}));
  const Digraph f2 = fixture_graph("f2.gnf");
  CHECK(enumerate_semikernels(f2) == sets(f2, {{}, {"s"}}));
  const Digraph empty = Digraph::from_names({}, {});
  CHECK(enumerate_semikernels(empty) == std::vector<AtomSet>{AtomSet(0)});
  const Digraph cycle = io::parse_edge_list("c -> d\nd -> e\ne -> c\n");
  CHECK(enumerate_semikernels(cycle) == sets(cycle, {{}}));
}

TEST_CASE("models") {
  const Digraph g = our_graph();
  CHECK(models(g) == std::vector<Partition3>{{g.set_of({"a"}), g.set_of({"a'", "b"}), g.set_of({"c", "d", "e"})}});
  const Digraph f2 = fixture_graph("f2.gnf");
  CHECK(models(f2) == std::vector<Partition3>{{AtomSet(3), AtomSet(3), f2.universe().all()}});
  const Digraph f1 = fixture_graph("f1.gnf");
  CHECK(models(f1) == std::vector<Partition3>{{f1.set_of({"s"}), f1.set_of({"f"}), AtomSet(2)}});
  CHECK(models(Digraph::from_names({}, {})) == std::vector<Partition3>{{AtomSet(0), AtomSet(0), AtomSet(0)}});
}

TEST_CASE("enumeration cap") {
  const Digraph g = oracle::random_digraph({22, 0.2, 1});
  CHECK_THROWS_AS(enumerate_kernels(g), Error);
  try {
    models(g);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
  EnumerationLimits wide;
  wide.max_atoms = 22;
  CHECK_NOTHROW(enumerate_kernels(g, wide));
}

TEST_CASE("semikernel combinators") {
  const Digraph path = io::parse_edge_list("w -> x\nx -> y\ny -> z\n");
  CHECK(sk_intersect_reach(path, path.set_of({"x", "z"}), path.set_of({"z"})) == path.set_of({"z"}));
  CHECK(sk_intersect_reach(path, path.set_of({"x", "z"}), path.universe().empty_set()).empty());
  CHECK(sk_intersect_reach(path, path.set_of({"x", "z"}), path.set_of({"x", "z"})) == path.set_of({"x", "z"}));
  CHECK_THROWS_AS(sk_intersect_reach(path, path.set_of({"x", "z"}), path.set_of({"w"})), Error);
  CHECK(sk_union(path, path.set_of({"z"}), path.set_of({"x", "z"})) == path.set_of({"x", "z"}));
  CHECK(sk_union(path, path.set_of({"z"}), path.universe().empty_set()) == path.set_of({"z"}));

  const Digraph pairs = io::parse_edge_list("u -> v\np -> q\n");
  CHECK(sk_union(pairs, pairs.set_of({"v"}), pairs.set_of({"q"})) == pairs.set_of({"v", "q"}));
  CHECK_THROWS_AS(sk_union(pairs, pairs.set_of({"v"}), pairs.set_of({"u"})), Error);
}

TEST_CASE("combining pSK partitions") {
  const Digraph g = our_graph();
  const auto p = [&](std::vector<std::string> s) { return partition_of(g, g.set_of(s)); };
  CHECK(combine_psk(g, p({}), p({"a"})) == p({"a"}));
  try {
    combine_psk(g, p({"a"}), p({"a'"}));
    FAIL("expected a precondition error");
  } catch (const CombineError& e) {
    CHECK(e.reason() == CombineError::Reason::NoOverlap);
  }
  try {
    combine_psk(g, p({"a'"}), p({"a"}));
    FAIL("expected a precondition error");
  } catch (const CombineError& e) {
    CHECK(e.reason() == CombineError::Reason::AlphaNotPsk);
  }

  const Digraph mixed = io::parse_edge_list("f -> f\nf -> s\nc -> d\nd -> e\ne -> c\n");
  const auto q = [&](std::vector<std::string> s) { return partition_of(mixed, mixed.set_of(s)); };
  CHECK(combine_psk(mixed, q({}), q({"s"})) == q({"s"}));
}

TEST_CASE("property: subset classification against direct evaluation") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 150; ++k) {
    const Digraph g = oracle::random_digraph({1 + rng() % 8, 0.1 * static_cast<double>(1 + rng() % 5), rng()});
    const auto sks = oracle::brute_semikernels(g);
    const auto ks = oracle::brute_kernels(g);
    const std::uint32_t subsets = 1u << g.size();
    for (std::uint32_t m = 0; m < subsets; ++m) {
      AtomSet s(g.size());
      for (AtomId a = 0; a < g.size(); ++a) {
        if (m >> a & 1) s.insert(a);
      }
      const SubsetReport r = classify_subset(g, s);
      const bool in_sk = std::find(sks.begin(), sks.end(), s) != sks.end();
      const bool in_k = std::find(ks.begin(), ks.end(), s) != ks.end();
      CHECK(r.semikernel == in_sk);
      CHECK(r.kernel == in_k);
      CHECK(r.psk == (r.semikernel && r.inverse_closed));
      if (r.kernel) CHECK(r.semikernel);
      if (r.semikernel) {
        // a semikernel is a kernel of the subgraph its boolean domain induces
        const AtomSet domain = g.in_closed(s);
        const Digraph sub = induced_subgraph(g, domain);
        AtomSet local(sub.size());
        s.for_each([&](AtomId a) { local.insert(sub.universe().at(g.universe().name(a))); });
        CHECK(is_kernel(sub, local));
        // and its partition satisfies the three pointwise conditions
        const Partition3 p = partition_of(g, s);
        p.true_set.for_each([&](AtomId x) { CHECK(g.successors(x).is_subset_of(p.false_set)); });
        p.false_set.for_each([&](AtomId x) { CHECK(g.successors(x).intersects(p.true_set)); });
      }
    }
  }
}

TEST_CASE("property: models share their boolean domain and are maximal") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 150; ++k) {
    const Digraph g = oracle::random_digraph({1 + rng() % 8, 0.1 * static_cast<double>(1 + rng() % 5), rng()});
    const auto ms = models(g);
    REQUIRE_FALSE(ms.empty());
    for (const auto& m : ms) {
      CHECK(m.boolean_domain() == ms.front().boolean_domain());
      CHECK(is_psk_partition(g, m));
      CHECK((m.true_set | m.false_set | m.paradox_set) == g.universe().all());
    }
    for (const auto& s : enumerate_closed_semikernels(g)) {
      CHECK_FALSE(ms.front().boolean_domain().is_proper_subset_of(g.in_closed(s)));
    }
  }
}
