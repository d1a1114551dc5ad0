// Copyright 2026 The gsf developers
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

#include <catch2/catch_amalgamated.hpp>

#include "gsf/families.hpp"
#include "gsf/graph.hpp"
#include "gsf/io.hpp"
#include "test_util.hpp"

using namespace gsf;

TEST_CASE("graph construction and invariants") {
  REQUIRE_THROWS_AS(Graph(0), std::invalid_argument);
  Graph g(3);
  g.add_edge(1, 2);
  REQUIRE(g.has_edge(2, 1));
  REQUIRE_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(g.has_edge(0, 1), std::out_of_range);
  REQUIRE(g.edge_count() == 1);
}

TEST_CASE("local complementation") {
  SECTION("K3 about 1 gives the star centered at 1") {
    Graph k3 = make_complete(3);
    Graph lc = local_complement(k3, 1);
    REQUIRE(lc.has_edge(1, 2));
    REQUIRE(lc.has_edge(1, 3));
    REQUIRE(!lc.has_edge(2, 3));
  }
  SECTION("degree <= 1 vertices are fixed points") {
    Graph p3 = make_path(3);
    REQUIRE(local_complement(p3, 1) == p3);
    Graph g(2);
    REQUIRE(local_complement(g, 1) == g);
  }
  SECTION("involution on random graphs") {
    for (int trial = 0; trial < 50; ++trial) {
      Graph g = test::random_graph(7, 0.5, 991 + trial);
      for (int v = 1; v <= 7; ++v) REQUIRE(local_complement(local_complement(g, v), v) == g);
    }
  }
}

TEST_CASE("pivot") {
  SECTION("precondition") {
    Graph p3 = make_path(3);
    REQUIRE_THROWS_AS(pivot(p3, 1, 3), std::invalid_argument);
  }
  SECTION("single edge is relabel-symmetric") {
    Graph p2 = make_path(2);
    REQUIRE(pivot(p2, 1, 2) == p2);
  }
  SECTION("pivot on an RGS core-leaf edge exchanges the two") {
    for (int n : {3, 4, 5}) {
      Graph g = make_rgs(n);
      Graph p = pivot(g, 1, n + 1);
      // v=1 (core) and w=n+1 (its leaf) swap roles.
      std::vector<int> perm(2 * n);
      for (int i = 0; i < 2 * n; ++i) perm[i] = i + 1;
      std::swap(perm[0], perm[n]);
      REQUIRE(p == g.permuted(perm));
    }
  }
  SECTION("equals three local complementations") {
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = test::random_graph(6, 0.5, 77 + trial);
      for (auto [v, w] : g.edges())
        REQUIRE(pivot(g, v, w) == local_complement(local_complement(local_complement(g, v), w), v));
    }
  }
  SECTION("symmetric in v and w on all connected graphs n <= 5") {
    for (int n = 2; n <= 5; ++n)
      test::for_each_connected_graph(n, [&](const Graph& g) {
        for (auto [v, w] : g.edges()) REQUIRE(pivot(g, v, w) == pivot(g, w, v));
      });
  }
}

TEST_CASE("vertex minors") {
  SECTION("Z minor of P3 center") {
    auto m = vertex_minor(make_path(3), 2, MinorKind::Z);
    REQUIRE(m.graph.order() == 2);
    REQUIRE(m.graph.edge_count() == 0);
    REQUIRE(m.old_to_new[1] == 1);
    REQUIRE(m.old_to_new[2] == 0);
    REQUIRE(m.old_to_new[3] == 2);
  }
  SECTION("Y minor of K3 about 1 removes the 2-3 edge") {
    auto m = vertex_minor(make_complete(3), 1, MinorKind::Y);
    REQUIRE(m.graph.order() == 2);
    REQUIRE(m.graph.edge_count() == 0);
  }
  SECTION("Z minor of a star center isolates the leaves") {
    auto m = vertex_minor(make_star(4), 1, MinorKind::Z);
    REQUIRE(m.graph.order() == 3);
    REQUIRE(m.graph.edge_count() == 0);
  }
  SECTION("X-minor requires a neighbor") {
    REQUIRE_THROWS_AS(vertex_minor(make_path(3), 1, MinorKind::X, 3), std::invalid_argument);
  }
}

TEST_CASE("connected components") {
  REQUIRE(connected_components(make_complete(3)).size() == 1);
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  REQUIRE(comps[0].members() == std::vector<int>{1, 2});
  REQUIRE(comps[1].members() == std::vector<int>{3, 4});
}

TEST_CASE("component size multiset is invariant under local complementation") {
  for (int n = 2; n <= 5; ++n)
    test::for_each_connected_graph(n, [&](const Graph& g) {
      for (int v = 1; v <= n; ++v) REQUIRE(connected_components(local_complement(g, v)).size() == 1);
    });
}

TEST_CASE("isomorphism") {
  SECTION("paths with permuted labels") {
    Graph a = make_path(3);
    Graph b(3);
    b.add_edge(2, 1);
    b.add_edge(1, 3);
    REQUIRE(is_isomorphic(a, b));
  }
  SECTION("P3 vs K3") { REQUIRE(!is_isomorphic(make_path(3), make_complete(3))); }
  SECTION("self-isomorphism of random graphs under random relabeling") {
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = test::random_graph(7, 0.4, 1234 + trial);
      auto perm = test::random_permutation(7, 999 + trial);
      REQUIRE(is_isomorphic(g, g.permuted(perm)));
    }
  }
}

TEST_CASE("graph families") {
  SECTION("rgs(3) labeling") {
    Graph g = make_rgs(3);
    REQUIRE(g.order() == 6);
    REQUIRE(g.has_edge(1, 2));
    REQUIRE(g.has_edge(1, 3));
    REQUIRE(g.has_edge(2, 3));
    REQUIRE(g.has_edge(1, 4));
    REQUIRE(g.has_edge(2, 5));
    REQUIRE(g.has_edge(3, 6));
    REQUIRE(g.edge_count() == 6);
  }
  SECTION("rgs edge count law") {
    for (int n = 2; n <= 8; ++n) REQUIRE(make_rgs(n).edge_count() == n * (n - 1) / 2 + n);
  }
  SECTION("complete(4) has 6 edges") { REQUIRE(make_complete(4).edge_count() == 6); }
  SECTION("star(4) degrees") {
    Graph s = make_star(4);
    REQUIRE(s.degree(1) == 3);
    for (int v = 2; v <= 4; ++v) REQUIRE(s.degree(v) == 1);
  }
  SECTION("wheel and bw3 shapes") {
    REQUIRE(make_wheel(5).order() == 6);
    REQUIRE(make_wheel(5).edge_count() == 10);
    REQUIRE(make_bw3().order() == 7);
    REQUIRE(make_bw3().edge_count() == 9);
  }
}

TEST_CASE("ordering generators are isomorphic to their family") {
  for (int n = 3; n <= 6; ++n) {
    REQUIRE(is_isomorphic(rgs_ordering(n), make_rgs(n)));
    for (int l = 1; l <= 3; ++l)
      REQUIRE(is_isomorphic(rgs_many_leaves_ordering(n, l), make_rgs_many_leaves(n, l)));
  }
  SECTION("many-leaves ordering at l=1 matches rgs_ordering's family") {
    for (int n = 3; n <= 6; ++n) REQUIRE(is_isomorphic(rgs_many_leaves_ordering(n, 1), rgs_ordering(n)));
  }
  SECTION("encoded ordering rejects odd n") {
    REQUIRE_THROWS_AS(rgs_encoded_ordering(5, 2), std::invalid_argument);
  }
}

TEST_CASE("graph text io") {
  SECTION("edge list round trip") {
    Graph g = make_rgs(3);
    Graph back = read_graph_string(write_graph_string(g));
    REQUIRE(back == g);
  }
  SECTION("comments and dense form") {
    Graph a = read_graph_string("# a triangle\n3\n1 2\n2 3\n1 3\n");
    REQUIRE(a == make_complete(3));
    Graph b = read_graph_string("3\n0 1 1\n1 0 1\n1 1 0\n");
    REQUIRE(b == make_complete(3));
  }
  SECTION("bad input") {
    REQUIRE_THROWS(read_graph_string(""));
    REQUIRE_THROWS(read_graph_string("2\n1 1\n"));
    REQUIRE_THROWS(read_graph_string("3\n0 1 1\n0 0 1\n1 1 0\n"));
  }
}
