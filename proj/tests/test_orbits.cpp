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
#include "gsf/orbits.hpp"
#include "test_util.hpp"

using namespace gsf;

TEST_CASE("orbit enumeration") {
  SECTION("a single edge is fixed by every LC") {
    REQUIRE(map_out_orbit(make_path(2), true).size() == 1);
  }
  SECTION("star orbits have n+1 labeled members for n >= 3") {
    for (int n = 3; n <= 6; ++n) REQUIRE(map_out_orbit(make_star(n), true).size() == std::size_t(n) + 1);
  }
  SECTION("the 6-vertex repeater orbit has 41 labeled members") {
    REQUIRE(map_out_orbit(make_rgs(3), true).size() == 41);
  }
  SECTION("budget error") {
    REQUIRE_THROWS_AS(map_out_orbit(make_rgs(3), true, 10), BudgetExceeded);
  }
  SECTION("discarding isomorphs shrinks the repeater orbit to the pattern size") {
    auto members = map_out_orbit(make_rgs(3), false);
    REQUIRE(members.size() == 5);
  }
}

TEST_CASE("lc equivalence") {
  SECTION("complete and star graphs are equivalent") {
    for (int n = 3; n <= 6; ++n) REQUIRE(lc_equivalent(make_complete(n), make_star(n)));
  }
  SECTION("P4 and K4 are not") { REQUIRE(!lc_equivalent(make_path(4), make_complete(4))); }
  SECTION("one LC step stays in the orbit") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
      Graph g = test::random_graph(6, 0.5, splitmix64(trial + 42));
      for (int v = 1; v <= 6; ++v) REQUIRE(lc_equivalent(g, local_complement(g, v)));
    }
  }
  SECTION("budget exceeded is reported") {
    REQUIRE_THROWS_AS(lc_equivalent(make_rgs(4), make_path(8), 3), BudgetExceeded);
  }
}

TEST_CASE("repeater orbit pattern") {
  SECTION("sizes follow the closed form") {
    for (int n = 3; n <= 12; ++n) {
      auto members = map_out_rgs_orbit(n);
      REQUIRE(members.size() == std::size_t(rgs_noniso_orbit_size(n)));
    }
    REQUIRE(rgs_noniso_orbit_size(3) == 5);
    REQUIRE(rgs_noniso_orbit_size(5) == 8);
    REQUIRE(rgs_noniso_orbit_size(50) == 76);
  }
  SECTION("n=50 runs without a full orbit search") {
    REQUIRE(map_out_rgs_orbit(50).size() == 76);
  }
  SECTION("members are pairwise non-isomorphic") {
    for (int n = 3; n <= 7; ++n) {
      auto members = map_out_rgs_orbit(n);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          REQUIRE(!is_isomorphic(members[i], members[j]));
    }
  }
  SECTION("every member is LC-equivalent to the repeater graph") {
    for (int n = 3; n <= 5; ++n)
      for (const Graph& m : map_out_rgs_orbit(n)) REQUIRE(lc_equivalent(make_rgs(n), m));
  }
  SECTION("the LC sequence ends on a core for odd n, a leaf for even n") {
    for (int n = 3; n <= 10; ++n) {
      auto seq = rgs_orbit_lc_sequence(n);
      if (n % 2 == 1)
        REQUIRE(seq.back() <= n);
      else
        REQUIRE(seq.back() > n);
    }
  }
  SECTION("an ordering permutation relabels every member") {
    auto plain = map_out_rgs_orbit(3);
    std::vector<int> perm{2, 1, 3, 4, 5, 6};
    auto relabeled = map_out_rgs_orbit(3, perm);
    REQUIRE(relabeled.size() == plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) REQUIRE(relabeled[i] == plain[i].permuted(perm));
  }
}

TEST_CASE("repeater orbit with multiple leaves") {
  SECTION("member count is independent of the leaf count") {
    for (int n = 3; n <= 6; ++n)
      for (int l = 2; l <= 4; ++l)
        REQUIRE(map_out_rgs_orbit_many_leaves(n, l).size() ==
                map_out_rgs_orbit_many_leaves(n, 1).size());
  }
  SECTION("members are LC-equivalent to the multi-leaf repeater graph") {
    for (int n : {3, 4})
      for (const Graph& m : map_out_rgs_orbit_many_leaves(n, 2))
        REQUIRE(lc_equivalent(rgs_many_leaves_ordering(n, 2), m, 1u << 22));
  }
  SECTION("members are pairwise non-isomorphic") {
    auto members = map_out_rgs_orbit_many_leaves(4, 3);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        REQUIRE(!is_isomorphic(members[i], members[j]));
  }
}

TEST_CASE("euler index") {
  SECTION("paths") {
    REQUIRE(euler_index_e(make_path(2)) == 6);
    REQUIRE(euler_index_e(make_path(4)) == 44);
  }
  SECTION("stars match the closed form") {
    for (int n = 2; n <= 10; ++n) REQUIRE(euler_index_e(make_star(n)) == star_orbit_e_closed_form(n));
  }
  SECTION("complete graphs match the star values") {
    for (int n = 2; n <= 8; ++n) REQUIRE(euler_index_e(make_complete(n)) == star_orbit_e_closed_form(n));
  }
  SECTION("repeater graphs match the closed form") {
    for (int n = 2; n <= 6; ++n) REQUIRE(euler_index_e(make_rgs(n)) == rgs_orbit_e_closed_form(n));
  }
  SECTION("LC invariance") {
    for (int n = 2; n <= 5; ++n)
      test::for_each_connected_graph(n, [&](const Graph& g) {
        BigInt e = euler_index_e(g);
        for (int v = 1; v <= n; ++v) REQUIRE(euler_index_e(local_complement(g, v)) == e);
      });
    for (int n : {6, 7})
      for (std::uint64_t trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(n, 0.5, splitmix64(n * 13 + trial));
        BigInt e = euler_index_e(g);
        for (int v = 1; v <= n; ++v) REQUIRE(euler_index_e(local_complement(g, v)) == e);
      }
  }
  SECTION("budget error") {
    REQUIRE_THROWS_AS(euler_index_e(make_rgs(6), 5), BudgetExceeded);
  }
}

TEST_CASE("bineighborhood index") {
  SECTION("complete graphs: k = 2^(n-1), not in mu") {
    for (int n = 3; n <= 10; ++n) {
      auto res = bineighborhood_k(make_complete(n));
      REQUIRE(res.k == BigInt(1) << (n - 1));
      REQUIRE(!res.in_mu);
    }
  }
  SECTION("the complete graph's cycle space collapses to one vector") {
    for (int n = 3; n <= 7; ++n) {
      auto cyc = cycle_space_vectors(make_complete(n));
      std::vector<BitVec> vs;
      for (auto& [c, nu] : cyc) vs.push_back(nu);
      REQUIRE(gf2_rank(vs) == 1);
    }
  }
  SECTION("repeater graphs: k = 2^n, not in mu") {
    for (int n = 2; n <= 8; ++n) {
      auto res = bineighborhood_k(make_rgs(n));
      REQUIRE(res.k == BigInt(1) << n);
      REQUIRE(!res.in_mu);
    }
  }
  SECTION("dimension bounds") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
      Graph g = random_connected_graph(6, 0.5, splitmix64(trial + 321));
      auto res = bineighborhood_k(g);
      REQUIRE(res.basis.dim >= 0);
      REQUIRE(res.basis.dim <= 6);
    }
  }
  SECTION("disconnected input is rejected") {
    REQUIRE_THROWS_AS(bineighborhood_k(Graph(3)), std::invalid_argument);
  }
}

TEST_CASE("orbit size from counting") {
  SECTION("l(K4) = 5 and l(K33) = 41") {
    REQUIRE(orbit_size_l(make_complete(4)) == 5);
    REQUIRE(orbit_size_l(make_rgs(3)) == 41);
  }
  SECTION("l(Kn) = n+1 for n >= 3") {
    for (int n = 3; n <= 9; ++n) REQUIRE(orbit_size_l(make_complete(n)) == n + 1);
    // At n=2 the single edge lies in class mu: k = 6 and the orbit is g alone.
    REQUIRE(orbit_size_l(make_complete(2)) == 1);
    REQUIRE(bineighborhood_k(make_complete(2)).in_mu);
  }
  SECTION("l(S6) equals the enumerated orbit size") {
    REQUIRE(orbit_size_l(make_star(6)) == BigInt(map_out_orbit(make_star(6), true).size()));
  }
  SECTION("counting matches enumeration on small circle graphs") {
    for (int n = 2; n <= 5; ++n)
      test::for_each_connected_graph(n, [&](const Graph& g) {
        REQUIRE(orbit_size_l(g) == BigInt(map_out_orbit(g, true).size()));
      });
  }
}

TEST_CASE("family classification") {
  SECTION("labeled connected graphs at n=4") {
    std::vector<Graph> all;
    test::for_each_connected_graph(4, [&](const Graph& g) { all.push_back(g); });
    REQUIRE(all.size() == 38);
    auto part = classify_lc_families(all);
    // One orbit of size l(K4)=5 (complete graph and the four stars) and
    // three labeled orbits of size l(P4)=11: 5 + 33 = 38.
    REQUIRE(part.num_families == 4);
    // Families partition the inputs and members agree with orbit sizes.
    std::map<int, int> sizes;
    for (int f : part.family_of) {
      REQUIRE(f >= 0);
      sizes[f]++;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      BigInt l = orbit_size_l(all[i]);
      REQUIRE(BigInt(sizes[part.family_of[i]]) == l);
    }
  }
}
