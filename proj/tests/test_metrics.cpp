#include <catch_amalgamated.hpp>

#include <set>

#include "bwkit/bwkit.hpp"
#include "support.hpp"

using namespace bwkit;

namespace {

// All valid specs of a family for k in [2, 64] at canonical multiplicity.
std::vector<FactorSpec> sweep(FactorKind kind, int64_t max_k = 64) {
    std::vector<FactorSpec> out;
    for (int64_t k = 2; k <= max_k; ++k) {
        if ((kind == FactorKind::CBT || kind == FactorKind::XT) && !is_full_tree_size(k))
            continue;
        out.emplace_back(kind, k);
    }
    return out;
}

}  // namespace

TEST_CASE("congestion closed forms") {
    REQUIRE(congestion(FactorSpec(FactorKind::Path, 4)) == 4);
    REQUIRE(congestion(FactorSpec(FactorKind::Path, 5)) == 6);
    REQUIRE(congestion(FactorSpec(FactorKind::Path, 1)) == 0);
    REQUIRE(congestion(FactorSpec(FactorKind::CBT, 7)) == 12);
    REQUIRE(congestion(FactorSpec(FactorKind::CBT, 3)) == 2);
    REQUIRE(congestion(FactorSpec(FactorKind::Ring, 4)) == 4);   // k^2/4 at r = 2
    REQUIRE(congestion(FactorSpec(FactorKind::Ring, 5)) == 6);   // (k^2-1)/4
    REQUIRE(congestion(FactorSpec(FactorKind::XT, 7)) == 12);
    REQUIRE(congestion(FactorSpec(FactorKind::Clique, 9)) == 1);
    REQUIRE(congestion(FactorSpec(FactorKind::RClique, 9, 3)) == 3);
    REQUIRE(congestion(FactorSpec(FactorKind::SSA, 5)) == 4);    // k - 1
    REQUIRE(congestion(FactorSpec(FactorKind::SSB, 5)) == 10);   // k(k-1)/2
}

TEST_CASE("normalized congestion") {
    REQUIRE(normalized_congestion(FactorSpec(FactorKind::Path, 5)) == Rat(1, 4));
    REQUIRE(normalized_congestion(FactorSpec(FactorKind::SSA, 5)) == Rat(1, 6));
    REQUIRE(normalized_congestion(FactorSpec(FactorKind::SSA, 4)) == Rat(3, 16));
    REQUIRE(normalized_congestion(FactorSpec(FactorKind::SSB, 4)) == Rat(3, 8));
    REQUIRE(normalized_congestion(FactorSpec(FactorKind::SSB, 5)) == Rat(5, 12));
    REQUIRE(normalized_congestion(FactorSpec(FactorKind::Clique, 6)) == Rat(1, 36));

    SECTION("path and cbt stay at r/4 for every size, k in [1, 1025]") {
        for (int64_t k = 1; k <= 1025; ++k) {
            REQUIRE(normalized_congestion(FactorSpec(FactorKind::Path, k)) == Rat(1, 4));
            if (is_full_tree_size(k))
                REQUIRE(normalized_congestion(FactorSpec(FactorKind::CBT, k)) == Rat(1, 4));
        }
    }
    SECTION("rings and xts sit at 1/4 under the dual-route embedding") {
        for (int64_t k = 3; k <= 64; ++k) {
            REQUIRE(normalized_congestion(FactorSpec(FactorKind::Ring, k)) == Rat(1, 4));
            if (is_full_tree_size(k))
                REQUIRE(normalized_congestion(FactorSpec(FactorKind::XT, k)) == Rat(1, 4));
        }
    }
    SECTION("sigma * beta == m_r exactly, every family") {
        const FactorKind kinds[] = {FactorKind::Path, FactorKind::Ring,   FactorKind::CBT,
                                    FactorKind::XT,   FactorKind::Clique, FactorKind::SSA,
                                    FactorKind::SSB};
        for (FactorKind kind : kinds)
            for (const auto& f : sweep(kind))
                REQUIRE(Rat(sigma(f.k)) * normalized_congestion(f) == Rat(congestion(f)));
        for (int64_t r = 1; r <= 4; ++r)
            for (int64_t k = 2; k <= 16; ++k) {
                FactorSpec f(FactorKind::RClique, k, r);
                REQUIRE(Rat(sigma(k)) * normalized_congestion(f) == Rat(congestion(f)));
            }
    }
}

TEST_CASE("factor metrics bundle") {
    auto m = factor_metrics(FactorSpec(FactorKind::SSA, 5));
    REQUIRE(m.m_r == 4);
    REQUIRE(m.beta_r == Rat(1, 6));
    REQUIRE(m.cc == 2);
    REQUIRE(m.r == 1);
}

TEST_CASE("central cut") {
    REQUIRE(central_cut(FactorSpec(FactorKind::Path, 9)) == 1);
    REQUIRE(central_cut(FactorSpec(FactorKind::CBT, 15)) == 1);
    REQUIRE(central_cut(FactorSpec(FactorKind::Ring, 8)) == 2);
    REQUIRE(central_cut(FactorSpec(FactorKind::XT, 7)) == 2);
    REQUIRE(central_cut(FactorSpec(FactorKind::SSA, 5)) == 2);  // (k-1)/2 odd
    REQUIRE(central_cut(FactorSpec(FactorKind::SSA, 6)) == 3);  // k/2 even
    REQUIRE(central_cut(FactorSpec(FactorKind::SSB, 9)) == 1);
    REQUIRE(central_cut(FactorSpec(FactorKind::Clique, 5)) == 6);  // 2 * 3
    REQUIRE(central_cut(FactorSpec(FactorKind::Clique, 4)) == 4);
    REQUIRE(central_cut(FactorSpec(FactorKind::RClique, 3, 2)) == 4);
}

TEST_CASE("central order") {
    SECTION("worked examples") {
        REQUIRE(central_order(FactorSpec(FactorKind::Path, 4)) ==
                std::vector<int64_t>{0, 1, 2, 3});
        REQUIRE(central_order(FactorSpec(FactorKind::CBT, 7)) ==
                std::vector<int64_t>{3, 1, 4, 0, 5, 2, 6});
        REQUIRE(central_order(FactorSpec(FactorKind::XT, 3)) == std::vector<int64_t>{1, 0, 2});
    }
    SECTION("prefix and suffix of floor(k/2) both cut exactly CC, k <= 64") {
        const FactorKind kinds[] = {FactorKind::Path, FactorKind::Ring,   FactorKind::CBT,
                                    FactorKind::XT,   FactorKind::Clique, FactorKind::SSA,
                                    FactorKind::SSB};
        for (FactorKind kind : kinds) {
            for (const auto& f : sweep(kind)) {
                auto t = build_factor(f);
                auto order = central_order(f);
                int64_t half = f.k / 2;
                Partition prefix, suffix;
                prefix.members.assign(order.begin(), order.begin() + half);
                suffix.members.assign(order.end() - half, order.end());
                std::sort(prefix.members.begin(), prefix.members.end());
                std::sort(suffix.members.begin(), suffix.members.end());
                INFO(f.str());
                REQUIRE(BigInt(cut_size(t, prefix)) == central_cut(f));
                REQUIRE(BigInt(cut_size(t, suffix)) == central_cut(f));
            }
        }
    }
    SECTION("xt order is a hamiltonian cycle") {
        for (int64_t k : {3, 7, 15, 31, 63, 127}) {
            FactorSpec f(FactorKind::XT, k);
            auto t = build_factor(f);
            std::set<std::pair<int64_t, int64_t>> edges;
            for (const auto& e : t.edges)
                edges.insert({std::min<int64_t>(e.u, e.v), std::max<int64_t>(e.u, e.v)});
            auto order = central_order(f);
            REQUIRE(static_cast<int64_t>(order.size()) == k);
            std::set<int64_t> distinct(order.begin(), order.end());
            REQUIRE(static_cast<int64_t>(distinct.size()) == k);
            for (size_t i = 0; i < order.size(); ++i) {
                int64_t u = order[i], v = order[(i + 1) % order.size()];
                INFO("k=" << k << " gap " << u << "-" << v);
                REQUIRE(edges.count({std::min(u, v), std::max(u, v)}) == 1);
            }
        }
    }
}

TEST_CASE("unique-routing tree congestion oracle") {
    SECTION("worked examples") {
        REQUIRE(unique_path_congestion_oracle(build_factor(FactorSpec(FactorKind::Path, 5)), 1) ==
                6);
        REQUIRE(unique_path_congestion_oracle(build_factor(FactorSpec(FactorKind::CBT, 7)), 1) ==
                12);
        REQUIRE(unique_path_congestion_oracle(build_factor(FactorSpec(FactorKind::Path, 2)), 3) ==
                3);
        REQUIRE(unique_path_congestion_oracle(build_factor(FactorSpec(FactorKind::Path, 1)), 1) ==
                0);
    }
    SECTION("agrees with the closed form on paths and cbts, k <= 127") {
        for (int64_t k = 1; k <= 127; ++k) {
            FactorSpec p(FactorKind::Path, k);
            REQUIRE(unique_path_congestion_oracle(build_factor(p), 1) == congestion(p));
            if (is_full_tree_size(k)) {
                FactorSpec c(FactorKind::CBT, k);
                REQUIRE(unique_path_congestion_oracle(build_factor(c), 1) == congestion(c));
            }
        }
    }
    SECTION("rejects non-trees") {
        REQUIRE_THROWS_AS(
            unique_path_congestion_oracle(build_factor(FactorSpec(FactorKind::Ring, 5)), 1),
            Error);
        REQUIRE_THROWS_AS(
            unique_path_congestion_oracle(build_factor(FactorSpec(FactorKind::SSB, 4)), 1),
            Error);
        Topology disconnected;
        disconnected.servers = 3;
        disconnected.radices = {3};
        disconnected.edges = {{0, 1, 1}, {0, 1, 1}};  // right count, wrong shape
        REQUIRE_THROWS_AS(unique_path_congestion_oracle(disconnected, 1), Error);
    }
}
