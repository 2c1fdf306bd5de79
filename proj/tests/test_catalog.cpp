#include <catch_amalgamated.hpp>

#include "bwkit/bwkit.hpp"
#include "bwkit/instances.hpp"
#include "support.hpp"

using namespace bwkit;

TEST_CASE("closed forms") {
    SECTION("exact families") {
        REQUIRE(closed_form_bw(make_catalog_entry(Family::Torus, {4, 4})).exact == 8);
        REQUIRE(closed_form_bw(make_catalog_entry(Family::Torus, {3, 3})).exact == 8);
        REQUIRE(closed_form_bw(make_catalog_entry(Family::Array, {3, 3})).exact == 4);
        REQUIRE(closed_form_bw(make_catalog_entry(Family::MCX, {7, 7})).exact == 16);
        REQUIRE(closed_form_bw(make_catalog_entry(Family::MCX, {7})).exact == 2);
        REQUIRE(closed_form_bw(make_catalog_entry(Family::MCT, {3, 3})).exact == 4);
        auto mctp = make_catalog_entry(
            Family::MCTP,
            ProductSpec({FactorSpec(FactorKind::Path, 4), FactorSpec(FactorKind::CBT, 3)}));
        REQUIRE(closed_form_bw(mctp).exact == 3);
    }
    SECTION("bcube intervals") {
        auto a42 = closed_form_bw(make_catalog_entry(Family::BCubeA, {4, 4}));
        REQUIRE(a42.kind == ClosedForm::Kind::Interval);
        REQUIRE(a42.lo == Rat(16, 3));
        REQUIRE(a42.hi == 8);

        auto b32 = closed_form_bw(make_catalog_entry(Family::BCubeB, {3, 3}));
        REQUIRE(b32.lo == Rat(8, 3));
        REQUIRE(b32.hi == 4);

        auto a21 = closed_form_bw(make_catalog_entry(Family::BCubeA, {2}));
        REQUIRE(a21.lo == Rat(1));
        REQUIRE(a21.hi == 1);
        REQUIRE(exact_bisection_width(build_factor(FactorSpec(FactorKind::SSA, 2))).width == 1);
    }
    SECTION("bcube intervals agree with the generic bounds") {
        for (Family fam : {Family::BCubeA, Family::BCubeB}) {
            for (int64_t k : {2, 3, 4, 5}) {
                for (int64_t d = 1; d <= 3; ++d) {
                    std::vector<int64_t> dims(static_cast<size_t>(d), k);
                    auto entry = make_catalog_entry(fam, dims);
                    auto cf = closed_form_bw(entry);
                    REQUIRE(cf.lo == lower_bound(entry.spec).value);
                    if (fam == Family::BCubeB && k % 2 == 0) {
                        // the published interval keeps the parity-free upper
                        // (k^d-1)/(k-1), looser than CC * Psi(alpha) here
                        REQUIRE(upper_bound(entry.spec) <= cf.hi);
                    } else {
                        REQUIRE(BigInt(cf.hi) == upper_bound(entry.spec));
                    }
                }
            }
        }
    }
    SECTION("hamming has no closed form here") {
        REQUIRE(closed_form_bw(make_catalog_entry(Family::Hamming, {3, 3})).kind ==
                ClosedForm::Kind::None);
    }
    SECTION("bound sandwich across the whole catalog, n <= 20") {
        InstanceLimits lim;
        lim.max_n = 20;
        for (Family fam : all_families()) {
            for (const auto& entry : family_instances(fam, lim)) {
                INFO(family_name(fam) << " " << entry.spec.str());
                int64_t bw = exact_bisection_width(cartesian_product(entry.spec)).width;
                REQUIRE(auto_lower_bound(entry.spec).ceiling <= bw);
                REQUIRE(BigInt(bw) <= upper_bound(entry.spec));
                auto cf = closed_form_bw(entry);
                if (cf.kind == ClosedForm::Kind::Exact) REQUIRE(cf.exact == bw);
                if (cf.kind == ClosedForm::Kind::Interval) {
                    REQUIRE(cf.lo <= Rat(bw));
                    REQUIRE(BigInt(bw) <= cf.hi);
                }
            }
        }
    }
    SECTION("family validation") {
        REQUIRE_THROWS_AS(
            make_catalog_entry(Family::MCT, ProductSpec({FactorSpec(FactorKind::Path, 4)})),
            Error);
        REQUIRE_THROWS_AS(make_catalog_entry(Family::BCubeA, {4, 3}), Error);
        REQUIRE_THROWS_AS(
            make_catalog_entry(Family::Torus, ProductSpec({FactorSpec(FactorKind::XT, 7)})),
            Error);
    }
}

TEST_CASE("bisection bandwidth") {
    CapacityModel cap;
    cap.link_T = 1;
    cap.has_T = true;
    cap.switch_s = 1;
    cap.has_s = true;

    SECTION("worked examples") {
        REQUIRE(bisection_bandwidth(make_catalog_entry(Family::Torus, {4, 4}), cap).exact ==
                Rat(16));
        CapacityModel five = cap;
        five.link_T = 5;
        REQUIRE(bisection_bandwidth(make_catalog_entry(Family::MCT, {3, 3}), five).exact ==
                Rat(40));
        CapacityModel s2;
        s2.switch_s = 2;
        s2.has_s = true;
        auto rep = bisection_bandwidth(make_catalog_entry(Family::BCubeB, {3}), s2);
        REQUIRE(rep.lo == Rat(4, 3));
        REQUIRE(rep.hi == Rat(2));
    }
    SECTION("missing capacities") {
        CapacityModel none;
        REQUIRE_THROWS_AS(bisection_bandwidth(make_catalog_entry(Family::Torus, {4, 4}), none),
                          Error);
        CapacityModel only_T;
        only_T.link_T = 1;
        only_T.has_T = true;
        REQUIRE_THROWS_AS(
            bisection_bandwidth(make_catalog_entry(Family::BCubeB, {3, 3}), only_T), Error);
    }
    SECTION("scale equivariance") {
        auto torus = make_catalog_entry(Family::Torus, {5, 4});
        auto bcube = make_catalog_entry(Family::BCubeB, {4, 4});
        Rat base_t, base_b;
        bool first = true;
        for (Rat scale : {Rat(1), Rat(2), Rat(7, 3)}) {
            CapacityModel c;
            c.link_T = scale;
            c.has_T = true;
            c.switch_s = scale;
            c.has_s = true;
            Rat t_norm = bisection_bandwidth(torus, c).exact / scale;
            Rat b_norm = bisection_bandwidth(bcube, c).lo / scale;
            if (first) {
                base_t = t_norm;
                base_b = b_norm;
                first = false;
            }
            REQUIRE(t_norm == base_t);
            REQUIRE(b_norm == base_b);
        }
    }
}

TEST_CASE("summary table") {
    const auto& rows = table1_rows();
    REQUIRE(rows.size() == 9);

    SECTION("beta and cc cells match the factor metrics, k in [2, 9]") {
        for (const auto& row : rows) {
            for (int64_t k = 2; k <= 9; ++k) {
                if (!row.valid_k(k)) continue;
                INFO(row.product << " / " << row.factors << " k=" << k);
                REQUIRE(row.beta_of(k) == row.beta_module(k));
                if (row.product == "Torus")
                    REQUIRE(row.cc_of(k) == central_cut(FactorSpec(FactorKind::Ring, k)));
                if (row.factors == "Model A (k even)" || row.factors == "Model A (k odd)")
                    REQUIRE(row.cc_of(k) == central_cut(FactorSpec(FactorKind::SSA, k)));
                if (row.factors == "Model B (k even)" || row.factors == "Model B (k odd)")
                    REQUIRE(row.cc_of(k) == central_cut(FactorSpec(FactorKind::SSB, k)));
                if (row.product == "Mesh connected trees")
                    REQUIRE(row.cc_of(k) == central_cut(FactorSpec(FactorKind::CBT, k)));
            }
        }
    }
    SECTION("numeric instances") {
        CapacityModel cap;
        cap.link_T = 1;
        cap.has_T = true;
        cap.switch_s = 1;
        cap.has_s = true;
        REQUIRE(rows[0].bbw_of(4, 2, cap).exact == Rat(16));  // torus 4x4
        REQUIRE(rows[3].bbw_of(3, 2, cap).exact == Rat(8));   // mct 3x3
        auto bcb = rows[8].bbw_of(3, 2, cap);                 // model B odd
        REQUIRE(bcb.lo == Rat(8, 3));
        REQUIRE(bcb.hi == Rat(4));
    }
}
