#include <doctest.h>

#include "arcshare/geometry.hpp"
#include "oracles.hpp"

using namespace arcshare;

namespace {

// two full pencil lines minus the center: the classical maximal parc
std::vector<ProjectivePoint> two_line_parc(const PlaneGeometry& plane, const Pencil& pencil,
                                           int center_id) {
    std::vector<ProjectivePoint> pts;
    for (int which : {0, 1}) {
        int line = plane.line_id(pencil.members[which]);
        for (int pt : plane.points_on_line(line))
            if (pt != center_id) pts.push_back(plane.points()[pt]);
    }
    return pts;
}

} // namespace

TEST_CASE("conic arcs") {
    for (uint32_t q : {3u, 4u, 5u, 7u, 9u}) {
        auto [p, n] = factor_prime_power(q);
        auto f = Field::make(p, n);
        auto arc = conic_arc(f);
        CHECK(arc.size() == (q % 2 == 0 ? q + 2 : q + 1));
        CHECK(is_arc(arc, 2));
    }
    // brute-force determinant confirmation for the smallest odd case
    auto arc3 = conic_arc(Field::make(3, 1));
    bool ok = for_each_subset(arc3.size(), 3, [&](const std::vector<size_t>& idx) {
        return oracle::triple_independent(arc3[idx[0]], arc3[idx[1]], arc3[idx[2]]);
    });
    CHECK(ok);
}

TEST_CASE("two pencil lines minus the center form a 2q-parc") {
    for (uint32_t q : {2u, 3u, 4u}) {
        auto [p, n] = factor_prime_power(q);
        auto f = Field::make(p, n);
        PlaneGeometry plane(f);
        Pencil pencil = pencil_through(Subspace({plane.points()[0].coords()}), 2, f);
        auto pts = two_line_parc(plane, pencil, 0);
        REQUIRE(pts.size() == 2 * q);
        PencilArc parc = make_parc(pts, pencil, 2);
        CHECK(parc.nonzero_profile() == std::vector<int>{static_cast<int>(q), static_cast<int>(q)});
        CHECK(parc.regular());
    }
}

TEST_CASE("verify_parc rejects violations with witnesses") {
    auto f3 = Field::make(3, 1);
    PlaneGeometry plane(f3);
    Pencil pencil = pencil_through(Subspace({plane.points()[0].coords()}), 2, f3);
    auto pts = two_line_parc(plane, pencil, 0);

    SUBCASE("center inclusion breaks (12)") {
        auto bad = pts;
        bad.push_back(plane.points()[0]);
        GeoCheck check = verify_parc(bad, pencil, 2);
        CHECK_FALSE(check.ok);
        CHECK(check.condition == "(12)");
        REQUIRE(check.witness.size() == 1);
        CHECK(check.witness[0] == plane.points()[0]);
    }

    SUBCASE("a cross-member collinear triple breaks (13)") {
        // join a point of each section and add the third point of that line
        int a = plane.point_id(pts[0]);
        int b = -1;
        for (const auto& p : pts)
            if (!pencil.members[0].contains(p)) { b = plane.point_id(p); break; }
        int join = plane.line_through(a, b);
        int extra = -1;
        for (int pt : plane.points_on_line(join))
            if (pt != a && pt != b) { extra = pt; break; }
        auto bad = pts;
        bad.push_back(plane.points()[extra]);
        GeoCheck check = verify_parc(bad, pencil, 2);
        CHECK_FALSE(check.ok);
        // the extra point may land on a third pencil line and fail (13), or
        // double up a section in a way that is still consistent; the exact
        // clause depends on the line chosen, so only the verdict is pinned
    }

    SUBCASE("make_parc raises NotAnArc") {
        auto bad = pts;
        bad.push_back(plane.points()[0]);
        CHECK_THROWS_AS(make_parc(bad, pencil, 2), Error);
    }
}

TEST_CASE("verify_harc") {
    auto f3 = Field::make(3, 1);
    PlaneGeometry plane(f3);
    Hyperplane psi = plane.lines()[0];

    // K1: two points off psi; K2: psi minus the meets of their join
    std::vector<ProjectivePoint> k1;
    for (size_t i = 0; i < plane.points().size() && k1.size() < 2; ++i)
        if (!psi.contains(plane.points()[i])) k1.push_back(plane.points()[i]);
    int join = plane.line_through(plane.point_id(k1[0]), plane.point_id(k1[1]));
    std::vector<ProjectivePoint> k2;
    for (int pt : plane.points_on_line(0))
        if (!plane.incident(pt, join)) k2.push_back(plane.points()[pt]);

    GeoCheck ok = verify_harc(k1, k2, psi, 2);
    CHECK(ok.ok);

    SUBCASE("K1 touching psi breaks (14)") {
        auto bad = k1;
        bad.push_back(plane.points()[plane.points_on_line(0)[0]]);
        CHECK_FALSE(verify_harc(bad, k2, psi, 2).ok);
    }

    SUBCASE("a K1 bisecant through K2 breaks (16)") {
        std::vector<ProjectivePoint> bad_k2 = k2;
        bad_k2.push_back(plane.points()[plane.meet(join, 0)]);
        GeoCheck check = verify_harc(k1, bad_k2, psi, 2);
        CHECK_FALSE(check.ok);
        CHECK(check.condition == "(16)");
        CHECK(check.witness.size() == 3);
    }

    SUBCASE("three collinear K1 points break (14)") {
        std::vector<ProjectivePoint> bad_k1 = k1;
        for (int pt : plane.points_on_line(join))
            if (!psi.contains(plane.points()[pt]) && bad_k1.size() < 3 &&
                std::find(bad_k1.begin(), bad_k1.end(), plane.points()[pt]) == bad_k1.end())
                bad_k1.push_back(plane.points()[pt]);
        REQUIRE(bad_k1.size() == 3);
        GeoCheck check = verify_harc(bad_k1, {}, psi, 2);
        CHECK_FALSE(check.ok);
        CHECK(check.condition == "(14)");
    }
}

TEST_CASE("parc bound search") {
    ParcBoundResult r2 = parc_bound_check(2);
    CHECK(r2.max_size == 4);
    CHECK(r2.witness.size() == 4);

    ParcBoundResult r3 = parc_bound_check(3);
    CHECK(r3.max_size == 6);

    CHECK_THROWS_AS(parc_bound_check(7), Error);
}

TEST_CASE("harc bound search") {
    HarcBoundResult r2 = harc_bound_check(2);
    CHECK(r2.max_total == 4);

    HarcBoundResult r3 = harc_bound_check(3);
    CHECK(r3.max_total == 5);

    CHECK_THROWS_AS(harc_bound_check(5), Error);
}

TEST_CASE("scheme from a two-line parc") {
    // profile (q,q): one group after removing the dealer group; the
    // parallel model needs two, so extraction must refuse
    auto f3 = Field::make(3, 1);
    PlaneGeometry plane(f3);
    Pencil pencil = pencil_through(Subspace({plane.points()[0].coords()}), 2, f3);
    PencilArc parc = make_parc(two_line_parc(plane, pencil, 0), pencil, 2);
    CHECK_THROWS_AS(scheme_from_parc(parc), Error);
}

TEST_CASE("scheme from a handmade harc rejects k1 < 2") {
    auto f3 = Field::make(3, 1);
    PlaneGeometry plane(f3);
    Hyperplane psi = plane.lines()[0];
    std::vector<ProjectivePoint> k1, k2;
    for (size_t i = 0; i < plane.points().size() && k1.size() < 1; ++i)
        if (!psi.contains(plane.points()[i])) k1.push_back(plane.points()[i]);
    for (int pt : plane.points_on_line(0)) k2.push_back(plane.points()[pt]);
    HierarchicalArc harc = make_harc(k1, {k2[0], k2[1]}, psi, 2);
    CHECK_THROWS_AS(scheme_from_harc(harc), Error);
}
