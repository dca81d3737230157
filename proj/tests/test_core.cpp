#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "torus/bounds.hpp"
#include "torus/core.hpp"
#include "torus/errors.hpp"

#include "oracles.hpp"

using namespace torus;

namespace {
LiftedPolygon rect(double x0, double y0, double x1, double y1) {
    return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

// the m=8 optimal hexagon: edge vectors (3/16,-1/16), (3/16,3/16), (-1/16,3/16)
LiftedPolygon m8_hexagon() {
    return {{{0, 0},
             {3.0 / 16, -1.0 / 16},
             {6.0 / 16, 2.0 / 16},
             {5.0 / 16, 5.0 / 16},
             {2.0 / 16, 6.0 / 16},
             {-1.0 / 16, 3.0 / 16}}};
}
} // namespace

TEST_CASE("torus_dist examples") {
    CHECK(torus_dist({0, 0}, {0.5, 0.5}) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
    CHECK(torus_dist({0.3, 0.7}, {0.3, 0.7}) == 0.0);
    CHECK(torus_dist({0.1, 0.9}, {0.9, 0.1}) == doctest::Approx(std::sqrt(0.08)).epsilon(1e-12));
}

TEST_CASE("torus_dist is a metric, bounded by sqrt(2)/2, translation invariant") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double diam = std::sqrt(2.0) / 2;
    for (int t = 0; t < 100000; ++t) {
        TorusPoint a{uni(rng), uni(rng)}, b{uni(rng), uni(rng)}, c{uni(rng), uni(rng)};
        double ab = torus_dist(a, b), ba = torus_dist(b, a);
        double bc = torus_dist(b, c), ac = torus_dist(a, c);
        CHECK(ab == ba); // symmetry is exact
        CHECK(ab <= diam + 1e-15);
        CHECK(ac <= ab + bc + 1e-12); // triangle inequality
        if (t < 10000) {
            double tx = uni(rng), ty = uni(rng);
            TorusPoint at{a.x + tx, a.y + ty}, bt{b.x + tx, b.y + ty};
            CHECK(std::abs(torus_dist(at, bt) - ab) <= 1e-12);
        }
    }
}

TEST_CASE("TorusPoint canonicalizes into [0,1)") {
    TorusPoint p{1.25, -0.25};
    CHECK(p.x == doctest::Approx(0.25));
    CHECK(p.y == doctest::Approx(0.75));
    CHECK(TorusPoint(1.0, -0.0).x == 0.0);
}

TEST_CASE("polygon_diameter: small square") {
    CHECK(polygon_diameter(rect(0.1, 0.1, 0.35, 0.35)) ==
          doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-12));
}

TEST_CASE("polygon_diameter: m=8 optimal hexagon is 5/(8 sqrt 2)") {
    CHECK(polygon_diameter(m8_hexagon()) ==
          doctest::Approx(5.0 / (8.0 * std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("polygon_diameter: wide rectangle uses wraparound candidates") {
    LiftedPolygon r = rect(0.0, 0.0, 0.6, 0.1);
    double d = polygon_diameter(r);
    // widest pair: a corner against the boundary point half a turn away
    CHECK(d == doctest::Approx(std::sqrt(0.26)).epsilon(1e-12));
    double sampled = oracle::sampled_polygon_diameter(r, 1.0 / 800);
    CHECK(d >= sampled - 1e-9);
    CHECK(d <= sampled + 2.0 / 800);
}

TEST_CASE("polygon_diameter >= max vertex-pair distance and matches oracle") {
    std::mt19937_64 rng(777);
    const double pitch = 0.002;
    int done = 0;
    while (done < 100) {
        LiftedPolygon poly = oracle::random_polygon(rng);
        try {
            poly.validate();
        } catch (const InvalidPolygon&) {
            continue;
        }
        double d = polygon_diameter(poly);
        double vmax = 0.0;
        for (std::size_t i = 0; i < poly.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < poly.vertices.size(); ++j)
                vmax = std::max(vmax, torus_dist({poly.vertices[i].x, poly.vertices[i].y},
                                                 {poly.vertices[j].x, poly.vertices[j].y}));
        CHECK(d >= vmax - 1e-12);
        double sampled = oracle::sampled_polygon_diameter(poly, pitch);
        CHECK(d >= sampled - 1e-9);
        CHECK(d <= sampled + 2 * pitch);
        ++done;
    }
}

TEST_CASE("polygon validation rejects bad lifts") {
    LiftedPolygon two{{{0, 0}, {0.5, 0.5}}};
    CHECK_THROWS_AS(two.validate(), InvalidPolygon);
    LiftedPolygon bowtie{{{0, 0}, {0.3, 0.3}, {0.3, 0}, {0, 0.3}}};
    CHECK_THROWS_AS(bowtie.validate(), InvalidPolygon);
    LiftedPolygon clockwise{{{0, 0}, {0, 0.3}, {0.3, 0.3}, {0.3, 0}}};
    CHECK_THROWS_AS(clockwise.validate(), InvalidPolygon);
}

TEST_CASE("region_diameter: strips") {
    Region third;
    third.shape = VerticalStrip{0.0, 1.0 / 3.0};
    CHECK(region_diameter(third) == doctest::Approx(std::sqrt(13.0) / 6).epsilon(1e-12));
    Region wide;
    wide.shape = VerticalStrip{0.0, 0.8}; // min-image width 0.2
    CHECK(region_diameter(wide) == doctest::Approx(std::sqrt(0.04 + 0.25)).epsilon(1e-12));
    Region h;
    h.shape = HorizontalStrip{0.25, 0.75};
    CHECK(region_diameter(h) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
}

TEST_CASE("region_diameter: pixel sets") {
    Region half_square;
    half_square.shape = PixelSet{2, {{0, 0}}};
    CHECK(region_diameter(half_square) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));

    Region domino; // [0,1/2] x [0,1/4]
    domino.shape = PixelSet{4, {{0, 0}, {1, 0}}};
    CHECK(region_diameter(domino) == doctest::Approx(std::sqrt(0.25 + 0.0625)).epsilon(1e-12));
}

TEST_CASE("region area") {
    Region r;
    r.shape = PixelSet{4, {{0, 0}, {1, 0}, {2, 2}}};
    CHECK(r.area() == doctest::Approx(3.0 / 16).epsilon(1e-12));
    r.shape = VerticalStrip{0.25, 0.5};
    CHECK(r.area() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("verify_partition: stripes pass, tight tau fails") {
    Partition p = bounds::stripe_partition(3);
    auto rep = verify_partition(p);
    CHECK(rep.pass);
    CHECK(rep.area_sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.max_diameter == doctest::Approx(std::sqrt(13.0) / 6).epsilon(1e-12));

    p.tau = 0.6; // just below the true diameter 0.600925...
    auto rep2 = verify_partition(p);
    CHECK_FALSE(rep2.pass);
    CHECK_FALSE(rep2.diameters_ok);
    CHECK(rep2.coverage_ok);
}

TEST_CASE("verify_partition: m=8 hexagon partition shape passes") {
    // built here from the known optimum to keep this suite self-contained
    std::vector<Vec2> base = m8_hexagon().vertices;
    Partition p;
    p.m = 8;
    p.tau = 5.0 / (8.0 * std::sqrt(2.0));
    // translate lattice mod 1 is cyclic of order 8, generated by p1+p2 = (3/8, 1/8)
    for (int u = 0; u < 8; ++u) {
        Region r;
        LiftedPolygon poly;
        for (const Vec2& q : base)
            poly.vertices.push_back({q.x + u * 3.0 / 8, q.y + u * 1.0 / 8});
        r.shape = poly;
        p.regions.push_back(std::move(r));
    }
    auto rep = verify_partition(p);
    CHECK(rep.pass);
}

TEST_CASE("verify_partition catches missing coverage and overlap") {
    Partition gap;
    gap.m = 2;
    gap.tau = 0.71;
    Region a, b;
    a.shape = VerticalStrip{0.0, 0.5};
    b.shape = VerticalStrip{0.6, 1.0}; // leaves (0.5, 0.6) uncovered
    gap.regions = {a, b};
    auto rep = verify_partition(gap);
    CHECK_FALSE(rep.pass);
    CHECK(rep.uncovered_probes > 0);
    CHECK_FALSE(rep.area_ok);

    Partition lap;
    lap.m = 2;
    lap.tau = 0.71;
    a.shape = VerticalStrip{0.0, 0.6};
    b.shape = VerticalStrip{0.5, 1.0};
    lap.regions = {a, b};
    rep = verify_partition(lap);
    CHECK_FALSE(rep.pass);
    CHECK(rep.overlapping_probes > 0);
}

TEST_CASE("region_covers / region_interior on the torus seam") {
    Region strip;
    strip.shape = VerticalStrip{0.75, 1.0};
    CHECK(region_covers(strip, {0.0, 0.3}, 1e-9));
    CHECK_FALSE(region_interior(strip, {0.0, 0.3}, 1e-9));
    CHECK(region_interior(strip, {0.9, 0.3}, 1e-9));

    Region poly;
    poly.shape = rect(0.9, 0.9, 1.2, 1.2); // wraps both axes
    CHECK(region_covers(poly, {0.05, 0.05}, 1e-9));
    CHECK(region_interior(poly, {0.05, 0.05}, 1e-9));
    CHECK_FALSE(region_covers(poly, {0.5, 0.5}, 1e-9));
}
