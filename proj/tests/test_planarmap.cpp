#include "helpers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sl3web;
using testutil::fixture;

TEST(CombMap, PermutationChecks) {
    EXPECT_THROW(CombMap::from_permutations({1, 0, 3}, {0, 1, 2}), MapError);
    EXPECT_THROW(CombMap::from_permutations({0, 1}, {0, 1}), MapError);
    EXPECT_THROW(CombMap::from_permutations({1, 0}, {0, 0}), MapError);
    EXPECT_THROW(CombMap::from_permutations({2, 0, 1, 3}, {0, 1, 2, 3}), MapError);
    auto m = CombMap::from_permutations({1, 0}, {0, 1});
    EXPECT_EQ(m.num_vertices(), 2);
    EXPECT_EQ(m.faces().size(), 1u);
}

TEST(CombMap, FacesAndEulerCharacteristic) {
    Web cube = fixture("cube.web");
    EXPECT_EQ(cube.num_vertices(), 8);
    EXPECT_EQ(cube.map().num_edges(), 12);
    auto faces = cube.map().faces();
    ASSERT_EQ(faces.size(), 6u);
    for (const auto& f : faces) EXPECT_EQ(f.size(), 4u);
    // every dart is in exactly one face
    std::vector<int> seen(cube.map().num_darts(), 0);
    for (const auto& f : faces)
        for (int d : f) ++seen[d];
    for (int s : seen) EXPECT_EQ(s, 1);

    Web theta = fixture("theta.web");
    EXPECT_EQ(theta.map().faces().size(), 3u);
    for (const auto& f : theta.map().faces()) EXPECT_EQ(f.size(), 2u);
}

TEST(Web, ValidationErrorsCarryKindAndWitness) {
    try {
        fixture("triprism.web");
        FAIL() << "expected NotBipartite";
    } catch (const WebError& e) {
        EXPECT_EQ(e.kind(), WebErrorKind::NotBipartite);
        EXPECT_GE(e.witness_dart(), 0);
    }
    try {
        fixture("k4_twisted.web");
        FAIL() << "expected NonPlanarEmbedding";
    } catch (const WebError& e) {
        EXPECT_EQ(e.kind(), WebErrorKind::NonPlanarEmbedding);
    }
    // a 4-cycle is not cubic
    try {
        parse_web("1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\n");
        FAIL() << "expected NotCubic";
    } catch (const WebError& e) {
        EXPECT_EQ(e.kind(), WebErrorKind::NotCubic);
    }
}

TEST(Web, CircleOnlyAndMirror) {
    Web c = fixture("circle.web");
    EXPECT_EQ(c.circles(), 1);
    EXPECT_TRUE(c.map().empty());
    Web cube = fixture("cube.web");
    Web mc = mirror(cube);
    EXPECT_TRUE(testutil::map_iso(cube.map(), mc.map(), true));
    EXPECT_EQ(mirror(mc).map().sigma_perm(), cube.map().sigma_perm());
}

TEST(Formats, RoundTrips) {
    for (const char* f : {"cube.web", "hexprism.web", "theta.web", "circle.web"}) {
        Web w = fixture(f);
        for (auto fmt : {MapFormat::Dart, MapFormat::Simple}) {
            if (fmt == MapFormat::Simple && w.map().find_multi_edge()) continue;
            Web back = parse_web(serialize_web(w, fmt));
            EXPECT_EQ(back.circles(), w.circles()) << f;
            EXPECT_TRUE(testutil::map_iso(back.map(), w.map(), false)) << f;
        }
        // dart format is exact
        Web exact = parse_web(serialize_web(w, MapFormat::Dart));
        EXPECT_EQ(exact.map().alpha_perm(), w.map().alpha_perm());
        EXPECT_EQ(exact.map().sigma_perm(), w.map().sigma_perm());
    }
}

TEST(Formats, ErrorsReportLines) {
    try {
        parse_simple("1: 2 3 4\n2: 1\nfoo: 1\n");
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(parse_simple("1: 2\n2: 3\n3: 1\n"), FormatError);  // asymmetric
    EXPECT_THROW(parse_simple("1: 1 2\n2: 1\n"), FormatError);      // loop
    EXPECT_THROW(parse_simple("circles: 1\n1: 2\n2: 1\n"), FormatError);
    EXPECT_THROW(parse_dart("darts: 3\n"), FormatError);
    EXPECT_THROW(parse_dart("darts: 2\nv 1: 0\nv 2: 1\ne: 0 0\n"), FormatError);
    EXPECT_NO_THROW(parse_map("# comment\n1: 2\n2: 1\n"));
}

TEST(Canonical, KeyIsInvariantUnderRelabelling) {
    std::mt19937_64 rng(41);
    for (const auto& w : testutil::catalog_webs()) {
        auto k = canonical_key(w, true), ko = canonical_key(w, false);
        for (int i = 0; i < 5; ++i) {
            Web r = Web::validate(testutil::relabel(w.map(), rng));
            EXPECT_EQ(canonical_key(r, true), k);
            EXPECT_EQ(canonical_key(r, false), ko);
        }
        EXPECT_EQ(canonical_key(mirror(w), true), k);
    }
}

TEST(Canonical, KeyEqualityMatchesBruteForceIsomorphism) {
    auto webs = testutil::catalog_webs();
    webs.push_back(fixture("theta.web"));
    std::vector<Web> all;
    for (const auto& w : webs) {
        all.push_back(w);
        all.push_back(mirror(w));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            for (bool refl : {false, true})
                EXPECT_EQ(canonical_key(all[i], refl) == canonical_key(all[j], refl),
                          testutil::map_iso(all[i].map(), all[j].map(), refl))
                    << i << " " << j << " " << refl;
}

TEST(Canonical, KeyIsStableAcrossRuns) {
    // pinned so that a change of encoding is noticed
    EXPECT_EQ(to_hex(canonical_key(fixture("theta.web"), true)), "52010c01020003040505040201030000");
    EXPECT_NE(canonical_key(fixture("cube.web")), canonical_key(fixture("hexprism.web")));
    Web two = disjoint_union(fixture("cube.web"), fixture("theta.web"));
    Web swapped = disjoint_union(fixture("theta.web"), fixture("cube.web"));
    EXPECT_EQ(canonical_key(two), canonical_key(swapped));
    EXPECT_NE(canonical_key(two), canonical_key(Web::validate(two.map(), 1)));
}

TEST(Canonical, AutomorphismsMatchBruteForce) {
    Web cube = fixture("cube.web"), theta = fixture("theta.web");
    EXPECT_EQ(automorphism_count(cube, false), 24);
    EXPECT_EQ(automorphism_count(cube, true), 48);
    EXPECT_EQ(automorphism_count(theta, false), 6);
    EXPECT_EQ(automorphism_count(theta, true), 12);
    for (const auto& w : testutil::catalog_webs()) {
        for (bool refl : {false, true}) {
            long long a = automorphism_count(w, refl);
            EXPECT_EQ(a, testutil::brute_automorphisms(w.map(), refl));
            // the group acts freely on darts (and on flags with reflections)
            EXPECT_EQ((refl ? 2 : 1) * w.map().num_darts() % a, 0);
        }
    }
}

TEST(Connectivity, TwoEdgeCutsMatchBruteForce) {
    std::mt19937_64 rng(43);
    auto primes = testutil::catalog_webs();
    for (int t = 0; t < 15; ++t) {
        Web w = testutil::random_sum(primes, rng, 3).web;
        auto cuts = find_2_edge_cuts(w);
        std::vector<std::pair<int, int>> brute;
        auto es = w.map().edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j)
                if (!testutil::connected_without(w.map(), {es[i], es[j]})) brute.emplace_back(es[i], es[j]);
        EXPECT_EQ(cuts, brute);
        EXPECT_EQ(connectivity(w), brute.empty() ? 3 : 2);
    }
    for (const auto& w : primes) {
        EXPECT_TRUE(find_2_edge_cuts(w).empty());
        EXPECT_TRUE(is_prime(w));
    }
}

TEST(Connectivity, BridgesOnANonBipartiteCubicMap) {
    // K4 with one edge subdivided, twice; subdivision vertices joined by a bridge
    const char* dumbbell =
        "1: 2 3 4\n2: 1 4 5\n3: 1 5 4\n4: 1 3 2\n5: 2 3 6\n"
        "6: 5 7 8\n7: 6 9 10\n8: 6 10 9\n9: 7 8 10\n10: 7 9 8\n";
    auto mf = parse_simple(dumbbell);
    auto br = bridges(mf.map);
    ASSERT_EQ(br.size(), 1u);
    EXPECT_EQ(connectivity(mf.map), 1);
    EXPECT_FALSE(testutil::connected_without(mf.map, {br[0]}));
}

TEST(Coloring, EdgeColoringIsProperAndStartIndependent) {
    for (const auto& w : testutil::catalog_webs()) {
        const auto& m = w.map();
        auto decs = edge_3_coloring(w);
        for (const auto& dec : decs) {
            for (int v = 0; v < m.num_vertices(); ++v) {
                std::set<int> cs;
                for (int d : m.rotation(v)) cs.insert(dec.edge_color[d]);
                EXPECT_EQ(cs.size(), 3u);
            }
            for (int d = 0; d < m.num_darts(); ++d) EXPECT_EQ(dec.edge_color[d], dec.edge_color[m.alpha(d)]);
            int total = 0;
            for (int s : dec.sizes) total += s;
            EXPECT_EQ(total, w.num_vertices());
        }
        auto base = polygonal_descriptions(w);
        for (int s = 0; s < m.num_darts(); s += 3) {
            std::vector<std::vector<int>> other;
            for (const auto& dec : edge_3_coloring(w, s)) other.push_back(dec.sizes);
            std::sort(other.begin(), other.end());
            EXPECT_EQ(other, base);
        }
    }
}

TEST(Coloring, LevelsAreDualDistances) {
    Web cube = fixture("cube.web");
    auto decs = edge_3_coloring(cube);
    const auto& dec = decs[0];
    ASSERT_EQ(dec.num_polygons(), 2);
    int ext = -1;
    for (int f = 0; f < 6; ++f)
        if (std::find(dec.polygon_faces.begin(), dec.polygon_faces.end(), f) == dec.polygon_faces.end()) ext = f;
    auto lv = polygon_levels(cube, dec, ext);
    for (int l : lv) EXPECT_EQ(l, 1);
    EXPECT_THROW(polygon_levels(cube, dec, dec.polygon_faces[0]), std::invalid_argument);
    EXPECT_TRUE(is_circular(cube));
    EXPECT_THROW(edge_3_coloring(fixture("theta.web")), WebError);
}
