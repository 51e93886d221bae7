#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "reinhardt/domain.hpp"

using namespace reinhardt;
namespace fx = reinhardt::fixtures;

TEST_CASE("canonicalize rescales to a leading one") {
    // -2t + 2 sqrt(2) s in (-4, 2)  ==  t - sqrt(2) s in (-1, 2).
    DomainDesc d = make_polyhedron(
        {make_constraint(-2, QuadExt(2) * quad_sqrt(2), QuadExt(-4), QuadExt(2))}, false, false);
    DomainDesc c = canonicalize(d);
    REQUIRE(c.constraints.size() == 1);
    CHECK(c.constraints[0].alpha1 == QuadExt(1));
    CHECK(c.constraints[0].alpha2 == -quad_sqrt(2));
    REQUIRE(c.constraints[0].lowerLog);
    REQUIRE(c.constraints[0].upperLog);
    CHECK(*c.constraints[0].lowerLog == QuadExt(-1));
    CHECK(*c.constraints[0].upperLog == QuadExt(2));
}

TEST_CASE("canonicalize handles a zero first component") {
    // -3s < 6  ==  s > -2.
    DomainDesc d =
        make_polyhedron({make_constraint(0, -3, std::nullopt, QuadExt(6))}, false, false);
    DomainDesc c = canonicalize(d);
    REQUIRE(c.constraints.size() == 1);
    CHECK(c.constraints[0].alpha1 == QuadExt(0));
    CHECK(c.constraints[0].alpha2 == QuadExt(1));
    REQUIRE(c.constraints[0].lowerLog);
    CHECK(*c.constraints[0].lowerLog == QuadExt(-2));
    CHECK_FALSE(c.constraints[0].upperLog.has_value());
}

TEST_CASE("canonicalize merges parallel and antiparallel constraints") {
    // t + s < 0, t + s > -3 (written antiparallel), t + s < -1: one slab.
    DomainDesc d = make_polyhedron(
        {
            make_constraint(1, 1, std::nullopt, 0),
            make_constraint(-1, -1, std::nullopt, QuadExt(3)),
            make_constraint(2, 2, std::nullopt, QuadExt(-2)),
        },
        false, false);
    DomainDesc c = canonicalize(d);
    REQUIRE(c.constraints.size() == 1);
    CHECK(c.constraints[0].alpha1 == QuadExt(1));
    CHECK(c.constraints[0].alpha2 == QuadExt(1));
    REQUIRE(c.constraints[0].lowerLog);
    REQUIRE(c.constraints[0].upperLog);
    CHECK(*c.constraints[0].lowerLog == QuadExt(-3));
    CHECK(*c.constraints[0].upperLog == QuadExt(-1));
}

TEST_CASE("desc_equal ignores presentation") {
    DomainDesc a = fx::dstar_silver();
    DomainDesc b = make_polyhedron(
        {make_constraint(QuadExt(2), QuadExt(2) + QuadExt(2) * quad_sqrt(2), std::nullopt, 0)},
        false, false);
    CHECK(desc_equal(a, b));
    CHECK_FALSE(desc_equal(a, fx::dstar_sqrt2()));
    CHECK_FALSE(desc_equal(fx::d_sqrt2(), fx::dstar_sqrt2()));  // axis flags differ
}

TEST_CASE("validation catches structural problems") {
    CHECK(validate_issues(fx::polydisc()).empty());
    CHECK(validate_issues(fx::parabolic_std()).empty());
    CHECK(validate_issues(fx::full_c2()).empty());

    SECTION("zero normal") {
        DomainDesc d = make_polyhedron({make_constraint(0, 0, std::nullopt, 0)}, false, false);
        CHECK_FALSE(validate_issues(d).empty());
        CHECK_THROWS_AS(validate(d), ValidationError);
    }
    SECTION("vacuous constraint") {
        DomainDesc d =
            make_polyhedron({make_constraint(1, 1, std::nullopt, std::nullopt)}, false, false);
        CHECK_FALSE(validate_issues(d).empty());
    }
    SECTION("inverted bounds") {
        DomainDesc d =
            make_polyhedron({make_constraint(1, 1, QuadExt(1), QuadExt(-1))}, false, false);
        CHECK_FALSE(validate_issues(d).empty());
    }
    SECTION("mixed quadratic fields") {
        DomainDesc d = make_polyhedron({make_constraint(1, quad_sqrt(2), std::nullopt, 0),
                                        make_constraint(1, quad_sqrt(3), std::nullopt, 0)},
                                       false, false);
        auto issues = validate_issues(d);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].find("sqrt(2)") != std::string::npos);
        CHECK(issues[0].find("sqrt(3)") != std::string::npos);
    }
    SECTION("axis against a lower bound") {
        // |z1 z2| > 1 cannot touch either axis.
        DomainDesc d =
            make_polyhedron({make_constraint(1, 1, QuadExt(0), std::nullopt)}, true, false);
        CHECK_FALSE(validate_issues(d).empty());
        // Orientation-independent: alpha < 0 with an upper bound is equally bad.
        DomainDesc e =
            make_polyhedron({make_constraint(-1, -1, std::nullopt, QuadExt(0))}, true, false);
        CHECK_FALSE(validate_issues(e).empty());
        // But alpha < 0 with *no* upper bound admits the axis.
        DomainDesc f =
            make_polyhedron({make_constraint(-1, -1, QuadExt(0), std::nullopt)}, true, true);
        CHECK(validate_issues(f).empty());
    }
    SECTION("empty interior") {
        DomainDesc d = make_polyhedron({make_constraint(1, 1, std::nullopt, 0),
                                        make_constraint(1, 1, QuadExt(1), std::nullopt)},
                                       false, false);
        CHECK_FALSE(validate_issues(d).empty());
    }
    SECTION("axis admissibility vs slice content") {
        // alpha1 < 0 with an unbounded top admits axis 1 (the monomial blows
        // up toward the axis, which only an upper bound could forbid).
        DomainDesc d = make_polyhedron({make_constraint(0, 1, QuadExt(0), QuadExt(1)),
                                        make_constraint(-1, 0, QuadExt(2), std::nullopt)},
                                       true, false);
        CHECK(validate_issues(d).empty());
        // Contradictory slice constraints empty the slice (and with it the
        // interior); validation must reject, not silently keep the flag.
        DomainDesc e = make_polyhedron({make_constraint(0, 1, QuadExt(0), QuadExt(1)),
                                        make_constraint(0, 2, QuadExt(4), QuadExt(6)),
                                        make_constraint(-1, 0, QuadExt(2), std::nullopt)},
                                       true, false);
        CHECK_FALSE(validate_issues(e).empty());
    }
    SECTION("parabolic rules") {
        CHECK_FALSE(validate_issues(make_parabolic(1, 0, 0, false)).empty());  // a > 0
        CHECK_FALSE(validate_issues(make_parabolic(0, 0, 0, false)).empty());  // a = 0
        DomainDesc d = make_parabolic(-1, 0, 0, false);
        d.axis2Included = true;
        CHECK_FALSE(validate_issues(d).empty());
        DomainDesc e = make_parabolic(-1, 0, 0, false);
        e.constraints.push_back(make_constraint(1, 0, std::nullopt, 0));
        CHECK_FALSE(validate_issues(e).empty());
    }
}

TEST_CASE("interior emptiness is decided exactly") {
    CHECK(nonempty_interior(fx::polydisc()));
    CHECK(nonempty_interior(fx::full_cstar2()));
    CHECK(nonempty_interior(fx::annulus_sqrt2()));

    // t + sqrt(2) s < 0, t + sqrt(2) s > 0: empty.
    DomainDesc d = make_polyhedron({make_constraint(1, quad_sqrt(2), std::nullopt, 0),
                                    make_constraint(1, quad_sqrt(2), QuadExt(0), std::nullopt)},
                                   false, false);
    CHECK_FALSE(nonempty_interior(d));

    // Three half planes whose intersection is a tiny triangle: nonempty.
    DomainDesc tri = make_polyhedron({make_constraint(1, 0, std::nullopt, Rat(1, 1000)),
                                      make_constraint(0, 1, std::nullopt, Rat(1, 1000)),
                                      make_constraint(-1, -1, std::nullopt, 0)},
                                     false, false);
    CHECK(nonempty_interior(tri));
    // Shrink the third to force emptiness: t+s > 1/250 while t,s < 1/1000.
    DomainDesc tri2 = make_polyhedron({make_constraint(1, 0, std::nullopt, Rat(1, 1000)),
                                       make_constraint(0, 1, std::nullopt, Rat(1, 1000)),
                                       make_constraint(-1, -1, std::nullopt, Rat(-1, 250))},
                                      false, false);
    CHECK_FALSE(nonempty_interior(tri2));
}

TEST_CASE("lines in the log image") {
    auto line = contains_line(fx::dstar_silver());
    REQUIRE(line);
    CHECK(line->first == -(QuadExt(1) + quad_sqrt(2)));
    CHECK(line->second == QuadExt(1));

    auto everything = contains_line(fx::full_c2());
    REQUIRE(everything);
    CHECK(everything->first == QuadExt(1));

    CHECK_FALSE(contains_line(fx::polydisc()));
    CHECK_FALSE(contains_line(fx::hartogs_wedge()));
    CHECK_FALSE(contains_line(fx::parabolic_std()));

    // Parallel pair written with flipped signs still has the line.
    DomainDesc d = make_polyhedron({make_constraint(1, 2, std::nullopt, 0),
                                    make_constraint(-2, -4, QuadExt(-1), std::nullopt)},
                                   false, false);
    CHECK(contains_line(d));
}

TEST_CASE("full types") {
    CHECK(full_type(fx::full_c2()) == FullType::C2);
    CHECK(full_type(fx::full_c_cstar()) == FullType::CxCstar);
    CHECK(full_type(make_polyhedron({}, false, true)) == FullType::CstarxC);
    CHECK(full_type(fx::full_cstar2()) == FullType::Cstar2);
    CHECK(full_type(fx::polydisc()) == FullType::NotFull);
    CHECK(full_type(fx::parabolic_std()) == FullType::NotFull);
}

TEST_CASE("origin membership") {
    CHECK(origin_included(fx::polydisc()));
    CHECK(origin_included(fx::product_e11()));
    CHECK(origin_included(fx::full_c2()));
    CHECK(origin_included(fx::d_sqrt2()));
    CHECK_FALSE(origin_included(fx::dstar_sqrt2()));
    CHECK_FALSE(origin_included(fx::full_c_cstar()));
    CHECK_FALSE(origin_included(fx::parabolic_std()));
    // Lower-bounded constraint blocks the origin even with both axes.
    DomainDesc d =
        make_polyhedron({make_constraint(-1, -1, QuadExt(0), std::nullopt)}, true, true);
    CHECK_FALSE(origin_included(d));
}

TEST_CASE("axis slices") {
    SECTION("wedge: slice 1 is all of C, slice 2 is a disc") {
        auto rep = axis_slices(fx::hartogs_wedge());
        CHECK(rep.slice1.nonempty);
        CHECK(rep.slice1.wholeLine);
        CHECK(rep.slice2.nonempty);
        CHECK_FALSE(rep.slice2.wholeLine);
        REQUIRE(rep.slice2.interval.hi);
        CHECK(*rep.slice2.interval.hi == QuadExt(0));
        CHECK(rep.nonemptyCount == 2);
        CHECK(rep.nonHyperbolicAxes == std::vector<int>{1});
    }
    SECTION("polydisc slices are discs") {
        auto rep = axis_slices(fx::polydisc());
        CHECK(rep.nonemptyCount == 2);
        CHECK(rep.nonHyperbolicAxes.empty());
    }
    SECTION("no axes, no slices") {
        auto rep = axis_slices(fx::dstar_silver());
        CHECK(rep.nonemptyCount == 0);
        CHECK_FALSE(rep.slice1.nonempty);
        CHECK(rep.slice1.wholeLine);  // interval is R, but the slice is absent
    }
    SECTION("parabolic slice 1 is all of C*") {
        auto rep = axis_slices(fx::parabolic_std());
        CHECK(rep.slice1.nonempty);
        CHECK(rep.slice1.wholeLine);
        CHECK(rep.nonemptyCount == 1);
        CHECK(rep.nonHyperbolicAxes == std::vector<int>{1});
    }
    SECTION("hyperbolic reduction clears exactly the bad axes") {
        DomainDesc r = hyperbolic_reduction(fx::hartogs_wedge());
        CHECK_FALSE(r.axis1Included);
        CHECK(r.axis2Included);
        CHECK(axis_slices(r).nonemptyCount == 1);
        DomainDesc rp = hyperbolic_reduction(fx::parabolic_std());
        CHECK_FALSE(rp.axis1Included);
        CHECK(axis_slices(rp).nonemptyCount == 0);
    }
}

TEST_CASE("hyperbolicity verdicts") {
    CHECK(hyperbolicity(fx::polydisc()).hyperbolic);
    CHECK(hyperbolicity(make_parabolic(-1, 0, 0, false)).hyperbolic);
    CHECK_FALSE(hyperbolicity(fx::parabolic_std()).hyperbolic);
    CHECK_FALSE(hyperbolicity(fx::hartogs_wedge()).hyperbolic);
    CHECK_FALSE(hyperbolicity(fx::dstar_silver()).hyperbolic);
    CHECK_FALSE(hyperbolicity(fx::full_c2()).hyperbolic);

    auto rep = hyperbolicity(fx::hartogs_wedge());
    CHECK_FALSE(rep.lineDirection);
    CHECK(rep.nonHyperbolicAxes == std::vector<int>{1});

    // Bounded annulus product: hyperbolic even with a two-sided slab plus caps.
    DomainDesc ann = make_polyhedron({make_constraint(1, 0, QuadExt(-1), QuadExt(0)),
                                      make_constraint(0, 1, QuadExt(-1), QuadExt(0))},
                                     false, false);
    CHECK(hyperbolicity(ann).hyperbolic);
}

TEST_CASE("monomial map algebra") {
    MonomialMap f;
    f.k1 = 3;
    f.k2 = 4;
    f.l1 = 2;
    f.l2 = 3;
    f.logModulus1 = -quad_sqrt(2);
    f.logModulus2 = QuadExt(1);

    SECTION("inverse composes to the identity") {
        MonomialMap g = inverse(f);
        CHECK(compose(g, f) == MonomialMap::identity());
        CHECK(compose(f, g) == MonomialMap::identity());
    }
    SECTION("log action matches matrix arithmetic") {
        auto [t, s] = log_image(f, QuadExt(1), QuadExt(-1));
        CHECK(t == QuadExt(-1) - quad_sqrt(2));  // 3 - 4 - sqrt2
        CHECK(s == QuadExt(0));                  // 2 - 3 + 1
        auto [bt, bs] = log_image(inverse(f), t, s);
        CHECK(bt == QuadExt(1));
        CHECK(bs == QuadExt(-1));
    }
    SECTION("powers") {
        MonomialMap sq = map_power(f, 2);
        CHECK(sq == compose(f, f));
        CHECK(map_power(f, 0) == MonomialMap::identity());
        CHECK(map_power(f, -1) == inverse(f));
        CHECK(compose(map_power(f, -2), map_power(f, 2)) == MonomialMap::identity());
    }
    SECTION("det and unimodularity") {
        CHECK(f.det() == 1);
        MonomialMap bad;
        bad.k1 = 2;
        CHECK_THROWS_AS(inverse(bad), Error);
    }
}

TEST_CASE("transform carries descriptions along maps") {
    SECTION("hyperbolic matrix preserves the sqrt(2) strip on (C*)^2") {
        MonomialMap f;
        f.k1 = 3;
        f.k2 = 4;
        f.l1 = 2;
        f.l2 = 3;
        f.logModulus1 = -quad_sqrt(2);
        f.logModulus2 = QuadExt(1);
        DomainDesc img = transform(fx::dstar_sqrt2(), f);
        CHECK(desc_equal(img, fx::dstar_sqrt2()));
    }
    SECTION("the same matrix tears the axes of the full strip") {
        MonomialMap f;
        f.k1 = 3;
        f.k2 = 4;
        f.l1 = 2;
        f.l2 = 3;
        CHECK_THROWS_AS(transform(fx::d_sqrt2(), f), AxisAmbiguityError);
    }
    SECTION("swap exchanges axes and transposes constraints") {
        MonomialMap sw;
        sw.k1 = 0;
        sw.k2 = 1;
        sw.l1 = 1;
        sw.l2 = 0;
        DomainDesc img = transform(fx::full_c_cstar(), sw);
        CHECK(full_type(img) == FullType::CstarxC);
        DomainDesc wedge = transform(fx::hartogs_wedge(), sw);
        DomainDesc expected = make_polyhedron({make_constraint(0, 1, std::nullopt, 0),
                                               make_constraint(1, 1, std::nullopt, 0)},
                                              true, true);
        CHECK(desc_equal(wedge, expected));
    }
    SECTION("moduli shift bounds") {
        MonomialMap shift;  // (z1, z2) -> (e^2 z1, z2) in log terms
        shift.logModulus1 = QuadExt(2);
        DomainDesc img = transform(fx::polydisc(), shift);
        DomainDesc expected = make_polyhedron({make_constraint(1, 0, std::nullopt, QuadExt(2)),
                                               make_constraint(0, 1, std::nullopt, 0)},
                                              true, true);
        CHECK(desc_equal(img, expected));
    }
    SECTION("composition law on descriptions") {
        MonomialMap sw;
        sw.k1 = 0;
        sw.k2 = 1;
        sw.l1 = 1;
        sw.l2 = 0;
        MonomialMap shear;
        shear.k1 = 1;
        shear.k2 = -1;
        shear.l1 = 0;
        shear.l2 = 1;
        shear.logModulus2 = quad_sqrt(2);
        DomainDesc d = fx::dstar_two_thirds();
        CHECK(desc_equal(transform(transform(d, sw), shear), transform(d, compose(shear, sw))));
        CHECK(desc_equal(transform(transform(d, shear), inverse(shear)), canonicalize(d)));
    }
    SECTION("non-unimodular matrices are refused") {
        MonomialMap dbl;
        dbl.k1 = 2;
        CHECK_THROWS_AS(transform(fx::polydisc(), dbl), Error);
    }
    SECTION("parabolic shear conjugation") {
        // The shear with k = -2, eps = 1, logA = -1, logB = 1 fixes t < -s^2.
        MonomialMap sh;
        sh.k1 = 1;
        sh.k2 = -2;
        sh.l1 = 0;
        sh.l2 = 1;
        sh.logModulus1 = QuadExt(-1);
        sh.logModulus2 = QuadExt(1);
        DomainDesc img = transform(fx::parabolic_std(), sh);
        CHECK(desc_equal(img, fx::parabolic_std()));

        // A shear moving the vertex: k = 0, logB = 3 conjugates t < -s^2 to
        // t < -(s-3)^2.
        MonomialMap mv;
        mv.k1 = 1;
        mv.k2 = 0;
        mv.l1 = 0;
        mv.l2 = 1;
        mv.logModulus2 = QuadExt(3);
        DomainDesc moved = transform(fx::parabolic_std(), mv);
        CHECK(moved.parabola.a == -1);
        CHECK(moved.parabola.b == 6);
        CHECK(moved.parabola.c == -9);

        // Orientation flip eps = -1 negates the linear coefficient.
        MonomialMap fl;
        fl.k1 = 1;
        fl.l2 = -1;
        DomainDesc flipped = transform(make_parabolic(-1, 1, 0, true), fl);
        CHECK(flipped.parabola.a == -1);
        CHECK(flipped.parabola.b == -1);
        CHECK(flipped.parabola.c == 0);

        MonomialMap bad;
        bad.k1 = 0;
        bad.k2 = 1;
        bad.l1 = 1;
        bad.l2 = 0;
        CHECK_THROWS_AS(transform(fx::parabolic_std(), bad), Error);
    }
}

TEST_CASE("log membership") {
    CHECK(log_contains(fx::polydisc(), QuadExt(-1), QuadExt(-1)));
    CHECK_FALSE(log_contains(fx::polydisc(), QuadExt(0), QuadExt(-1)));  // boundary excluded
    CHECK(log_contains(fx::dstar_sqrt2(), QuadExt(-2), QuadExt(1)));     // -2 + sqrt2 < 0
    CHECK_FALSE(log_contains(fx::dstar_sqrt2(), QuadExt(2), QuadExt(0)));
    CHECK(log_contains(fx::parabolic_std(), QuadExt(-2), QuadExt(1)));
    CHECK_FALSE(log_contains(fx::parabolic_std(), QuadExt(-1), QuadExt(1)));  // -1 = -1^2
}
