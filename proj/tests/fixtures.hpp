#pragma once

// Named example domains used across the test suite.  Kept tiny and explicit
// so a failing test names exactly the geometry involved.

#include "reinhardt/domain.hpp"

namespace reinhardt::fixtures {

inline DomainDesc full_c2() { return make_polyhedron({}, true, true); }
inline DomainDesc full_c_cstar() { return make_polyhedron({}, true, false); }
inline DomainDesc full_cstar2() { return make_polyhedron({}, false, false); }

// Unit polydisc: |z1| < 1, |z2| < 1.
inline DomainDesc polydisc() {
    return make_polyhedron({make_constraint(1, 0, std::nullopt, 0),
                            make_constraint(0, 1, std::nullopt, 0)},
                           true, true);
}

// |z1 z2| < 1 with both axes.
inline DomainDesc product_e11() {
    return make_polyhedron({make_constraint(1, 1, std::nullopt, 0)}, true, true);
}

// |z1|^2 |z2|^3 < 1 with both axes.
inline DomainDesc product_e23() {
    return make_polyhedron({make_constraint(2, 3, std::nullopt, 0)}, true, true);
}

// Rational slope, no axes: |z1| |z2|^(2/3) < 1 on (C*)^2.
inline DomainDesc dstar_two_thirds() {
    return make_polyhedron({make_constraint(1, QuadExt(Rat(2, 3)), std::nullopt, 0)}, false,
                           false);
}

// Irrational slope with both axes: |z1| |z2|^sqrt(2) < 1.
inline DomainDesc d_sqrt2() {
    return make_polyhedron({make_constraint(1, quad_sqrt(2), std::nullopt, 0)}, true, true);
}

// Same log image, axes removed: the Pell case.
inline DomainDesc dstar_sqrt2() {
    return make_polyhedron({make_constraint(1, quad_sqrt(2), std::nullopt, 0)}, false, false);
}

// Slope 1 + sqrt(2) on (C*)^2.
inline DomainDesc dstar_silver() {
    return make_polyhedron(
        {make_constraint(1, QuadExt(1) + quad_sqrt(2), std::nullopt, 0)}, false, false);
}

// Two-sided irrational strip: -1 < t + sqrt(2) s < 1 on (C*)^2.
inline DomainDesc annulus_sqrt2() {
    return make_polyhedron({make_constraint(1, quad_sqrt(2), QuadExt(-1), QuadExt(1))}, false,
                           false);
}

// Non-strip polyhedron with a full C slice: |z1| < 1 and |z1 z2| < 1.
inline DomainDesc hartogs_wedge() {
    return make_polyhedron({make_constraint(1, 0, std::nullopt, 0),
                            make_constraint(1, 1, std::nullopt, 0)},
                           true, true);
}

// Parabolic model domain: log D = { t < -s^2 }, axis 1 included.
inline DomainDesc parabolic_std() { return make_parabolic(-1, 0, 0, true); }

}  // namespace reinhardt::fixtures
