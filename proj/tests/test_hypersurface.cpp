// Copyright 2026 the hstheta authors

#include <gtest/gtest.h>

#include "hstheta/hypersurface.hpp"

using namespace hstheta;

namespace {

TEST(MakeRing, QuadricConeValidates) {
  auto ring = make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w");
  EXPECT_EQ(ring->f_degree, 2);
  EXPECT_TRUE(ring->domain_asserted);
  EXPECT_EQ(ring->fp().p(), 101u);
}

TEST(MakeRing, RejectsRegularAndMalformedInput) {
  // a linear term makes the quotient regular
  EXPECT_THROW(make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x"), ParseError);
  EXPECT_THROW(make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x + y*z"), ParseError);
  // not homogeneous
  EXPECT_THROW(make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x^2 + y^3"),
               ParseError);
  // p not prime, duplicate variables, bad weights
  EXPECT_THROW(make_ring(91, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w"),
               ParseError);
  EXPECT_THROW(make_ring(101, {"x", "x", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w"),
               ParseError);
  EXPECT_THROW(make_ring(101, {"x", "y", "z", "w"}, {1, 0, 1, 1}, "x*y - z*w"),
               ParseError);
  EXPECT_THROW(make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "0"), ParseError);
}

TEST(MakeRing, WeightedBrieskornContext) {
  auto ring = make_ring(32003, {"x", "y", "z", "w"}, {105, 70, 42, 30},
                        "x^2 + y^3 + z^5 + w^7");
  // 2*105 = 3*70 = 5*42 = 7*30 = 210
  EXPECT_EQ(ring->f_degree, 210);
}

TEST(SingularityProfile, QuadricIsIsolated) {
  auto ring = make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w");
  SingularityProfile prof = singularity_profile(ring);
  EXPECT_TRUE(prof.isolated);
  EXPECT_EQ(prof.jacobian_dim, 0);
  EXPECT_TRUE(prof.warnings.empty());
}

TEST(SingularityProfile, NonIsolatedAlongAPlane) {
  // f = x^2 y: singular where both partials of rank drop; the Jacobian ideal
  // (x^2 y, 2xy, x^2) cuts out the plane x = 0
  auto ring = make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x^2*y");
  SingularityProfile prof = singularity_profile(ring);
  EXPECT_FALSE(prof.isolated);
  EXPECT_EQ(prof.jacobian_dim, 2);
}

TEST(SingularityProfile, BrieskornIsolated) {
  auto ring = make_ring(32003, {"x", "y", "z", "w"}, {105, 70, 42, 30},
                        "x^2 + y^3 + z^5 + w^7");
  SingularityProfile prof = singularity_profile(ring);
  EXPECT_TRUE(prof.isolated);
  EXPECT_TRUE(prof.warnings.empty());
}

TEST(SingularityProfile, WarnsWhenPDividesAnExponent) {
  auto ring = make_ring(3, {"x", "y", "z", "w"}, {1, 1, 1, 1},
                        "x^3 + y^3 + z^3 + w^3");
  SingularityProfile prof = singularity_profile(ring);
  EXPECT_FALSE(prof.warnings.empty());
  // all partials vanish identically, so the criterion sees the whole hypersurface
  EXPECT_FALSE(prof.isolated);
}

TEST(SingularityProfile, InvariantUnderVariableRelabeling) {
  auto a = make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w");
  auto b = make_ring(101, {"z", "w", "x", "y"}, {1, 1, 1, 1}, "x*y - z*w");
  EXPECT_EQ(singularity_profile(a).isolated, singularity_profile(b).isolated);
  EXPECT_EQ(singularity_profile(a).jacobian_dim, singularity_profile(b).jacobian_dim);
}

TEST(LiftMatrix, ReduceThenLiftIsIdempotent) {
  auto ring = make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w");
  PolyMatrix id = PolyMatrix::identity(3, ring->base);
  PolyMatrix lifted = lift_matrix(id, *ring);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(lifted.at(i, j), id.at(i, j));

  PolyMatrix m(2, 2);
  m.at(0, 0) = parse_polynomial("y", ring->base);
  m.at(0, 1) = parse_polynomial("z", ring->base);
  m.at(1, 0) = parse_polynomial("-w", ring->base);
  m.at(1, 1) = parse_polynomial("-x", ring->base);
  PolyMatrix once = lift_matrix(m, *ring);
  PolyMatrix twice = lift_matrix(once, *ring);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      EXPECT_EQ(once.at(i, j), m.at(i, j));  // entries already reduced
      EXPECT_EQ(twice.at(i, j), once.at(i, j));
    }
  // an unreduced entry gets its canonical representative
  PolyMatrix u(1, 1);
  u.at(0, 0) = parse_polynomial("x*y", ring->base);
  EXPECT_EQ(lift_matrix(u, *ring).at(0, 0), parse_polynomial("z*w", ring->base));
}

TEST(RingDimension, HypersurfaceHasDimensionThree) {
  for (auto ring : {make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w"),
                    make_ring(32003, {"x", "y", "z", "w"}, {105, 70, 42, 30},
                              "x^2 + y^3 + z^5 + w^7"),
                    make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1},
                              "x^3 + y^3 + z^3 + w^3")}) {
    GroebnerBasis gb = buchberger({VecPoly{ring->f}}, ring, 1, {0}, Mode::S);
    EXPECT_EQ(lt_dimension(gb), 3);
    // f reduces to zero in R-mode, 1 does not
    GroebnerBasis gb0 = gb_over_quotient({}, ring, 1, {0});
    EXPECT_TRUE(normal_form_poly(ring->f, gb0).is_zero());
    EXPECT_FALSE(
        normal_form_poly(Polynomial::constant(1, ring->base), gb0).is_zero());
  }
}

}  // namespace
