// Copyright 2026 the hstheta authors

#include <gtest/gtest.h>

#include "hstheta/groebner.hpp"
#include "oracles.hpp"

using namespace hstheta;

namespace {

RingPtr quadric() {
  return make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w");
}

Polynomial P(const char* text, const RingPtr& ring) {
  return parse_polynomial(text, ring->base);
}

std::vector<VecPoly> ideal_gens(std::initializer_list<const char*> texts,
                                const RingPtr& ring) {
  std::vector<VecPoly> out;
  for (const char* t : texts) out.push_back(VecPoly{P(t, ring)});
  return out;
}

TEST(Buchberger, MonomialIdealIsItsOwnBasis) {
  auto ring = quadric();
  GroebnerBasis gb = buchberger(ideal_gens({"x", "y"}, ring), ring, 1, {0}, Mode::S);
  ASSERT_EQ(gb.gens.size(), 2u);
  EXPECT_EQ(gb.gens[0][0], P("y", ring));
  EXPECT_EQ(gb.gens[1][0], P("x", ring));
}

TEST(Buchberger, SingleElementIsConfluent) {
  auto ring = quadric();
  GroebnerBasis gb = buchberger(ideal_gens({"x*y - z*w"}, ring), ring, 1, {0}, Mode::S);
  ASSERT_EQ(gb.gens.size(), 1u);
  EXPECT_EQ(gb.gens[0][0], P("x*y - z*w", ring));
}

TEST(Buchberger, TwistedCubicStyleBasis) {
  auto ring = quadric();
  GroebnerBasis gb =
      buchberger(ideal_gens({"y - x^2", "z - x^3"}, ring), ring, 1, {0}, Mode::S);
  ASSERT_EQ(gb.gens.size(), 3u);
  bool found = false;
  for (const VecPoly& g : gb.gens)
    if (g[0] == P("y^2 - x*z", ring)) found = true;
  EXPECT_TRUE(found) << "reduced basis must contain y^2 - x*z";
}

// Confluence re-checked by an independent S-pair reduction oracle.
TEST(Buchberger, EverySPairReducesToZero) {
  auto ring = quadric();
  std::vector<GroebnerBasis> bases;
  bases.push_back(
      buchberger(ideal_gens({"y - x^2", "z - x^3"}, ring), ring, 1, {0}, Mode::S));
  bases.push_back(buchberger(ideal_gens({"x*y - z*w", "x^2 - y*w", "y^2 - x*z"}, ring),
                             ring, 1, {0}, Mode::S));
  // a module case
  std::vector<VecPoly> mod_gens = {{P("y", ring), P("-w", ring)},
                                   {P("z", ring), P("-x", ring)},
                                   {P("x*y - z*w", ring), Polynomial()}};
  bases.push_back(buchberger(mod_gens, ring, 2, {1, 1}, Mode::S));
  for (const GroebnerBasis& gb : bases) {
    for (size_t i = 0; i < gb.gens.size(); ++i)
      for (size_t j = i + 1; j < gb.gens.size(); ++j) {
        VecLead li = vec_lead(gb.gens[i]), lj = vec_lead(gb.gens[j]);
        if (li.comp != lj.comp) continue;
        Monomial l = lcm(li.mono, lj.mono);
        VecPoly sp = vec_sub(
            vec_mul_term(gb.gens[i], quotient(l, li.mono), 1, ring->base),
            vec_mul_term(gb.gens[j], quotient(l, lj.mono), 1, ring->base), ring->base);
        EXPECT_TRUE(oracles::naive_reduces_to_zero(sp, gb.gens, ring->base));
      }
  }
}

TEST(NormalForm, SpecExamples) {
  auto ring = quadric();
  GroebnerBasis gbx = buchberger(ideal_gens({"x"}, ring), ring, 1, {0}, Mode::S);
  EXPECT_TRUE(normal_form_poly(P("x^2", ring), gbx).is_zero());

  GroebnerBasis gbf = buchberger(ideal_gens({"x*y - z*w"}, ring), ring, 1, {0}, Mode::S);
  EXPECT_EQ(normal_form_poly(P("z*w", ring), gbf), P("z*w", ring));
  EXPECT_EQ(normal_form_poly(P("x*y", ring), gbf), P("z*w", ring));

  GroebnerBasis gb =
      buchberger(ideal_gens({"y - x^2", "z - x^3"}, ring), ring, 1, {0}, Mode::S);
  EXPECT_TRUE(normal_form_poly(P("y - x^2", ring), gb).is_zero());
  EXPECT_TRUE(normal_form_poly(P("z - x^3", ring), gb).is_zero());
}

TEST(NormalForm, IdempotentAndLinear) {
  auto ring = quadric();
  GroebnerBasis gb = buchberger(ideal_gens({"x*y - z*w", "x^3"}, ring), ring, 1, {0},
                                Mode::S);
  oracles::PolyGen gen(ring->base, 17);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = gen.any(5), b = gen.any(5);
    uint32_t c = i % 101;
    Polynomial nf_a = normal_form_poly(a, gb);
    EXPECT_EQ(normal_form_poly(nf_a, gb), nf_a);
    Polynomial lhs = normal_form_poly(
        poly_add(a, poly_scale(b, c, ring->base), ring->base), gb);
    Polynomial rhs = normal_form_poly(
        poly_add(nf_a, poly_scale(normal_form_poly(b, gb), c, ring->base), ring->base),
        gb);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Syzygies, KoszulPairs) {
  auto ring = quadric();
  SyzygyResult syz = syzygies(ideal_gens({"x", "y"}, ring), ring, 1, {0}, Mode::S);
  ASSERT_EQ(syz.gens.size(), 1u);
  // (y, -x) up to sign normalization
  EXPECT_EQ(syz.gens[0][0], P("y", ring));
  EXPECT_EQ(syz.gens[0][1], P("-x", ring));

  SyzygyResult sxz = syzygies(ideal_gens({"x", "z"}, ring), ring, 1, {0}, Mode::S);
  ASSERT_EQ(sxz.gens.size(), 1u);
  EXPECT_EQ(sxz.gens[0][0], P("z", ring));
  EXPECT_EQ(sxz.gens[0][1], P("-x", ring));
}

// The columns of the factorization matrix are independent over S (their
// determinant is -f, nonzero), so the S-syzygy module is zero; over R the
// partner columns appear and substitute to multiples of f.
TEST(Syzygies, FactorizationColumns) {
  auto ring = quadric();
  std::vector<VecPoly> cols = {{P("y", ring), P("-w", ring)},
                               {P("z", ring), P("-x", ring)}};
  SyzygyResult over_s = syzygies(cols, ring, 2, {1, 1}, Mode::S);
  EXPECT_TRUE(over_s.gens.empty());

  SyzygyResult over_r = syzygies(cols, ring, 2, {1, 1}, Mode::R);
  ASSERT_FALSE(over_r.gens.empty());
  for (const VecPoly& w : over_r.gens) {
    // substitution oracle: sum w_i g_i lies in f . S^2
    VecPoly total = vec_zero(2);
    for (size_t k = 0; k < cols.size(); ++k)
      total = vec_add(total, vec_mul_poly(cols[k], w[k], ring->base), ring->base);
    for (const Polynomial& entry : total)
      EXPECT_TRUE(reduce_mod_f(entry, *ring).is_zero());
  }
}

TEST(Syzygies, SubstitutionPropertyOnRandomInputs) {
  auto ring = quadric();
  oracles::PolyGen gen(ring->base, 40);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<VecPoly> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(VecPoly{gen.homogeneous(2), gen.homogeneous(2)});
    SyzygyResult syz = syzygies(gens, ring, 2, {0, 0}, Mode::S);
    for (const VecPoly& w : syz.gens) {
      VecPoly total = vec_zero(2);
      for (size_t k = 0; k < gens.size(); ++k)
        total = vec_add(total, vec_mul_poly(gens[k], w[k], ring->base), ring->base);
      EXPECT_TRUE(vec_is_zero(total));
    }
  }
}

TEST(QuotientBasis, CanonicalRepresentatives) {
  auto ring = quadric();
  // zero submodule over R: the basis is the f-multiple of the basis vector
  GroebnerBasis gb0 = gb_over_quotient({}, ring, 1, {0});
  ASSERT_EQ(gb0.gens.size(), 1u);
  EXPECT_EQ(gb0.gens[0][0], ring->f_monic);
  EXPECT_EQ(normal_form_poly(P("z*w", ring), gb0), P("z*w", ring));
  EXPECT_EQ(normal_form_poly(P("x*y", ring), gb0), P("z*w", ring));
  EXPECT_TRUE(normal_form_poly(P("x*y - z*w", ring), gb0).is_zero());

  // the maximal ideal over R
  GroebnerBasis gbm =
      gb_over_quotient(ideal_gens({"x", "y", "z", "w"}, ring), ring, 1, {0});
  EXPECT_TRUE(normal_form_poly(ring->f, gbm).is_zero());
  EXPECT_FALSE(normal_form_poly(P("1", ring), gbm).is_zero());
  EXPECT_EQ(std_monomial_count(gbm), Length::of(1));
}

TEST(Counting, SpecExamples) {
  auto ring = quadric();
  auto count_of = [&](std::initializer_list<const char*> gens) {
    return std_monomial_count(buchberger(ideal_gens(gens, ring), ring, 1, {0}, Mode::S));
  };
  EXPECT_EQ(count_of({"x", "y", "z", "w"}), Length::of(1));
  EXPECT_FALSE(count_of({"x", "y", "z"}).finite);
  EXPECT_EQ(count_of({"x^2", "y", "z", "w"}), Length::of(2));
}

TEST(Dimension, SpecExamplesAndGrowthOracle) {
  auto ring = quadric();
  auto dim_of = [&](std::initializer_list<const char*> gens) {
    return lt_dimension(buchberger(ideal_gens(gens, ring), ring, 1, {0}, Mode::S));
  };
  EXPECT_EQ(dim_of({"x", "y", "z", "w"}), 0);
  EXPECT_EQ(dim_of({"x", "z"}), 2);
  EXPECT_EQ(dim_of({"x*y"}), 3);
  EXPECT_EQ(dim_of({"1"}), -1);

  // Hilbert-growth oracle on plain monomial ideals
  EXPECT_EQ(oracles::growth_dimension({Monomial{{1, 1, 0, 0}}}), 3);
  EXPECT_EQ(oracles::growth_dimension({Monomial{{1, 0, 0, 0}}, Monomial{{0, 0, 1, 0}}}), 2);
  EXPECT_EQ(oracles::growth_dimension({Monomial{{1, 0, 0, 0}},
                                       Monomial{{0, 1, 0, 0}},
                                       Monomial{{0, 0, 1, 0}},
                                       Monomial{{0, 0, 0, 1}}}),
            0);
}

TEST(Dimension, CoherentWithCounting) {
  auto ring = quadric();
  oracles::PolyGen gen(ring->base, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<VecPoly> gens;
    int n = 1 + trial % 5;
    for (int k = 0; k < n; ++k)
      gens.push_back(VecPoly{Polynomial::monomial(gen.monomial(2), 1, ring->base)});
    GroebnerBasis gb = buchberger(gens, ring, 1, {0}, Mode::S);
    Length cnt = std_monomial_count(gb);
    int dim = lt_dimension(gb);
    EXPECT_EQ(cnt.finite, dim <= 0);
    if (cnt.finite && cnt.value > 0) EXPECT_EQ(dim, 0);
  }
}

TEST(LiftThrough, CertificatesAreExact) {
  auto ring = quadric();
  std::vector<VecPoly> gens = ideal_gens({"x*y - z*w", "x^2", "y^2"}, ring);
  Polynomial target = P("x^2*y - x*z*w", ring);  // x*(xy - zw)
  auto cert = lift_through(VecPoly{target}, gens, ring, 1, {0}, Mode::S);
  ASSERT_TRUE(cert.has_value());
  Polynomial total;
  for (size_t k = 0; k < gens.size(); ++k)
    total = poly_add(total, poly_mul((*cert)[k], gens[k][0], ring->base), ring->base);
  EXPECT_EQ(total, target);

  EXPECT_FALSE(lift_through(VecPoly{P("z", ring)}, gens, ring, 1, {0}, Mode::S)
                   .has_value());
}

TEST(GradedCounts, MatchHandCountsOnTheQuadric) {
  auto ring = quadric();
  // R = S/(f): counts 1, 4, 9, 16, ... (smooth quadric cone Hilbert function)
  GroebnerBasis gb = gb_over_quotient({}, ring, 1, {0});
  auto counts = graded_std_counts(gb, 3);
  EXPECT_EQ(counts[0], 1u);
  EXPECT_EQ(counts[1], 4u);
  EXPECT_EQ(counts[2], 9u);
  EXPECT_EQ(counts[3], 16u);
}

TEST(ResourceCeilings, FailLoudly) {
  auto ring = quadric();
  GBOptions tight;
  tight.max_total_degree = 2;
  EXPECT_THROW(
      buchberger(ideal_gens({"y - x^2", "z - x^3"}, ring), ring, 1, {0}, Mode::S, tight),
      ResourceError);
  GBOptions tiny;
  tiny.max_basis = 1;
  EXPECT_THROW(buchberger(ideal_gens({"x", "y", "z"}, ring), ring, 1, {0}, Mode::S, tiny),
               ResourceError);
}

}  // namespace
