// Copyright 2026 the hstheta authors

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hstheta/theta.hpp"
#include "oracles.hpp"

using namespace hstheta;

namespace {

struct QuadricFixture {
  RingPtr ring = make_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*y - z*w");

  Polynomial p(const char* text) const { return parse_polynomial(text, ring->base); }
  FPModule ideal_module() const {
    PolyMatrix pres(2, 2);
    pres.at(0, 0) = p("y");
    pres.at(0, 1) = p("z");
    pres.at(1, 0) = p("-w");
    pres.at(1, 1) = p("-x");
    return make_module(ring, Mode::R, {1, 1}, pres);
  }
  FPModule quotient(std::initializer_list<const char*> gens) const {
    std::vector<Polynomial> polys;
    for (const char* g : gens) polys.push_back(p(g));
    return cyclic_quotient(ring, Mode::R, polys);
  }
  FPModule residue_field() const { return quotient({"x", "y", "z", "w"}); }
};

void expect_betti(const ResolutionData& res, std::vector<int> want) {
  std::vector<int> got = res.betti;
  while (got.size() < want.size()) got.push_back(0);
  got.resize(want.size());
  EXPECT_EQ(got, want);
}

// d.d = 0 and ker(d_i) = im(d_{i+1}) at every interior spot, re-derived from
// scratch with the syzygy engine.
void expect_exact(const ResolutionData& res) {
  const PolyRing& base = res.ring->base;
  for (size_t k = 0; k + 1 < res.diffs.size(); ++k) {
    PolyMatrix prod = mat_mul(res.diffs[k], res.diffs[k + 1], base);
    if (res.mode == Mode::R) prod = reduce_matrix_mod_f(prod, *res.ring);
    EXPECT_TRUE(prod.is_zero()) << "d" << k + 1 << " . d" << k + 2 << " != 0";

    SyzygyResult ker = syzygies(matrix_columns(res.diffs[k]), res.ring,
                                res.diffs[k].rows(), res.twists[k], res.mode);
    std::vector<VecPoly> span = matrix_columns(res.diffs[k + 1]);
    GroebnerBasis gb = buchberger(span, res.ring, res.diffs[k].cols(),
                                  res.twists[k + 1], res.mode);
    for (const VecPoly& v : ker.gens)
      EXPECT_TRUE(in_submodule(v, gb)) << "homology at spot " << k + 1 << " is nonzero";
  }
  for (const PolyMatrix& d : res.diffs)
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) EXPECT_FALSE(d.at(i, j).is_unit());
}

TEST(ResolveOverS, KoszulComplexOfTheResidueField) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_S(fx.residue_field());
  expect_betti(res, {1, 4, 6, 4, 1});
  EXPECT_TRUE(res.complete);
  expect_exact(res);
}

TEST(ResolveOverS, HypersurfaceAndRulingTerminate) {
  QuadricFixture fx;
  ResolutionData r = resolve_over_S(free_module(fx.ring, Mode::R, {0}));
  expect_betti(r, {1, 1});
  EXPECT_TRUE(r.complete);

  ResolutionData i = resolve_over_S(fx.ideal_module());
  expect_betti(i, {2, 2});
  EXPECT_TRUE(i.complete);
  expect_exact(i);
}

TEST(ResolveOverR, ResidueFieldBettiFollowThePoincareSeries) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(fx.residue_field(), 6);
  // independent prefix from the series (1+t)^3/(1-t): cumulative sums of
  // (1, 3, 3, 1)
  std::vector<int> want;
  int pascal[4] = {1, 3, 3, 1};
  for (int n = 0; n < 7; ++n) {
    int b = 0;
    for (int k = 0; k <= std::min(n, 3); ++k) b += pascal[k];
    want.push_back(b);
  }
  expect_betti(res, want);  // (1, 4, 7, 8, 8, 8, 8)
  expect_exact(res);
  EXPECT_EQ(detect_periodicity(res), 3);
}

TEST(ResolveOverR, RulingIsImmediatelyPeriodic) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(fx.ideal_module(), 6);
  expect_betti(res, {2, 2, 2, 2, 2, 2, 2});
  expect_exact(res);
  EXPECT_EQ(detect_periodicity(res), 0);
  // differentials alternate between the two matrices of the factorization
  for (size_t k = 0; k + 2 < res.diffs.size(); ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        EXPECT_EQ(res.diffs[k].at(i, j), res.diffs[k + 2].at(i, j));
}

TEST(ResolveOverR, FreeModuleStopsImmediately) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(free_module(fx.ring, Mode::R, {0}), 6);
  expect_betti(res, {1, 0});
  EXPECT_TRUE(res.complete);
  EXPECT_EQ(detect_periodicity(res), 1);
}

TEST(ResolveOverR, PrincipalQuotientHasFinitePd) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(fx.quotient({"x"}), 6);
  expect_betti(res, {1, 1, 0});
  EXPECT_TRUE(res.complete);
  EXPECT_EQ(detect_periodicity(res), 2);
}

TEST(ResolveOverR, ShortPrefixCannotCertifyPeriodicity) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(fx.residue_field(), 3);
  EXPECT_THROW(detect_periodicity(res), IneligibleError);
}

TEST(ResolveOverR, StepCeilingFailsLoudly) {
  QuadricFixture fx;
  EXPECT_THROW(resolve_over_R(fx.residue_field(), 12, 10), ResourceError);
}

TEST(Periodicity, EventualPeriodTwoOnCorpusModules) {
  QuadricFixture fx;
  for (const FPModule& m : {fx.residue_field(), fx.ideal_module(),
                            fx.quotient({"x", "z"}), fx.quotient({"y", "w"})}) {
    ResolutionData res = resolve_over_R(m, 8);
    for (size_t i = 4; i + 2 < res.betti.size(); ++i)
      EXPECT_EQ(res.betti[i + 2], res.betti[i]);
  }
}

TEST(MatrixFactorization, RulingGivesTheTwoByTwoPair) {
  QuadricFixture fx;
  MatrixFactorization mf = matrix_factorization(fx.ideal_module());
  ASSERT_EQ(mf.a.rows(), 2);
  EXPECT_EQ(mf.a.at(0, 0), fx.p("y"));
  EXPECT_EQ(mf.a.at(0, 1), fx.p("z"));
  EXPECT_EQ(mf.a.at(1, 0), fx.p("-w"));
  EXPECT_EQ(mf.a.at(1, 1), fx.p("-x"));
  EXPECT_EQ(mf.b.at(0, 0), fx.p("x"));
  EXPECT_EQ(mf.b.at(0, 1), fx.p("z"));
  EXPECT_EQ(mf.b.at(1, 0), fx.p("-w"));
  EXPECT_EQ(mf.b.at(1, 1), fx.p("-y"));
  // the product identity is the oracle
  PolyMatrix ab = mat_mul(mf.a, mf.b, fx.ring->base);
  PolyMatrix ba = mat_mul(mf.b, mf.a, fx.ring->base);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Polynomial want = i == j ? fx.ring->f : Polynomial();
      EXPECT_EQ(ab.at(i, j), want);
      EXPECT_EQ(ba.at(i, j), want);
    }
}

TEST(MatrixFactorization, PartnerCokernelSwapsThePair) {
  QuadricFixture fx;
  PolyMatrix pres(2, 2);
  pres.at(0, 0) = fx.p("x");
  pres.at(0, 1) = fx.p("z");
  pres.at(1, 0) = fx.p("-w");
  pres.at(1, 1) = fx.p("-y");
  FPModule partner = make_module(fx.ring, Mode::R, {1, 1}, pres);
  MatrixFactorization mf = matrix_factorization(partner);
  EXPECT_EQ(mf.a.at(0, 0), fx.p("x"));
  EXPECT_EQ(mf.b.at(0, 0), fx.p("y"));
}

TEST(MatrixFactorization, ThirdSyzygyOfResidueFieldIsEightByEight) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(fx.residue_field(), 5);
  FPModule omega3 = make_module(fx.ring, Mode::R, res.twists[3], res.diffs[3]);
  MatrixFactorization mf = matrix_factorization(omega3);
  ASSERT_EQ(mf.a.rows(), 8);
  ASSERT_EQ(mf.b.rows(), 8);
  PolyMatrix ab = mat_mul(mf.a, mf.b, fx.ring->base);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      EXPECT_EQ(ab.at(i, j), i == j ? fx.ring->f : Polynomial());
}

TEST(MatrixFactorization, RejectsIneligibleInput) {
  QuadricFixture fx;
  EXPECT_THROW(matrix_factorization(fx.residue_field()), IneligibleError);  // not MCM
  EXPECT_THROW(matrix_factorization(free_module(fx.ring, Mode::R, {0})),
               IneligibleError);  // free
  FPModule with_summand = direct_sum(fx.ideal_module(), free_module(fx.ring, Mode::R, {0}));
  EXPECT_THROW(matrix_factorization(with_summand), IneligibleError);
}

TEST(Tor, SpecExamples) {
  QuadricFixture fx;
  FPModule r1 = free_module(fx.ring, Mode::R, {0});
  FPModule n = fx.ideal_module();
  HomologyReport t0 = tor_module(r1, n, 0);
  EXPECT_EQ(length(n), t0.len);
  for (int i = 1; i <= 3; ++i)
    EXPECT_EQ(tor_module(r1, n, i).len, Length::of(0));

  EXPECT_EQ(tor_module(fx.quotient({"x", "z"}), fx.quotient({"y", "w"}), 1).len,
            Length::of(0));
  EXPECT_EQ(tor_module(fx.quotient({"x", "z"}), fx.quotient({"y", "w"}), 0).len,
            Length::of(1));
}

TEST(Tor, SymmetricLengthsOnCorpusPairs) {
  QuadricFixture fx;
  FPModule mxz = fx.quotient({"x", "z"});
  FPModule myw = fx.quotient({"y", "w"});
  FPModule k = fx.residue_field();
  FPModule i = fx.ideal_module();
  std::vector<std::pair<const FPModule*, const FPModule*>> pairs = {
      {&mxz, &myw}, {&i, &k}, {&mxz, &k}};
  for (auto [a, b] : pairs) {
    for (int idx = 0; idx <= 7; ++idx) {
      Length lab = tor_module(*a, *b, idx).len;
      Length lba = tor_module(*b, *a, idx).len;
      if (lab.finite && lba.finite) EXPECT_EQ(lab.value, lba.value) << "index " << idx;
    }
  }
}

TEST(Ext, SpecExamples) {
  QuadricFixture fx;
  FPModule r1 = free_module(fx.ring, Mode::R, {0});
  FPModule n = fx.ideal_module();
  HomologyReport e0 = ext_module(r1, n, 0);
  EXPECT_EQ(e0.len, length(n));
  EXPECT_EQ(graded_std_counts(relations_gb(e0.module), 6),
            graded_std_counts(relations_gb(n), 6));

  EXPECT_EQ(ext_module(n, r1, 1).len, Length::of(0));
  EXPECT_EQ(ext_module(n, r1, 2).len, Length::of(0));
  EXPECT_EQ(ext_module(n, n, 1).len, Length::of(0));
}

TEST(Ext, VanishesAgainstRForMcmModules) {
  QuadricFixture fx;
  ResolutionData res = resolve_over_R(fx.residue_field(), 5);
  FPModule omega3 = make_module(fx.ring, Mode::R, res.twists[3], res.diffs[3]);
  FPModule r1 = free_module(fx.ring, Mode::R, {0});
  for (const FPModule& m : {fx.ideal_module(), omega3}) {
    EXPECT_EQ(ext_module(m, r1, 1).len, Length::of(0));
    EXPECT_EQ(ext_module(m, r1, 2).len, Length::of(0));
  }
}

TEST(SerreChi, SpecExamples) {
  QuadricFixture fx;
  EXPECT_EQ(serre_chi_S(fx.quotient({"x", "z"}), fx.quotient({"y", "w"})), 1);
  EXPECT_EQ(serre_chi_S(fx.residue_field(), fx.residue_field()), 0);
  // over the free S-module chi is plain length
  FPModule s1 = free_module(fx.ring, Mode::S, {0});
  FPModule finite_s = as_s_module(fx.quotient(
      {"x^2", "x*y", "x*z", "x*w", "y^2", "y*z", "y*w", "z^2", "z*w", "w^2"}));
  EXPECT_EQ(serre_chi_S(s1, finite_s), 5);
  EXPECT_THROW(serre_chi_S(fx.quotient({"x", "z"}), fx.quotient({"x", "w"})),
               IneligibleError);  // tensor has dimension 1
}

TEST(FourTermConsequence, ExtOneMatchesTorOneOfTheDualSyzygy) {
  QuadricFixture fx;
  FPModule i = fx.ideal_module();
  FPModule m1 = dual_syzygy_cokernel(i);
  for (const FPModule& n : {fx.residue_field(), fx.quotient({"x", "z"})}) {
    Length le = ext_module(i, n, 1).len;
    Length lt = tor_module(m1, n, 1).len;
    ASSERT_TRUE(le.finite);
    ASSERT_TRUE(lt.finite);
    EXPECT_EQ(le.value, lt.value);
  }
}

TEST(ResolutionCache, DiskRoundTripAndIntegrity) {
  QuadricFixture fx;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "hstheta-cache-test";
  fs::remove_all(dir);

  ResolutionCache::instance().clear_memory();
  ResolutionCache::instance().set_disk_dir(dir.string());
  ResolutionData first = resolve_over_R(fx.residue_field(), 6);

  // a fresh in-memory state must read the same data back from disk
  ResolutionCache::instance().clear_memory();
  ResolutionData second = resolve_over_R(fx.residue_field(), 6);
  EXPECT_EQ(first.betti, second.betti);
  ASSERT_EQ(first.diffs.size(), second.diffs.size());
  for (size_t k = 0; k < first.diffs.size(); ++k)
    for (int i = 0; i < first.diffs[k].rows(); ++i)
      for (int j = 0; j < first.diffs[k].cols(); ++j)
        EXPECT_EQ(first.diffs[k].at(i, j), second.diffs[k].at(i, j));

  // corrupt every cache file; the digest check must reject them silently
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream out(entry.path(), std::ios::app);
    out << " ";
  }
  ResolutionCache::instance().clear_memory();
  ResolutionData third = resolve_over_R(fx.residue_field(), 6);
  EXPECT_EQ(first.betti, third.betti);

  // cache off: identical values
  ResolutionCache::instance().set_disk_dir("");
  ResolutionCache::instance().clear_memory();
  ResolutionData fourth = resolve_over_R(fx.residue_field(), 6);
  EXPECT_EQ(first.betti, fourth.betti);
  fs::remove_all(dir);
}

TEST(ResolutionCache, PrefixExtensionMatchesFreshComputation) {
  QuadricFixture fx;
  ResolutionCache::instance().clear_memory();
  ResolutionData stepwise_4 = resolve_over_R(fx.residue_field(), 4);
  ResolutionData stepwise_7 = resolve_over_R(fx.residue_field(), 7);  // extends
  ResolutionCache::instance().clear_memory();
  ResolutionData fresh_7 = resolve_over_R(fx.residue_field(), 7);
  EXPECT_EQ(stepwise_7.betti, fresh_7.betti);
  ASSERT_EQ(stepwise_7.diffs.size(), fresh_7.diffs.size());
  for (size_t k = 0; k < fresh_7.diffs.size(); ++k)
    for (int i = 0; i < fresh_7.diffs[k].rows(); ++i)
      for (int j = 0; j < fresh_7.diffs[k].cols(); ++j)
        EXPECT_EQ(stepwise_7.diffs[k].at(i, j), fresh_7.diffs[k].at(i, j));
  EXPECT_EQ(stepwise_4.betti.size(), 5u);
}

}  // namespace
