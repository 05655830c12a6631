// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "tlab/cert_cache.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph6.hpp"

namespace tlab {
namespace {

namespace fs = std::filesystem;

class CertCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tlab_cert_" + std::to_string(std::random_device{}()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CertCacheTest, MissOnEmptyDirectory) {
  CertificateCache cache(dir_);
  EXPECT_FALSE(cache.load(3, 2, 3).has_value());
  EXPECT_FALSE(cache.load_best(3, 2).has_value());
}

TEST_F(CertCacheTest, StoreLoadRoundTrip) {
  CertificateCache cache(dir_);
  DrCertificate c = check_counterexample(BitDigraph::directed_cycle(3), 3, 2);
  cache.store(c);
  auto back = cache.load(3, 2, 3);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->digraph, c.digraph);
  EXPECT_TRUE(back->verified());
}

TEST_F(CertCacheTest, LoadBestPicksHighestOrder) {
  CertificateCache cache(dir_);
  cache.store(check_counterexample(BitDigraph::empty(1), 3, 2));
  cache.store(check_counterexample(BitDigraph::directed_cycle(3), 3, 2));
  auto best = cache.load_best(3, 2);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->order(), 3);
  EXPECT_FALSE(cache.load_best(3, 3).has_value());
}

TEST_F(CertCacheTest, RefusesUnverified) {
  CertificateCache cache(dir_);
  DrCertificate c;
  c.n = 3;
  c.m = 2;
  c.digraph = BitDigraph::directed_cycle(3);
  EXPECT_THROW(cache.store(c), std::invalid_argument);
}

TEST_F(CertCacheTest, TamperedFileIsCorrupt) {
  CertificateCache cache(dir_);
  cache.store(check_counterexample(BitDigraph::directed_cycle(3), 3, 2));
  fs::path p = cache.path_for(3, 2, 3);
  {
    // Valid digraph6, but a transitive triple.
    std::ofstream out(p, std::ios::trunc);
    out << R"({"n":3,"m":2,"order":3,"verified_at":"x"})" << '\n'
        << encode_digraph6(BitDigraph::transitive_tournament(3)) << '\n';
  }
  EXPECT_THROW(cache.load(3, 2, 3), CacheCorrupt);
  {
    std::ofstream out(p, std::ios::trunc);
    out << R"({"n":3,"m":3,"order":3,"verified_at":"x"})" << '\n'
        << encode_digraph6(BitDigraph::directed_cycle(3)) << '\n';
  }
  EXPECT_THROW(cache.load(3, 2, 3), CacheCorrupt);
  {
    std::ofstream out(p, std::ios::trunc);
    out << "not json\n";
  }
  EXPECT_THROW(cache.load(3, 2, 3), CacheCorrupt);
}

}  // namespace
}  // namespace tlab
