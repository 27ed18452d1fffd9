#include <gtest/gtest.h>

#include "lrslab/inequality.hpp"
#include "lrslab/report.hpp"
#include "lrslab/spec_io.hpp"

using namespace lrslab;

TEST(Report, CensusCsvIsIndependentOfThreads) {
  ReportHeader h{"census test", 20240101, std::nullopt};
  std::string first;
  for (unsigned threads : {1u, 4u, 8u}) {
    CensusOptions o;
    o.threads = threads;
    const CensusReport r = census(complex_lucas_spec(), 300, InequalityKind::Phi, o);
    const std::string csv = census_csv(h, r) + census_summary(h, r, false);
    if (first.empty()) {
      first = csv;
    } else {
      EXPECT_EQ(csv, first) << "threads=" << threads;
    }
  }
}

TEST(Report, HeaderCarriesSeedAndOptionalTimestamp) {
  const CensusReport r = census(fibonacci_spec(), 10, InequalityKind::Phi);
  const std::string plain = census_csv({"c", 77, std::nullopt}, r);
  EXPECT_EQ(plain.rfind("# command: c\n# seed: 77\nn,kind,verdict,lhs_low,lhs_high,rhs,probable_used\n", 0), 0u);
  EXPECT_EQ(plain.find("timestamp"), std::string::npos);
  const std::string stamped = census_csv({"c", 77, std::string("2024-01-01T00:00:00Z")}, r);
  EXPECT_NE(stamped.find("# timestamp: 2024-01-01T00:00:00Z"), std::string::npos);
  EXPECT_NE(plain.find("\n10,PHI,HOLDS,40,40,3,0\n"), std::string::npos);
}

TEST(Report, TailCountRows) {
  TailCountReport t;
  t.experiment = "rough";
  t.x = 100;
  t.threshold = 10;
  t.count = 21;
  t.comparison = 100 / std::log(10.0);
  const std::string csv = tail_counts_csv({"s", 1, std::nullopt}, {t});
  EXPECT_NE(csv.find("experiment,x,threshold,count,comparison_value,undecided_count\n"), std::string::npos);
  EXPECT_NE(csv.find("rough,100,10,21,43.42944819,0\n"), std::string::npos);
}
