#include <cmath>
#include <optional>
#include <vector>

#include <doctest.h>

#include "seedstop/correlation.hpp"
#include "seedstop/rng.hpp"
#include "seedstop/trial_model.hpp"

#include "test_support.hpp"

using namespace seedstop;
using test_support::make_trial;

using vd = std::vector<double>;

namespace {

// Pool whose trial curves are per-trial transforms of a shared checkpoint
// axis; `curve(i, f)` gives trial i's value at fraction f.
template <typename Curve>
TrialPool pool_from(std::size_t n, const std::vector<double>& fracs,
                    Curve curve) {
  std::vector<TrialRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<EvalPoint> evals;
    for (double f : fracs) evals.push_back({f, curve(i, f)});
    if (fracs.empty() || fracs.back() != 1.0) evals.push_back({1.0, 0.0});
    records.push_back(
        make_trial(static_cast<std::int64_t>(i) + 1, 1, std::move(evals)));
  }
  return validate_pool(std::move(records));
}

}  // namespace

TEST_CASE("pearson hand cases") {
  CHECK(*pearson(vd{1, 2, 3}, vd{1, 2, 3}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*pearson(vd{1, 2, 3}, vd{3, 2, 1}) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(*pearson(vd{1, 2, 3, 4}, vd{1, 3, 2, 4}) ==
        doctest::Approx(0.8).epsilon(1e-12));
  CHECK_FALSE(pearson(vd{2, 2, 2}, vd{1, 2, 3}).has_value());
  CHECK_FALSE(pearson(vd{1, 2, 3}, vd{5, 5, 5}).has_value());
}

TEST_CASE("pearson input validation") {
  CHECK_ERRC(pearson(vd{1.0}, vd{1.0}), too_few_samples);
  CHECK_ERRC(pearson(vd{1.0, 2.0}, vd{1.0, 2.0, 3.0}), length_mismatch);
  CHECK_ERRC(pearson(vd{1.0, std::nan("")}, vd{1.0, 2.0}), invalid_argument);
}

TEST_CASE("pearson stays within the unit interval") {
  Rng rng(derive_stream(13, 0));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.uniform_index(10);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = rng.uniform_unit();
      ys[i] = rng.uniform_unit();
    }
    const std::optional<double> r = pearson(xs, ys);
    if (r.has_value()) {
      CHECK(*r >= -1.0);
      CHECK(*r <= 1.0);
    }
  }
}

TEST_CASE("average ranks share ties fractionally") {
  const std::vector<double> ranks = average_ranks(vd{1.0, 2.0, 2.0, 3.0});
  REQUIRE(ranks.size() == 4);
  CHECK(ranks[0] == 1.0);
  CHECK(ranks[1] == 2.5);
  CHECK(ranks[2] == 2.5);
  CHECK(ranks[3] == 4.0);

  const std::vector<double> all_tied = average_ranks(vd{7.0, 7.0, 7.0});
  for (double r : all_tied) CHECK(r == 2.0);
}

TEST_CASE("spearman hand cases") {
  CHECK(*spearman(vd{1, 5, 20}, vd{0.1, 0.2, 0.9}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*spearman(vd{1, 2, 2, 3}, vd{1, 2, 3, 4}) ==
        doctest::Approx(4.5 / std::sqrt(22.5)).epsilon(1e-12));
  CHECK_FALSE(spearman(vd{4, 4, 4, 4}, vd{1, 2, 3, 4}).has_value());
}

TEST_CASE("spearman is invariant under monotone transforms") {
  Rng rng(derive_stream(13, 1));
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng.uniform_index(12);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = rng.uniform_unit();
      ys[i] = rng.uniform_unit();
    }
    const double base = *spearman(xs, ys);
    std::vector<double> tx(n);
    std::vector<double> ty(n);
    for (std::size_t i = 0; i < n; ++i) {
      tx[i] = std::exp(3.0 * xs[i]);
      ty[i] = std::atan(ys[i]);
    }
    CHECK(*spearman(tx, ty) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("spearman equals pearson on tie-free ranks") {
  const std::vector<double> xs = {3.0, 1.0, 4.0, 2.0};
  const std::vector<double> ys = {2.0, 1.0, 4.0, 3.0};
  CHECK(*spearman(xs, ys) == doctest::Approx(*pearson(average_ranks(xs),
                                                      average_ranks(ys)))
                                 .epsilon(1e-15));
}

TEST_CASE("correlation matrix of rank-preserved curves is all ones") {
  const std::vector<double> fracs = {0.25, 0.5, 0.75, 1.0};
  // Each trial is a vertical shift of a shared increasing template.
  const TrialPool pool = pool_from(5, fracs, [](std::size_t i, double f) {
    return 0.1 * static_cast<double>(i) + 0.4 * f;
  });
  const CorrelationMatrix m =
      checkpoint_correlation_matrix(pool, CorrelationMethod::spearman);
  CHECK(m.fractions == fracs);
  CHECK(m.dropped_fractions.empty());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      REQUIRE(m.at(i, j).has_value());
      CHECK(*m.at(i, j) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("correlation matrix is symmetric with unit diagonal") {
  Rng rng(derive_stream(13, 2));
  const std::vector<double> fracs = {0.2, 0.4, 0.6, 0.8, 1.0};
  const TrialPool pool = pool_from(8, fracs, [&](std::size_t, double) {
    return rng.uniform_unit();
  });
  for (CorrelationMethod method :
       {CorrelationMethod::pearson, CorrelationMethod::spearman}) {
    const CorrelationMatrix m = checkpoint_correlation_matrix(pool, method);
    REQUIRE(m.size() == fracs.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      REQUIRE(m.at(i, i).has_value());
      CHECK(*m.at(i, i) == 1.0);
      for (std::size_t j = 0; j < m.size(); ++j) {
        CHECK(m.at(i, j).has_value() == m.at(j, i).has_value());
        if (m.at(i, j).has_value()) {
          CHECK(*m.at(i, j) == *m.at(j, i));
          CHECK(*m.at(i, j) >= -1.0);
          CHECK(*m.at(i, j) <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("two-trial pools give only saturated or undefined entries") {
  const std::vector<double> fracs = {0.5, 1.0};
  const TrialPool pool = pool_from(2, fracs, [](std::size_t i, double f) {
    return i == 0 ? 0.1 + 0.4 * f : 0.9 - 0.3 * f;
  });
  const CorrelationMatrix m =
      checkpoint_correlation_matrix(pool, CorrelationMethod::pearson);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.at(i, j).has_value()) {
        CHECK(std::fabs(std::fabs(*m.at(i, j)) - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("constant checkpoint yields undefined entries, not zeros") {
  const std::vector<double> fracs = {0.5, 1.0};
  // Every trial has the same value at f = 0.5 but distinct finals.
  const TrialPool pool = pool_from(4, fracs, [](std::size_t i, double f) {
    return f < 1.0 ? 0.3 : 0.1 * static_cast<double>(i + 1);
  });
  const CorrelationMatrix m =
      checkpoint_correlation_matrix(pool, CorrelationMethod::pearson);
  CHECK_FALSE(m.at(0, 0).has_value());
  CHECK_FALSE(m.at(0, 1).has_value());
  CHECK_FALSE(m.at(1, 0).has_value());
  REQUIRE(m.at(1, 1).has_value());
  CHECK(*m.at(1, 1) == 1.0);
}

TEST_CASE("differing cadences intersect and report dropped fractions") {
  std::vector<TrialRecord> records;
  records.push_back(make_trial(1, 1, {{0.25, 0.1}, {0.5, 0.2}, {1.0, 0.4}}));
  records.push_back(make_trial(2, 1, {{0.5, 0.3}, {0.75, 0.5}, {1.0, 0.6}}));
  records.push_back(make_trial(3, 1, {{0.5, 0.1}, {1.0, 0.2}}));
  const TrialPool pool = validate_pool(std::move(records));
  const CorrelationMatrix m =
      checkpoint_correlation_matrix(pool, CorrelationMethod::spearman);
  CHECK(m.fractions == std::vector<double>{0.5, 1.0});
  CHECK(m.dropped_fractions == std::vector<double>{0.25, 0.75});
}

TEST_CASE("matrix error contracts") {
  std::vector<TrialRecord> one;
  one.push_back(make_trial(1, 1, {{0.5, 0.1}, {1.0, 0.2}}));
  const TrialPool single = validate_pool(std::move(one));
  CHECK_ERRC(
      checkpoint_correlation_matrix(single, CorrelationMethod::pearson),
      too_few_samples);

  std::vector<TrialRecord> disjoint;
  disjoint.push_back(make_trial(1, 1, {{0.25, 0.1}, {1.0, 0.2}}));
  disjoint.push_back(make_trial(2, 1, {{0.5, 0.1}, {0.9, 0.2}, {1.0, 0.3}}));
  // A final checkpoint is required at 1.0, so build the disjoint interior
  // by differing everywhere else; the intersection is then just {1.0}.
  const TrialPool pool = validate_pool(std::move(disjoint));
  CHECK(checkpoint_correlation_matrix(pool, CorrelationMethod::pearson)
            .fractions == std::vector<double>{1.0});
}

TEST_CASE("serial and parallel matrices are bit identical") {
  Rng rng(derive_stream(13, 3));
  const std::vector<double> fracs = {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  const TrialPool pool = pool_from(30, fracs, [&](std::size_t, double) {
    return rng.uniform_unit();
  });
  for (CorrelationMethod method :
       {CorrelationMethod::pearson, CorrelationMethod::spearman}) {
    const CorrelationMatrix par = checkpoint_correlation_matrix(pool, method);
    const CorrelationMatrix ser =
        serial::checkpoint_correlation_matrix(pool, method);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      for (std::size_t j = 0; j < par.size(); ++j) {
        CHECK(par.at(i, j).has_value() == ser.at(i, j).has_value());
        if (par.at(i, j).has_value()) {
          CHECK(*par.at(i, j) == *ser.at(i, j));
        }
      }
    }
  }
}
