// Copyright (c) 2026 Seqaug Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "seqaug/labelsmooth.hpp"
#include "seqaug/random.hpp"

using namespace seqaug;

namespace {

std::vector<std::string> tokens(std::initializer_list<const char*> words) {
  return {words.begin(), words.end()};
}

NBestSet make_set(const std::string& id, int count) {
  NBestSet set;
  set.utt_id = id;
  for (int i = 1; i <= count; ++i) {
    set.hypotheses.push_back(NBestEntry{{"hyp" + std::to_string(i)}, {}});
  }
  return set;
}

// A transcript and competing decoder outputs, the shape this tool consumes.
const char* kSampleTruth =
    "this is one this is one of the most highly taxed areas in the country";
const char* kSampleHyps[5] = {
    "this is one this is one the most highly taxed areas in the country",
    "this is one this is one the most highly tax areas in the country",
    "this is one this is one the most highly taxed areas and country",
    "this one this is one the most highly taxed areas and the country",
    "this is one this is one the most highly tax areas and country",
};

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("smooth_select keeps truth when epsilon is zero") {
  const auto truth = tokens({"ground", "truth"});
  const NBestSet set = make_set("u", 5);
  SmoothingConfig cfg{0.0, 5};
  for (int i = 0; i < 1000; ++i) {
    RandomStream rng = derive_stream(1, "eps0-" + std::to_string(i), 0);
    const SmoothOutcome out = smooth_select(truth, set, cfg, rng);
    CHECK_FALSE(out.replaced);
    CHECK(out.labels == truth);
  }
}

TEST_CASE("smooth_select always replaces when epsilon is one") {
  const auto truth = tokens({"ground", "truth"});
  const NBestSet set = make_set("u", 1);
  SmoothingConfig cfg{1.0, 1};
  for (int i = 0; i < 1000; ++i) {
    RandomStream rng = derive_stream(2, "eps1-" + std::to_string(i), 0);
    const SmoothOutcome out = smooth_select(truth, set, cfg, rng);
    CHECK(out.replaced);
    CHECK(out.labels == set.hypotheses[0].tokens);
  }
}

TEST_CASE("smooth_select falls back to truth on an empty hypothesis list") {
  const auto truth = tokens({"keep", "me"});
  const NBestSet empty;
  SmoothingConfig cfg{1.0, 10};
  RandomStream rng(3);
  const SmoothOutcome out = smooth_select(truth, empty, cfg, rng);
  CHECK_FALSE(out.replaced);
  CHECK(out.labels == truth);
}

TEST_CASE("smooth_select consumes exactly one draw when keeping") {
  // Two streams from the same seed: one calls smooth_select with eps=0, the
  // other draws one unit real by hand. They must then stay in lockstep.
  RandomStream via_select(77);
  RandomStream by_hand(77);
  const auto truth = tokens({"t"});
  const NBestSet set = make_set("u", 3);
  smooth_select(truth, set, SmoothingConfig{0.0, 3}, via_select);
  by_hand.next_unit_real();
  for (int i = 0; i < 16; ++i) {
    CHECK(via_select.next_u64() == by_hand.next_u64());
  }
}

TEST_CASE("a replacement draws one of the sample decoder hypotheses") {
  const auto truth = split_words(kSampleTruth);
  NBestSet set;
  set.utt_id = "sample";
  for (const char* hyp : kSampleHyps) {
    set.hypotheses.push_back(NBestEntry{split_words(hyp), {}});
  }
  SmoothingConfig cfg{1.0, 5};
  bool saw_best = false;
  for (int i = 0; i < 200; ++i) {
    RandomStream rng = derive_stream(4, "sample-" + std::to_string(i), 0);
    const SmoothOutcome out = smooth_select(truth, set, cfg, rng);
    CHECK(out.replaced);
    bool is_known = false;
    for (const char* hyp : kSampleHyps) {
      is_known = is_known || out.labels == split_words(hyp);
    }
    CHECK(is_known);
    saw_best = saw_best || out.labels == split_words(kSampleHyps[0]);
  }
  CHECK(saw_best);
}

TEST_CASE("replacement rate and per-hypothesis frequency match the formula") {
  const auto truth = tokens({"truth"});
  const NBestSet set = make_set("u", 20);
  SmoothingConfig cfg{0.1, 20};
  const int n = 100000;
  int replaced = 0;
  std::vector<int> hits(20, 0);
  for (int i = 0; i < n; ++i) {
    RandomStream rng = derive_stream(6, "freq-" + std::to_string(i), 0);
    const SmoothOutcome out = smooth_select(truth, set, cfg, rng);
    if (out.replaced) {
      ++replaced;
      ++hits[static_cast<std::size_t>(out.chosen_index)];
    }
  }
  // P(truth survives) = 0.9; each hypothesis lands 0.005 of the time.
  const double replace_rate = static_cast<double>(replaced) / n;
  CHECK(std::abs(replace_rate - 0.1) < 0.003);
  for (int h : hits) {
    CHECK(std::abs(static_cast<double>(h) / n - 0.005) < 0.003);
  }
}

TEST_CASE("conditional choice is uniform for short hypothesis lists") {
  for (int k : {1, 5, 30}) {
    const auto truth = tokens({"truth"});
    const NBestSet set = make_set("u", k);
    SmoothingConfig cfg{0.5, k};
    const int n = 200000;
    std::vector<int> hits(static_cast<std::size_t>(k), 0);
    int replaced = 0;
    for (int i = 0; i < n; ++i) {
      RandomStream rng =
          derive_stream(100 + k, "uni-" + std::to_string(i), 0);
      const SmoothOutcome out = smooth_select(truth, set, cfg, rng);
      if (out.replaced) {
        ++replaced;
        ++hits[static_cast<std::size_t>(out.chosen_index)];
      }
    }
    const double expected = static_cast<double>(replaced) / k;
    for (int h : hits) {
      CHECK(std::abs(h - expected) / expected < 0.2);
    }
  }
}

TEST_CASE("fewer hypotheses than the configured cap narrows the choice") {
  const auto truth = tokens({"truth"});
  const NBestSet set = make_set("u", 3);
  SmoothingConfig cfg{1.0, 20};
  for (int i = 0; i < 300; ++i) {
    RandomStream rng = derive_stream(8, "cap-" + std::to_string(i), 0);
    const SmoothOutcome out = smooth_select(truth, set, cfg, rng);
    CHECK(out.replaced);
    CHECK(out.chosen_index >= 0);
    CHECK(out.chosen_index < 3);
  }
}

TEST_CASE("smooth_one_hot matches the closed form") {
  SUBCASE("epsilon zero is one-hot") {
    const auto d = smooth_one_hot(2, 5, 0.0);
    CHECK(d.probabilities == std::vector<double>{0, 0, 1, 0, 0});
  }
  SUBCASE("direct arithmetic") {
    const auto d = smooth_one_hot(0, 4, 0.2);
    CHECK(d.probabilities[0] == doctest::Approx(0.85).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) {
      CHECK(d.probabilities[static_cast<std::size_t>(k)] ==
            doctest::Approx(0.05).epsilon(1e-12));
    }
  }
  SUBCASE("rejects out-of-range class") {
    CHECK_THROWS_AS(smooth_one_hot(5, 5, 0.1), std::invalid_argument);
  }
}

TEST_CASE("smooth_one_hot sums to one for random parameters") {
  RandomStream rng(404);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto k = static_cast<std::size_t>(rng.next_int_inclusive(1, 50));
    const double eps = rng.next_unit_real();
    const auto cls = static_cast<std::size_t>(
        rng.next_int_inclusive(0, static_cast<std::int64_t>(k) - 1));
    const auto d = smooth_one_hot(cls, k, eps);
    double sum = 0.0;
    for (double p : d.probabilities) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("smoothed cross entropy: epsilon zero reduces to plain H(p,q)") {
  SmoothedDistribution p{{1.0, 0.0, 0.0}};
  SmoothedDistribution q{{0.7, 0.2, 0.1}};
  CHECK(smoothed_cross_entropy(p, q, 0.0) ==
        doctest::Approx(-std::log(0.7)).epsilon(1e-12));
}

TEST_CASE("smoothed cross entropy of uniform against itself is log K") {
  const std::size_t k = 7;
  SmoothedDistribution u{std::vector<double>(k, 1.0 / k)};
  for (double eps : {0.0, 0.3, 1.0}) {
    CHECK(smoothed_cross_entropy(u, u, eps) ==
          doctest::Approx(std::log(static_cast<double>(k))).epsilon(1e-12));
  }
}

TEST_CASE("smoothed cross entropy matches an independent evaluation") {
  // Long-double recomputation of (1-e)*H(p,q) + e*H(u,q), term by term.
  SmoothedDistribution p{{1.0, 0.0, 0.0}};
  SmoothedDistribution q{{0.7, 0.2, 0.1}};
  const double eps = 0.1;
  const long double expected =
      (1.0L - 0.1L) * (-logl(0.7L)) +
      0.1L * (-(logl(0.7L) + logl(0.2L) + logl(0.1L)) / 3.0L);
  CHECK(std::abs(smoothed_cross_entropy(p, q, eps) -
                 static_cast<double>(expected)) < 1e-12);
}

TEST_CASE("smoothed cross entropy rejects non-positive model entries") {
  SmoothedDistribution p{{0.5, 0.5}};
  SmoothedDistribution q{{1.0, 0.0}};
  CHECK_THROWS_AS(smoothed_cross_entropy(p, q, 0.1), std::domain_error);
}

TEST_CASE("regularizer decomposition holds to floating tolerance") {
  RandomStream rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto k = static_cast<std::size_t>(rng.next_int_inclusive(2, 12));
    std::vector<double> pv(k), qv(k);
    double psum = 0.0, qsum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      pv[i] = rng.next_unit_real();
      qv[i] = rng.next_unit_real() + 1e-3;
      psum += pv[i];
      qsum += qv[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      pv[i] /= psum;
      qv[i] /= qsum;
    }
    SmoothedDistribution p{pv}, q{qv};
    SmoothedDistribution u{std::vector<double>(k, 1.0 / k)};
    const double eps = rng.next_unit_real();
    const double combined = smoothed_cross_entropy(p, q, eps);
    const double decomposed = (1.0 - eps) * smoothed_cross_entropy(p, q, 0.0) +
                              eps * smoothed_cross_entropy(u, q, 0.0);
    CHECK(std::abs(combined - decomposed) < 1e-12);
  }
}

TEST_CASE("nbest parser handles a single line") {
  std::istringstream in("u1\t1\ta b c\n");
  const NBestCollection c = parse_nbest_file(in);
  REQUIRE(c.size() == 1);
  const NBestSet* set = c.find("u1");
  REQUIRE(set != nullptr);
  REQUIRE(set->hypotheses.size() == 1);
  CHECK(set->hypotheses[0].tokens == tokens({"a", "b", "c"}));
  CHECK_FALSE(set->hypotheses[0].score.has_value());
}

TEST_CASE("nbest parser keeps hypothesis order and scores") {
  std::istringstream in(
      "# decoder output\n"
      "u1\t1\tfirst guess\t-1.5\n"
      "u1\t2\tsecond guess\t-2.25\n"
      "\n"
      "u2\t1\tother\n");
  const NBestCollection c = parse_nbest_file(in);
  REQUIRE(c.size() == 2);
  const NBestSet* u1 = c.find("u1");
  REQUIRE(u1 != nullptr);
  REQUIRE(u1->hypotheses.size() == 2);
  CHECK(u1->hypotheses[0].tokens == tokens({"first", "guess"}));
  CHECK(u1->hypotheses[0].score == doctest::Approx(-1.5));
  CHECK(u1->hypotheses[1].score == doctest::Approx(-2.25));
  CHECK(c.find("u3") == nullptr);
}

TEST_CASE("nbest parser reports malformed input with line numbers") {
  SUBCASE("missing rank 1") {
    std::istringstream in("u1\t2\ta\n");
    CHECK_THROWS_WITH_AS(parse_nbest_file(in),
                         doctest::Contains("non-contiguous"), ParseError);
  }
  SUBCASE("duplicate rank") {
    std::istringstream in("u1\t1\ta\nu1\t1\tb\n");
    CHECK_THROWS_WITH_AS(parse_nbest_file(in), doctest::Contains("line 2"),
                         ParseError);
  }
  SUBCASE("bad rank token") {
    std::istringstream in("u1\tx\ta\n");
    CHECK_THROWS_WITH_AS(parse_nbest_file(in), doctest::Contains("rank"),
                         ParseError);
  }
  SUBCASE("empty hypothesis") {
    std::istringstream in("u1\t1\t\n");
    CHECK_THROWS_WITH_AS(parse_nbest_file(in),
                         doctest::Contains("empty hypothesis"), ParseError);
  }
  SUBCASE("too many fields") {
    std::istringstream in("u1\t1\ta\t1.0\textra\n");
    CHECK_THROWS_AS(parse_nbest_file(in), ParseError);
  }
}

TEST_CASE("nbest parse-serialize-parse is a fixed point") {
  std::ostringstream source;
  source << "# header comment\n";
  // The sample transcript block plus synthetic entries with scores.
  for (int i = 0; i < 5; ++i) {
    source << "sample\t" << (i + 1) << '\t' << kSampleHyps[i] << '\n';
  }
  RandomStream rng(606);
  for (int u = 0; u < 49; ++u) {
    const int hyps = static_cast<int>(rng.next_int_inclusive(1, 6));
    for (int r = 1; r <= hyps; ++r) {
      source << "utt" << u << '\t' << r << "\tword" << r << " tail";
      if (u % 2 == 0) {
        source << '\t' << (rng.next_unit_real() * -10.0);
      }
      source << '\n';
    }
  }

  std::istringstream first_in(source.str());
  const NBestCollection parsed = parse_nbest_file(first_in);
  REQUIRE(parsed.size() == 50);

  std::ostringstream serialized;
  serialize_nbest(parsed, serialized);
  std::istringstream second_in(serialized.str());
  const NBestCollection reparsed = parse_nbest_file(second_in);
  CHECK(parsed == reparsed);

  std::ostringstream serialized_again;
  serialize_nbest(reparsed, serialized_again);
  CHECK(serialized.str() == serialized_again.str());
}
