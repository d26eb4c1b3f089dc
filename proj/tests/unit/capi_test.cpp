/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "rkcd/rkcd.h"

namespace {

rkcd_kernel* generate(const char* spec) {
  rkcd_kernel* k = nullptr;
  EXPECT_EQ(rkcd_generate(spec, &k, nullptr), RKCD_OK) << rkcd_last_error();
  return k;
}

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  rkcd_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, KernelLifecycle) {
  rkcd_kernel* k = generate(R"({"kind": "szego", "degree": 3})");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(rkcd_kernel_rank(k), 1);
  EXPECT_EQ(rkcd_kernel_degree(k), 3);
  double v[2];
  ASSERT_EQ(rkcd_kernel_eval(k, 0.5, 0.0, 0.5, 0.0, 0.9, v), RKCD_OK);
  EXPECT_NEAR(v[0], 1.328125, 1e-15);
  EXPECT_EQ(rkcd_kernel_eval(k, 0.95, 0.0, 0.0, 0.0, 0.9, v), RKCD_INVALID_ARGUMENT);

  char* json = nullptr;
  ASSERT_EQ(rkcd_kernel_to_json(k, &json), RKCD_OK);
  rkcd_kernel* back = nullptr;
  ASSERT_EQ(rkcd_kernel_from_json(json, &back), RKCD_OK);
  char* json2 = nullptr;
  ASSERT_EQ(rkcd_kernel_to_json(back, &json2), RKCD_OK);
  EXPECT_STREQ(json, json2);
  rkcd_string_free(json);
  rkcd_string_free(json2);
  rkcd_kernel_free(back);
  rkcd_kernel_free(k);
}

TEST(CApi, ParseErrorsReported) {
  rkcd_kernel* k = nullptr;
  EXPECT_EQ(rkcd_kernel_from_json("{\"rank\": 1,", &k), RKCD_PARSE_ERROR);
  EXPECT_EQ(k, nullptr);
  EXPECT_NE(std::strstr(rkcd_last_error(), "line"), nullptr);
  EXPECT_EQ(rkcd_kernel_from_json(nullptr, &k), RKCD_INVALID_ARGUMENT);
  EXPECT_STREQ(rkcd_status_string(RKCD_OK), "ok");
}

TEST(CApi, ValidateAndNormalize) {
  rkcd_kernel* k = generate(R"({"kind": "random-psd", "rank": 2, "degree": 4, "seed": 3})");
  int passed = 0;
  ASSERT_EQ(rkcd_validate(k, nullptr, &passed, nullptr), RKCD_OK);
  EXPECT_EQ(passed, 1);
  rkcd_kernel* n = nullptr;
  rkcd_holo* g = nullptr;
  ASSERT_EQ(rkcd_normalize(k, nullptr, &n, &g), RKCD_OK);
  rkcd_kernel* again = nullptr;
  ASSERT_EQ(rkcd_congruence(g, k, g, &again), RKCD_OK);
  double a[8], b[8];
  rkcd_kernel_eval(n, 0.3, 0.1, -0.2, 0.4, 0.9, a);
  rkcd_kernel_eval(again, 0.3, 0.1, -0.2, 0.4, 0.9, b);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  rkcd_kernel_free(again);
  rkcd_holo_free(g);
  rkcd_kernel_free(n);
  rkcd_kernel_free(k);
}

TEST(CApi, CurvatureInvariant) {
  rkcd_kernel* k = generate(R"({"kind": "bergman", "degree": 8})");
  char* out = nullptr;
  ASSERT_EQ(rkcd_curvature(k, 1, RKCD_METRIC_DIRECT, nullptr, &out), RKCD_OK);
  const auto j = nlohmann::json::parse(take(out));
  EXPECT_NEAR(j["invariants_at_origin"][0][0].get<double>(), -2.0, 1e-12);
  rkcd_kernel_free(k);
}

TEST(CApi, DecomposeEquivalentStructure) {
  rkcd_kernel* a = generate(R"({"kind": "direct-sum", "components": ["szego", "bergman"], "degree": 6})");
  rkcd_kernel* b = generate(R"({"kind": "direct-sum", "components": ["bergman", "szego"], "degree": 6})");
  char* dec = nullptr;
  ASSERT_EQ(rkcd_decompose(a, 0, nullptr, &dec), RKCD_OK);
  EXPECT_EQ(nlohmann::json::parse(take(dec))["t"], 2);

  rkcd_verdict verdict = RKCD_VERDICT_FAILED;
  rkcd_holo* witness = nullptr;
  ASSERT_EQ(rkcd_equivalent(a, b, 0, nullptr, &verdict, &witness, nullptr), RKCD_OK);
  ASSERT_EQ(verdict, RKCD_EQUIVALENT);
  ASSERT_NE(witness, nullptr);

  const int part[2] = {1, 1};
  int passed = 0;
  char* report = nullptr;
  ASSERT_EQ(rkcd_structure(witness, part, 2, part, 2, nullptr, &passed, &report), RKCD_OK);
  EXPECT_EQ(passed, 1);
  const auto j = nlohmann::json::parse(take(report));
  EXPECT_NEAR(j["C"][0][1].get<double>(), 1.0, 1e-9);

  rkcd_holo* psi = nullptr;
  ASSERT_EQ(rkcd_holo_invert(witness, &psi), RKCD_OK);
  int holds = 0;
  double residual = 1.0;
  ASSERT_EQ(rkcd_kk1_check(a, b, psi, nullptr, &holds, &residual), RKCD_OK);
  EXPECT_EQ(holds, 1);
  EXPECT_LE(residual, 1e-9);

  rkcd_holo_free(psi);
  rkcd_holo_free(witness);
  rkcd_kernel_free(b);
  rkcd_kernel_free(a);
}

TEST(CApi, NotEquivalentAndRankMismatch) {
  rkcd_kernel* s = generate(R"({"kind": "szego"})");
  rkcd_kernel* b = generate(R"({"kind": "bergman"})");
  rkcd_kernel* two = generate(R"({"kind": "direct-sum", "components": ["szego*2"]})");
  rkcd_verdict verdict = RKCD_EQUIVALENT;
  rkcd_holo* witness = nullptr;
  ASSERT_EQ(rkcd_equivalent(s, b, 0, nullptr, &verdict, &witness, nullptr), RKCD_OK);
  EXPECT_EQ(verdict, RKCD_NOT_EQUIVALENT);
  EXPECT_EQ(witness, nullptr);
  EXPECT_EQ(rkcd_equivalent(s, two, 0, nullptr, &verdict, nullptr, nullptr), RKCD_RANK_MISMATCH);
  rkcd_kernel_free(two);
  rkcd_kernel_free(b);
  rkcd_kernel_free(s);
}

TEST(CApi, GenerateTruth) {
  rkcd_kernel* k = nullptr;
  char* truth = nullptr;
  ASSERT_EQ(rkcd_generate(R"({"kind": "disguised", "components": ["szego*2", "bergman"], "seed": 7})", &k, &truth),
            RKCD_OK);
  EXPECT_EQ(nlohmann::json::parse(take(truth))["t"], 2);
  rkcd_kernel_free(k);
}

TEST(CApi, DefaultTolerances) {
  rkcd_tolerances t;
  rkcd_default_tolerances(&t);
  EXPECT_EQ(t.tau_zero, 1e-9);
  EXPECT_EQ(t.delta_gap, 1e-6);
}
