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

#include "rkcd/errors.hpp"
#include "rkcd/json_io.hpp"
#include "rkcd/model_zoo.hpp"

using namespace rkcd;

namespace {

std::string parse_message(const std::string& text) {
  try {
    kernel_from_json(parse_json(text, "k.json"));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Json, KernelRoundTripIsBitwise) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const KernelSeries k = random_psd_kernel(3, 4, 5, seed);
    const KernelSeries back = kernel_from_json(parse_json(kernel_to_json(k).dump()));
    ASSERT_EQ(back.rank(), 3);
    ASSERT_EQ(back.degree(), 5);
    for (int m = 0; m <= 5; ++m)
      for (int q = 0; q <= 5; ++q) EXPECT_EQ(back.coeff(m, q), k.coeff(m, q));
    EXPECT_EQ(kernel_to_json(back).dump(), kernel_to_json(k).dump());
  }
}

TEST(Json, HoloRoundTripIsBitwise) {
  const HoloSeries h = random_holo(2, 6, 3);
  const HoloSeries back = holo_from_json(parse_json(holo_to_json(h).dump()));
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(back.coeff(m), h.coeff(m));
}

TEST(Json, ZeroCoefficientsOmitted) {
  EXPECT_EQ(kernel_to_json(szego_kernel(4))["coefficients"].size(), 5u);
}

TEST(Json, HoloAcceptsRank) {
  const HoloSeries h =
      holo_from_json(parse_json(R"({"rank": 1, "degree": 1, "coefficients": [{"m": 1, "matrix": [[[2, 0]]]}]})"));
  EXPECT_EQ(h.coeff(1)(0, 0), Complex(2.0));
  EXPECT_EQ(h.coeff(0)(0, 0), Complex(0.0));
}

TEST(Json, SyntaxErrorNamesLineAndColumn) {
  const std::string msg = parse_message("{\n  \"rank\": 1,\n  \"degree\": ,\n}");
  EXPECT_NE(msg.find("k.json"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Json, FieldErrorsNamePath) {
  EXPECT_NE(parse_message(R"({"degree": 1, "coefficients": []})").find("rank"), std::string::npos);
  const std::string bad_entry =
      parse_message(R"({"rank": 1, "degree": 1, "coefficients": [{"m": 0, "q": 0, "matrix": [[1]]}]})");
  EXPECT_NE(bad_entry.find("coefficients[0].matrix"), std::string::npos) << bad_entry;
  const std::string out_of_box =
      parse_message(R"({"rank": 1, "degree": 1, "coefficients": [{"m": 2, "q": 0, "matrix": [[[1, 0]]]}]})");
  EXPECT_NE(out_of_box.find("coefficients[0]"), std::string::npos) << out_of_box;
}

TEST(Json, VerdictFields) {
  const Json j = verdict_to_json(are_equivalent(szego_kernel(4), szego_kernel(4), 0));
  EXPECT_EQ(j["verdict"], "equivalent");
  EXPECT_TRUE(j["equivalent"].get<bool>());
  EXPECT_TRUE(j.contains("witness"));
  const Json n = verdict_to_json(are_equivalent(szego_kernel(4), bergman_kernel(4), 0));
  EXPECT_FALSE(n["equivalent"].get<bool>());
  EXPECT_FALSE(n.contains("witness"));
}

TEST(Json, GeneratorSpec) {
  const GeneratorSpec s =
      generator_spec_from_json(parse_json(R"({"kind": "disguised", "components": ["szego*2"], "seed": 4})"));
  EXPECT_EQ(s.kind, GeneratorKind::Disguised);
  EXPECT_EQ(s.seed, 4u);
  EXPECT_EQ(s.degree, 8);
  EXPECT_THROW(generator_spec_from_json(parse_json(R"({"kind": "nope"})")), Error);
}
