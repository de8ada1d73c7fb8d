/*
* Copyright 2026 The hgff Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hgff/commands.hpp"
#include "hgff/errors.hpp"

using namespace hgff;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("golden") {

TEST_CASE("fixtures match the checked-in files") {
    auto fx = golden_fixtures();
    json manifest = json::parse(slurp(std::string(HGFF_GOLDEN_DIR) + "/MANIFEST.json"));
    REQUIRE(manifest.size() == fx.size());
    for (size_t i = 0; i < fx.size(); ++i) {
        const auto& [name, payload] = fx[i];
        INFO(name);
        CHECK(manifest[i] == name);
        std::string want = slurp(std::string(HGFF_GOLDEN_DIR) + "/" + name + ".json");
        CHECK(dump(payload) + "\n" == want);
    }
}

TEST_CASE("fixtures are deterministic") {
    auto a = golden_fixtures(), b = golden_fixtures();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(dump(a[i].second) == dump(b[i].second));
}

TEST_CASE("json round trips") {
    auto F = build_field_q(9);
    json g = cmd_gauss(F, "w^1", true);
    CycloNum v = cyclo_from_json(g["value"]);
    CHECK(cyclo_json(v) == g["value"]);
    json t = json::parse(R"({"a": 1, "elapsed_ms": 3, "b": [{"elapsed_ms": 1, "c": 2}]})");
    CHECK(dump(strip_timing(t)) == dump(json::parse(R"({"a": 1, "b": [{"c": 2}]})")));
}

TEST_CASE("argument helpers") {
    auto F = build_field_q(9);
    CHECK(parse_lambda(*F, "3") == std::vector<int>{3});
    CHECK(parse_lambda(*F, "2,5") == std::vector<int>{2, 5});
    CHECK(parse_lambda(*F, "all").size() == 9);
    CHECK(parse_lambda(*F, "all", true).size() == 7);
    CHECK(parse_lambda(*F, "g^0") == std::vector<int>{1});
    CHECK_THROWS_AS(parse_lambda(*F, "9"), UsageError);
    CHECK(parse_q_list("3,4,25") == std::vector<int64_t>{3, 4, 25});
    CHECK_THROWS_AS(parse_q_list("6"), UsageError);
    CHECK_THROWS_AS(parse_q_list("x"), UsageError);
    CHECK(split_csv(" a,b,, c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(char_name_ok("w^-3"));
    CHECK(char_name_ok("sigma3"));
    CHECK_FALSE(char_name_ok("foo"));
}

TEST_CASE("verify command counts failures") {
    std::vector<FieldPtr> fs{build_field_q(7)};
    VerifyOutcome ok = cmd_verify({"EULER_GAUSS", "SAALSCHUTZ"}, fs, VerifyMode{}, 1);
    CHECK(ok.failed == 0);
    VerifyOutcome bad = cmd_verify({"EULER_GAUSS"}, fs, VerifyMode{}, 1, 5);
    CHECK(bad.failed == 1);
    CHECK_THROWS_AS(cmd_verify({"NOPE"}, fs, VerifyMode{}, 1), UnknownIdentity);
}

}
