// Copyright 2026 The relbound authors.
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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "relbound.h"

namespace {

struct Owned {
  rb_channel* w = nullptr;
  ~Owned() { rb_channel_free(w); }
};

const char kTw3Json[] = R"({
  "input": 3, "output": 3,
  "rows": [["3/4", "1/4", 0], [0, "3/4", "1/4"], ["1/4", 0, "3/4"]]
})";

TEST_CASE("version and error state basics") {
  CHECK(std::strcmp(rb_version(), "0.1.0") == 0);
  rb_string_free(nullptr);   // must be safe
  rb_channel_free(nullptr);  // must be safe
}

TEST_CASE("channel construction and inspection through the C API") {
  Owned c;
  REQUIRE(rb_channel_from_json(kTw3Json, &c.w) == RB_OK);
  CHECK(rb_channel_input_size(c.w) == 3);
  CHECK(rb_channel_output_size(c.w) == 3);

  char* entry = nullptr;
  REQUIRE(rb_channel_entry(c.w, 0, 0, &entry) == RB_OK);
  CHECK(std::string(entry) == "3/4");
  rb_string_free(entry);

  char* json = nullptr;
  REQUIRE(rb_channel_to_json(c.w, &json) == RB_OK);
  CHECK(std::string(json).find("rows") != std::string::npos);
  Owned back;
  CHECK(rb_channel_from_json(json, &back.w) == RB_OK);
  rb_string_free(json);

  int confusable = -1;
  REQUIRE(rb_confusable(c.w, 0, 1, &confusable) == RB_OK);
  CHECK(confusable == 1);

  char* text = nullptr;
  REQUIRE(rb_confusability_text(c.w, &text) == RB_OK);
  CHECK(std::string(text).find("0:") != std::string::npos);
  rb_string_free(text);
}

TEST_CASE("factories mirror the core constructors") {
  Owned tw;
  REQUIRE(rb_channel_typewriter(5, "1/2", &tw.w) == RB_OK);
  CHECK(rb_channel_input_size(tw.w) == 5);

  Owned id;
  REQUIRE(rb_channel_identity(2, &id.w) == RB_OK);

  Owned bsc;
  REQUIRE(rb_channel_binary_symmetric("1/10", &bsc.w) == RB_OK);
  char* p01 = nullptr;
  REQUIRE(rb_channel_entry(bsc.w, 0, 1, &p01) == RB_OK);
  CHECK(std::string(p01) == "1/10");
  rb_string_free(p01);

  Owned prod;
  REQUIRE(rb_channel_kronecker(id.w, tw.w, 0, &prod.w) == RB_OK);
  CHECK(rb_channel_input_size(prod.w) == 10);

  Owned ext;
  CHECK(rb_channel_extension(tw.w, 6, 0, &ext.w) == RB_ERR_SIZE);
  CHECK(std::string(rb_last_error()).find("cap") != std::string::npos);

  CHECK(rb_channel_typewriter(3, "2/3", &tw.w) == RB_ERR_VALIDATION);
  CHECK(rb_channel_typewriter(3, "garbage", &tw.w) == RB_ERR_PARSE);
}

TEST_CASE("error codes map one to one") {
  rb_channel* w = nullptr;
  CHECK(rb_channel_from_json("{ not json", &w) == RB_ERR_PARSE);
  CHECK(std::strlen(rb_last_error()) > 0);

  CHECK(rb_channel_from_json(R"({
    "input": 1, "output": 2, "rows": [["1/2", "1/3"]]
  })",
                             &w) == RB_ERR_VALIDATION);
  CHECK(std::string(rb_last_error()).find("row 0") != std::string::npos);

  CHECK(rb_channel_from_json(nullptr, &w) == RB_ERR_NULL);
  CHECK(rb_channel_from_json(kTw3Json, nullptr) == RB_ERR_NULL);
  CHECK(rb_channel_input_size(nullptr) == 0);

  Owned c;
  REQUIRE(rb_channel_from_json(kTw3Json, &c.w) == RB_OK);
  char* s = nullptr;
  CHECK(rb_channel_entry(c.w, 5, 0, &s) == RB_ERR_INDEX);

  double out = 0.0;
  Owned flat;
  REQUIRE(rb_channel_from_json(R"({
    "input": 2, "output": 2, "rows": [["1/2","1/2"],["1/2","1/2"]]
  })",
                               &flat.w) == RB_OK);
  CHECK(rb_r_crit(flat.w, &out) == RB_ERR_DOMAIN);
}

TEST_CASE("exact quantities return psi strings and rates") {
  Owned c;
  REQUIRE(rb_channel_from_json(kTw3Json, &c.w) == RB_OK);

  char* psi = nullptr;
  double rate = 0.0;
  REQUIRE(rb_r_inf(c.w, &psi, &rate) == RB_OK);
  CHECK(std::string(psi) == "2/3");
  CHECK(rate == doctest::Approx(0.5849625007211562).epsilon(1e-14));
  rb_string_free(psi);

  psi = nullptr;
  REQUIRE(rb_psi_fb(c.w, &psi, nullptr) == RB_OK);  // either output optional
  CHECK(std::string(psi) == "2/3");
  rb_string_free(psi);
  REQUIRE(rb_r_inf(c.w, nullptr, &rate) == RB_OK);

  REQUIRE(rb_c0_fb(c.w, nullptr, &rate) == RB_OK);
  CHECK(rate == 0.0);

  double cap = 0.0;
  REQUIRE(rb_capacity(c.w, &cap) == RB_OK);
  CHECK(cap == doctest::Approx(0.7736843762620232).epsilon(1e-6));
}

TEST_CASE("bound evaluations through the C API") {
  Owned bsc;
  REQUIRE(rb_channel_binary_symmetric("1/10", &bsc.w) == RB_OK);

  double er = 0.0;
  REQUIRE(rb_e_r(bsc.w, 0.01, &er) == RB_OK);
  CHECK(er == doctest::Approx(0.3119280948873623).epsilon(1e-6));

  int infinite = 0;
  double value = 0.0;
  REQUIRE(rb_e_sp(bsc.w, 0.3, 0.0, &infinite, &value) == RB_OK);
  CHECK(infinite == 0);
  CHECK(value == doctest::Approx(0.05206262241505699).epsilon(1e-6));

  Owned tw5;
  REQUIRE(rb_channel_typewriter(5, "1/2", &tw5.w) == RB_OK);
  REQUIRE(rb_e_sp(tw5.w, 1.0, 0.0, &infinite, &value) == RB_OK);
  CHECK(infinite == 1);

  REQUIRE(rb_e_ex(bsc.w, 0.01, 1, 0.0, &infinite, &value) == RB_OK);
  CHECK(infinite == 0);
  CHECK(value == doctest::Approx(0.3251474594644006).epsilon(1e-5));
  CHECK(rb_e_ex(bsc.w, 0.01, 1, 1.5, &infinite, &value) == RB_ERR_RHO_CAP);

  double rc = 0.0;
  REQUIRE(rb_r_crit(bsc.w, &rc) == RB_OK);
  CHECK(rc == doctest::Approx(0.18872187554086717).epsilon(1e-4));

  long alpha = 0;
  double rate = 0.0;
  REQUIRE(rb_r_ex(tw5.w, 2, &alpha, &rate) == RB_OK);
  CHECK(alpha == 5);
  CHECK(rate == doctest::Approx(1.160964047443681).epsilon(1e-12));

  REQUIRE(rb_c0_lower(tw5.w, 2, &alpha, &rate) == RB_OK);
  CHECK(alpha == 5);

  int positive = 0;
  REQUIRE(rb_c0_positive(tw5.w, &positive) == RB_OK);
  CHECK(positive == 1);
}

TEST_CASE("approximation sequence C API") {
  Owned c;
  REQUIRE(rb_channel_from_json(kTw3Json, &c.w) == RB_OK);

  char* phi = nullptr;
  double value = 0.0;
  REQUIRE(rb_f_n(c.w, 1, &phi, &value) == RB_OK);
  CHECK(std::strchr(phi, '/') != nullptr);
  rb_string_free(phi);
  CHECK(value > 0.5849625007211562);

  char* bound = nullptr;
  double bval = 0.0;
  REQUIRE(rb_phi_error_bound(c.w, 12, &bound, &bval) == RB_OK);
  CHECK(std::string(bound) == "1/4");
  CHECK(bval == doctest::Approx(0.25).epsilon(1e-14));
  rb_string_free(bound);

  double u = 0.0, v = 0.0;
  REQUIRE(rb_u_n(c.w, 3, &u) == RB_OK);
  REQUIRE(rb_v_n(c.w, 3, &v) == RB_OK);
  CHECK(v < u);
  CHECK(v > 0.0);

  char* csv = nullptr;
  REQUIRE(rb_approx_trace_csv(c.w, RB_QUANTITY_R_INF, 4, &csv) == RB_OK);
  CHECK(std::string(csv).rfind("N,value,error_bound,target", 0) == 0);
  rb_string_free(csv);

  int accepted = 0, at_n = 0;
  REQUIRE(rb_semi_decide_below(c.w, RB_QUANTITY_R_INF, 0.7, 100, &accepted,
                               &at_n) == RB_OK);
  CHECK(accepted == 1);
  CHECK(at_n >= 1);

  REQUIRE(rb_semi_decide_below(c.w, RB_QUANTITY_R_INF, 0.5, 50, &accepted,
                               &at_n) == RB_OK);
  CHECK(accepted == 0);
  CHECK(at_n == 0);

  CHECK(rb_semi_decide_below(c.w, RB_QUANTITY_R_INF, -1.0, 50, &accepted,
                             &at_n) == RB_ERR_VALIDATION);
  CHECK(rb_semi_decide_below(c.w, 99, 0.7, 50, &accepted, &at_n) ==
        RB_ERR_VALIDATION);
}

}  // namespace
