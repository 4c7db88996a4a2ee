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

#include "relbound.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "core/approx.hpp"
#include "core/channel.hpp"
#include "core/channel_json.hpp"
#include "core/errors.hpp"
#include "core/expurgation.hpp"
#include "core/gallager.hpp"
#include "core/game.hpp"
#include "core/zero_error.hpp"

struct rb_channel {
  relbound::Channel channel;
};

namespace {

thread_local std::string g_last_error = "no error";

rb_status status_of(relbound::ErrorCode code) {
  using relbound::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return RB_ERR_PARSE;
    case ErrorCode::kValidation:
      return RB_ERR_VALIDATION;
    case ErrorCode::kSize:
      return RB_ERR_SIZE;
    case ErrorCode::kIndex:
      return RB_ERR_INDEX;
    case ErrorCode::kDomain:
      return RB_ERR_DOMAIN;
    case ErrorCode::kNonConvergence:
      return RB_ERR_NONCONVERGENCE;
    case ErrorCode::kRhoCap:
      return RB_ERR_RHO_CAP;
    case ErrorCode::kBudget:
      return RB_ERR_BUDGET;
  }
  return RB_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes + the thread-local
// message.
template <typename Fn>
rb_status guarded(Fn&& fn) {
  try {
    fn();
    return RB_OK;
  } catch (const relbound::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RB_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rb_status require(const void* p) {
  if (p != nullptr) return RB_OK;
  g_last_error = "required argument is NULL";
  return RB_ERR_NULL;
}

relbound::RhoSearchConfig config_with_cap(double rho_cap) {
  relbound::RhoSearchConfig cfg;
  if (rho_cap > 0.0) cfg.rho_cap = rho_cap;
  return cfg;
}

long effective_cap(long size_cap) {
  return size_cap > 0 ? size_cap : relbound::kDefaultSizeCap;
}

relbound::ApproxQuantity quantity_of(int quantity) {
  if (quantity == RB_QUANTITY_R_INF) return relbound::ApproxQuantity::kRInf;
  if (quantity == RB_QUANTITY_C0_FB) return relbound::ApproxQuantity::kC0Fb;
  throw relbound::ValidationError("unknown quantity selector " +
                                  std::to_string(quantity));
}

void exact_rate_out(const relbound::ExactLogRate& r, char** psi_out,
                    double* rate_out) {
  if (psi_out != nullptr) {
    *psi_out = copy_string(relbound::rat_to_string(r.psi));
  }
  if (rate_out != nullptr) *rate_out = r.rate;
}

}  // namespace

extern "C" {

const char* rb_last_error(void) { return g_last_error.c_str(); }

const char* rb_version(void) { return "0.1.0"; }

void rb_string_free(char* s) { delete[] s; }

rb_status rb_channel_from_json(const char* json_text, rb_channel** out) {
  if (rb_status st = require(json_text); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = new rb_channel{relbound::channel_from_json(json_text)};
  });
}

rb_status rb_channel_to_json(const rb_channel* w, char** json_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(json_out); st != RB_OK) return st;
  return guarded([&] {
    *json_out = copy_string(relbound::channel_to_json(w->channel));
  });
}

rb_status rb_channel_identity(int n, rb_channel** out) {
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = new rb_channel{relbound::Channel::identity(n)};
  });
}

rb_status rb_channel_typewriter(int q, const char* epsilon, rb_channel** out) {
  if (rb_status st = require(epsilon); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = new rb_channel{
        relbound::Channel::typewriter(q, relbound::parse_rational(epsilon))};
  });
}

rb_status rb_channel_binary_symmetric(const char* crossover,
                                      rb_channel** out) {
  if (rb_status st = require(crossover); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = new rb_channel{relbound::Channel::binary_symmetric(
        relbound::parse_rational(crossover))};
  });
}

rb_status rb_channel_kronecker(const rb_channel* a, const rb_channel* b,
                               long size_cap, rb_channel** out) {
  if (rb_status st = require(a); st != RB_OK) return st;
  if (rb_status st = require(b); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = new rb_channel{relbound::kronecker(a->channel, b->channel,
                                              effective_cap(size_cap))};
  });
}

rb_status rb_channel_extension(const rb_channel* w, int n, long size_cap,
                               rb_channel** out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = new rb_channel{
        relbound::extension(w->channel, n, effective_cap(size_cap))};
  });
}

void rb_channel_free(rb_channel* w) { delete w; }

int rb_channel_input_size(const rb_channel* w) {
  return w ? w->channel.input_size() : 0;
}

int rb_channel_output_size(const rb_channel* w) {
  return w ? w->channel.output_size() : 0;
}

rb_status rb_channel_entry(const rb_channel* w, int x, int y, char** out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = copy_string(relbound::rat_to_string(w->channel.prob(x, y)));
  });
}

rb_status rb_confusable(const rb_channel* w, int x0, int x1, int* out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = relbound::bhattacharyya(w->channel, x0, x1).is_zero ? 0 : 1;
  });
}

rb_status rb_confusability_text(const rb_channel* w, char** out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] {
    *out = copy_string(
        relbound::confusability_graph(w->channel).to_adjacency_text());
  });
}

rb_status rb_r_inf(const rb_channel* w, char** psi_out, double* rate_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    exact_rate_out(relbound::psi_inf(w->channel), psi_out, rate_out);
  });
}

rb_status rb_psi_fb(const rb_channel* w, char** psi_out, double* rate_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    exact_rate_out(relbound::psi_fb(w->channel), psi_out, rate_out);
  });
}

rb_status rb_c0_fb(const rb_channel* w, char** psi_out, double* rate_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    exact_rate_out(relbound::c0_fb(w->channel), psi_out, rate_out);
  });
}

rb_status rb_capacity(const rb_channel* w, double* out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] { *out = relbound::capacity(w->channel); });
}

rb_status rb_r_crit(const rb_channel* w, double* out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] { *out = relbound::r_crit(w->channel); });
}

rb_status rb_e_r(const rb_channel* w, double rate, double* out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] { *out = relbound::e_r(w->channel, rate); });
}

rb_status rb_e_sp(const rb_channel* w, double rate, double rho_cap,
                  int* is_infinite, double* value) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(is_infinite); st != RB_OK) return st;
  if (rb_status st = require(value); st != RB_OK) return st;
  return guarded([&] {
    relbound::BoundValue b =
        relbound::e_sp(w->channel, rate, config_with_cap(rho_cap));
    *is_infinite = b.infinite ? 1 : 0;
    *value = b.value;
  });
}

rb_status rb_e_ex(const rb_channel* w, double rate, int k, double rho_cap,
                  int* is_infinite, double* value) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(is_infinite); st != RB_OK) return st;
  if (rb_status st = require(value); st != RB_OK) return st;
  return guarded([&] {
    relbound::ExpurgationResult r =
        relbound::e_ex(w->channel, rate, k, config_with_cap(rho_cap));
    *is_infinite = r.value.infinite ? 1 : 0;
    *value = r.value.value;
  });
}

rb_status rb_r_ex(const rb_channel* w, int k, long* alpha_out,
                  double* rate_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    relbound::ExpurgationRate r = relbound::r_ex(w->channel, k);
    if (alpha_out != nullptr) *alpha_out = r.alpha;
    if (rate_out != nullptr) *rate_out = r.rate;
  });
}

rb_status rb_c0_lower(const rb_channel* w, int n, long* alpha_out,
                      double* rate_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    relbound::ZeroErrorLowerBound b = relbound::c0_lower(w->channel, n);
    if (alpha_out != nullptr) *alpha_out = b.alpha;
    if (rate_out != nullptr) *rate_out = b.rate;
  });
}

rb_status rb_c0_positive(const rb_channel* w, int* out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(out); st != RB_OK) return st;
  return guarded([&] { *out = relbound::c0_positive(w->channel) ? 1 : 0; });
}

rb_status rb_f_n(const rb_channel* w, int n, char** phi_out, double* value) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    relbound::Rat phi = relbound::phi_n_exact(w->channel, n);
    if (phi_out != nullptr) *phi_out = copy_string(relbound::rat_to_string(phi));
    if (value != nullptr) *value = relbound::rat_log2(1 / phi);
  });
}

rb_status rb_phi_error_bound(const rb_channel* w, int n, char** bound_out,
                             double* value) {
  if (rb_status st = require(w); st != RB_OK) return st;
  return guarded([&] {
    relbound::Rat bound = relbound::phi_error_bound_exact(w->channel, n);
    if (bound_out != nullptr) {
      *bound_out = copy_string(relbound::rat_to_string(bound));
    }
    if (value != nullptr) *value = relbound::rat_to_double(bound);
  });
}

rb_status rb_u_n(const rb_channel* w, int n, double* value) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(value); st != RB_OK) return st;
  return guarded([&] { *value = relbound::u_n(w->channel, n); });
}

rb_status rb_v_n(const rb_channel* w, int n, double* value) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(value); st != RB_OK) return st;
  return guarded([&] { *value = relbound::v_n(w->channel, n); });
}

rb_status rb_approx_trace_csv(const rb_channel* w, int quantity, int n_max,
                              char** csv_out) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(csv_out); st != RB_OK) return st;
  return guarded([&] {
    relbound::ApproxTrace t =
        relbound::build_trace(w->channel, quantity_of(quantity), n_max);
    *csv_out = copy_string(relbound::trace_to_csv(t));
  });
}

rb_status rb_semi_decide_below(const rb_channel* w, int quantity,
                               double lambda, int budget, int* accepted,
                               int* at_n) {
  if (rb_status st = require(w); st != RB_OK) return st;
  if (rb_status st = require(accepted); st != RB_OK) return st;
  if (rb_status st = require(at_n); st != RB_OK) return st;
  return guarded([&] {
    relbound::SemiDecision d = relbound::semi_decide_below(
        w->channel, lambda, quantity_of(quantity), budget);
    *accepted = d.accepted ? 1 : 0;
    *at_n = d.accepted_at;
  });
}

}  // extern "C"
