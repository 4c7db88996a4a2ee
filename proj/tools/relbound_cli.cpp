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

// Command-line front end; talks to the library exclusively through the C API.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "relbound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSize = 4;
constexpr int kExitUndetermined = 10;

int exit_code_of(rb_status st) {
  switch (st) {
    case RB_OK:
      return kExitOk;
    case RB_ERR_PARSE:
      return kExitParse;
    case RB_ERR_VALIDATION:
      return kExitValidation;
    case RB_ERR_SIZE:
      return kExitSize;
    default:
      return kExitFailure;
  }
}

[[noreturn]] void die(rb_status st) {
  std::cerr << "error: " << rb_last_error() << "\n";
  std::exit(exit_code_of(st));
}

struct ChannelDeleter {
  void operator()(rb_channel* w) const { rb_channel_free(w); }
};
using ChannelPtr = std::unique_ptr<rb_channel, ChannelDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rb_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

ChannelPtr load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitParse);
  }
  std::ostringstream text;
  text << in.rdbuf();
  rb_channel* w = nullptr;
  rb_status st = rb_channel_from_json(text.str().c_str(), &w);
  if (st != RB_OK) die(st);
  return ChannelPtr(w);
}

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// "2/3 (~ 0.666666666667)"
std::string fmt_exact(const char* psi) {
  double approx = 0.0;
  std::string s(psi);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    approx = std::strtod(s.c_str(), nullptr);
  } else {
    approx = std::strtod(s.substr(0, slash).c_str(), nullptr) /
             std::strtod(s.substr(slash + 1).c_str(), nullptr);
  }
  return s + " (~ " + fmt_real(approx) + ")";
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(kExitFailure);
  }
  out << content;
}

// ---- info ----------------------------------------------------------------

int cmd_info(const std::string& channel_path, const std::string& format,
             const std::string& out_path) {
  ChannelPtr w = load_channel(channel_path);
  const int nx = rb_channel_input_size(w.get());
  const int ny = rb_channel_output_size(w.get());

  char* psi = nullptr;
  double r_inf = 0.0;
  if (rb_status st = rb_r_inf(w.get(), &psi, &r_inf); st != RB_OK) die(st);
  CString psi_inf_s(psi);

  psi = nullptr;
  double fb_rate = 0.0;
  if (rb_status st = rb_psi_fb(w.get(), &psi, &fb_rate); st != RB_OK) die(st);
  CString psi_fb_s(psi);

  psi = nullptr;
  double c0fb_rate = 0.0;
  if (rb_status st = rb_c0_fb(w.get(), &psi, &c0fb_rate); st != RB_OK) die(st);
  CString c0fb_psi_s(psi);

  double cap = 0.0;
  if (rb_status st = rb_capacity(w.get(), &cap); st != RB_OK) die(st);

  bool has_r_crit = false;
  double r_crit = 0.0;
  if (rb_status st = rb_r_crit(w.get(), &r_crit); st == RB_OK) {
    has_r_crit = true;
  } else if (st != RB_ERR_DOMAIN) {
    die(st);
  }

  int c0_pos = 0;
  if (rb_status st = rb_c0_positive(w.get(), &c0_pos); st != RB_OK) die(st);

  // Per-k exact thresholds while the k-th power stays within the
  // combinatorial budget (64 vertices).
  std::vector<std::pair<long, double>> rex, c0lo;
  long vertices = 1;
  for (int k = 1; k <= 2; ++k) {
    vertices *= nx;
    if (vertices > 64) break;
    long alpha = 0;
    double rate = 0.0;
    if (rb_status st = rb_r_ex(w.get(), k, &alpha, &rate); st != RB_OK) {
      die(st);
    }
    rex.push_back({alpha, rate});
    alpha = 0;
    rate = 0.0;
    if (rb_status st = rb_c0_lower(w.get(), k, &alpha, &rate); st != RB_OK) {
      die(st);
    }
    c0lo.push_back({alpha, rate});
  }

  std::ostringstream body;
  if (format == "json") {
    body << "{\n";
    body << "  \"input\": " << nx << ",\n  \"output\": " << ny << ",\n";
    body << "  \"capacity\": " << fmt_real(cap) << ",\n";
    body << "  \"psi_inf\": \"" << psi_inf_s.get() << "\",\n";
    body << "  \"r_inf\": " << fmt_real(r_inf) << ",\n";
    body << "  \"psi_fb\": \"" << psi_fb_s.get() << "\",\n";
    body << "  \"c0_fb_psi\": \"" << c0fb_psi_s.get() << "\",\n";
    body << "  \"c0_fb\": " << fmt_real(c0fb_rate) << ",\n";
    body << "  \"c0_positive\": " << (c0_pos ? "true" : "false") << ",\n";
    body << "  \"r_crit\": ";
    if (has_r_crit) {
      body << fmt_real(r_crit);
    } else {
      body << "null";
    }
    body << ",\n  \"r_ex\": [";
    for (std::size_t i = 0; i < rex.size(); ++i) {
      body << (i ? ", " : "") << "{\"k\": " << (i + 1) << ", \"alpha\": "
           << rex[i].first << ", \"rate\": " << fmt_real(rex[i].second) << "}";
    }
    body << "],\n  \"c0_lower\": [";
    for (std::size_t i = 0; i < c0lo.size(); ++i) {
      body << (i ? ", " : "") << "{\"n\": " << (i + 1) << ", \"alpha\": "
           << c0lo[i].first << ", \"rate\": " << fmt_real(c0lo[i].second)
           << "}";
    }
    body << "]\n}\n";
  } else if (format == "csv") {
    body << "key,value\n";
    body << "input," << nx << "\noutput," << ny << "\n";
    body << "capacity," << fmt_real(cap) << "\n";
    body << "psi_inf," << psi_inf_s.get() << "\n";
    body << "r_inf," << fmt_real(r_inf) << "\n";
    body << "psi_fb," << psi_fb_s.get() << "\n";
    body << "c0_fb," << fmt_real(c0fb_rate) << "\n";
    body << "c0_positive," << (c0_pos ? 1 : 0) << "\n";
    if (has_r_crit) body << "r_crit," << fmt_real(r_crit) << "\n";
    for (std::size_t i = 0; i < rex.size(); ++i) {
      body << "r_ex_" << (i + 1) << "," << fmt_real(rex[i].second) << "\n";
    }
    for (std::size_t i = 0; i < c0lo.size(); ++i) {
      body << "c0_lower_" << (i + 1) << "," << fmt_real(c0lo[i].second)
           << "\n";
    }
  } else {
    body << "channel            : " << nx << " inputs, " << ny << " outputs\n";
    body << "capacity           : " << fmt_real(cap) << " bits\n";
    body << "psi_inf            : " << fmt_exact(psi_inf_s.get()) << "\n";
    body << "R_inf              : " << fmt_real(r_inf) << " bits\n";
    body << "psi_fb             : " << fmt_exact(psi_fb_s.get()) << "\n";
    body << "C0_fb              : " << fmt_real(c0fb_rate) << " bits"
         << (c0_pos ? "" : "  (no non-confusable pair, C0 = 0)") << "\n";
    body << "R_crit             : "
         << (has_r_crit ? fmt_real(r_crit) + " bits"
                        : std::string("undefined (zero capacity)"))
         << "\n";
    for (std::size_t i = 0; i < rex.size(); ++i) {
      body << "r_ex (k=" << (i + 1) << ")         : alpha " << rex[i].first
           << ", rate " << fmt_real(rex[i].second) << " bits\n";
    }
    for (std::size_t i = 0; i < c0lo.size(); ++i) {
      body << "C0 lower (n=" << (i + 1) << ")     : alpha " << c0lo[i].first
           << ", rate " << fmt_real(c0lo[i].second) << " bits\n";
    }
  }
  write_output(out_path, body.str());
  return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepRow {
  double rate = 0.0;
  std::string sp, r, ex;
};

int cmd_sweep(const std::string& channel_path, double rmin, double rmax,
              double step, const std::vector<std::string>& bounds, int k,
              double rho_cap, int jobs, const std::string& out_path) {
  if (step <= 0.0 || rmax < rmin) {
    std::cerr << "error: sweep needs rmin <= rmax and step > 0\n";
    return kExitValidation;
  }
  ChannelPtr w = load_channel(channel_path);

  bool want_sp = false, want_r = false, want_ex = false;
  for (const std::string& b : bounds) {
    if (b == "sp") {
      want_sp = true;
    } else if (b == "r") {
      want_r = true;
    } else if (b == "ex") {
      want_ex = true;
    } else {
      std::cerr << "error: unknown bound \"" << b << "\" (use sp, r, ex)\n";
      return kExitValidation;
    }
  }

  std::vector<double> rates;
  for (double r = rmin; r <= rmax + 1e-12; r += step) rates.push_back(r);

  std::vector<SweepRow> rows(rates.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cap_warned{false};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rates.size()) return;
      SweepRow& row = rows[i];
      row.rate = rates[i];
      if (want_sp) {
        int inf = 0;
        double v = 0.0;
        rb_status st = rb_e_sp(w.get(), rates[i], rho_cap, &inf, &v);
        if (st == RB_OK) {
          row.sp = inf ? "inf" : fmt_real(v);
        } else if (st == RB_ERR_RHO_CAP) {
          row.sp = "nan";
          cap_warned = true;
        } else {
          die(st);
        }
      }
      if (want_r) {
        double v = 0.0;
        if (rb_status st = rb_e_r(w.get(), rates[i], &v); st != RB_OK) die(st);
        row.r = fmt_real(v);
      }
      if (want_ex) {
        int inf = 0;
        double v = 0.0;
        rb_status st = rb_e_ex(w.get(), rates[i], k, rho_cap, &inf, &v);
        if (st == RB_OK) {
          row.ex = inf ? "inf" : fmt_real(v);
        } else if (st == RB_ERR_RHO_CAP) {
          row.ex = "nan";
          cap_warned = true;
        } else {
          die(st);
        }
      }
    }
  };

  int thread_count = jobs > 0 ? jobs : static_cast<int>(
      std::thread::hardware_concurrency());
  if (thread_count < 1) thread_count = 1;
  thread_count = std::min<int>(thread_count, static_cast<int>(rates.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < thread_count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  if (cap_warned) {
    std::cerr << "warning: some rates hit the rho cap; cells written as nan\n";
  }

  std::ostringstream body;
  body << "R";
  if (want_sp) body << ",E_sp";
  if (want_r) body << ",E_r";
  if (want_ex) body << ",E_ex_" << k;
  body << "\n";
  for (const SweepRow& row : rows) {
    body << fmt_real(row.rate);
    if (want_sp) body << ',' << row.sp;
    if (want_r) body << ',' << row.r;
    if (want_ex) body << ',' << row.ex;
    body << "\n";
  }
  write_output(out_path, body.str());
  return kExitOk;
}

// ---- product ----------------------------------------------------------------

int cmd_product(const std::string& path_a, const std::string& path_b,
                long size_cap) {
  ChannelPtr a = load_channel(path_a);
  ChannelPtr b = load_channel(path_b);
  rb_channel* raw = nullptr;
  rb_status st = rb_channel_kronecker(a.get(), b.get(), size_cap, &raw);
  if (st != RB_OK) die(st);
  ChannelPtr prod(raw);

  struct Exact {
    std::string psi;
    double rate;
  };
  auto fetch = [](rb_channel* w, auto fn) {
    char* psi = nullptr;
    double rate = 0.0;
    if (rb_status s = fn(w, &psi, &rate); s != RB_OK) die(s);
    CString holder(psi);
    return Exact{holder.get(), rate};
  };

  Exact ra = fetch(a.get(), rb_r_inf);
  Exact rb = fetch(b.get(), rb_r_inf);
  Exact rp = fetch(prod.get(), rb_r_inf);
  Exact ca = fetch(a.get(), rb_c0_fb);
  Exact cb = fetch(b.get(), rb_c0_fb);
  Exact cp = fetch(prod.get(), rb_c0_fb);

  std::cout << "psi_inf A          : " << fmt_exact(ra.psi.c_str()) << "\n";
  std::cout << "psi_inf B          : " << fmt_exact(rb.psi.c_str()) << "\n";
  std::cout << "psi_inf A(x)B      : " << fmt_exact(rp.psi.c_str()) << "\n";
  std::cout << "R_inf additivity   : R_inf(A) + R_inf(B) = "
            << fmt_real(ra.rate + rb.rate) << ", R_inf(A(x)B) = "
            << fmt_real(rp.rate) << "\n";
  std::cout << "C0_fb A            : " << fmt_real(ca.rate) << " bits\n";
  std::cout << "C0_fb B            : " << fmt_real(cb.rate) << " bits\n";
  std::cout << "C0_fb A(x)B        : " << fmt_real(cp.rate) << " bits\n";
  const double slack = cp.rate - (ca.rate + cb.rate);
  if (slack > 1e-12) {
    std::cout << "C0_fb verdict      : strictly super-additive (+"
              << fmt_real(slack) << " bits)\n";
  } else {
    std::cout << "C0_fb verdict      : additive on this pair\n";
  }
  return kExitOk;
}

// ---- approx ----------------------------------------------------------------

int cmd_approx(const std::string& channel_path, const std::string& quantity,
               int n_max, const std::string& out_path) {
  ChannelPtr w = load_channel(channel_path);
  const int q = quantity == "c0_fb" ? RB_QUANTITY_C0_FB : RB_QUANTITY_R_INF;
  char* csv = nullptr;
  if (rb_status st = rb_approx_trace_csv(w.get(), q, n_max, &csv);
      st != RB_OK) {
    die(st);
  }
  CString holder(csv);
  write_output(out_path, holder.get());
  return kExitOk;
}

// ---- semidecide -------------------------------------------------------------

int cmd_semidecide(const std::string& channel_path,
                   const std::string& quantity, double lambda, int budget) {
  ChannelPtr w = load_channel(channel_path);
  const int q = quantity == "c0_fb" ? RB_QUANTITY_C0_FB : RB_QUANTITY_R_INF;
  int accepted = 0, at_n = 0;
  if (rb_status st =
          rb_semi_decide_below(w.get(), q, lambda, budget, &accepted, &at_n);
      st != RB_OK) {
    die(st);
  }
  if (accepted) {
    std::cout << "accepted: " << quantity << " < " << fmt_real(lambda)
              << " certified at N = " << at_n << "\n";
    return kExitOk;
  }
  std::cout << "undetermined: no certificate within budget " << budget
            << "\n";
  return kExitUndetermined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical bounds on the reliability function of a DMC"};
  app.require_subcommand(1);

  std::string channel_path, channel_a, channel_b, out_path;
  std::string format = "text", quantity = "r_inf";
  std::vector<std::string> bounds{"sp", "r"};
  double rmin = 0.0, rmax = 0.0, step = 0.0, lambda = 0.0, rho_cap = 0.0;
  int k = 1, n_max = 50, budget = 100, jobs = 0;
  long size_cap = 0;

  CLI::App* info = app.add_subcommand("info", "Exact and numeric summary");
  info->add_option("--channel", channel_path, "channel JSON file")
      ->required();
  info->add_option("--format", format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  info->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "Bound curves over a rate grid");
  sweep->add_option("--channel", channel_path, "channel JSON file")
      ->required();
  sweep->add_option("--rmin", rmin, "first rate")->required();
  sweep->add_option("--rmax", rmax, "last rate")->required();
  sweep->add_option("--step", step, "rate increment")->required();
  sweep->add_option("--bounds", bounds, "subset of sp, r, ex")
      ->delimiter(',');
  sweep->add_option("--k", k, "expurgation block length");
  sweep->add_option("--rho-cap", rho_cap, "cap for sup over rho");
  sweep->add_option("--jobs", jobs, "worker threads (default: all cores)");
  sweep->add_option("--out", out_path, "write CSV to file");

  CLI::App* product = app.add_subcommand(
      "product", "Exact additivity report for a Kronecker product");
  product->add_option("--channel-a", channel_a, "first channel JSON file")
      ->required();
  product->add_option("--channel-b", channel_b, "second channel JSON file")
      ->required();
  product->add_option("--size-cap", size_cap, "product size cap");

  CLI::App* approx = app.add_subcommand(
      "approx", "Monotone approximation trace as CSV");
  approx->add_option("--channel", channel_path, "channel JSON file")
      ->required();
  approx->add_option("--quantity", quantity, "r_inf or c0_fb")
      ->check(CLI::IsMember({"r_inf", "c0_fb"}));
  approx->add_option("--n-max", n_max, "largest smoothing index");
  approx->add_option("--out", out_path, "write CSV to file");

  CLI::App* semi = app.add_subcommand(
      "semidecide", "Certify quantity < lambda within a budget");
  semi->add_option("--channel", channel_path, "channel JSON file")
      ->required();
  semi->add_option("--quantity", quantity, "r_inf or c0_fb")
      ->check(CLI::IsMember({"r_inf", "c0_fb"}));
  semi->add_option("--lambda", lambda, "strict upper threshold")->required();
  semi->add_option("--budget", budget, "largest smoothing index to try");

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) return cmd_info(channel_path, format, out_path);
  if (sweep->parsed()) {
    return cmd_sweep(channel_path, rmin, rmax, step, bounds, k, rho_cap, jobs,
                     out_path);
  }
  if (product->parsed()) return cmd_product(channel_a, channel_b, size_cap);
  if (approx->parsed()) return cmd_approx(channel_path, quantity, n_max,
                                          out_path);
  if (semi->parsed()) return cmd_semidecide(channel_path, quantity, lambda,
                                            budget);
  return kExitFailure;
}
