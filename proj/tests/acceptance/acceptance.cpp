// Copyright 2026 The gwpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gwpriv/codec_sim.hpp"
#include "gwpriv/common_information.hpp"
#include "gwpriv/infotheory.hpp"
#include "gwpriv/region.hpp"
#include "support/fixtures.hpp"

namespace gwpriv {
namespace {

constexpr std::size_t kRandomJoints = 100;

// Collects failed checks for one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Near(double got, double want, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(12);
    msg << what << ": got " << got << ", want " << want << " +- " << tol;
    Expect(std::abs(got - want) <= tol, msg.str());
  }
  void Note(const std::string& line) { notes_.push_back(line); }

  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<void(Checks&)> body;
};

WynerParams Wyner(std::uint64_t seed) {
  WynerParams params;
  params.seed = seed;
  return params;
}

void DsbsWithIndependentBitCase(Checks& c) {
  const JointPmf pmf = testing::DsbsWithIndependentBit(0.11);
  const double target = 1.0 - binary_entropy(0.11);
  c.Expect(gk_common_information(pmf).value == 0.0, "C is exactly 0");
  const PairwiseBounds bounds = pairwise_mi_bounds(pmf);
  c.Near(bounds.min_mi, 0.0, 1e-6, "min pairwise MI");
  c.Near(bounds.max_mi, target, 1e-6, "max pairwise MI");
  c.Near(bounds.max_mi, 0.5001, 1e-4, "max pairwise MI vs 0.5001");
  const CommonInfoResult b = wyner_estimate(pmf, Wyner(1));
  if (b.diagnostics.converged) {
    c.Expect(b.value >= 0.5001 - 1e-3, "B estimate below 0.5001 - 1e-3");
  } else {
    c.Note("B optimizer did not converge");
  }
  c.Note("B estimate " + std::to_string(b.value));
}

void SharedBitCase(Checks& c) {
  const JointPmf pmf = testing::SharedBitSources();
  c.Near(gk_common_information(pmf).value, 1.0, 1e-9, "C");
  const CommonInfoResult b = wyner_estimate(pmf, Wyner(1));
  c.Expect(b.diagnostics.converged, "B optimizer converged");
  c.Near(b.value, 1.0, 1e-3, "B estimate");
  const PairwiseBounds bounds = pairwise_mi_bounds(pmf);
  c.Near(bounds.min_mi, 1.0, 1e-9, "min pairwise MI");
  c.Near(bounds.max_mi, 1.0, 1e-9, "max pairwise MI");
  const Prop4Report report = verify_prop4(pmf, Wyner(1));
  c.Expect(report.status == Prop4Status::kConclusionHolds,
           "equal-bounds conclusion: " + std::string(Prop4StatusName(report.status)));
}

void OracleCase(Checks& c) {
  for (std::uint64_t seed = 0; seed < kRandomJoints; ++seed) {
    const JointPmf pmf = testing::RandomJoint(seed);
    const double fast = gk_common_information(pmf).value;
    const double oracle = gk_brute_force_oracle(pmf).value;
    c.Near(fast, oracle, 1e-9, "joint " + std::to_string(seed));
  }
}

void ChainCase(Checks& c) {
  std::size_t converged = 0;
  for (std::uint64_t seed = 0; seed < kRandomJoints; ++seed) {
    const BoundsReport report = verify_chain(testing::RandomJoint(seed), Wyner(seed));
    for (const ChainLink& link : report.links) {
      if (link.evaluated) {
        c.Expect(link.holds, "joint " + std::to_string(seed) + ": " + link.name);
      }
    }
    if (report.b_converged) ++converged;
  }
  c.Note("B converged on " + std::to_string(converged) + "/" +
         std::to_string(kRandomJoints) + " joints");
  c.Expect(converged * 10 >= kRandomJoints * 8, "B converged on fewer than 80%");
}

void MonotonicityCase(Checks& c) {
  for (std::uint64_t seed = 0; seed < kRandomJoints; ++seed) {
    const JointPmf pmf = testing::RandomJoint(seed, 3);
    for (std::size_t drop = 0; drop < 3; ++drop) {
      const MonotonicityReport m = verify_monotonicity(pmf, drop);
      c.Expect(m.holds, "joint " + std::to_string(seed) + " drop " + std::to_string(drop));
    }
  }
}

void RegionCase(Checks& c) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::string tag = "pair " + std::to_string(seed);
    const JointPmf pmf = testing::RandomJoint(seed);
    const AuxChannel w = testing::RandomChannel(pmf, seed);
    const std::size_t num = pmf.num_vars();
    const JointPmf joined = join_with_aux(pmf, w);
    const RateEquivocationTuple t = corner_point(pmf, w);
    c.Expect(is_achievable_with(pmf, w, t), tag + ": corner not self-achievable");
    double expected = 0.0;
    for (std::size_t k = 0; k < num; ++k) {
      expected += conditional_entropy(joined, all_vars(num), {num}) -
                  conditional_entropy(joined, {k}, {num});
    }
    c.Near(t.delta, expected, 1e-9, tag + ": delta");
    const double dmax = delta_max(pmf);
    c.Expect(t.delta <= dmax + 1e-9, tag + ": delta above delta_max");

    const RateEquivocationTuple constant =
        corner_point(pmf, AuxChannel::Constant(pmf.size()));
    c.Near(constant.r0, 0.0, 1e-9, tag + ": constant r0");
    for (std::size_t k = 0; k < num; ++k) {
      c.Near(constant.rk[k], entropy(pmf, {k}), 1e-9, tag + ": constant rk");
    }
    c.Near(constant.delta, dmax, 1e-9, tag + ": constant delta");

    const RateEquivocationTuple copy = corner_point(pmf, AuxChannel::Identity(pmf.size()));
    c.Near(copy.r0, entropy(pmf, all_vars(num)), 1e-9, tag + ": copy r0");
    for (double r : copy.rk) c.Near(r, 0.0, 1e-9, tag + ": copy rk");
    c.Near(copy.delta, 0.0, 1e-9, tag + ": copy delta");
  }
}

void C2Case(Checks& c) {
  auto check = [&](const JointPmf& pmf, const std::string& tag) {
    try {
      const C2Report report = verify_c2(pmf);
      c.Expect(report.max_residual <= 1e-9, tag + ": residual");
    } catch (const Error& e) {
      c.Expect(false, tag + ": " + e.what());
    }
  };
  for (std::uint64_t seed = 0; seed < kRandomJoints; ++seed) {
    check(testing::RandomJoint(seed), "joint " + std::to_string(seed));
  }
  check(testing::DsbsWithIndependentBit(0.11), "dsbs with independent bit");
  check(testing::SharedBitSources(), "shared bit sources");
}

CodeConfig Config(std::size_t n, double slack, double typ, std::uint64_t seed) {
  CodeConfig cfg;
  cfg.n = n;
  cfg.slack = slack;
  cfg.typicality_tolerance = typ;
  cfg.seed = seed;
  return cfg;
}

void SimulatorCase(Checks& c) {
  // Equal bits with W a copy of X1.
  const JointPmf equal = testing::EqualBits();
  const AuxChannel copy = testing::FirstSourceCopy(equal);
  const SimReport short_block = run_trials(equal, copy, Config(6, 0.2, 0.15, 2024), 10000, true);
  const SimReport long_block = run_trials(equal, copy, Config(12, 0.2, 0.15, 2024), 10000, true);
  for (std::size_t k = 0; k < 2; ++k) {
    const std::string tag = "decoder " + std::to_string(k + 1);
    c.Note(tag + ": error rate n=6 " + std::to_string(short_block.error_rates[k]) +
           ", n=12 " + std::to_string(long_block.error_rates[k]));
    c.Expect(long_block.error_rates[k] <= short_block.error_rates[k] + 0.05,
             tag + ": error rate grew with n");
    for (const SimReport* r : {&short_block, &long_block}) {
      std::ostringstream what;
      what << tag << ": equivocation at n=" << r->config.n;
      c.Near(r->equivocation[k], 0.0, 1e-9, what.str());
    }
  }
  c.Note("encoder failure rate n=6 " + std::to_string(short_block.encoder_failure_rate) +
         ", n=12 " + std::to_string(long_block.encoder_failure_rate));

  // Shared-bit sources with W the shared bit.
  const JointPmf shared = testing::SharedBitSources();
  const AuxChannel w = testing::SharedBitChannel();
  auto equivocation = [&](std::size_t n) {
    const CodeConfig cfg = Config(n, 0.25, 0.15, 7);
    return exact_equivocation_all(shared, w, build_codebook(shared, w, cfg), cfg);
  };
  const std::vector<Bits> e3 = equivocation(3);
  const std::vector<Bits> e4 = equivocation(4);
  const std::vector<Bits> e6 = equivocation(6);
  const JointPmf joined = join_with_aux(shared, w);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string tag = "decoder " + std::to_string(k + 1);
    const double target = conditional_entropy(joined, complement({k}, 3), {3, k});
    c.Near(target, 2.0, 1e-9, tag + ": target");
    c.Expect(e4[k] >= 1.5, tag + ": equivocation at n=4 below 1.5");
    const double gap3 = std::abs(e3[k] - target);
    const double gap6 = std::abs(e6[k] - target);
    c.Expect(gap6 <= gap3 + 0.1, tag + ": gap grew from n=3 to n=6");
    c.Note(tag + ": E n=3 " + std::to_string(e3[k]) + ", n=4 " + std::to_string(e4[k]) +
           ", n=6 " + std::to_string(e6[k]));
  }
}

std::string Data(const std::string& name) {
  return (std::filesystem::path(GWPRIV_DATA_DIR) / name).string();
}

void DeterminismCase(Checks& c) {
  const std::vector<std::vector<std::string>> commands = {
      {"common-info", Data("dsbs_independent_bit.json"), "--method", "wyner", "--seed", "11"},
      {"common-info", Data("shared_bit.json"), "--method", "wyner", "--seed", "11",
       "--threads", "4"},
      {"region", "sweep", Data("shared_bit.json"), "--r0-max", "2", "--points", "3",
       "--seed", "11", "--restarts", "2", "--iterations", "400"},
      {"region", "sweep", Data("dsbs_independent_bit.json"), "--grid", "0,0.5", "--seed",
       "11", "--format", "json", "--restarts", "2", "--iterations", "400"},
      {"region", "check", Data("shared_bit.json"), "--r0", "1", "--rk", "1,1,1",
       "--delta", "6", "--seed", "11"},
      {"simulate", Data("equal_bits.json"), "--aux", Data("equal_bits_w_copy.json"),
       "--n-grid", "6,8", "--trials", "2000", "--seed", "11", "--exact"},
      {"simulate", Data("shared_bit.json"), "--aux", Data("shared_bit_w_x0.json"), "--n",
       "4", "--trials", "500", "--seed", "11", "--format", "csv", "--threads", "3"},
      {"verify", Data("shared_bit.json"), "--props", "1,2,3,4", "--chain", "--c2",
       "--seed", "11"},
  };
  for (const auto& args : commands) {
    std::string label;
    for (std::size_t i = 0; i < std::min<std::size_t>(args.size(), 2); ++i) {
      label += (i ? " " : "") + args[i];
    }
    std::ostringstream first;
    std::ostringstream second;
    std::ostringstream err;
    const int code1 = cli::run(args, first, err);
    const int code2 = cli::run(args, second, err);
    c.Expect(code1 == cli::kExitOk && code2 == cli::kExitOk,
             label + ": exit codes " + std::to_string(code1) + "/" +
                 std::to_string(code2) + " " + err.str());
    c.Expect(!first.str().empty() && first.str() == second.str(),
             label + ": outputs differ");
  }
}

}  // namespace
}  // namespace gwpriv

int main() {
  using gwpriv::Checks;
  using gwpriv::Criterion;
  const std::vector<Criterion> criteria = {
      {"AC1", "DSBS with an independent bit", 1.0, gwpriv::DsbsWithIndependentBitCase},
      {"AC2", "shared-bit sources", 5.0, gwpriv::SharedBitCase},
      {"AC3", "components match brute-force oracle", 30.0, gwpriv::OracleCase},
      {"AC4", "bound chain on random joints", 0.0, gwpriv::ChainCase},
      {"AC5", "monotonicity in the number of sources", 0.0, gwpriv::MonotonicityCase},
      {"AC6", "region identities", 0.0, gwpriv::RegionCase},
      {"AC7", "rate-form identity of C", 0.0, gwpriv::C2Case},
      {"AC8", "simulator trends", 300.0, gwpriv::SimulatorCase},
      {"AC9", "CLI determinism", 0.0, gwpriv::DeterminismCase},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(checks);
    } catch (const std::exception& e) {
      checks.Expect(false, std::string("threw: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0.0 && seconds >= criterion.budget_seconds) {
      checks.Expect(false, "runtime " + std::to_string(seconds) + " s over budget " +
                               std::to_string(criterion.budget_seconds) + " s");
    }
    const bool ok = checks.failures().empty();
    if (!ok) ++failed;
    std::printf("[%s] %s %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion.id.c_str(),
                criterion.title.c_str(), seconds);
    for (const std::string& note : checks.notes()) std::printf("       %s\n", note.c_str());
    const std::size_t shown = std::min<std::size_t>(checks.failures().size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      std::printf("       failed: %s\n", checks.failures()[i].c_str());
    }
    if (checks.failures().size() > shown) {
      std::printf("       ... %zu more\n", checks.failures().size() - shown);
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
