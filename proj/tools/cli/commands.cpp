// Copyright 2026 The VPS Authors
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

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "format.hpp"
#include "json.hpp"
#include "vps/closed_form.hpp"
#include "vps/error.hpp"
#include "vps/linear_solver.hpp"
#include "vps/literals.hpp"
#include "vps/oracle.hpp"
#include "vps/quadratic_solver.hpp"

namespace vps::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kMonotoneSlack = 1e-9;
constexpr double kTimingTol = 1e-9;

std::string PickOr(const std::string& value, const std::string& fallback) {
  return value.empty() ? fallback : value;
}

void PrintKeyValues(const Json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_number()) {
      out << key << ": " << Fmt(value.get<double>()) << '\n';
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << '\n';
    } else if (value.is_null()) {
      out << key << ": none\n";
    } else if (value.is_array()) {
      for (const auto& item : value) {
        out << key << ":";
        if (item.is_object()) {
          for (const auto& [k, v] : item.items()) {
            out << ' ' << k << '=' << Fmt(v.get<double>());
          }
        } else {
          out << ' ' << Fmt(item.get<double>());
        }
        out << '\n';
      }
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
}

Json PosteriorsJson(const std::vector<linear::Posterior>& posts) {
  Json arr = Json::array();
  for (const auto& p : posts) {
    arr.push_back({{"mu", p.mu}, {"weight", p.weight}, {"proposal", p.proposal}});
  }
  return arr;
}

void CheckTiming(const std::string& timing) {
  if (timing != "persuasion-first" && timing != "proposal-first") {
    throw ParseError("timing must be persuasion-first or proposal-first");
  }
}

struct ThreeTypeInstance {
  double mu_zero;
  double mu_low;
  double low;
  double high;
};

ThreeTypeInstance ParseThreeType(const std::string& text) {
  const TypeDistribution d = ParseDistribution(text);
  if (d.is_continuous() || d.kind() == TypeDistribution::Kind::kTilt) {
    throw ParseError("linear3: expected an atoms literal");
  }
  const auto& a = d.atoms();
  if (a.size() != 3 || a[0].point != 0.0) {
    throw ParseError("linear3: expected three atoms, the first at 0");
  }
  return {a[0].prob, a[1].prob, a[1].point, a[2].point};
}

}  // namespace

int CmdSolve(const std::string& model, const std::string& timing,
             const std::string& instance, const std::string& loss,
             const Options& opts, std::ostream& out) {
  CheckTiming(timing);
  const bool persuasion_first = timing == "persuasion-first";
  Json j;
  if (model == "quad") {
    const TypeDistribution d = ParseDistribution(instance);
    const ProposerPreferences prefs = ParsePreferences(PickOr(loss, "power:2"));
    const quad::SolveOutcome o = persuasion_first
                                     ? quad::SolvePersuasionFirst(d, prefs)
                                     : quad::SolveProposalFirst(d, prefs);
    j["regime"] = quad::RegimeName(o.regime);
    j["s_star"] = o.s_star;
    j["s_upper"] = o.s_upper;
    j["proposal"] = o.proposal;
    j["value"] = o.value;
    j["veto_prob"] = o.veto_prob;
  } else if (model == "linear2") {
    const BinaryTypeEnv env = ParseBinaryEnv(instance);
    const ProposerPreferences prefs = ParsePreferences(PickOr(loss, "linear"));
    if (persuasion_first) {
      const auto o = linear::SolvePersuasionFirstBinary(env, prefs);
      j["regime"] = o.regime == linear::BinaryRegime::kNoInfo ? "NoInfo" : "Split";
      j["posteriors"] = PosteriorsJson(o.posteriors);
      Json proposals = Json::array();
      for (const auto& p : o.posteriors) proposals.push_back(p.proposal);
      j["proposal"] = proposals;
      j["value"] = o.value;
      j["veto_prob"] = 0.0;
    } else {
      const auto o = linear::SolveProposalFirstBinary(env, prefs);
      j["regime"] = o.informative ? "Split" : "NoInfo";
      j["posteriors"] = PosteriorsJson(o.posteriors);
      j["proposal"] = o.proposal;
      j["value"] = o.value;
      j["veto_prob"] = o.veto_prob;
    }
  } else if (model == "linear3") {
    const ThreeTypeInstance t = ParseThreeType(instance);
    const ProposerPreferences prefs = ParsePreferences(PickOr(loss, "linear"));
    const auto v = linear::ComputeThreeTypeValues(t.mu_zero, t.mu_low, t.low,
                                                  t.high, prefs);
    j["regime"] = "ThreeTypeComparison";
    j["no_info_value"] = v.no_info;
    j["full_info_value"] = v.full_info;
    j["best_binary_value"] = v.best_binary;
    j["best_branch"] = v.best_branch;
    j["best_sigma"] = v.best_sigma;
    j["branch_i_value"] = v.branch_i_value;
  } else {
    throw ParseError("model must be quad, linear2 or linear3");
  }
  if (opts.json) {
    out << j.dump() << '\n';
  } else {
    PrintKeyValues(j, out);
  }
  return kExitOk;
}

int CmdSweep(const std::string& parameter, const std::string& values_text,
             const Options& opts, std::ostream& out) {
  const std::vector<double> values = ParseValueList(values_text);
  const TypeDistribution base = ParseDistribution(PickOr(opts.dist, "uniform:-1,1"));
  std::function<quad::SolveOutcome(double)> solve;
  if (parameter == "risk") {
    solve = [&](double a) {
      return quad::SolvePersuasionFirst(base, ProposerPreferences::Exponential(a));
    };
  } else if (parameter == "tilt") {
    const ProposerPreferences prefs = ParsePreferences(PickOr(opts.loss, "power:2"));
    solve = [&, prefs](double lambda) {
      return quad::SolvePersuasionFirst(base.Tilt(lambda), prefs);
    };
  } else if (parameter == "theta-hi") {
    const ProposerPreferences prefs = ParsePreferences(PickOr(opts.loss, "power:2"));
    solve = [&, prefs](double hi) {
      return quad::SolvePersuasionFirst(
          TypeDistribution::Uniform(base.lower(), hi), prefs);
    };
  } else {
    throw ParseError("sweep parameter must be risk, tilt or theta-hi");
  }

  std::vector<quad::SolveOutcome> rows(values.size());
  ParallelFor(static_cast<int>(values.size()), opts.jobs,
              [&](int i) { rows[i] = solve(values[i]); });

  CsvWriter csv(out);
  csv.Header({"parameter", "s_star", "s_upper", "F_s_star", "value", "proposal",
              "monotone"});
  bool all_ok = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    bool ok = true;
    if (i > 0) {
      const auto& a = rows[i - 1];
      const auto& b = rows[i];
      if (parameter == "risk") {
        ok = b.s_star <= a.s_star + kMonotoneSlack &&
             b.s_upper <= a.s_upper + kMonotoneSlack;
      } else if (parameter == "tilt") {
        ok = b.s_star <= a.s_star + kMonotoneSlack &&
             b.veto_prob <= a.veto_prob + kMonotoneSlack &&
             b.s_upper >= a.s_upper - kMonotoneSlack;
      } else {
        ok = b.proposal >= a.proposal - kMonotoneSlack;
      }
    }
    all_ok = all_ok && ok;
    const auto& r = rows[i];
    csv.Row({Fmt(values[i]), Fmt(r.s_star), Fmt(r.s_upper), Fmt(r.veto_prob),
             Fmt(r.value), Fmt(r.proposal), ok ? "1" : "0"});
  }
  return all_ok ? kExitOk : kExitCheckFailure;
}

int CmdFigure(int id, const Options& opts, std::ostream& out) {
  CsvWriter csv(out);
  const int grid = opts.grid;
  switch (id) {
    case 1: {
      const int n = grid > 0 ? grid : 200;
      csv.Header({"theta_lo", "u_no", "u_fl1", "u_fl2", "u_bi"});
      for (int k = 0; k < n; ++k) {
        const double t = -2.0 + 2.0 * k / n;
        csv.Row({t, closed_form::UNo(t), closed_form::UFl1(t),
                 closed_form::UFl2(t), closed_form::UBi(t)});
      }
      return kExitOk;
    }
    case 2: {
      const int n = grid > 0 ? grid : 401;
      const TypeDistribution d = ParseDistribution(PickOr(opts.dist, "uniform:-1,1"));
      const ProposerPreferences prefs = ParsePreferences(PickOr(opts.loss, "power:2"));
      const quad::SolveOutcome o = quad::SolvePersuasionFirst(d, prefs);
      const double floor = prefs.Utility(0.0);
      std::function<double(double)> price;
      if (o.regime == quad::Regime::kBinaryCutoff) {
        const double u_hi = quad::IndirectUtility(o.s_upper, prefs);
        const double slope = (u_hi - floor) / (o.s_upper - o.s_star);
        price = [=](double s) { return std::max(floor, floor + slope * (s - o.s_star)); };
      } else {
        const double m = d.Mean();
        const double at_m = quad::IndirectUtility(m, prefs);
        const double slope =
            m > 0.0 && m < 0.5 ? 2.0 * prefs.UtilityDeriv(2.0 * m) : 0.0;
        price = [=](double s) { return at_m + slope * (s - m); };
      }
      csv.Header({"s", "u", "price"});
      for (int k = 0; k < n; ++k) {
        const double s = d.lower() + (d.upper() - d.lower()) * k / (n - 1);
        csv.Row({s, quad::IndirectUtility(s, prefs), price(s)});
      }
      return kExitOk;
    }
    case 3: {
      const int n = grid > 0 ? grid : 201;
      const BinaryTypeEnv env = ParseBinaryEnv(PickOr(opts.env, "binary:0.1,0.7,0.5"));
      csv.Header({"p", "phi"});
      for (int k = 0; k < n; ++k) {
        const double p = 2.0 * env.low() + (1.0 - 2.0 * env.low()) * k / (n - 1);
        csv.Row({p, PhiThreshold(env, p)});
      }
      return kExitOk;
    }
    case 4: {
      const int n = grid > 0 ? grid : 201;
      const ProposerPreferences prefs = ParsePreferences(PickOr(opts.loss, "linear"));
      const std::vector<BinaryTypeEnv> envs{BinaryTypeEnv(0.1, 0.45, 0.5),
                                            BinaryTypeEnv(0.1, 0.7, 0.5)};
      std::vector<linear::Envelope> hulls;
      for (const auto& e : envs) hulls.emplace_back(linear::UhatGrid(e, prefs));
      csv.Header({"mu", "uhat_h0.45", "ubar_h0.45", "uhat_h0.7", "ubar_h0.7"});
      for (int k = 0; k < n; ++k) {
        const double mu = static_cast<double>(k) / (n - 1);
        csv.Row({mu, linear::Uhat(envs[0], prefs, mu), hulls[0].Evaluate(mu),
                 linear::Uhat(envs[1], prefs, mu), hulls[1].Evaluate(mu)});
      }
      return kExitOk;
    }
    case 5: {
      const int n = grid > 0 ? grid : 201;
      const BinaryTypeEnv base = ParseBinaryEnv(PickOr(opts.env, "binary:0.15,0.7,0.3"));
      const ProposerPreferences prefs = ParsePreferences(PickOr(opts.loss, "linear"));
      const std::vector<double> mus = ParseValueList(PickOr(opts.mu0, "0.2,0.3,0.45"));
      std::vector<std::string> header{"p"};
      for (double m : mus) header.push_back("utilde_mu0_" + Fmt(m));
      csv.Header(header);
      for (int k = 0; k < n; ++k) {
        const double p = base.max_proposal() * k / (n - 1);
        std::vector<double> row{p};
        for (double m : mus) row.push_back(linear::Utilde(base.WithPrior(m), prefs, p));
        csv.Row(row);
      }
      return kExitOk;
    }
    case 6: {
      const int n = grid > 0 ? grid : 101;
      const BinaryTypeEnv base = ParseBinaryEnv(PickOr(opts.env, "binary:0.1,0.7,0.5"));
      const ProposerPreferences prefs = ParsePreferences(PickOr(opts.loss, "linear"));
      std::vector<std::vector<double>> rows(n);
      ParallelFor(n, opts.jobs, [&](int k) {
        const double mu = static_cast<double>(k) / (n - 1);
        const BinaryTypeEnv env = base.WithPrior(mu);
        rows[k] = {mu, linear::SolveProposalFirstBinary(env, prefs).value,
                   linear::SolvePersuasionFirstBinary(env, prefs).value,
                   linear::Uhat(env, prefs, mu)};
      });
      csv.Header({"mu0", "proposal_first", "persuasion_first", "no_info"});
      for (const auto& r : rows) csv.Row(r);
      return kExitOk;
    }
    default:
      throw ParseError("figure id must be 1..6");
  }
}

namespace {

class CheckReport {
 public:
  void Add(const std::string& name, bool pass, const std::string& detail) {
    checks_.push_back({name, pass, detail});
    all_pass_ = all_pass_ && pass;
  }
  bool all_pass() const { return all_pass_; }

  void Print(bool json, std::ostream& out) const {
    if (json) {
      Json arr = Json::array();
      for (const auto& c : checks_) {
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      Json j;
      j["checks"] = arr;
      j["all_pass"] = all_pass_;
      out << j.dump() << '\n';
      return;
    }
    for (const auto& c : checks_) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
  }

 private:
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks_;
  bool all_pass_ = true;
};

std::string Detail(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    os << k << '=' << Fmt(v);
    first = false;
  }
  return os.str();
}

}  // namespace

int CmdOracle(const std::string& model, const std::string& instance,
              const std::string& loss, const Options& opts, std::ostream& out) {
  CheckReport report;
  if (model == "quad") {
    const TypeDistribution d = ParseDistribution(instance);
    const ProposerPreferences prefs = ParsePreferences(PickOr(loss, "power:2"));
    const quad::SolveOutcome o = quad::SolvePersuasionFirst(d, prefs);
    if (d.is_continuous()) {
      const quad::SolveOutcome q = quad::SolveProposalFirst(d, prefs);
      const double gap = std::fabs(o.value - q.value);
      report.Add("timing-equivalence", gap <= kTimingTol,
                 Detail({{"persuasion_first", o.value}, {"proposal_first", q.value},
                         {"gap", gap}}));
    }
    if (o.regime == quad::Regime::kBinaryCutoff) {
      const auto c = oracle::VerifyCertificate(d, prefs, o.s_star, o.s_upper);
      report.Add("price-certificate", c.ok,
                 Detail({{"max_violation", c.max_violation},
                         {"contact_gap", c.contact_gap}, {"mean_gap", c.mean_gap}}));
    } else if (o.regime == quad::Regime::kNoInfo) {
      const auto c = oracle::VerifyNoInfoCertificate(d, prefs);
      report.Add("no-info-certificate", c.ok,
                 Detail({{"max_violation", c.max_violation}}));
    }
    const int grid = opts.grid > 0 ? opts.grid : 400;
    for (int k : {2, 3}) {
      const auto p = oracle::PartitionSearch(d, prefs, k, grid);
      const double excess = p.value - o.value;
      const bool pass = excess <= opts.tol;
      std::string detail = Detail({{"best", p.value}, {"solver", o.value},
                                   {"excess", excess}});
      if (pass && o.regime == quad::Regime::kNoInfo) {
        detail += " (no improving partition found)";
      }
      report.Add("partition-search-k" + std::to_string(k), pass, detail);
    }
  } else if (model == "linear2") {
    const BinaryTypeEnv env = ParseBinaryEnv(instance);
    const ProposerPreferences prefs = ParsePreferences(PickOr(loss, "linear"));
    const auto pf = linear::SolvePersuasionFirstBinary(env, prefs);
    const auto pr = linear::SolveProposalFirstBinary(env, prefs);
    const auto split =
        oracle::PairwiseBestSplit(linear::UhatGrid(env, prefs), env.prior_high());
    report.Add("concavification", std::fabs(split.value - pf.value) <= kTimingTol,
               Detail({{"oracle", split.value}, {"solver", pf.value}}));
    const int grid = opts.grid > 0 ? opts.grid : 2001;
    const auto g = oracle::ProposalFirstGrid(env, prefs, grid);
    const double step = env.max_proposal() / (grid - 1);
    const bool near = std::fabs(g.p - pr.proposal) <= step + 1e-12 ||
                      std::fabs(g.value - pr.value) <= opts.tol;
    report.Add("proposal-first-grid", near && g.value <= pr.value + opts.tol,
               Detail({{"grid_p", g.p}, {"solver_p", pr.proposal},
                       {"grid_value", g.value}, {"solver_value", pr.value}}));
    report.Add("timing-order", pf.value >= pr.value - 1e-10,
               Detail({{"persuasion_first", pf.value}, {"proposal_first", pr.value}}));
    report.Add("quasiconvexity", pr.quasiconvex,
               pr.quasiconvex ? "no interior local maximum" : "interior local maximum found");
  } else if (model == "linear3") {
    const ThreeTypeInstance t = ParseThreeType(instance);
    const ProposerPreferences prefs = ParsePreferences(PickOr(loss, "linear"));
    const auto v = linear::ComputeThreeTypeValues(t.mu_zero, t.mu_low, t.low,
                                                  t.high, prefs);
    const int grid = opts.grid > 0 ? opts.grid : 101;
    const auto b = oracle::BinarySignalSearchAtoms(t.mu_zero, t.mu_low, t.low,
                                                   t.high, prefs, grid);
    report.Add("binary-signal-search",
               std::fabs(b.value - v.best_binary) <= 1e-4 &&
                   b.value <= v.best_binary + opts.tol,
               Detail({{"oracle", b.value}, {"solver", v.best_binary},
                       {"sigma0", b.sigma[0]}, {"sigma_low", b.sigma[1]},
                       {"sigma_high", b.sigma[2]}}));
    report.Add("value-ordering",
               v.full_info >= v.best_binary - 1e-12 &&
                   v.best_binary >= v.no_info - 1e-12,
               Detail({{"full_info", v.full_info}, {"best_binary", v.best_binary},
                       {"no_info", v.no_info}}));
    const double grid_value =
        oracle::ThreeTypePersuasionGrid(t.mu_zero, t.mu_low, t.low, t.high, prefs, 20);
    report.Add("persuasion-grid", grid_value >= v.full_info - 1e-12,
               Detail({{"grid_value", grid_value}, {"full_info", v.full_info}}));
  } else {
    throw ParseError("model must be quad, linear2 or linear3");
  }
  report.Print(opts.json, out);
  return report.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace vps::cli
