// Copyright 2026 The symgames Authors
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


#include "symgames/cli/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "symgames/analytic.h"
#include "symgames/checks.h"
#include "symgames/clique.h"
#include "symgames/cli/io.h"
#include "symgames/cli/report.h"
#include "symgames/dynamics.h"
#include "symgames/gadgets.h"
#include "symgames/geometry.h"
#include "symgames/minmax.h"
#include "symgames/oracle.h"

namespace symgames::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kIrrationalRegretTolerance = 1e-9;
constexpr double kDriftTolerance = 1e-12;

struct Context {
  Report report;
  std::ostream& out;
  std::ostream& err;

  const fs::path& Input(const fs::path& path) {
    report.HashFile(path);
    return path;
  }
};

using Handler = std::function<void(Context&)>;

Rational ParseEps(const std::string& text, const char* what) {
  const Rational value = ParseRational(text);
  if (value < 0) throw InvalidArgument(std::string(what) + " must be ≥ 0");
  return value;
}

void WriteJson(const fs::path& path, const Json& json) {
  WriteText(path, json.dump(2) + "\n");
}

void WriteStrategy(const std::string& path, const MixedStrategy& s) {
  if (!path.empty()) WriteJson(path, ProfileToJson(MixedProfile{s}));
}

// Largest regret of (x, x) in the bimatrix game.
double SymmetricRegret(const BimatrixGame& game, const MixedStrategy& x) {
  return MaxRegret(game, MixedProfile{x, x});
}

MinMaxPoint PointFromProfile(const MixedProfile& profile) {
  if (profile.size() != 2) {
    throw DimensionError("a min-max point needs exactly two strategies");
  }
  return {profile[0], profile[1]};
}

CliqueGame BuildCliqueGame(const Graph& graph, const std::string& variant,
                           int k, const std::string& delta,
                           const std::string& eps) {
  const int n = graph.num_vertices();
  if (k <= 0) k = MaxClique(graph).size;
  if (variant == "unique") return UniqueNeGame(graph, k);
  if (variant == "robust") {
    return RobustUniqueNeGame(
        graph, ParameterRegime{n, k, ParseEps(delta, "delta"),
                               ParseEps(eps, "eps")});
  }
  throw InvalidArgument("unknown clique game variant '" + variant + "'");
}

// ---------------------------------------------------------------- gadget

struct GadgetOptions {
  std::string game, graph, eps = "1/20", output, canonical, variant = "base";
  std::string width, gap_target, delta = "1/2";
  int k = 0;
  bool shift = false;
};

void GadgetTeam(Context& ctx, const GadgetOptions& o) {
  RationalMatrix a = ReadMatrix(ctx.Input(o.game));
  Rational shift = 0;
  if (o.shift) {
    ShiftedMatrix shifted = ShiftBelowMinusOne(a);
    a = std::move(shifted.matrix);
    shift = shifted.shift;
  }
  const TeamGadget gadget(std::move(a), ParseEps(o.eps, "eps"), shift);
  WriteGame(o.output, gadget.game());
  if (!o.canonical.empty()) {
    const ExactProfile ne = CanonicalTeamNe(gadget);
    WriteJson(o.canonical, ProfileToJson(ne));
    ctx.report.Add(ExactUpperBound("canonical-team-ne-regret", "team-gadget",
                                   0, ExactMaxRegret(gadget.game(), ne)));
  }
}

void GadgetQuadratic(Context& ctx, const GadgetOptions& o) {
  const RationalMatrix r = ReadMatrix(ctx.Input(o.game));
  WriteJson(o.output, ProblemToJson(QuadraticGadget(r)));
}

void GadgetCoupled(Context& ctx, const GadgetOptions& o) {
  const RationalMatrix r = ReadMatrix(ctx.Input(o.game));
  double width = 0.0;
  if (!o.width.empty()) {
    width = ToDouble(ParseEps(o.width, "width"));
  } else if (!o.gap_target.empty()) {
    width = DefaultCouplingWidth(ToDouble(ParseEps(o.gap_target, "gap")),
                                 r.rows());
  } else {
    throw InvalidArgument("coupled gadget needs --width or --gap-target");
  }
  WriteJson(o.output, ProblemToJson(CoupledGadget(r, width)));
}

void GadgetTeam3v3(Context& ctx, const GadgetOptions& o) {
  const RationalMatrix r = ReadMatrix(ctx.Input(o.game));
  const Team3v3Gadget gadget(r, ParseEps(o.eps, "eps"));
  WriteGame(o.output, gadget.game());
  if (!o.canonical.empty()) {
    const auto en = SymmetricSupportEnumeration(gadget.symmetric_part(),
                                                Orientation::kMinimize);
    if (en.equilibria.empty()) throw NumericError("no symmetric equilibrium");
    const ExactStrategy& x = en.equilibria.front().strategy;
    const ExactStrategy z = ExactStrategy::Pure(2 * gadget.n() + 1,
                                                2 * gadget.n());
    const ExactProfile profile{x, x, z, x, x, z};
    WriteJson(o.canonical, ProfileToJson(profile));
    ctx.report.Add(ExactUpperBound("constructed-profile-regret",
                                   "team3v3-gadget", 0,
                                   ExactMaxRegret(gadget.game(), profile)));
  }
}

void GadgetClique(Context& ctx, const GadgetOptions& o) {
  const Graph graph = ReadGraph(ctx.Input(o.graph));
  if (o.variant == "base") {
    WriteGame(o.output,
              BimatrixGame::SymmetricIdentical(PayoffFromGraph(graph)));
  } else if (o.variant == "delta") {
    WriteGame(o.output, BimatrixGame::SymmetricIdentical(PayoffFromGraphDelta(
                            graph, ParseEps(o.delta, "delta"))));
  } else {
    WriteGame(o.output,
              BuildCliqueGame(graph, o.variant, o.k, o.delta, o.eps).game);
  }
}

// ----------------------------------------------------------------- check

struct CheckOptions {
  std::string game, problem, profile, eps = "0";
  double stepsize = 1.0;
  bool exact = false;
};

void CheckNe(Context& ctx, const CheckOptions& o) {
  const auto game = ReadGame(ctx.Input(o.game));
  const Rational eps = ParseEps(o.eps, "eps");
  if (o.exact) {
    const ExactProfile profile = ReadExactProfile(ctx.Input(o.profile));
    ctx.report.Add(ExactUpperBound("epsilon-ne", "epsilon-ne", eps,
                                   ExactMaxRegret(*game, profile)));
    return;
  }
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  const Certificate c = EpsilonNeReport(*game, profile, ToDouble(eps));
  ctx.report.Add({c.bound_name, "epsilon-ne", ToDouble(eps), c.max_regret(),
                  c.satisfied});
}

void CheckWsne(Context& ctx, const CheckOptions& o) {
  const BimatrixGame game = ReadBimatrix(ctx.Input(o.game));
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  const double eps = ToDouble(ParseEps(o.eps, "eps"));
  ctx.report.Add(UpperBound("epsilon-wsne", "well-supported-ne",
                            eps + kCertificateSlack, WsneGap(game, profile)));
}

void CheckFoneCommand(Context& ctx, const CheckOptions& o) {
  const auto problem = ReadProblem(ctx.Input(o.problem));
  const MinMaxPoint p = PointFromProfile(ReadProfile(ctx.Input(o.profile)));
  const double eps = ToDouble(ParseEps(o.eps, "eps"));
  const FoneResiduals r = CheckFone(problem, p.x, p.y);
  ctx.report.Add(UpperBound("fone-residual", "first-order-ne",
                            eps + kCertificateSlack, r.max()));
}

void CheckGap(Context& ctx, const CheckOptions& o) {
  const auto problem = ReadProblem(ctx.Input(o.problem));
  const MinMaxPoint p = PointFromProfile(ReadProfile(ctx.Input(o.profile)));
  const double eps = ToDouble(ParseEps(o.eps, "eps"));
  const GapReport g = GdaGap(problem, p.x, p.y, o.stepsize);
  ctx.report.Add(UpperBound("gda-gap", "gda-fixed-point-gap",
                            eps + kCertificateSlack, g.gap));
  // On a simplex product the VI residual max_v ⟨F(z), z − v⟩ is attained at
  // a vertex pair, so it is the sum of the two first-order residuals.
  if (g.certified && !problem.on_joint_domain()) {
    const FoneResiduals r = CheckFone(problem, p.x, p.y);
    ctx.report.Add(UpperBound(g.bound_name, "gap-to-vi",
                              g.vi_bound + kCertificateSlack, r.x + r.y));
  }
}

// --------------------------------------------------------------- backmap

struct BackmapOptions {
  std::string game, profile, eps = "1/20", eps2, gap, width, output;
};

void BackmapTeam(Context& ctx, const BackmapOptions& o) {
  const TeamGadget gadget(ReadMatrix(ctx.Input(o.game)),
                          ParseEps(o.eps, "eps"));
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  const double eps = ToDouble(gadget.epsilon());
  const double eps2 =
      o.eps2.empty() ? eps * eps : ToDouble(ParseEps(o.eps2, "eps2"));
  const BackmapResult b = TeamBackmap(gadget, profile, eps2);
  const auto source = BimatrixGame::SymmetricIdentical(gadget.matrix(),
                                                       Orientation::kMinimize);
  ctx.report.Add(UpperBound(b.bound_name, "team-backmap", b.bound,
                            SymmetricRegret(source, b.strategy)));
  WriteStrategy(o.output, b.strategy);
}

void BackmapSymmetric(Context& ctx, const BackmapOptions& o) {
  const RationalMatrix r = ReadMatrix(ctx.Input(o.game));
  const MinMaxPoint p = PointFromProfile(ReadProfile(ctx.Input(o.profile)));
  const double gap = o.gap.empty()
                         ? GdaGap(QuadraticGadget(r), p.x, p.y).gap
                         : ToDouble(ParseEps(o.gap, "gap"));
  const BackmapResult b = SymmetricBackmap(r, p.x, p.y, gap);
  ctx.report.Add(UpperBound(b.bound_name, "vi-for-ne", b.bound + 1e-9,
                            SymmetricRegret(BimatrixGame::Symmetric(r),
                                            b.strategy)));
  WriteStrategy(o.output, b.strategy);
}

void BackmapMedian(Context& ctx, const BackmapOptions& o) {
  const RationalMatrix r = ReadMatrix(ctx.Input(o.game));
  const MinMaxPoint p = PointFromProfile(ReadProfile(ctx.Input(o.profile)));
  if (o.width.empty()) throw InvalidArgument("median backmap needs --width");
  const double width = ToDouble(ParseEps(o.width, "width"));
  const double gap =
      o.gap.empty() ? GdaGap(CoupledGadget(r, width), p.x, p.y).gap
                    : ToDouble(ParseEps(o.gap, "gap"));
  const BackmapResult b = MedianBackmap(r, p.x, p.y, gap, width);
  ctx.report.Add(UpperBound(b.bound_name, "median-joint-domain", b.bound,
                            SymmetricRegret(BimatrixGame::Symmetric(r),
                                            b.strategy)));
  WriteStrategy(o.output, b.strategy);
}

void BackmapTeam3v3(Context& ctx, const BackmapOptions& o) {
  const Team3v3Gadget gadget(ReadMatrix(ctx.Input(o.game)),
                             ParseEps(o.eps, "eps"));
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  StructureAudit audit;
  const BackmapResult b = Team3v3AuditAndBackmap(gadget, profile, &audit);
  ctx.report.Add(UpperBound("team-xy-gap", "team-symmetry-forcing",
                            audit.xy_bound, audit.max_xy_gap));
  ctx.report.Add(UpperBound("adversary-mass", "adversary-mass",
                            audit.z_bound, audit.max_z_mass));
  ctx.report.Add(UpperBound(
      b.bound_name, "team3v3-backmap", b.bound,
      SymmetricRegret(BimatrixGame::Symmetric(gadget.source()), b.strategy)));
  WriteStrategy(o.output, b.strategy);
}

// ----------------------------------------------------------------- audit

struct AuditOptions {
  std::string game, graph, profile, eps = "1/20", delta = "1/2";
  std::string kind = "nash", variant = "unique";
  int k = 0, cap = kNashgapVertexCap, resolution = 6;
};

void AuditGadgetStructure(Context& ctx, const AuditOptions& o) {
  const TeamGadget gadget(ReadMatrix(ctx.Input(o.game)),
                          ParseEps(o.eps, "eps"));
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  gadget.game().CheckProfile(profile);
  const double eps = ToDouble(gadget.epsilon());
  const int n = gadget.n();
  ctx.report.Add(UpperBound("epsilon-ne", "epsilon-ne", eps * eps,
                            MaxRegret(gadget.game(), profile)));
  const double xy = LinfDistance(profile[0].probs(), profile[1].probs());
  double z = 0.0;
  for (int j = 0; j < 2 * n; ++j) z = std::max(z, profile[2][j]);
  ctx.report.Add(UpperBound("team-xy-gap", "team-symmetry-forcing",
                            2 * eps + 1e-9, xy));
  ctx.report.Add(UpperBound("adversary-mass", "adversary-mass", 9 * eps + 1e-9,
                            z));
}

void AuditNashgap(Context& ctx, const AuditOptions& o) {
  const Graph graph = ReadGraph(ctx.Input(o.graph));
  const NashgapReport r = NashgapAudit(graph, o.cap);
  ctx.report.Add(ExactEquality("max-symmetric-ne-value", "clique-value",
                               r.clique_value, r.max_value));
  if (r.max_other_value) {
    ctx.report.Add(ExactUpperBound("non-clique-ne-value", "non-clique-value",
                                   r.other_bound, *r.max_other_value));
  }
}

void AuditWsneValue(Context& ctx, const AuditOptions& o) {
  const Graph graph = ReadGraph(ctx.Input(o.graph));
  const int k = o.k > 0 ? o.k : MaxClique(graph).size;
  const ParameterRegime regime{graph.num_vertices(), k,
                               ParseEps(o.delta, "delta"),
                               ParseEps(o.eps, "eps")};
  const WsneValueReport r = WsneValueAudit(graph, regime, o.resolution);
  const auto add_margin = [&](const char* name, const char* anchor,
                              const std::optional<Rational>& margin) {
    if (margin) ctx.report.Add(ExactUpperBound(name, anchor, *margin, 0));
  };
  add_margin("clique-supported-value-margin", "wsne-clique-value",
             r.clique_value_margin);
  add_margin("clique-supported-distance-margin", "wsne-clique-value",
             r.clique_distance_margin);
  add_margin("other-supported-value-margin", "wsne-other-value",
             r.other_value_margin);
}

void AuditClassify(Context& ctx, const AuditOptions& o) {
  const Graph graph = ReadGraph(ctx.Input(o.graph));
  const CliqueGame game = BuildCliqueGame(graph, o.variant, o.k, o.delta, o.eps);
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  if (profile.empty()) throw DimensionError("profile has no strategy");
  ApproximationKind kind;
  if (o.kind == "nash") {
    kind = ApproximationKind::kNash;
  } else if (o.kind == "wsne") {
    kind = ApproximationKind::kWellSupported;
  } else {
    throw InvalidArgument("kind must be nash or wsne");
  }
  const Classification c = ClassifySymmetricProfile(
      game, profile[0], ToDouble(ParseEps(o.eps, "eps")), kind);
  ctx.report.Add(UpperBound(
      "canonical-form:" + std::string(CanonicalFormName(c.form)),
      "canonical-forms", c.bound + 1e-9,
      c.form == CanonicalForm::kOther ? INFINITY : c.distance));
}

void AuditMassBound(Context& ctx, const AuditOptions& o) {
  const auto game = ReadGame(ctx.Input(o.game));
  const MixedProfile profile = ReadProfile(ctx.Input(o.profile));
  const double eps = ToDouble(ParseEps(o.eps, "eps"));
  ctx.report.Add(UpperBound("epsilon-ne", "epsilon-ne", eps * eps,
                            MaxRegret(*game, profile)));
  const auto broken = MassBoundAudit(*game, profile, eps);
  ctx.report.Add(UpperBound("mass-bound-violations", "mass-bound", 0,
                            static_cast<double>(broken.size())));
}

// ----------------------------------------------------------------- solve

struct SolveOptions {
  std::string game, graph, eps = "1/400", output;
  int resolution = 10, restarts = 16, threads = 0;
  std::uint64_t seed = 1;
  bool symmetric = false;
};

void SolveEnumerate(Context& ctx, const SolveOptions& o) {
  const BimatrixGame game = ReadBimatrix(ctx.Input(o.game));
  Json list = Json::array();
  Rational worst = 0;
  const auto record = [&](const ExactProfile& p) {
    worst = std::max(worst, ExactMaxRegret(game, p));
    list.push_back(ProfileToJson(p));
  };
  if (o.symmetric) {
    if (!game.symmetric()) throw InvalidArgument("game is not symmetric");
    const auto en = SymmetricSupportEnumeration(game.row_payoffs(),
                                                game.orientation(0));
    for (const auto& e : en.equilibria) record({e.strategy, e.strategy});
  } else {
    for (const auto& e : BimatrixSupportEnumeration(game).equilibria) {
      record({e.row, e.col});
    }
  }
  ctx.report.Add(ExactUpperBound("enumerated-ne-regret", "epsilon-ne", 0,
                                 worst));
  if (!o.output.empty()) WriteJson(o.output, {{"equilibria", list}});
}

void SolveGrid(Context& ctx, const SolveOptions& o) {
  const auto game = ReadGame(ctx.Input(o.game));
  const double eps = ToDouble(ParseEps(o.eps, "eps"));
  const auto hits = GridNeSearch(*game, o.resolution, eps, 100'000'000,
                                 o.threads);
  Json list = Json::array();
  double worst = 0.0;
  for (const auto& h : hits) {
    worst = std::max(worst, h.max_regret);
    list.push_back(ProfileToJson(h.profile));
  }
  ctx.report.Add(UpperBound("grid-ne-regret", "epsilon-ne",
                            eps + kCertificateSlack, worst));
  if (!o.output.empty()) WriteJson(o.output, {{"equilibria", list}});
}

void SolveRefine(Context& ctx, const SolveOptions& o) {
  const auto game = ReadGame(ctx.Input(o.game));
  const double eps = ToDouble(ParseEps(o.eps, "eps"));
  SearchOptions options;
  options.restarts = o.restarts;
  options.seed = o.seed;
  const SearchResult r = LocalNeSearch(*game, eps, options);
  const Certificate& c = r.best.certificate;
  ctx.report.Add({"local-search-ne", "epsilon-ne", eps, c.max_regret(),
                  r.best.converged});
  if (!o.output.empty()) WriteJson(o.output, ProfileToJson(r.best.profile));
}

void Solve2x2Command(Context& ctx, const SolveOptions& o) {
  const RationalMatrix a = ReadMatrix(ctx.Input(o.game));
  const ZeroSum2x2<Rational> s = Solve2x2(a);
  const ExactProfile profile{ExactStrategy({s.row[0], s.row[1]}),
                             ExactStrategy({s.col[0], s.col[1]})};
  const BimatrixGame game(a, a, {Orientation::kMinimize,
                                 Orientation::kMaximize});
  ctx.report.Add(ExactUpperBound("closed-form-regret", "zero-sum-2x2", 0,
                                 ExactMaxRegret(game, profile)));
  ctx.report.Add(ExactEquality("closed-form-value", "zero-sum-2x2", s.value,
                               ExactUtility(game, profile, 0)));
  if (!o.output.empty()) WriteJson(o.output, ProfileToJson(profile));
}

void SolveMaxClique(Context& ctx, const SolveOptions& o) {
  const Graph graph = ReadGraph(ctx.Input(o.graph));
  const CliqueResult c = MaxClique(graph);
  ctx.report.Add(UpperBound("clique-check", "max-clique", 0,
                            graph.IsClique(c.vertices) ? 0 : 1));
  if (!o.output.empty()) {
    std::vector<int> one_indexed;
    for (int v : c.vertices) one_indexed.push_back(v + 1);
    WriteJson(o.output, {{"size", c.size}, {"vertices", one_indexed}});
  }
}

// -------------------------------------------------------------- dynamics

struct DynamicsOptions {
  std::string problem, algorithm = "gda", init, output;
  int steps = 1000;
  double stepsize = 0.1;
};

void DynamicsRun(Context& ctx, const DynamicsOptions& o) {
  const auto problem = ReadProblem(ctx.Input(o.problem));
  DynamicsConfig config;
  config.algorithm = ParseAlgorithm(o.algorithm);
  config.stepsize = o.stepsize;
  config.horizon = o.steps;
  if (!o.init.empty()) {
    config.initial = PointFromProfile(ReadProfile(ctx.Input(o.init)));
  }
  const Trajectory t = Run(problem, config);
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,gap,drift,utility\n";
  for (int i = 0; i < t.size(); ++i) {
    csv << i << ',' << t.gaps[i] << ',' << t.drifts[i] << ','
        << t.utilities[i] << '\n';
  }
  if (!o.output.empty()) WriteText(o.output, csv.str());
  const bool symmetric_start =
      !config.initial || config.initial->x == config.initial->y;
  if (IsSymmetricAlgorithm(config.algorithm) && problem.antisymmetric() &&
      symmetric_start) {
    ctx.report.Add(UpperBound("symmetry-drift", "symmetric-dynamics-trap",
                              kDriftTolerance, SymmetryDrift(t)));
  }
}

// -------------------------------------------------------------- analytic

struct AnalyticOptions {
  bool verify = false;
  int grid_resolution = 0;
  std::string eps = "1/20";
};

BoundEntry SurdEquality(std::string name, const QuadSurd& a,
                        const QuadSurd& b) {
  return {std::move(name), "irrational-ne", a.ToString(), b.ToString(),
          a == b};
}

void AnalyticIrrational(Context& ctx, const AnalyticOptions& o) {
  const NormalFormGame game = IrrationalGame();
  const SurdProfile ne = IrrationalEquilibrium();
  const MixedProfile mixed = ToMixed(ne);
  ctx.report.Add(UpperBound("irrational-ne-regret", "irrational-ne",
                            kIrrationalRegretTolerance,
                            MaxRegret(game, mixed)));
  if (o.verify) {
    const char* names[] = {"x-indifference", "y-indifference",
                           "z-indifference"};
    for (int p = 0; p < 3; ++p) {
      const SurdStrategy v = IrrationalActionValues(ne, p);
      ctx.report.Add(SurdEquality(names[p], v[0], v[1]));
    }
  }
  if (o.grid_resolution > 0) {
    const double eps = ToDouble(ParseEps(o.eps, "eps"));
    double worst = 0.0;
    for (const auto& hit : GridNeSearch(game, o.grid_resolution, eps)) {
      for (int p = 0; p < 3; ++p) {
        worst = std::max(worst,
                         LinfDistance(hit.profile[p].probs(), mixed[p].probs()));
      }
    }
    ctx.report.Add(UpperBound("grid-ne-distance", "irrational-ne", eps, worst));
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Symmetric equilibria, gadgets and certificates", "symgames"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Write the JSON report here");

  std::string command;
  Handler handler;
  const auto leaf = [&](CLI::App* parent, const std::string& name,
                        const std::string& description, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->callback([&command, &handler, parent, name, h] {
      command = parent->get_name() + " " + name;
      handler = h;
    });
    return sub;
  };

  // gadget
  GadgetOptions g;
  CLI::App* gadget = app.add_subcommand("gadget", "Build a gadget instance");
  gadget->require_subcommand(1);
  auto* gteam = leaf(gadget, "team", "Adversarial team gadget from A",
                     [&g](Context& c) { GadgetTeam(c, g); });
  gteam->add_option("--game", g.game, "Matrix or symmetric game file")->required();
  gteam->add_option("--eps", g.eps, "Gadget parameter ε ∈ (0, 1/10]");
  gteam->add_option("-o,--output", g.output, "Game file to write")->required();
  gteam->add_option("--canonical-ne", g.canonical, "Also write the canonical NE");
  gteam->add_flag("--shift", g.shift, "Shift A below −1 first");
  auto* gquad = leaf(gadget, "quadratic", "Symmetric min-max gadget from R",
                     [&g](Context& c) { GadgetQuadratic(c, g); });
  gquad->add_option("--game", g.game)->required();
  gquad->add_option("-o,--output", g.output)->required();
  auto* gcoupled = leaf(gadget, "coupled", "Joint-domain gadget from R",
                        [&g](Context& c) { GadgetCoupled(c, g); });
  gcoupled->add_option("--game", g.game)->required();
  gcoupled->add_option("--width", g.width, "Coupling width δ");
  gcoupled->add_option("--gap-target", g.gap_target,
                       "Derive δ from the target gap");
  gcoupled->add_option("-o,--output", g.output)->required();
  auto* g3v3 = leaf(gadget, "team3v3", "Six-player team zero-sum gadget",
                    [&g](Context& c) { GadgetTeam3v3(c, g); });
  g3v3->add_option("--game", g.game)->required();
  g3v3->add_option("--eps", g.eps);
  g3v3->add_option("-o,--output", g.output)->required();
  g3v3->add_option("--canonical-ne", g.canonical,
                   "Also write the constructed symmetric profile");
  auto* gclique = leaf(gadget, "clique", "Clique games from a graph",
                       [&g](Context& c) { GadgetClique(c, g); });
  gclique->add_option("--graph", g.graph)->required();
  gclique->add_option("--variant", g.variant)
      ->check(CLI::IsMember({"base", "delta", "unique", "robust"}));
  gclique->add_option("--k", g.k, "Clique size (default: maximum clique)");
  gclique->add_option("--delta", g.delta);
  gclique->add_option("--eps", g.eps);
  gclique->add_option("-o,--output", g.output)->required();

  // check
  CheckOptions ch;
  CLI::App* check = app.add_subcommand("check", "Certify a profile");
  check->require_subcommand(1);
  auto* cne = leaf(check, "ne", "ε-Nash certificate",
                   [&ch](Context& c) { CheckNe(c, ch); });
  cne->add_option("--game", ch.game)->required();
  cne->add_option("--profile", ch.profile)->required();
  cne->add_option("--eps", ch.eps);
  cne->add_flag("--exact", ch.exact, "Compare regrets in exact arithmetic");
  auto* cwsne = leaf(check, "wsne", "Well-supported certificate",
                     [&ch](Context& c) { CheckWsne(c, ch); });
  cwsne->add_option("--game", ch.game)->required();
  cwsne->add_option("--profile", ch.profile)->required();
  cwsne->add_option("--eps", ch.eps);
  auto* cfone = leaf(check, "fone", "First-order NE residuals",
                     [&ch](Context& c) { CheckFoneCommand(c, ch); });
  cfone->add_option("--problem", ch.problem)->required();
  cfone->add_option("--profile", ch.profile)->required();
  cfone->add_option("--eps", ch.eps);
  auto* cgap = leaf(check, "gap", "GDA fixed-point gap",
                    [&ch](Context& c) { CheckGap(c, ch); });
  cgap->add_option("--problem", ch.problem)->required();
  cgap->add_option("--profile", ch.profile)->required();
  cgap->add_option("--eps", ch.eps);
  cgap->add_option("--stepsize", ch.stepsize);

  // backmap
  BackmapOptions b;
  CLI::App* backmap = app.add_subcommand("backmap", "Map a solution back");
  backmap->require_subcommand(1);
  auto* bteam = leaf(backmap, "team", "Team gadget to (A, A)",
                     [&b](Context& c) { BackmapTeam(c, b); });
  bteam->add_option("--game", b.game, "Source matrix A")->required();
  bteam->add_option("--eps", b.eps);
  bteam->add_option("--eps2", b.eps2, "Certified NE level (default ε²)");
  bteam->add_option("--profile", b.profile)->required();
  bteam->add_option("-o,--output", b.output);
  auto* bsym = leaf(backmap, "symmetric", "Symmetric min-max point to (R, Rᵀ)",
                    [&b](Context& c) { BackmapSymmetric(c, b); });
  bsym->add_option("--game", b.game, "Source matrix R")->required();
  bsym->add_option("--profile", b.profile)->required();
  bsym->add_option("--gap", b.gap, "Certified gap (default: measured)");
  bsym->add_option("-o,--output", b.output);
  auto* bmed = leaf(backmap, "median", "Joint-domain point to (R, Rᵀ)",
                    [&b](Context& c) { BackmapMedian(c, b); });
  bmed->add_option("--game", b.game, "Source matrix R")->required();
  bmed->add_option("--profile", b.profile)->required();
  bmed->add_option("--width", b.width)->required();
  bmed->add_option("--gap", b.gap, "Certified gap (default: measured)");
  bmed->add_option("-o,--output", b.output);
  auto* b3v3 = leaf(backmap, "team3v3", "3v3 gadget to (R, Rᵀ)",
                    [&b](Context& c) { BackmapTeam3v3(c, b); });
  b3v3->add_option("--game", b.game, "Source matrix R")->required();
  b3v3->add_option("--eps", b.eps);
  b3v3->add_option("--profile", b.profile)->required();
  b3v3->add_option("-o,--output", b.output);

  // audit
  AuditOptions a;
  CLI::App* audit = app.add_subcommand("audit", "Check a structural lemma");
  audit->require_subcommand(1);
  auto* astruct = leaf(audit, "gadget-structure", "Team gadget structure",
                       [&a](Context& c) { AuditGadgetStructure(c, a); });
  astruct->add_option("--game", a.game, "Source matrix A")->required();
  astruct->add_option("--eps", a.eps);
  astruct->add_option("--profile", a.profile)->required();
  auto* anash = leaf(audit, "nashgap", "Clique value gap of (A(G), A(G))",
                     [&a](Context& c) { AuditNashgap(c, a); });
  anash->add_option("--graph", a.graph)->required();
  anash->add_option("--cap", a.cap, "Vertex cap");
  auto* awsne = leaf(audit, "wsne-value", "Well-supported value bounds",
                     [&a](Context& c) { AuditWsneValue(c, a); });
  awsne->add_option("--graph", a.graph)->required();
  awsne->add_option("--k", a.k);
  awsne->add_option("--delta", a.delta);
  awsne->add_option("--eps", a.eps);
  awsne->add_option("--resolution", a.resolution);
  auto* aclass = leaf(audit, "classify", "Canonical form of a symmetric NE",
                      [&a](Context& c) { AuditClassify(c, a); });
  aclass->add_option("--graph", a.graph)->required();
  aclass->add_option("--profile", a.profile)->required();
  aclass->add_option("--k", a.k);
  aclass->add_option("--eps", a.eps);
  aclass->add_option("--delta", a.delta);
  aclass->add_option("--kind", a.kind)->check(CLI::IsMember({"nash", "wsne"}));
  aclass->add_option("--variant", a.variant)
      ->check(CLI::IsMember({"unique", "robust"}));
  auto* amass = leaf(audit, "mass-bound", "Mass on suboptimal actions",
                     [&a](Context& c) { AuditMassBound(c, a); });
  amass->add_option("--game", a.game)->required();
  amass->add_option("--profile", a.profile)->required();
  amass->add_option("--eps", a.eps);

  // solve
  SolveOptions s;
  CLI::App* solve = app.add_subcommand("solve", "Reference solvers");
  solve->require_subcommand(1);
  auto* senum = leaf(solve, "enumerate", "Support enumeration",
                     [&s](Context& c) { SolveEnumerate(c, s); });
  senum->add_option("--game", s.game)->required();
  senum->add_flag("--symmetric", s.symmetric, "Symmetric equilibria only");
  senum->add_option("-o,--output", s.output);
  auto* sgrid = leaf(solve, "grid", "Grid search for ε-NE",
                     [&s](Context& c) { SolveGrid(c, s); });
  sgrid->add_option("--game", s.game)->required();
  sgrid->add_option("--resolution", s.resolution);
  sgrid->add_option("--eps", s.eps);
  sgrid->add_option("--threads", s.threads);
  sgrid->add_option("-o,--output", s.output);
  auto* srefine = leaf(solve, "refine", "Local search for an ε-NE",
                       [&s](Context& c) { SolveRefine(c, s); });
  srefine->add_option("--game", s.game)->required();
  srefine->add_option("--eps", s.eps, "Target regret");
  srefine->add_option("--restarts", s.restarts);
  srefine->add_option("--seed", s.seed);
  srefine->add_option("-o,--output", s.output);
  auto* s2x2 = leaf(solve, "2x2", "Closed form of a 2×2 zero-sum game",
                    [&s](Context& c) { Solve2x2Command(c, s); });
  s2x2->add_option("--game", s.game, "Matrix (row player minimizes)")
      ->required();
  s2x2->add_option("-o,--output", s.output);
  auto* sclique = leaf(solve, "max-clique", "Exact maximum clique",
                       [&s](Context& c) { SolveMaxClique(c, s); });
  sclique->add_option("--graph", s.graph)->required();
  sclique->add_option("-o,--output", s.output);

  // dynamics
  DynamicsOptions d;
  CLI::App* dynamics = app.add_subcommand("dynamics", "Learning dynamics");
  dynamics->require_subcommand(1);
  auto* drun = leaf(dynamics, "run", "Run one algorithm",
                    [&d](Context& c) { DynamicsRun(c, d); });
  drun->add_option("--problem", d.problem)->required();
  drun->add_option("--algo", d.algorithm)
      ->check(CLI::IsMember({"gda", "eg", "ogda", "omwu", "alt-gda"}));
  drun->add_option("--steps", d.steps);
  drun->add_option("--stepsize", d.stepsize);
  drun->add_option("--init", d.init, "Initial point (profile file)");
  drun->add_option("-o,--output", d.output, "Trajectory CSV");

  // analytic
  AnalyticOptions an;
  CLI::App* analytic = app.add_subcommand("analytic", "Closed-form examples");
  analytic->require_subcommand(1);
  auto* airr = leaf(analytic, "irrational", "Team game with an irrational NE",
                    [&an](Context& c) { AnalyticIrrational(c, an); });
  airr->add_flag("--verify", an.verify, "Exact indifference checks");
  airr->add_option("--grid-resolution", an.grid_resolution,
                   "Also sweep a grid at this resolution");
  airr->add_option("--eps", an.eps, "Grid sweep regret level");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Context ctx{Report(command), out, err};
  for (const auto& arg : args) ctx.report.HashArgument(arg);
  int code = kSuccess;
  try {
    handler(ctx);
    code = ctx.report.AllSatisfied() ? kSuccess : kBoundViolated;
  } catch (const LemmaViolation& e) {
    err << "lemma violated: " << e.what() << "\n";
    code = kBoundViolated;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    code = kBoundViolated;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    code = kInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    code = kInputError;
  }
  const std::string text = ctx.report.ToJson(code).dump(2) + "\n";
  if (report_path.empty()) {
    out << text;
  } else {
    try {
      WriteText(report_path, text);
    } catch (const Error& e) {
      err << e.what() << "\n";
      return kInputError;
    }
  }
  return code;
}

}  // namespace symgames::cli
