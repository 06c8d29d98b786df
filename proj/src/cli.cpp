#include "sieveforge/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "sieveforge/convergence.hpp"
#include "sieveforge/corpus.hpp"
#include "sieveforge/coverage.hpp"
#include "sieveforge/filters.hpp"
#include "sieveforge/functors.hpp"
#include "sieveforge/laws.hpp"
#include "sieveforge/model.hpp"

namespace sieveforge {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("SyntaxError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("SIEVEFORGE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

nlohmann::json point_json(const Carrier& c, const Point& p) {
  if (p.flavor == Flavor::category) return point_label(c, p);
  nlohmann::json j = nlohmann::json::array();
  for (int e : p.dual_kernel) j.push_back(c.lat().elements[e]);
  return j;
}

nlohmann::json assignment_json(const CoverAssignment& a) {
  nlohmann::json out = nlohmann::json::array();
  for (int o = 0; o < a.carrier->object_count(); ++o) {
    nlohmann::json row;
    row["object"] = a.carrier->object_name(o);
    row["sieves"] = nlohmann::json::array();
    for (int idx : a.table[o]) row["sieves"].push_back(a.carrier->sieve_names_of(o, idx));
    out.push_back(row);
  }
  return out;
}

Point resolve_point(const ModelDocument& doc, const CarrierPtr& carrier,
                    const std::string& point_arg, std::size_t budget) {
  if (doc.points.count(point_arg)) return doc.point(point_arg, budget);
  // bare morphism name (category) or comma-joined dual kernel (locale)
  if (carrier->flavor() == Flavor::category) {
    const FiniteCategory& cat = carrier->cat();
    int m = cat.require_morphism(point_arg);
    Point p;
    p.flavor = Flavor::category;
    p.morphism = m;
    return p;
  }
  const FiniteLattice& L = carrier->lat();
  std::vector<int> dual;
  for (auto& e : split_commas(point_arg)) dual.push_back(L.require(e));
  std::sort(dual.begin(), dual.end());
  for (auto& lp : locale_points(L))
    if (lp.dual_kernel == dual) {
      Point p;
      p.flavor = Flavor::locale;
      p.dual_kernel = lp.dual_kernel;
      p.kernel = lp.kernel;
      return p;
    }
  throw Error("ValidationError", "'" + point_arg + "' names no point of the carrier");
}

struct Options {
  std::string format = "text";
  std::size_t budget = default_budget();
  bool strict_basis = false;
};

void finish(CommandResult& res, Report& rep, const Options& opt, bool with_timing,
            long long elapsed_ms) {
  if (with_timing) rep.timing_ms = elapsed_ms;
  res.output = opt.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
  res.exit_code = rep.exit_code();
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult res;
  CLI::App app{"finite sieve calculus workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", opt.budget, "enumeration and saturation state budget");
  app.add_flag("--strict-basis", opt.strict_basis,
               "pullbacks of basis sieves must be members, not just contain one");

  // check KIND FILE [--name N]
  auto* check = app.add_subcommand("check", "run an axiom checker over a model file");
  std::string check_kind, check_file, check_name;
  check->add_option("kind", check_kind, "lattice|category|topology|filter|basis|subbase|functor")
      ->required()
      ->check(CLI::IsMember(
          {"lattice", "category", "topology", "filter", "basis", "subbase", "functor"}));
  check->add_option("file", check_file, "model file")->required();
  check->add_option("--name", check_name, "check one named model instead of all of the kind");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate sieves, filters or points");
  std::string enum_what, enum_file, enum_name, enum_object;
  enumerate->add_option("what", enum_what, "sieves|filters|ultrafilters|points")
      ->required()
      ->check(CLI::IsMember({"sieves", "filters", "ultrafilters", "points"}));
  enumerate->add_option("file", enum_file)->required();
  enumerate->add_option("--name", enum_name, "carrier name (defaults to the only one)");
  enumerate->add_option("--object,--element", enum_object, "object or element");

  auto* converge = app.add_subcommand("converge", "test convergence of a filter to a point");
  std::string cv_file, cv_filter, cv_topology, cv_object, cv_point;
  converge->add_option("file", cv_file)->required();
  converge->add_option("--filter", cv_filter)->required();
  converge->add_option("--topology", cv_topology)->required();
  converge->add_option("--object,--element", cv_object)->required();
  converge->add_option("--point", cv_point)->required();

  auto* closure_cmd = app.add_subcommand("closure", "points in the closure of a sieve");
  std::string cl_file, cl_topology, cl_object, cl_sieve;
  closure_cmd->add_option("file", cl_file)->required();
  closure_cmd->add_option("--topology", cl_topology)->required();
  closure_cmd->add_option("--object,--element", cl_object)->required();
  closure_cmd->add_option("--sieve", cl_sieve, "comma-separated members")->required();

  auto* cluster_cmd = app.add_subcommand("cluster", "cluster and limit points of a filter");
  std::string cu_file, cu_filter, cu_topology, cu_object;
  cluster_cmd->add_option("file", cu_file)->required();
  cluster_cmd->add_option("--filter", cu_filter)->required();
  cluster_cmd->add_option("--topology", cu_topology)->required();
  cluster_cmd->add_option("--object,--element", cu_object)->required();

  auto* compact = app.add_subcommand("compact", "compactness report for an object");
  std::string cp_file, cp_topology, cp_object, cp_method = "ultrafilter";
  compact->add_option("file", cp_file)->required();
  compact->add_option("--topology", cp_topology)->required();
  compact->add_option("--object,--element", cp_object)->required();
  compact->add_option("--method", cp_method)->check(CLI::IsMember({"ultrafilter", "exhaustive"}));

  auto* tycho = app.add_subcommand("tychonoff", "compactness of a meet of compact elements");
  std::string ty_file, ty_topology, ty_targets, ty_method = "ultrafilter";
  tycho->add_option("file", ty_file)->required();
  tycho->add_option("--topology", ty_topology)->required();
  tycho->add_option("--targets", ty_targets, "comma-separated elements")->required();
  tycho->add_option("--method", ty_method)->check(CLI::IsMember({"ultrafilter", "exhaustive"}));

  auto* laws_cmd = app.add_subcommand("laws", "run the law corpus");
  std::string laws_corpus = "default";
  LawOptions laws_opt;
  laws_cmd->add_option("--corpus", laws_corpus)->check(CLI::IsMember({"default", "quick"}));
  laws_cmd->add_option("--seed", laws_opt.seed);
  laws_cmd->add_option("--law", laws_corpus, "ignored placeholder")->group("");  // reserved

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> cargv;
    cargv.push_back("sieveforge");
    for (auto& a : argv) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    res.output = out.str();
    res.error = err.str();
    res.exit_code = code == 0 ? 0 : 2;  // help exits cleanly, usage errors do not
    return res;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  };

  try {
    if (*check) {
      ModelDocument doc = parse_model(read_file(check_file));
      Report rep;
      rep.command = "check " + check_kind + " " + check_file;
      rep.replay = "sieveforge check " + check_kind + " " + check_file;
      auto consider = [&](const std::string& name) {
        if (!check_name.empty() && name != check_name) return false;
        return true;
      };
      for (auto& [kind, name] : doc.declarations) {
        if (check_kind == "lattice" && kind == "lattice" && consider(name)) {
          FiniteLattice L = doc.lattice(name);
          rep.verdicts.push_back({name, Verdict::ok()});
          Verdict frame = is_frame(L);
          rep.notes.push_back(name + ": " + (frame ? "frame" : "not a frame") + ", " +
                              (is_boolean(L) ? "boolean" : "not boolean"));
        } else if (check_kind == "category" && kind == "category" && consider(name)) {
          doc.carrier(name, opt.budget);
          rep.verdicts.push_back({name, Verdict::ok()});
        } else if (check_kind == "functor" && kind == "functor" && consider(name)) {
          doc.functor(name, opt.budget);
          rep.verdicts.push_back({name, Verdict::ok()});
        } else if ((kind == "topology" || kind == "filter" || kind == "basis" ||
                    kind == "subbase") &&
                   (check_kind == kind || (!check_name.empty() && name == check_name))) {
          if (!consider(name)) continue;
          CoverAssignment a = doc.assignment(name, opt.budget);
          Verdict v;
          if (check_kind == "topology")
            v = check_topology(a);
          else if (check_kind == "filter")
            v = check_filter(a);
          else if (check_kind == "basis")
            v = check_basis(a, opt.strict_basis ? BasisMode::strict : BasisMode::relaxed);
          else
            v = check_subbase(a);
          rep.verdicts.push_back({name, v});
        }
      }
      if (rep.verdicts.empty())
        throw Error("UnresolvedReference", "no matching model to check in '" + check_file + "'");
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*enumerate) {
      ModelDocument doc = parse_model(read_file(enum_file));
      std::string carrier_name = enum_name;
      if (carrier_name.empty()) {
        for (auto& [kind, name] : doc.declarations)
          if (kind == "lattice" || kind == "category") {
            if (!carrier_name.empty())
              throw Error("UnresolvedReference", "several carriers; pick one with --name");
            carrier_name = name;
          }
        if (carrier_name.empty())
          throw Error("UnresolvedReference", "no carrier declared in '" + enum_file + "'");
      }
      CarrierPtr carrier = doc.carrier(carrier_name, opt.budget);
      Report rep;
      rep.command = "enumerate " + enum_what + " " + enum_file;
      if (enum_what == "sieves") {
        if (enum_object.empty()) throw Error("InvalidArgument", "--object is required");
        int o = carrier->require_object(enum_object);
        nlohmann::json sieves = nlohmann::json::array();
        for (int i = 0; i < carrier->universe_size(o); ++i)
          sieves.push_back(carrier->sieve_names_of(o, i));
        rep.extra["object"] = enum_object;
        rep.extra["count"] = carrier->universe_size(o);
        rep.extra["sieves"] = sieves;
      } else if (enum_what == "filters" || enum_what == "ultrafilters") {
        auto list = enum_what == "filters" ? enumerate_filters(carrier, opt.budget)
                                           : enumerate_ultrafilters(carrier, opt.budget);
        rep.extra["count"] = list.size();
        rep.extra[enum_what] = nlohmann::json::array();
        for (auto& f : list) rep.extra[enum_what].push_back(assignment_json(f.assignment));
      } else {
        nlohmann::json pts = nlohmann::json::array();
        if (enum_object.empty() && carrier->flavor() == Flavor::locale) {
          for (auto& p : locale_points(carrier->lat())) {
            nlohmann::json dual = nlohmann::json::array();
            for (int e : p.dual_kernel) dual.push_back(carrier->lat().elements[e]);
            pts.push_back(dual);
          }
        } else {
          if (enum_object.empty()) throw Error("InvalidArgument", "--object is required");
          for (auto& p : points_at(carrier, carrier->require_object(enum_object)))
            pts.push_back(point_json(*carrier, p));
        }
        rep.extra["count"] = pts.size();
        rep.extra["points"] = pts;
      }
      rep.verdicts.push_back({"enumerate", Verdict::ok()});
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*converge) {
      ModelDocument doc = parse_model(read_file(cv_file));
      CoverAssignment topo = doc.assignment(cv_topology, opt.budget);
      CoverAssignment filt = doc.assignment(cv_filter, opt.budget);
      int o = topo.carrier->require_object(cv_object);
      Point p = resolve_point(doc, topo.carrier, cv_point, opt.budget);
      bool conv = converges(filt, topo, o, p);
      Report rep;
      rep.command = "converge " + cv_file;
      rep.replay = "sieveforge converge " + cv_file + " --filter " + cv_filter + " --topology " +
                   cv_topology + " --object " + cv_object + " --point " + cv_point;
      rep.verdicts.push_back(
          {"converges", conv ? Verdict::ok()
                             : Verdict::fail(Witness{"convergence",
                                                     {cv_object},
                                                     {},
                                                     {},
                                                     "some cover-neighborhood is missing from "
                                                     "the filter"})});
      rep.extra["converges"] = conv;
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*closure_cmd) {
      ModelDocument doc = parse_model(read_file(cl_file));
      CoverAssignment topo = doc.assignment(cl_topology, opt.budget);
      auto pts = closure(topo, cl_object, split_commas(cl_sieve));
      Report rep;
      rep.command = "closure " + cl_file;
      rep.verdicts.push_back({"closure", Verdict::ok()});
      rep.extra["closure_points"] = nlohmann::json::array();
      for (auto& p : pts) rep.extra["closure_points"].push_back(point_json(*topo.carrier, p));
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*cluster_cmd) {
      ModelDocument doc = parse_model(read_file(cu_file));
      CoverAssignment topo = doc.assignment(cu_topology, opt.budget);
      CoverAssignment filt = doc.assignment(cu_filter, opt.budget);
      int o = topo.carrier->require_object(cu_object);
      Report rep;
      rep.command = "cluster " + cu_file;
      rep.verdicts.push_back({"cluster", Verdict::ok()});
      rep.extra["cluster_points"] = nlohmann::json::array();
      for (auto& p : cluster_points(filt, topo, o))
        rep.extra["cluster_points"].push_back(point_json(*topo.carrier, p));
      rep.extra["limit_points"] = nlohmann::json::array();
      for (auto& p : limit_points(filt, topo, o))
        rep.extra["limit_points"].push_back(point_json(*topo.carrier, p));
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*compact) {
      ModelDocument doc = parse_model(read_file(cp_file));
      CoverAssignment topo = doc.assignment(cp_topology, opt.budget);
      CompactnessMethod method = cp_method == "exhaustive" ? CompactnessMethod::exhaustive
                                                           : CompactnessMethod::ultrafilter;
      CompactnessReport r = compactness_report(topo, cp_object, method, opt.budget);
      Report rep;
      rep.command = "compact " + cp_file;
      rep.replay = "sieveforge compact " + cp_file + " --topology " + cp_topology +
                   " --object " + cp_object + " --method " + cp_method;
      rep.verdicts.push_back(
          {"compact", r.compact ? Verdict::ok()
                                : Verdict::fail(Witness{
                                      "compactness",
                                      {cp_object},
                                      {},
                                      {},
                                      r.quasi_compact ? "not hausdorff" : "not quasi-compact"})});
      rep.extra["object"] = r.object;
      rep.extra["method"] = cp_method;
      rep.extra["quasi_compact"] = r.quasi_compact;
      rep.extra["hausdorff"] = r.hausdorff;
      rep.extra["compact"] = r.compact;
      rep.extra["blind_points"] = nlohmann::json::array();
      for (auto& p : r.blind_points)
        rep.extra["blind_points"].push_back(point_json(*topo.carrier, p));
      if (r.clusterless_filter)
        rep.extra["clusterless_filter"] = assignment_json(*r.clusterless_filter);
      if (r.limit_pair) {
        rep.extra["limit_pair"] = {point_json(*topo.carrier, r.limit_pair->first),
                                   point_json(*topo.carrier, r.limit_pair->second)};
      }
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*tycho) {
      ModelDocument doc = parse_model(read_file(ty_file));
      CoverAssignment topo = doc.assignment(ty_topology, opt.budget);
      CompactnessMethod method = ty_method == "exhaustive" ? CompactnessMethod::exhaustive
                                                           : CompactnessMethod::ultrafilter;
      Verdict v = tychonoff_check(topo, split_commas(ty_targets), method, opt.budget);
      Report rep;
      rep.command = "tychonoff " + ty_file;
      rep.replay = "sieveforge tychonoff " + ty_file + " --topology " + ty_topology +
                   " --targets " + ty_targets;
      rep.verdicts.push_back({"meet-compact", v});
      finish(res, rep, opt, true, elapsed());
      return res;
    }

    if (*laws_cmd) {
      if (laws_corpus == "quick") {
        laws_opt.random_locales = 20;
        laws_opt.random_categories = 10;
        laws_opt.subtopology_pairs = 40;
        laws_opt.basis_samples = 100;
        laws_opt.boolean_max = 60;
      }
      auto results = run_law_corpus(laws_opt);
      Report rep;
      rep.command = "laws --corpus " + laws_corpus + " --seed " + std::to_string(laws_opt.seed);
      nlohmann::json laws = nlohmann::json::array();
      int falsified = 0;
      for (auto& r : results) {
        nlohmann::json entry;
        entry["law"] = r.law;
        entry["checked"] = r.checked;
        entry["violations"] = r.violation_count;
        if (!r.violations.empty()) entry["witnesses"] = r.violations;
        laws.push_back(entry);
        rep.verdicts.push_back(
            {r.law, r.pass() ? Verdict::ok()
                             : Verdict::fail(Witness{"law", {}, {}, {}, r.violations.front()})});
        falsified += r.pass() ? 0 : 1;
      }
      rep.extra["laws"] = laws;
      rep.extra["summary"] = {{"laws", results.size()},
                              {"falsified", falsified},
                              {"seed", laws_opt.seed}};
      // stdout stays byte-stable across runs; timing goes to stderr
      res.error = "laws corpus finished in " + std::to_string(elapsed()) + " ms\n";
      Options laws_fmt = opt;
      if (laws_fmt.format == "text" && !app.get_option("--format")->count()) // json by default here
        laws_fmt.format = "json";
      finish(res, rep, laws_fmt, false, 0);
      return res;
    }
  } catch (const Error& e) {
    Report rep;
    rep.command = "error";
    Witness w = e.witness();
    if (w.axiom.empty()) w.axiom = e.code();
    if (w.detail.empty()) w.detail = e.what();
    rep.verdicts.push_back({e.code(), Verdict::fail(w)});
    res.output = opt.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
    bool usage = e.code() == "SyntaxError" || e.code() == "UnresolvedReference" ||
                 e.code() == "ValidationError" || e.code() == "InvalidArgument";
    res.exit_code = usage ? 2 : 1;
    res.error = std::string(e.what()) + "\n";
    return res;
  }

  res.exit_code = 2;
  res.error = "no subcommand dispatched\n";
  return res;
}

}  // namespace sieveforge
