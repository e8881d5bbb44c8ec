#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "circlegap/asymptotics.hpp"
#include "circlegap/classify.hpp"
#include "circlegap/discrepancy.hpp"
#include "circlegap/figures.hpp"
#include "circlegap/theta_input.hpp"

using json = nlohmann::ordered_json;
using namespace circlegap;

namespace {

json quad_json(const QuadSurd& q) {
  return json{{"a", q.a().to_string()}, {"b", q.b().to_string()}, {"c", q.c().to_string()}};
}

json matrix_json(const GLMatrix& m) {
  return json{{"p", m.p.to_string()},
              {"q", m.q.to_string()},
              {"r", m.r.to_string()},
              {"s", m.s.to_string()}};
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::fwrite(data.data(), 1, data.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string prefix_text(const PrefixTuple& t) {
  std::string s = "[0;";
  for (int i = 0; i < 5; ++i) s += std::to_string(t[static_cast<size_t>(i)]) + ",";
  return s + "(1)]";
}

struct Options {
  std::string theta;
  std::string out;
  std::string format = "json";
  unsigned digits = 6;
  int jobs = 1;
  long long m = 1;
  long long M = 100;
  long long lo = 1, hi = 200;
  long max_depth = 0;
};

// exact gap for any accepted theta: closed form for golden inputs, the
// brute-force oracle otherwise
QuadSurd gap_for(const ThetaInput& th, long long m) {
  if (th.is_golden()) return gap_tail_form(th.cf, BigInt(m));
  return circle_gaps(th.as_quad(), static_cast<long>(m)).max_gap;
}

int cmd_d(const Options& opt) {
  ThetaInput th = parse_theta(opt.theta);
  QuadSurd d = gap_for(th, opt.m);
  QuadSurd scaled = QuadSurd(BigInt(opt.m + 1)) * d;
  json out{{"theta", th.name},
           {"m", opt.m},
           {"d", quad_json(d)},
           {"decimal", d.decimal(opt.digits)},
           {"normalized", scaled.decimal(opt.digits)}};
  write_out(opt.out, out.dump(2) + "\n");
  return 0;
}

int cmd_dm(const Options& opt) {
  ThetaInput th = parse_theta(opt.theta);
  QuadSurd v;
  if (th.is_golden()) {
    v = max_scaled_gap(th.cf, BigInt(opt.M));
  } else {
    QuadSurd q = th.as_quad();
    v = QuadSurd(BigInt(0));
    for (long long m = 1; m <= opt.M; ++m) {
      QuadSurd cand =
          QuadSurd(BigInt(m + 1)) * circle_gaps(q, static_cast<long>(m)).max_gap;
      if (v < cand) v = cand;
    }
  }
  bool below = v < QuadSurd::rho();
  json out{{"theta", th.name},
           {"M", opt.M},
           {"dm", quad_json(v)},
           {"decimal", v.decimal(opt.digits)},
           {"below_rho", below}};
  write_out(opt.out, out.dump(2) + "\n");
  return 0;
}

int cmd_m0(const Options& opt) {
  ThetaInput th = parse_theta(opt.theta);
  if (!th.is_golden())
    throw std::invalid_argument("m0: theta must be an eventually-golden continued fraction");
  EventualBound eb = eventual_bound(th.cf);
  json out{{"theta", th.name},
           {"certified", eb.certified.to_string()},
           {"empirical", eb.empirical.to_string()},
           {"d0", eb.d0}};
  write_out(opt.out, out.dump(2) + "\n");
  return 0;
}

int cmd_search(const Options& opt) {
  SearchReport rep = search_sharp_set(opt.jobs);
  if (opt.max_depth > 0) {
    // soundness rerun at a deeper cutoff: results must not change
    for (const auto& cls : rep.classes) {
      if (!check_candidate(cls.rep, opt.max_depth).pass ||
          !check_candidate(cls.partner, opt.max_depth).pass)
        throw std::runtime_error("search: depth extension changed a verdict");
    }
  }
  std::string summary = std::to_string(rep.passing.size()) + " tuples / " +
                        std::to_string(rep.classes.size()) + " classes";
  if (opt.format == "json") {
    json classes = json::array();
    for (const auto& cls : rep.classes) {
      classes.push_back(json{{"prefix", prefix_text(cls.rep)},
                             {"partner", prefix_text(cls.partner)},
                             {"value", quad_json(cls.val)},
                             {"matrix", matrix_json(cls.matrix)},
                             {"decimal", cls.val.decimal(3)}});
    }
    json out{{"scanned", rep.scanned},
             {"classes", classes},
             {"equality_with_rho_seen", rep.any_equality},
             {"summary", summary}};
    write_out(opt.out, out.dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& cls : rep.classes) {
      out += prefix_text(cls.rep) + "  value=" + cls.val.to_string() +
             "  decimal=" + cls.val.decimal(3) + "  matrix=[" + cls.matrix.p.to_string() +
             "," + cls.matrix.q.to_string() + ";" + cls.matrix.r.to_string() + "," +
             cls.matrix.s.to_string() + "]  partner=" + prefix_text(cls.partner) + "\n";
    }
    out += summary + "\n";
    write_out(opt.out, out);
  }
  return 0;
}

int cmd_etas(const Options& opt) {
  json arr = json::array();
  for (const auto& e : eta_catalog()) {
    arr.push_back(json{{"index", e.index},
                       {"prefix", prefix_text(e.prefix)},
                       {"value", quad_json(e.val)},
                       {"decimal", e.val.decimal(opt.digits)},
                       {"matrix", matrix_json(e.matrix)},
                       {"k5", e.k5.to_string()},
                       {"k6", e.k6.to_string()}});
  }
  write_out(opt.out, json{{"etas", arr}}.dump(2) + "\n");
  return 0;
}

int cmd_runs(const Options& opt) {
  auto runs = runs_covering(opt.lo, opt.hi);
  if (opt.format == "csv") {
    std::string out = "i,n,sigma,tau\n";
    for (const auto& r : runs)
      out += std::to_string(r.eta) + "," + std::to_string(r.level) + "," +
             std::to_string(r.lo) + "," + std::to_string(r.hi) + "\n";
    write_out(opt.out, out);
  } else {
    json arr = json::array();
    for (const auto& r : runs)
      arr.push_back(
          json{{"eta", r.eta}, {"level", r.level}, {"sigma", r.lo}, {"tau", r.hi}});
    write_out(opt.out, json{{"runs", arr}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_asymptotics(const Options& opt) {
  json table = json::array();
  for (int i = 1; i <= 8; ++i) {
    LiLs l = li_ls_exact(i);
    QuadSurd hundred(BigInt(100));
    table.push_back(json{{"i", i},
                         {"li", quad_json(l.li)},
                         {"li_percent", (l.li * hundred).decimal(1)},
                         {"ls", quad_json(l.ls)},
                         {"ls_percent", (l.ls * hundred).decimal(1)}});
  }
  auto counts = minimizer_counts_fast(opt.M);
  json w = json::object();
  for (int i = 1; i <= 8; ++i)
    w["eta" + std::to_string(i)] = counts[static_cast<size_t>(i)];
  json out{{"li_ls", table},
           {"W_at_M", json{{"M", opt.M}, {"counts", w}, {"ties", counts[0]}}},
           {"note", "table entry LS(2): the exact limit is (2*sqrt5-3)/11 ~ 13.4%; "
                    "the widely printed closed form (2-3*sqrt5)/11 is negative and "
                    "inconsistent with its own percentage"}};
  write_out(opt.out, out.dump(2) + "\n");
  return 0;
}

int cmd_fig_circle(const Options& opt) {
  ThetaInput th = parse_theta(opt.theta);
  GapReport rep = circle_gaps(th.as_quad(), static_cast<long>(opt.m));
  if (opt.format == "csv") {
    write_out(opt.out, circle_figure_csv(rep, opt.digits));
  } else if (opt.format == "json") {
    json gaps = json::array();
    for (const auto& g : rep.distinct_gaps)
      gaps.push_back(json{{"value", quad_json(g)}, {"decimal", g.decimal(opt.digits)}});
    json out{{"theta", th.name},
             {"m", opt.m},
             {"distinct_gaps", gaps},
             {"max_gap", quad_json(rep.max_gap)}};
    write_out(opt.out, out.dump(2) + "\n");
  } else {
    write_out(opt.out, circle_figure_svg(rep));
  }
  return 0;
}

int cmd_fig_scatter(const Options& opt) {
  auto rows = scatter_rows(opt.lo, opt.hi, opt.digits);
  if (opt.format == "csv")
    write_out(opt.out, scatter_csv(rows));
  else
    write_out(opt.out, scatter_svg(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circlegap: exact three-distance discrepancy for golden continued fractions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--jobs", opt.jobs, "worker threads for search/scans");
  app.add_option("--format", opt.format, "output format: json, csv, svg, table");
  app.add_option("--digits", opt.digits, "decimal digits in rendered numbers");
  app.add_option("--out", opt.out, "output file (default stdout)");

  auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--theta", opt.theta, "eta1..eta8, phi, pi, [a0;...,(1)], p/q, surd:a,b,c")
        ->required();
  };

  auto* s_d = app.add_subcommand("d", "exact gap d_theta(m) and (m+1) d_theta(m)");
  add_theta(s_d);
  s_d->add_option("--m", opt.m, "number of steps")->required();

  auto* s_dm = app.add_subcommand("dm", "max of (m+1) d_theta(m) over m in [1,M]");
  add_theta(s_dm);
  s_dm->add_option("--M", opt.M, "scan bound")->required();

  auto* s_m0 = app.add_subcommand("m0", "certified/empirical onset of the sub-rho regime");
  add_theta(s_m0);

  auto* s_search = app.add_subcommand("search", "enumerate the sharp prefixes (exact box scan)");
  s_search->add_option("--max-depth", opt.max_depth, "soundness rerun with a deeper cutoff");

  app.add_subcommand("etas", "the eight catalog values with exact data");

  auto* s_runs = app.add_subcommand("runs", "closed-form minimizer run intervals");
  s_runs->add_option("--lo", opt.lo, "range start (>= 70 recommended)")->required();
  s_runs->add_option("--hi", opt.hi, "range end")->required();

  auto* s_asym = app.add_subcommand("asymptotics", "exact LI/LS table and W counts");
  s_asym->add_option("--M", opt.M, "count minimizers up to M");

  auto* s_fc = app.add_subcommand("fig-circle", "circle partition figure (svg/csv/json)");
  add_theta(s_fc);
  s_fc->add_option("--m", opt.m, "number of steps")->required();

  auto* s_fs = app.add_subcommand("fig-scatter", "min D_M scatter figure (svg/csv)");
  s_fs->add_option("--lo", opt.lo, "range start")->required();
  s_fs->add_option("--hi", opt.hi, "range end")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (s_d->parsed()) return cmd_d(opt);
    if (s_dm->parsed()) return cmd_dm(opt);
    if (s_m0->parsed()) return cmd_m0(opt);
    if (s_search->parsed()) return cmd_search(opt);
    if (app.get_subcommand("etas")->parsed()) return cmd_etas(opt);
    if (s_runs->parsed()) return cmd_runs(opt);
    if (s_asym->parsed()) return cmd_asymptotics(opt);
    if (s_fc->parsed()) return cmd_fig_circle(opt);
    if (s_fs->parsed()) return cmd_fig_scatter(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TieError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
