// Command-line front end: parses the segment notation, runs the matching
// and poset machinery and emits text or JSON. Exit codes: 0 computed and
// any checked property holds, 1 negative verdict or violations, 2 usage or
// parse error, 3 budget exceeded.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mseg/derive.hpp"
#include "mseg/matching.hpp"
#include "mseg/mpi.hpp"
#include "mseg/notation.hpp"
#include "mseg/oracle.hpp"
#include "mseg/zposet.hpp"

using nlohmann::json;

namespace {

struct Options {
  bool json_out = false;
  std::string window_arg;
  std::size_t budget = 100000;
  std::string mode = "parallel";
};

mseg::Window resolve_window(const Options& opt) {
  if (!opt.window_arg.empty()) return mseg::window_from_string(opt.window_arg);
  if (const char* env = std::getenv("MSEG_WINDOW")) return mseg::window_from_string(env);
  return mseg::Window::acceptance();
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json witness_json(const mseg::MatchingWitness& w) {
  json arr = json::array();
  for (const auto& [l, r] : w.assignment) arr.push_back({l, r});
  return arr;
}

std::string witness_text(const mseg::MatchingInstance& inst, const mseg::MatchingWitness& w) {
  if (w.assignment.empty()) return "{}";
  std::string out = "{";
  for (std::size_t k = 0; k < w.assignment.size(); ++k) {
    auto [l, r] = w.assignment[k];
    if (k) out += ", ";
    out += std::to_string(l) + ":" + mseg::print_segment(inst.labeled[l]) + " -> " +
           std::to_string(r) + ":" + mseg::print_segment(inst.labeled[r]);
  }
  return out + "}";
}

std::string index_set_text(const mseg::MatchingInstance& inst, const std::vector<int>& ids) {
  std::string out = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(ids[k]) + ":" + mseg::print_segment(inst.labeled[ids[k]]);
  }
  return out + "}";
}

json side_json(const mseg::MatchingInstance& inst,
               const std::optional<mseg::MatchingWitness>& w) {
  json j = {{"holds", w.has_value()},
            {"left", inst.left},
            {"right", inst.right},
            {"witness", nullptr}};
  if (w) j["witness"] = witness_json(*w);
  return j;
}

int cmd_check(const Options& opt, const std::string& m_str, const std::string& d_str) {
  mseg::LineTable table = mseg::LineTable::standard();
  mseg::Multisegment m = mseg::parse_multisegment(m_str, table);
  mseg::Segment d = mseg::parse_segment(d_str, table);
  auto lcw = mseg::decide(mseg::Side::LC, m, d);
  auto rcw = mseg::decide(mseg::Side::RC, m, d);
  mseg::MatchingInstance il = mseg::make_instance(m, d, mseg::Side::LC);
  mseg::MatchingInstance ir = mseg::make_instance(m, d, mseg::Side::RC);
  bool irr = lcw.has_value() && rcw.has_value();

  json labeling = json::array();
  for (const auto& s : il.labeled) labeling.push_back(mseg::print_segment(s));
  json j = {{"schema_version", 1},
            {"m", mseg::print_multisegment(m)},
            {"segment", mseg::print_segment(d)},
            {"labeling", labeling},
            {"lc", side_json(il, lcw)},
            {"rc", side_json(ir, rcw)},
            {"irreducible", irr}};
  std::string text;
  text += "m = " + mseg::print_multisegment(m) + "\n";
  text += "segment = " + mseg::print_segment(d) + "\n";
  text += "LC: " + std::string(lcw ? "holds" : "fails") + "  X = " +
          index_set_text(il, il.left) + "  Xt = " + index_set_text(il, il.right) +
          (lcw ? "  f = " + witness_text(il, *lcw) : "") + "\n";
  text += "RC: " + std::string(rcw ? "holds" : "fails") + "  Y = " +
          index_set_text(ir, ir.left) + "  Yt = " + index_set_text(ir, ir.right) +
          (rcw ? "  f = " + witness_text(ir, *rcw) : "") + "\n";
  text += std::string("product: ") + (irr ? "irreducible" : "reducible") + "\n";
  emit(opt, j, text);
  return irr ? 0 : 1;
}

int cmd_mpi(const Options& opt, const std::string& m_str, const std::string& n_str) {
  mseg::LineTable table = mseg::LineTable::standard();
  mseg::Multisegment m = mseg::parse_multisegment(m_str, table);
  mseg::Multisegment n = mseg::parse_multisegment(n_str, table);
  mseg::MembershipReport rep = mseg::membership(m, n);
  json j = mseg::membership_to_json(rep);
  j["schema_version"] = 1;
  j["m"] = mseg::print_multisegment(m);
  std::string text;
  for (const auto& v : rep.verdicts)
    text += mseg::print_segment(v.segment) + ": LC " + (v.lc ? "holds" : "fails") + ", RC " +
            (v.rc ? "holds" : "fails") + (v.in_m() ? "  (in M)" : "  (not in M)") + "\n";
  text += std::string("overall: ") + (rep.overall ? "in M" : "not in M") + "\n";
  emit(opt, j, text);
  return rep.overall ? 0 : 1;
}

int cmd_closure(const Options& opt, const std::string& m_str, const std::string& n_str) {
  mseg::LineTable table = mseg::LineTable::standard();
  mseg::Multisegment m = mseg::parse_multisegment(m_str, table);
  mseg::Multisegment n = mseg::parse_multisegment(n_str, table);
  mseg::LowerSetOptions lopts;
  lopts.node_budget = opt.budget;
  mseg::ClosureVerdict v = mseg::closure_check(m, n, lopts);
  json j = mseg::closure_to_json(v);
  j["schema_version"] = 1;
  j["m"] = mseg::print_multisegment(m);
  j["n"] = mseg::print_multisegment(n);
  std::string text = "nodes checked: " + std::to_string(v.nodes_checked) + "\n";
  if (v.holds) {
    text += "closure holds\n";
  } else {
    const auto& c = *v.counterexample;
    text += "closure VIOLATED at node " + mseg::print_multisegment(c.node) + " segment " +
            mseg::print_segment(c.segment) + " (LC " + (c.lc ? "holds" : "fails") + ", RC " +
            (c.rc ? "holds" : "fails") + ")\n";
  }
  emit(opt, j, text);
  return v.holds ? 0 : 1;
}

int cmd_poset(const Options& opt, const std::string& m_str, bool dot) {
  mseg::LineTable table = mseg::LineTable::standard();
  mseg::Multisegment m = mseg::parse_multisegment(m_str, table);
  mseg::LowerSetOptions lopts;
  lopts.node_budget = opt.budget;
  lopts.parallel = opt.mode != "serial";
  mseg::PosetGraph g = mseg::lower_set(m, lopts);
  if (dot) {
    std::cout << mseg::to_dot(g);
    return 0;
  }
  json j = mseg::poset_to_json(g);
  j["schema_version"] = 1;
  std::string text =
      std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    text += "  n" + std::to_string(i) + ": " + mseg::print_multisegment(g.nodes[i]) + "\n";
  for (const auto& e : g.edges)
    text += "  n" + std::to_string(e.parent) + " -> n" + std::to_string(e.child) + "  via " +
            mseg::print_segment(e.lhs) + ", " + mseg::print_segment(e.rhs) + "\n";
  emit(opt, j, text);
  return 0;
}

int cmd_mx(const Options& opt, const std::string& n_str, const std::string& d_str,
           bool unfiltered) {
  mseg::LineTable table = mseg::LineTable::standard();
  mseg::Multisegment n = mseg::parse_multisegment(n_str, table);
  mseg::Segment d = mseg::parse_segment(d_str, table);
  mseg::Multisegment mx = mseg::mx_generic(n, d, !unfiltered);
  json j = {{"schema_version", 1},
            {"n", mseg::print_multisegment(n)},
            {"segment", mseg::print_segment(d)},
            {"filtered", !unfiltered},
            {"mx", mseg::print_multisegment(mx)},
            {"segments", mseg::multisegment_to_json(mx)}};
  emit(opt, j, mseg::print_multisegment(mx) + "\n");
  return 0;
}

int cmd_enumerate(const Options& opt) {
  mseg::Window w = resolve_window(opt);
  std::vector<mseg::Multisegment> mults = mseg::enumerate_multisegments(w);
  json arr = json::array();
  std::string text;
  for (const auto& m : mults) {
    arr.push_back(mseg::print_multisegment(m));
    text += mseg::print_multisegment(m) + "\n";
  }
  text += std::to_string(mults.size()) + " multisegments\n";
  json j = {{"schema_version", 1},
            {"window", w.to_json()},
            {"count", mults.size()},
            {"multisegments", arr}};
  emit(opt, j, text);
  return 0;
}

int cmd_selftest(const Options& opt, const std::string& suite, bool corrupt) {
  mseg::Window w = resolve_window(opt);
  mseg::SuiteOptions sopts;
  sopts.parallel = opt.mode != "serial";
  sopts.corrupt = corrupt;
  std::vector<std::string> ids =
      suite == "all" ? mseg::suite_names() : std::vector<std::string>{suite};
  json reports = json::array();
  bool all_pass = true;
  std::string text;
  for (const auto& id : ids) {
    mseg::Report rep = mseg::run_suite(id, w, sopts);
    reports.push_back(rep.to_json());
    all_pass = all_pass && rep.passed();
    text += rep.suite + ": checked " + std::to_string(rep.checked) + ", violations " +
            std::to_string(rep.violations.size()) + (rep.advisory ? " (advisory)" : "") + " [" +
            std::to_string(rep.wall_ms) + " ms]\n";
    for (const auto& v : rep.violations) {
      text += "  " + v.description + "\n";
      for (const auto& r : v.repro) text += "    " + r + "\n";
    }
  }
  json j = {{"schema_version", 1}, {"reports", reports}};
  emit(opt, j, text);
  return all_pass ? 0 : 1;
}

int cmd_parse(const Options& opt, const std::string& s) {
  mseg::LineTable table = mseg::LineTable::standard();
  mseg::Multisegment m = mseg::parse_multisegment(s, table);
  json j = {{"schema_version", 1},
            {"canonical", mseg::print_multisegment(m)},
            {"segments", mseg::multisegment_to_json(m)}};
  emit(opt, j, mseg::print_multisegment(m) + "\n");
  return 0;
}

int cmd_derive(const Options& opt, const std::string& rule,
               const std::vector<std::string>& args) {
  mseg::LineTable table = mseg::LineTable::standard();
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw mseg::error("derive " + rule + " expects " + std::to_string(k) + " arguments");
  };
  if (rule == "same-end") {
    need(2);
    mseg::Multisegment p = mseg::parse_multisegment(args[0], table);
    mseg::Segment d = mseg::parse_segment(args[1], table);
    mseg::DerivativeRewrite r = mseg::rewrite_same_end_steinberg(p, d);
    emit(opt, mseg::rewrite_to_json(r), mseg::print_multisegment(r.output) + "\n");
    return 0;
  }
  if (rule == "nested") {
    need(2);
    mseg::Multisegment m = mseg::parse_multisegment(args[0], table);
    mseg::Segment d = mseg::parse_segment(args[1], table);
    mseg::DerivativeRewrite r = mseg::rewrite_nested_zelevinsky(m, d);
    emit(opt, mseg::rewrite_to_json(r), mseg::print_multisegment(r.output) + "\n");
    return 0;
  }
  if (rule == "nested-multi") {
    need(2);
    mseg::Multisegment m = mseg::parse_multisegment(args[0], table);
    mseg::Multisegment n = mseg::parse_multisegment(args[1], table);
    mseg::DerivativeRewrite r = mseg::rewrite_nested_zelevinsky(m, n);
    emit(opt, mseg::rewrite_to_json(r), mseg::print_multisegment(r.output) + "\n");
    return 0;
  }
  if (rule == "jacquet-zelevinsky" || rule == "jacquet-steinberg") {
    need(2);
    mseg::Segment d = mseg::parse_segment(args[0], table);
    int i = std::stoi(args[1]);
    auto kind = rule == "jacquet-zelevinsky" ? mseg::JacquetKind::Zelevinsky
                                             : mseg::JacquetKind::Steinberg;
    auto [lhs, rhs] = mseg::jacquet_segment(kind, d, i);
    json j = {{"schema_version", 1},
              {"segment", mseg::print_segment(d)},
              {"depth", i},
              {"factors", {mseg::segment_to_json(lhs), mseg::segment_to_json(rhs)}}};
    std::string lt = lhs.is_empty() ? "0" : mseg::print_segment(lhs);
    std::string rt = rhs.is_empty() ? "0" : mseg::print_segment(rhs);
    emit(opt, j, lt + "  (x)  " + rt + "\n");
    return 0;
  }
  if (rule == "compose") {
    if (args.size() < 2) throw mseg::error("derive compose expects m and at least one step");
    mseg::Multisegment m = mseg::parse_multisegment(args[0], table);
    std::vector<mseg::Multisegment> chain;
    for (std::size_t k = 1; k < args.size(); ++k)
      chain.push_back(mseg::parse_multisegment(args[k], table));
    mseg::ComposeResult r = mseg::compose_check(m, chain);
    json j = {{"schema_version", 1}, {"ok", r.ok}, {"detail", r.detail}};
    emit(opt, j, r.ok ? "compose orders agree\n" : "compose mismatch: " + r.detail + "\n");
    return r.ok ? 0 : 1;
  }
  throw mseg::error("unknown derive rule '" + rule +
                    "' (same-end, nested, nested-multi, jacquet-zelevinsky, "
                    "jacquet-steinberg, compose)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multisegment calculator: matching criteria, Zelevinsky order, derivatives"};
  app.require_subcommand(1);

  Options opt;
  // CLI11 rewrites bracketed values of vector options, so every argument is
  // a plain string and shared flags are registered per subcommand
  auto shared = [&opt](CLI::App* sub) {
    sub->add_flag("--json", opt.json_out, "emit JSON instead of text");
    sub->add_option("--window", opt.window_arg, "window as lo:hi:maxseg:maxlen[:lines]")
        ->envname("MSEG_WINDOW");
    sub->add_option("--budget", opt.budget, "node budget for poset walks");
    sub->add_option("--mode", opt.mode, "serial or parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
  };

  std::string m_str, n_str, d_str, suite, rule;
  bool dot = false, unfiltered = false, corrupt = false;

  auto* c_check = app.add_subcommand("check", "LC/RC and irreducibility of <m> x <segment>");
  c_check->add_option("m", m_str)->required();
  c_check->add_option("segment", d_str)->required();
  shared(c_check);

  auto* c_mpi = app.add_subcommand("mpi", "membership of n in M for the product with <m>");
  c_mpi->add_option("m", m_str)->required();
  c_mpi->add_option("n", n_str)->required();
  shared(c_mpi);

  auto* c_closure = app.add_subcommand("closure", "verify membership over the lower set of n");
  c_closure->add_option("m", m_str)->required();
  c_closure->add_option("n", n_str)->required();
  shared(c_closure);

  auto* c_poset = app.add_subcommand("poset", "intersection-union lower set of m");
  c_poset->add_option("m", m_str)->required();
  c_poset->add_flag("--dot", dot, "emit graphviz");
  shared(c_poset);

  auto* c_derive = app.add_subcommand("derive", "derivative rewrites");
  c_derive->add_option("rule", rule)->required();
  c_derive->allow_extras(true);  // rule arguments, taken verbatim
  shared(c_derive);

  auto* c_mx = app.add_subcommand("mx", "generic mx multisegment of n at a segment");
  c_mx->add_option("n", n_str)->required();
  c_mx->add_option("segment", d_str)->required();
  c_mx->add_flag("--unfiltered", unfiltered, "use the unfiltered formula");
  shared(c_mx);

  auto* c_enum = app.add_subcommand("enumerate", "list the window's multisegments");
  shared(c_enum);

  auto* c_selftest = app.add_subcommand("selftest", "run a property suite over the window");
  c_selftest->add_option("suite", suite)->required();
  c_selftest->add_flag("--corrupt", corrupt, "corrupt the matching relation (sensitivity)");
  shared(c_selftest);

  auto* c_parse = app.add_subcommand("parse", "parse and canonicalize");
  c_parse->add_option("text", m_str)->required();
  shared(c_parse);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return cmd_check(opt, m_str, d_str);
    if (c_mpi->parsed()) return cmd_mpi(opt, m_str, n_str);
    if (c_closure->parsed()) return cmd_closure(opt, m_str, n_str);
    if (c_poset->parsed()) return cmd_poset(opt, m_str, dot);
    if (c_derive->parsed()) return cmd_derive(opt, rule, c_derive->remaining());
    if (c_mx->parsed()) return cmd_mx(opt, n_str, d_str, unfiltered);
    if (c_enum->parsed()) return cmd_enumerate(opt);
    if (c_selftest->parsed()) return cmd_selftest(opt, suite, corrupt);
    if (c_parse->parsed()) return cmd_parse(opt, m_str);
  } catch (const mseg::parse_error& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const mseg::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const mseg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
