#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "coclass/artin.hpp"
#include "coclass/catalog.hpp"
#include "coclass/errors.hpp"
#include "coclass/fields.hpp"
#include "coclass/lattice.hpp"
#include "coclass/rules.hpp"

namespace coclass::cli {

namespace {

using nlohmann::json;

enum class Format { text, json_lines };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::text;
  RealizeOptions realize;

  bool structured() const { return format == Format::json_lines; }
  void emit(const json& j) const { out << j.dump() << '\n'; }
};

// "(1^2),(2),(2),(2)"
std::string tau1_text(const std::array<AbelianInvariants, 4>& tau1) {
  std::string s;
  for (const auto& t : tau1) s += (s.empty() ? "" : ",") + format_log(t);
  return s;
}

json tau1_json(const std::array<AbelianInvariants, 4>& tau1) {
  json a = json::array();
  for (const auto& t : tau1) a.push_back(format_log(t));
  return a;
}

std::vector<AbelianInvariants> as_multiset(const std::array<AbelianInvariants, 4>& a) {
  std::vector<AbelianInvariants> v(a.begin(), a.end());
  std::sort(v.begin(), v.end());
  return v;
}

RealizeOptions options_from_env() {
  RealizeOptions o;
  if (const char* env = std::getenv("COCLASS_ORDER_BOUND")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      o.order_bound = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("COCLASS_ORDER_BOUND must be a positive integer, got '") +
                       env + "'");
    }
  }
  return o;
}

// --- group info -------------------------------------------------------------

struct InfoArgs {
  std::string id;
  std::string presentation_file;
};

int group_info(const Context& ctx, const InfoArgs& a) {
  Presentation pres;
  std::string title;
  std::optional<GroupId> id;
  if (!a.id.empty()) {
    id = parse_id(a.id);
    pres = lookup(*id).presentation;
    title = "<" + format_id(*id) + ">";
  } else {
    std::ifstream in(a.presentation_file);
    if (!in) throw Error("cannot read " + a.presentation_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    pres = parse_presentation(buf.str());
    title = a.presentation_file;
  }
  const ConcreteGroup g = realize(pres, ctx.realize);
  const GroupDescriptor d = descriptor(g);
  const ArtinPattern ap = artin_pattern(g);
  const auto ct = capitulation_type(ap.kappa);
  std::optional<ExceptionRow> row;
  if (id) {
    try {
      row = exceptions_table(*id);
    } catch (const NotExceptional&) {
    }
  }
  if (ctx.structured()) {
    json j{{"command", "group info"},
           {"group", title},
           {"order", g.order()},
           {"n", d.n},
           {"c", d.c},
           {"r", d.r},
           {"k", d.k},
           {"nilpotency_index", d.nilpotency_index()},
           {"cf_invariant", d.cf_invariant()},
           {"tau0", format_log(ap.tau0)},
           {"tau1", tau1_json(ap.tau1)},
           {"tau2", format_log(ap.tau2)},
           {"kappa", format_kappa(ap.kappa)},
           {"capitulation_type", ct ? json(*ct) : json(nullptr)}};
    if (row) {
      j["tau1_regular"] = row->tau1_regular;
      j["tau2_regular"] = row->tau2_regular;
    }
    ctx.emit(j);
    return 0;
  }
  auto& o = ctx.out;
  o << title << "  order " << g.order() << "\n";
  o << "n = " << d.n << "  c = " << d.c << "  r = " << d.r << "  k = " << d.k
    << "  m = " << d.nilpotency_index() << "  e = " << d.cf_invariant() << "\n";
  o << "tau0 = " << format_log(ap.tau0) << "\n";
  o << "tau1 = " << tau1_text(ap.tau1) << "\n";
  o << "tau2 = " << format_log(ap.tau2) << "\n";
  o << "kappa = " << format_kappa(ap.kappa);
  if (ct) o << "  (" << *ct << ")";
  o << "\n";
  if (row) {
    o << "table: tau1 " << (row->tau1_regular ? "regular" : "irregular") << ", tau2 "
      << (row->tau2_regular ? "regular" : "irregular") << "\n";
  }
  return 0;
}

// --- group verify-table1 -----------------------------------------------------

struct RowResult {
  GroupId id;
  bool ok = false;
  std::string detail;
  GroupDescriptor got;
  ArtinPattern pattern;
};

RowResult check_row(const ExceptionRow& row, GroupId id, const RealizeOptions& opt) {
  RowResult res;
  res.id = id;
  const ConcreteGroup g = realize(lookup(id).presentation, opt);
  res.got = descriptor(g);
  res.pattern = artin_pattern(g);
  std::vector<std::string> bad;
  if (res.got.c != row.c || res.got.r != row.r || res.got.k != row.k) {
    bad.push_back("(c,r,k) = (" + std::to_string(res.got.c) + "," + std::to_string(res.got.r) +
                  "," + std::to_string(res.got.k) + ")");
  }
  if (as_multiset(res.pattern.tau1) != as_multiset(row.tau1)) {
    bad.push_back("tau1 = " + tau1_text(res.pattern.tau1));
  }
  // The largest entry of the table row must be the computed polarization.
  const auto lo_max = [](const std::array<AbelianInvariants, 4>& t) {
    int m = 0;
    for (const auto& a : t) m = std::max(m, a.log_order());
    return m;
  };
  if (res.pattern.tau1[0].log_order() != lo_max(row.tau1)) bad.push_back("polarization");
  if (res.pattern.tau2 != row.tau2) bad.push_back("tau2 = " + format_log(res.pattern.tau2));
  res.ok = bad.empty();
  for (const auto& b : bad) res.detail += (res.detail.empty() ? "" : "; ") + b;
  return res;
}

int verify_table1(const Context& ctx) {
  std::vector<std::pair<const ExceptionRow*, GroupId>> work;
  for (const auto& row : exception_rows()) {
    for (const auto& id : row.ids) work.emplace_back(&row, id);
  }
  std::vector<std::future<RowResult>> jobs;
  for (const auto& [row, id] : work) {
    jobs.push_back(std::async(std::launch::async, check_row, std::cref(*row), id,
                              std::cref(ctx.realize)));
  }
  int passed = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const RowResult r = jobs[i].get();
    passed += r.ok ? 1 : 0;
    if (ctx.structured()) {
      ctx.emit({{"command", "group verify-table1"},
                {"id", format_id(r.id)},
                {"ok", r.ok},
                {"c", r.got.c},
                {"r", r.got.r},
                {"k", r.got.k},
                {"tau1", tau1_json(r.pattern.tau1)},
                {"tau2", format_log(r.pattern.tau2)},
                {"detail", r.detail}});
    } else {
      ctx.out << (r.ok ? "ok    " : "FAIL  ") << "<" << format_id(r.id) << ">  c=" << r.got.c
              << " r=" << r.got.r << " k=" << r.got.k << "  tau1 = " << tau1_text(r.pattern.tau1)
              << "  tau2 = " << format_log(r.pattern.tau2);
      if (!r.ok) ctx.out << "  [" << r.detail << "]";
      ctx.out << "\n";
    }
  }
  const bool all = passed == static_cast<int>(jobs.size());
  if (ctx.structured()) {
    ctx.emit({{"command", "group verify-table1"}, {"summary", true}, {"passed", passed},
              {"total", jobs.size()}, {"ok", all}});
  } else {
    ctx.out << passed << "/" << jobs.size() << " ids match the table\n";
  }
  return all ? 0 : 1;
}

// --- predict -----------------------------------------------------------------

struct PredictArgs {
  int c = 0;
  int r = 0;
  int k = 0;
  std::string tree = "n/a";
};

int predict(const Context& ctx, const PredictArgs& a) {
  const TreeTag tree = parse_tree(a.tree);
  const PredictedTTT p = predict_ttt(a.c, a.r, a.k, tree);
  if (ctx.structured()) {
    ctx.emit({{"command", "predict"}, {"c", a.c}, {"r", a.r}, {"k", a.k},
              {"tree", std::string(format_tree(tree))}, {"tau0", "(1^2)"},
              {"tau1", tau1_json(p.tau1)}, {"tau2", format_log(p.tau2)}});
  } else {
    ctx.out << "c = " << a.c << "  r = " << a.r << "  k = " << a.k << "  tree = "
            << format_tree(tree) << "\n";
    ctx.out << "tau0 = (1^2)\n";
    ctx.out << "tau1 = " << tau1_text(p.tau1) << "\n";
    ctx.out << "tau2 = " << format_log(p.tau2) << "\n";
  }
  return 0;
}

// --- lattice -----------------------------------------------------------------

struct LatticeArgs {
  int p = 3;
  int c = 0;
  int r = 0;
  int figure = 0;
  std::string emit = "summary";
  std::string output;
  std::string id;
};

LatticeModel model_for(int p, int c, int r) {
  return r == 1 ? maximal_class_lattice(p, c) : predicted_lattice(p, c, r);
}

int lattice_verify(const Context& ctx, const LatticeArgs& a) {
  const GroupId id = parse_id(a.id);
  const ConcreteGroup g = realize(lookup(id).presentation, ctx.realize);
  const LatticeReport rep = verify_lattice(g);
  if (ctx.structured()) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    ctx.emit({{"command", "lattice"}, {"id", format_id(id)}, {"normal_subgroups", rep.normal_subgroups},
              {"predicted", rep.predicted}, {"ok", rep.ok()}, {"checks", checks}});
  } else {
    ctx.out << "<" << format_id(id) << ">  c = " << rep.descriptor.c << "  r = " << rep.descriptor.r
            << "  normal subgroups " << rep.normal_subgroups << " (formula " << rep.predicted << ")\n";
    for (const auto& c : rep.checks) {
      ctx.out << (c.pass ? "  ok    " : "  FAIL  ") << c.name << ": " << c.detail << "\n";
    }
  }
  return rep.ok() ? 0 : 1;
}

int lattice(const Context& ctx, const LatticeArgs& a) {
  if (!a.id.empty()) return lattice_verify(ctx, a);
  std::vector<std::pair<int, int>> shapes;
  if (a.figure != 0) {
    try {
      shapes = figure_shapes(a.figure);
    } catch (const std::out_of_range&) {
      throw UsageError("--figure takes a value from 2 to 6");
    }
  } else {
    if (a.c == 0 || a.r == 0) throw UsageError("lattice needs --class and --coclass, --figure or --id");
    shapes.emplace_back(a.c, a.r);
  }
  std::ostringstream dot;
  for (const auto& [c, r] : shapes) {
    const LatticeModel m = model_for(a.p, c, r);
    const std::string text = emit_diagram(m);
    if (a.emit == "dot") dot << text;
    if (ctx.structured()) {
      json j{{"command", "lattice"}, {"p", a.p}, {"c", c}, {"r", r},
             {"nodes", m.nodes.size()}, {"edges", m.edges.size()}, {"diamonds", m.diamonds.size()}};
      if (r >= 2) j["formula"] = normal_count(a.p, c, r);
      if (a.emit == "dot" && a.output.empty()) j["dot"] = text;
      ctx.emit(j);
    } else if (a.emit == "summary" || !a.output.empty()) {
      ctx.out << "p = " << a.p << "  c = " << c << "  r = " << r << "  nodes " << m.nodes.size();
      if (r >= 2) ctx.out << " (formula " << normal_count(a.p, c, r) << ")";
      ctx.out << "  diamonds " << m.diamonds.size() << "\n";
    }
  }
  if (a.emit == "dot") {
    if (!a.output.empty()) {
      std::ofstream f(a.output, std::ios::binary);
      if (!f) throw Error("cannot write " + a.output);
      f << dot.str();
    } else if (!ctx.structured()) {
      ctx.out << dot.str();
    }
  }
  return 0;
}

// --- classify ----------------------------------------------------------------

struct ClassifyArgs {
  std::string input;
  std::string family;
  bool strict = false;
};

int classify_cmd(const Context& ctx, const ClassifyArgs& a) {
  const Validation mode = a.strict ? Validation::strict : Validation::lenient;
  const LoadResult loaded = load_records(a.input, mode);
  for (const auto& d : loaded.diagnostics) {
    ctx.err << a.input << ":" << d.line << ": skipped: " << d.message << "\n";
  }
  std::optional<Family> family;
  if (!a.family.empty()) family = parse_family(a.family);
  std::vector<FieldRecord> selected;
  for (const auto& r : loaded.records) {
    if (!family || r.family == *family) selected.push_back(r);
  }

  int failures = 0;
  for (const auto& r : selected) {
    std::optional<Classification> cls;
    std::string error;
    try {
      cls = classify(r, mode);
    } catch (const InconsistentPattern& e) {
      error = e.what();
      ++failures;
    }
    std::array<AbelianInvariants, 4> tau = r.tau;
    if (cls && cls->agrees_with_table == false) ++failures;
    if (ctx.structured()) {
      json j{{"command", "classify"}, {"family", std::string(format_family(r.family))},
             {"label", r.label}, {"tau", tau1_json(tau)}, {"ct", r.ct}};
      if (cls) {
        j["coclass"] = cls->verdict.coclass;
        j["abelian"] = cls->verdict.abelian;
        j["copolarization_lo"] = cls->copolarization_lo;
        if (cls->agrees_with_table) j["agrees_with_table"] = *cls->agrees_with_table;
      } else {
        j["error"] = error;
      }
      ctx.emit(j);
    } else {
      ctx.out << format_family(r.family) << "  " << r.label << "  tau = " << tau1_text(tau);
      if (cls) {
        ctx.out << "  cc = " << cls->verdict.coclass << (cls->verdict.abelian ? " (abelian)" : "")
                << "  co-polarization lo = " << cls->copolarization_lo;
        if (cls->agrees_with_table) {
          ctx.out << (*cls->agrees_with_table ? "  [table agrees]" : "  [TABLE DISAGREES]");
        }
      } else {
        ctx.out << "  error: " << error;
      }
      ctx.out << "\n";
    }
  }

  std::vector<Family> families;
  if (family) {
    families.push_back(*family);
  } else {
    for (const auto& r : selected) {
      if (std::find(families.begin(), families.end(), r.family) == families.end()) {
        families.push_back(r.family);
      }
    }
  }
  if (failures == 0) {
    for (Family f : families) {
      const auto table = minimal_table(selected, f);
      if (ctx.structured()) {
        json rows = json::array();
        for (const auto& m : table) rows.push_back({{"coclass", m.coclass}, {"label", m.record.label}});
        ctx.emit({{"command", "classify"}, {"minimal_table", std::string(format_family(f))},
                  {"rows", rows}});
      } else {
        ctx.out << "minimal labels, " << format_family(f) << ":";
        for (const auto& m : table) ctx.out << "  cc " << m.coclass << " -> " << m.record.label;
        ctx.out << "\n";
      }
    }
  }
  if (!loaded.diagnostics.empty() && !ctx.structured()) {
    ctx.err << loaded.diagnostics.size() << " row(s) skipped\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin patterns, coclass rules and normal lattices of 3-groups with abelianization (3,3)",
               "coclass"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  auto* group = app.add_subcommand("group", "Realize catalog groups");
  group->require_subcommand(1);
  InfoArgs info;
  auto* info_cmd = group->add_subcommand("info", "Descriptor and Artin pattern of one group");
  auto* id_opt = info_cmd->add_option("--id", info.id, "SmallGroups id, e.g. 243,5");
  auto* pres_opt =
      info_cmd->add_option("--presentation", info.presentation_file, "Presentation file");
  id_opt->excludes(pres_opt);
  info_cmd->require_option(1);
  auto* verify_cmd = group->add_subcommand("verify-table1", "Regression over the exceptions table");

  PredictArgs pred;
  auto* predict_cmd = app.add_subcommand("predict", "Predicted transfer target type");
  predict_cmd->add_option("--class", pred.c, "Nilpotency class c")->required();
  predict_cmd->add_option("--coclass", pred.r, "Coclass r")->required();
  predict_cmd->add_option("--defect", pred.k, "Defect of commutativity k")
      ->check(CLI::Range(0, 1));
  predict_cmd->add_option("--tree", pred.tree, "T40, T49 or T54 (coclass 2)");

  LatticeArgs lat;
  auto* lattice_cmd = app.add_subcommand("lattice", "Normal lattice model and diagrams");
  lattice_cmd->add_option("--prime", lat.p, "Odd prime p")->check(CLI::Range(3, 997));
  lattice_cmd->add_option("--class", lat.c, "Nilpotency class c");
  lattice_cmd->add_option("--coclass", lat.r, "Coclass r");
  lattice_cmd->add_option("--figure", lat.figure, "Shapes of figure 2 to 6");
  lattice_cmd->add_option("--emit", lat.emit, "summary or dot")
      ->check(CLI::IsMember({"summary", "dot"}));
  lattice_cmd->add_option("--output", lat.output, "Write the DOT text to this file");
  lattice_cmd->add_option("--id", lat.id, "Verify the model against a catalog group");

  ClassifyArgs cls;
  auto* classify_sub = app.add_subcommand("classify", "Coclass of field records");
  classify_sub->add_option("--input", cls.input, "CSV file")->required();
  classify_sub->add_option("--family", cls.family, "Only records of this family");
  classify_sub->add_flag("--strict", cls.strict, "Reject rows and patterns a group cannot realize");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    Context ctx{out, err, format == "json-lines" ? Format::json_lines : Format::text,
                options_from_env()};
    if (info_cmd->parsed()) return group_info(ctx, info);
    if (verify_cmd->parsed()) return verify_table1(ctx);
    if (predict_cmd->parsed()) return predict(ctx, pred);
    if (lattice_cmd->parsed()) return lattice(ctx, lat);
    if (classify_sub->parsed()) return classify_cmd(ctx, cls);
    err << "usage error: no command\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coclass::cli
