// skein: command-line front end for block dimensions, twist orders and
// form signatures. Output is one record per line, key=value or --json.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/blocks.hpp"
#include "skein/error.hpp"
#include "skein/form.hpp"
#include "skein/graph.hpp"
#include "skein/twist.hpp"
#include "skein/verify.hpp"

using namespace skein;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

bool json_output = false;

// Fields keep insertion order. Text mode prints key=value separated by
// spaces; JSON mode prints one object per line.
class Record {
 public:
  Record& operator()(const std::string& key, ordered_json value) {
    fields_.emplace_back(key, std::move(value));
    return *this;
  }

  void emit(std::ostream& out = std::cout) const {
    if (json_output) {
      ordered_json obj = ordered_json::object();
      for (const auto& [k, v] : fields_) obj[k] = v;
      out << obj.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [k, v] : fields_) {
      if (!first) out << ' ';
      first = false;
      out << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }

 private:
  std::vector<std::pair<std::string, ordered_json>> fields_;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out.empty() ? "-" : out;
}

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

TrivalentGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

ordered_json as_value(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos && s != "-") {
    try {
      return std::stol(s);
    } catch (const std::exception&) {
    }
  }
  return s;
}

struct Common {
  int p = 0;
  std::string graph_path;
  std::string legs;
};

void add_level(CLI::App* cmd, Common& c) { cmd->add_option("--p", c.p, "level p >= 3")->required(); }
void add_graph(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph", c.graph_path, "graph file (JSON)")->required();
  cmd->add_option("--legs", c.legs, "boundary colors c1,c2,... by leg index");
}

BoundaryColoring legs_for(const TrivalentGraph& g, const Common& c) {
  auto legs = parse_list(c.legs, "legs");
  if (c.legs.empty() && g.leg_count() > 0)
    throw Error(ErrorKind::invalid_argument, "graph has legs; pass --legs");
  return legs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal-block dimensions, twist orders and form signatures for skein TQFTs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_output, "one JSON object per line");

  Common common;
  std::size_t ceiling = kDefaultColoringCeiling;
  app.add_option("--max-colorings", ceiling, "ceiling on stored colorings")->capture_default_str();

  auto* dim = app.add_subcommand("dim", "dimension of the block space");
  add_level(dim, common);
  add_graph(dim, common);

  std::string colors;
  bool one_handle = false;
  auto* delta_cmd = app.add_subcommand("delta", "closed-form delta with J bounds");
  add_level(delta_cmd, common);
  delta_cmd->add_option("--colors", colors, "colors i1,...,in")->required();
  delta_cmd->add_flag("--one-handle", one_handle, "count j with W_{0,(i,j,j)} != 0");

  int edge = -1;
  auto* order = app.add_subcommand("order", "projective order of Dehn twists along decomposition curves");
  add_level(order, common);
  add_graph(order, common);
  order->add_option("--edge", edge, "edge index (default: all)");

  int ell = 0;
  bool leg_edges = false;
  auto* signature = app.add_subcommand("signature", "signs of the Hermitian form's diagonal");
  add_level(signature, common);
  add_graph(signature, common);
  signature->add_option("--ell", ell, "embedding A = exp(i pi ell / p); default the unitary one");
  signature->add_flag("--leg-edges", leg_edges, "include leg edge weights");

  auto* types = app.add_subcommand("curve-types", "curve types of the internal edges");
  types->add_option("--graph", common.graph_path, "graph file (JSON)")->required();

  std::string k_text;
  auto* check_k = app.add_subcommand("check-k", "check that twist orders divide a level vector");
  add_level(check_k, common);
  add_graph(check_k, common);
  check_k->add_option("--k", k_text, "v0,v1,... indexed by curve-types order")->required();

  std::string suite;
  VerifyOptions vopt;
  int n_max = -1;
  auto* verify = app.add_subcommand("verify", "sweep the closed formulas against enumeration");
  verify->add_option("--suite", suite, "delta|orders|genus1|verlinde|factor|stabilizer|indef|all")
      ->required()
      ->check(CLI::IsMember({"delta", "orders", "genus1", "verlinde", "factor", "stabilizer", "indef", "all"}));
  verify->add_option("--p-max", vopt.p_max, "largest level")->capture_default_str();
  verify->add_option("--p-min", vopt.p_min, "smallest level")->capture_default_str();
  verify->add_option("--g-max", vopt.g_max, "largest genus")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest number of legs (suite default if unset)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage-error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*dim) {
      const Level level(common.p);
      const auto g = load_graph(common.graph_path);
      const auto b = legs_for(g, common);
      Record()("p", common.p)("genus", g.genus())("legs", join(b))("dim", dim_blocks(level, g, b).get_str()).emit();
    } else if (*delta_cmd) {
      const Level level(common.p);
      const auto cs = parse_list(colors, "colors");
      const DeltaReport r = one_handle ? delta_one_handle(level, cs) : delta(level, cs);
      Record rec;
      rec("p", common.p)("variant", one_handle ? "one-handle" : "plain")("colors", join(cs))("delta", r.value)(
          "jmin", r.j_min)("jmax", r.j_max);
      if (r.typography_resolved) rec("typography_resolved", true);
      if (r.as_printed) rec("as_printed", *r.as_printed);
      rec.emit();
    } else if (*order) {
      const Level level(common.p);
      const auto g = load_graph(common.graph_path);
      const auto b = legs_for(g, common);
      std::vector<int> edges;
      if (edge >= 0) {
        edges.push_back(edge);
      } else {
        for (int e = 0; e < g.edge_count(); ++e) edges.push_back(e);
      }
      for (int e : edges) {
        const OrderReport r = order_report(level, g, e, b);
        Record rec;
        rec("p", common.p)("edge", e)("type", to_string(r.type))("effective",
                                                                  join(effective_colors(level, g, e, b)))(
            "computed", r.computed)("predicted", r.predicted ? ordered_json(*r.predicted) : ordered_json("not-covered"))(
            "row", r.row);
        if (r.typography_resolved) rec("typography_resolved", true);
        rec("match", r.match);
        rec.emit();
      }
    } else if (*signature) {
      const Level level(common.p);
      const auto g = load_graph(common.graph_path);
      const auto b = legs_for(g, common);
      const RootSelector root = ell == 0 ? RootSelector::unitary(common.p) : RootSelector(common.p, ell);
      WeightOptions opt;
      opt.include_leg_edges = leg_edges;
      opt.coloring_ceiling = ceiling;
      const SignaturePair sig = signature_up_to_sign(level, root, g, b, opt);
      Record()("p", common.p)("ell", root.ell())("dim", sig.dim())(
          "signature", std::to_string(sig.major) + "," + std::to_string(sig.minor))("definite", sig.definite())
          .emit();
    } else if (*types) {
      const auto g = load_graph(common.graph_path);
      const auto all = curve_types(g);
      for (std::size_t i = 0; i < all.size(); ++i)
        Record()("index", i)("type", to_string(all[i].type))("edges", join(all[i].edges)).emit();
    } else if (*check_k) {
      const Level level(common.p);
      const auto g = load_graph(common.graph_path);
      const auto b = legs_for(g, common);
      const auto kv = parse_list(k_text, "k");
      const FactorizationReport r = check_factorization(level, g, b, LevelVector(kv.begin(), kv.end()));
      for (const auto& v : r.violations)
        Record()("violation", true)("edge", v.edge)("type", to_string(v.type))("order", v.order)("k", v.k).emit();
      Record()("p", common.p)("k", join(kv))("orders", join(r.orders))("pass", r.pass()).emit();
      return r.pass() ? kExitOk : kExitMismatch;
    } else if (*verify) {
      if (n_max >= 0) vopt.n_max = n_max;
      vopt.coloring_ceiling = ceiling;
      std::vector<std::string> suites;
      if (suite == "all") {
        suites = suite_names();
      } else {
        suites.push_back(suite);
      }
      bool ok = true;
      for (const auto& s : suites) {
        const VerifyReport report = run_suite(s, vopt);
        for (const auto& rec : report.records) {
          Record out;
          out("suite", report.suite);
          for (const auto& [k, v] : rec.fields) out(k, as_value(v));
          if (rec.informational) out("informational", true);
          out.emit();
        }
        Record()("suite", report.suite)("summary", true)("parameters", report.parameters)(
            "cases", report.records.size())("matched", report.matched())("mismatched", report.mismatched())(
            "informational", report.informational())
            .emit();
        ok = ok && report.ok();
      }
      return ok ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
