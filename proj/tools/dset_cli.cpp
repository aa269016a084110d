// dset: command-line front end. Every subcommand reads one JSON document
// (file argument or stdin) and writes one JSON document to stdout.
//
// Exit codes: 0 ok, 1 domain error, 2 usage error or malformed input.

#include "dset/error.hpp"
#include "dset/json_io.hpp"
#include "dset/reductions.hpp"
#include "dset/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace dset;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format = "json";

Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError("bad json", e.what());
  }
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError("bad json", std::string("missing field '") + key + "'");
  return j.at(key);
}

// `text` is printed instead of the document under --format text.
void emit(const Json& payload, const std::string& text = "") {
  if (format == "text" && !text.empty())
    std::cout << text << "\n";
  else
    std::cout << document(payload).dump(2) << "\n";
}

Point parse_point_flag(const std::string& s) {
  try {
    return Point::parse(s);
  } catch (const DomainError& e) {
    throw UsageError("bad point '" + s + "': " + e.detail());
  }
}

Caps parse_caps(const std::string& text, std::size_t depth) {
  Caps caps;
  caps.depth = depth;
  if (text.empty()) return caps;
  // n_l,ball_len[,block_max[,max_nodes]]
  std::vector<std::size_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad --caps '" + text + "'");
    }
  }
  if (v.size() < 2 || v.size() > 4) throw UsageError("--caps takes n_l,ball_len[,block_max[,max_nodes]]");
  caps.n_l = v[0];
  caps.ball_len = v[1];
  if (v.size() > 2) caps.block_max = v[2];
  if (v.size() > 3) caps.max_nodes = v[3];
  return caps;
}

// ---------------------------------------------------------------------------

void cmd_rank_tree(const std::string& input) {
  const Json in = read_input(input);
  const Json& tree = in.is_object() && in.contains("tree") ? in.at("tree") : in;
  Json out;
  if (tree.is_array()) {
    const FinTree t = fintree_from_json(tree);
    const Ordinal o = rank(t);
    out["rank"] = o.to_string();
    out["nodes"] = t.size();
    if (in.is_object() && in.contains("against")) {
      const FinTree u = fintree_from_json(in.at("against"));
      const auto m = find_monotone_map(t, u);
      out["against_rank"] = rank(u).to_string();
      out["map"] = m ? monotone_map_to_json(*m) : Json(nullptr);
    }
    emit(out, o.to_string());
    return;
  }
  const SchemaPtr s = schema_from_json(tree);
  if (!is_wellfounded(*s)) {
    out["wellfounded"] = false;
    out["branch"] = node_to_json(konig_branch(*s, 8));
    emit(out, "ill-founded");
    return;
  }
  const Ordinal o = schema_rank(*s);
  out["wellfounded"] = true;
  out["rank"] = o.to_string();
  out["rank_cnf"] = ordinal_to_json(o);
  emit(out, o.to_string());
}

void cmd_alpha(const std::string& input, std::size_t trace) {
  const Json in = read_input(input);
  Compact k;
  std::vector<std::pair<Rational, Rational>> pairs;
  if (in.contains("example")) {
    const Json& ex = in.at("example");
    const RankExample r = build_rank_example(Ordinal::parse(need(ex, "rank").get<std::string>()),
                                             parse_pattern(ex.value("pattern", std::string("A1"))));
    k = r.compact;
    pairs.push_back({r.a, r.b});
  } else {
    k = compact_from_json(need(in, "compact"));
  }
  if (in.contains("pairs")) {
    pairs.clear();
    for (const auto& p : in.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw DomainError("bad json", "pair must be [a, b]");
      pairs.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
  } else if (pairs.empty()) {
    pairs = crossing_pairs(k);
  }
  Json per = Json::array();
  for (const auto& [a, b] : pairs) {
    const RankSummary s = rank_summary(k, a, b);
    Json row = {{"a", rational_to_json(a)},
                {"b", rational_to_json(b)},
                {"alpha", s.alpha.to_string()},
                {"alpha_a", s.alpha_a.to_string()},
                {"alpha_b", s.alpha_b.to_string()}};
    if (trace > 0) {
      Json steps = Json::array();
      for (const auto& c : derivation_trace(k, a, b, trace)) steps.push_back(compact_to_json(c));
      row["trace"] = steps;
    }
    per.push_back(row);
  }
  const Ordinal full = alpha_full(k, pairs);
  emit({{"pairs", per}, {"alpha", full.to_string()}}, full.to_string());
}

void cmd_eval(const std::string& input) {
  const Json in = read_input(input);
  const Point x = point_from_json(need(in, "point"));
  SymbolicFn f;
  Json out;
  if (in.contains("fn")) {
    f = symbolic_fn_from_json(in.at("fn"));
  } else {
    const DenseSequence seq = sequence_from_json(need(in, "sequence"));
    const Json& n = need(in, "n");
    if (!n.is_number_unsigned()) throw DomainError("bad json", "n must be a natural number");
    f = seq.term(n.get<std::uint64_t>());
    out["term"] = symbolic_fn_to_json(f);
  }
  const Rational v = eval(f, x);
  out["value"] = rational_to_json(v);
  emit(out, format_rational(v));
}

void cmd_converge(const std::string& input, std::size_t oracle_depth, std::size_t point_len) {
  const Json in = read_input(input);
  const DenseSequence seq = sequence_from_json(need(in, "sequence"));
  const IndexSet l = index_set_from_json(need(in, "index_set"));
  const PointSet domain = in.contains("domain") ? point_set_from_json(in.at("domain")) : PointSet::everything();
  Json out;
  if (in.contains("limit")) {
    const bool to = decide_convergence_to(seq, l, symbolic_fn_from_json(in.at("limit")), domain);
    out["converges_to_limit"] = to;
  }
  const Verdict v = decide_convergence(seq, l, domain);
  out["verdict"] = verdict_to_json(v);
  if (oracle_depth > 0) {
    const bool o = sampling_oracle_converges(seq, l, domain, oracle_depth, point_len);
    out["oracle"] = {{"depth", oracle_depth}, {"point_len", point_len}, {"converges", o}, {"agrees", o == v.converges}};
  }
  emit(out, v.converges ? "converges" : "diverges");
}

void cmd_lf_tree(const std::string& input, const std::string& kind_text, std::uint64_t d, std::size_t depth,
                 const std::string& caps_text, std::optional<std::size_t> witness, bool monotone,
                 const std::vector<std::uint64_t>& glued) {
  const Json in = read_input(input);
  const DenseSequence seq = sequence_from_json(need(in, "sequence"));
  const IndexSet l = index_set_from_json(need(in, "index_set"));
  const SymbolicFn f = in.contains("fn") ? symbolic_fn_from_json(in.at("fn")) : SymbolicFn::zero();
  const TreeKind kind = parse_tree_kind(kind_text);
  const Caps caps = parse_caps(caps_text, depth);
  Json out;
  out["kind"] = tree_kind_name(kind);
  out["caps"] = {{"n_l", caps.n_l},
                 {"ball_len", caps.ball_len},
                 {"depth", caps.depth},
                 {"block_max", caps.block_max},
                 {"max_nodes", caps.max_nodes}};
  if (!glued.empty()) {
    const FinTree t = truncate_glued(kind, seq, l, f, glued, caps);
    out["glued"] = glued;
    out["nodes"] = t.size();
    out["rank"] = rank(t).to_string();
    out["tree"] = fintree_to_json(t);
  } else {
    const TruncatedTree t = truncate_tree(kind, seq, l, f, d, caps);
    out["d"] = d;
    out["elements"] = t.elements;
    out["nodes"] = t.tree.size();
    out["rank"] = rank(t.tree).to_string();
    out["tree"] = fintree_to_json(t.tree);
  }
  if (witness) {
    const BranchWitness bw(seq, l, d);
    Json nodes = Json::array();
    for (std::size_t k = 0; k <= *witness; ++k) nodes.push_back(lfnode_to_json(bw.node(k)));
    out["witness"] = {{"point", point_to_json(bw.point())}, {"nodes", nodes}};
  }
  if (monotone) {
    const MonotoneWitness m = newp3_monotone(seq, l, f, d, caps);
    Json pairs = Json::array();
    for (const auto& [from, to] : m.map)
      pairs.push_back(Json::array({lfnode_to_json(m.s_tree.decode(from)), lfnode_to_json(m.t_tree.decode(to))}));
    out["monotone"] = {{"s_rank", rank(m.s_tree.tree).to_string()},
                       {"t_rank", rank(m.t_tree.tree).to_string()},
                       {"verified", verify_monotone(m.map, m.s_tree.tree, m.t_tree.tree)},
                       {"map", pairs}};
  }
  emit(out, out["rank"].get<std::string>());
}

void cmd_reduce_phi(const std::string& point, std::size_t take) {
  const Point x = parse_point_flag(point);
  const IndexSet phi = phi_map(x);
  Json words = Json::array();
  for (auto n : phi.take(take)) words.push_back(h_inv(n));
  emit({{"point", point_to_json(x)}, {"index_set", index_set_to_json(phi)}, {"words", words}});
}

void cmd_reduce_h_image(const std::string& point, std::size_t take) {
  const Point x = parse_point_flag(point);
  const IndexSet h = h_image(x);
  const auto first = h.take(take);
  std::string text;
  for (std::size_t i = 0; i < first.size(); ++i) text += (i ? " " : "") + std::to_string(first[i]);
  emit({{"point", point_to_json(x)}, {"index_set", index_set_to_json(h)}, {"elements", first}}, text);
}

void cmd_reduce_verify_p1(const std::string& input, std::size_t samples, std::uint64_t seed) {
  const Json in = read_input(input);
  const PointSet a = point_set_from_json(in.contains("set") ? in.at("set") : in);
  restrict_family(DenseSequence::split_cantor(), a);  // rejects inadmissible sets
  // Points are drawn in a fixed order from the seed, as in the selftest.
  const auto pool = enumerate_points(6);
  std::uint64_t state = seed;
  Json cases = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < samples; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const Point& x = pool[(state >> 33) % pool.size()];
    const bool ok = verify_p1(x, a);
    all = all && ok;
    cases.push_back({{"point", x.to_string()}, {"in_set", a.contains(x)}, {"ok", ok}});
  }
  emit({{"set", a.to_string()}, {"seed", seed}, {"samples", samples}, {"all_ok", all}, {"cases", cases}},
       all ? "ok" : "FAILED");
  if (!all) throw DomainError("reduction failed", "verify-p1 returned false on some sample");
}

void cmd_reduce_psi_glue(const std::string& input, std::size_t take) {
  const Json in = read_input(input);
  const SchemaPtr t = schema_from_json(need(in, "tree"));
  const SchemaPtr t0 = schema_from_json(need(in, "base"));
  Psi psi;
  if (in.contains("psi")) {
    const Json& p = in.at("psi");
    psi.a = p.value("a", std::uint64_t{1});
    psi.b = p.value("b", std::uint64_t{0});
  }
  const IndexSet glued = psi_glue(t, t0, psi);
  Json out = {{"index_set", index_set_to_json(glued)}, {"elements", glued.take(take)}};
  if (psi.a == 1 && psi.b == 0) {
    const Verdict v = decide_convergence(DenseSequence::node_indicators(), glued);
    out["node_indicator_verdict"] = verdict_to_json(v);
  }
  emit(out);
}

void cmd_selftest(const std::string& suite, std::size_t samples, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  Json reports = Json::array();
  bool all = true;
  std::string text;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, samples, seed);
    all = all && r.passed();
    reports.push_back(report_to_json(r));
    text += n + ": " + (r.passed() ? "PASS" : "FAIL") + " (" + std::to_string(r.cases.size() - r.failures()) + "/" +
            std::to_string(r.cases.size()) + ")\n";
  }
  text.pop_back();
  emit({{"seed", seed}, {"passed", all}, {"suites", reports}}, text);
  if (!all) throw DomainError("selftest failed", "some cases failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranks, convergence and reductions on Cantor space"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  std::string input = "-";

  auto* rank_tree = app.add_subcommand("rank-tree", "Rank of a finite tree or tree schema");
  rank_tree->add_option("input", input, "JSON file, - for stdin");

  std::size_t trace = 0;
  auto* alpha = app.add_subcommand("alpha", "Separation ranks of a function on a countable compactum");
  alpha->add_option("input", input, "JSON file, - for stdin");
  alpha->add_option("--trace", trace, "Also emit this many derivative steps per pair");

  auto* evalc = app.add_subcommand("eval", "Evaluate a catalog function or a sequence term at a point");
  evalc->add_option("input", input, "JSON file, - for stdin");

  std::size_t oracle_depth = 0, point_len = 6;
  auto* converge = app.add_subcommand("converge", "Decide pointwise convergence of a subsequence");
  converge->add_option("input", input, "JSON file, - for stdin");
  converge->add_option("--oracle-depth", oracle_depth, "Also run the sampling oracle with this many terms");
  converge->add_option("--point-len", point_len, "Sampling oracle point description length");

  std::string kind = "T", caps_text;
  std::uint64_t d = 1;
  std::size_t depth = 5;
  std::optional<std::size_t> witness;
  bool monotone = false;
  std::vector<std::uint64_t> glued;
  auto* lf = app.add_subcommand("lf-tree", "Truncated reduction tree of an index set");
  lf->add_option("input", input, "JSON file, - for stdin");
  lf->add_option("--kind", kind, "T or S")->check(CLI::IsMember({"T", "S"}));
  lf->add_option("--d", d, "Separation index");
  lf->add_option("--depth", depth, "Node length cap")->check(CLI::PositiveNumber);
  lf->add_option("--caps", caps_text, "n_l,ball_len[,block_max[,max_nodes]]");
  lf->add_option("--witness", witness, "Emit branch witness nodes up to this length");
  lf->add_flag("--monotone", monotone, "Emit the monotone map from the S window into the T window");
  lf->add_option("--glued", glued, "Glue the trees for these d values")->delimiter(',');

  auto* reduce = app.add_subcommand("reduce", "Explicit reductions");
  reduce->require_subcommand(1);
  std::string point = "(0)";
  std::size_t take = 8, samples = 100;
  std::uint64_t seed = kDefaultSeed;
  auto* phi = reduce->add_subcommand("phi", "Sibling words off a branch");
  phi->add_option("--point", point, "Point as prefix(period)");
  phi->add_option("--take", take, "Number of words to list");
  auto* himg = reduce->add_subcommand("h-image", "Index set H(x) in the split family");
  himg->add_option("--point", point, "Point as prefix(period)");
  himg->add_option("--take", take, "Number of elements to list");
  auto* vp1 = reduce->add_subcommand("verify-p1", "Check x not in A iff H(x) converges on A");
  vp1->add_option("input", input, "JSON point set, - for stdin");
  vp1->add_option("--samples", samples, "Number of sampled points");
  vp1->add_option("--seed", seed, "Sampling seed");
  auto* psi = reduce->add_subcommand("psi-glue", "Glue a tree schema onto a base schema");
  psi->add_option("input", input, "JSON file, - for stdin");
  psi->add_option("--take", take, "Number of elements to list");

  std::string suite = "all";
  std::size_t st_samples = 0;
  std::uint64_t st_seed = kDefaultSeed;
  auto* selftest = app.add_subcommand("selftest", "Run the seeded property suites");
  selftest->add_option("--suite", suite, "Suite name or all");
  selftest->add_option("--samples", st_samples, "Cases per suite, 0 for the suite default");
  selftest->add_option("--seed", st_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rank_tree) cmd_rank_tree(input);
    if (*alpha) cmd_alpha(input, trace);
    if (*evalc) cmd_eval(input);
    if (*converge) cmd_converge(input, oracle_depth, point_len);
    if (*lf) cmd_lf_tree(input, kind, d, depth, caps_text, witness, monotone, glued);
    if (*phi) cmd_reduce_phi(point, take);
    if (*himg) cmd_reduce_h_image(point, take);
    if (*vp1) cmd_reduce_verify_p1(input, samples, seed);
    if (*psi) cmd_reduce_psi_glue(input, take);
    if (*selftest) {
      if (suite != "all") {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite " + suite);
      }
      cmd_selftest(suite, st_samples, st_seed);
    }
  } catch (const UsageError& e) {
    std::cerr << "dset: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    // Failing reports were already printed; only the exit code changes.
    if (e.code() == "selftest failed" || e.code() == "reduction failed") return 1;
    std::cout << error_json(e.code(), e.detail()).dump() << "\n";
    return e.code() == "bad json" ? 2 : 1;
  } catch (const Json::exception& e) {
    std::cout << error_json("bad json", e.what()).dump() << "\n";
    return 2;
  }
  return 0;
}
