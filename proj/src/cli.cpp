#include "sympair/cli.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "sympair/distinction.hpp"
#include "sympair/langlands.hpp"

namespace sympair {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end())
      throw ParseError("unknown key \"" + key + "\" in " + where);
  }
}

Rat parse_rat_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float())
    throw ParseError(where + ": floating point is not accepted; write rationals as \"p/q\"");
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

Int parse_int_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) return detail::parse_integer_text(v.get<std::string>());
  throw ParseError(where + ": expected an integer");
}

Weight parse_weight(const json& v, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError(where + ": expected an array of length " + std::to_string(dim));
  Weight w;
  w.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    w.push_back(parse_rat_field(v[i], where + "[" + std::to_string(i + 1) + "]"));
  return w;
}

std::vector<Int> parse_int_vector(const json& v, int dim, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError(where + ": expected an integer array of length " + std::to_string(dim));
  std::vector<Int> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_int_field(v[i], where + "[" + std::to_string(i + 1) + "]"));
  return out;
}

RootSystemPtr parse_root_system(const json& v) {
  if (!v.is_object()) throw ParseError("root_system must be an object");
  reject_unknown_keys(v, {"family", "rank", "cartan_matrix", "realization", "n"},
                      "root_system");
  RootSystemSpec spec;
  if (v.contains("family")) {
    if (!v["family"].is_string()) throw ParseError("root_system.family must be a string");
    spec.family = v["family"].get<std::string>();
    if (!v.contains("rank") || !v["rank"].is_number_integer())
      throw ParseError("root_system.rank must be an integer when a family is given");
    spec.rank = v["rank"].get<int>();
  } else if (v.contains("rank")) {
    throw ParseError("root_system.rank needs a family");
  }
  if (v.contains("cartan_matrix")) {
    const auto& cm = v["cartan_matrix"];
    if (!cm.is_array() || cm.empty())
      throw ParseError("root_system.cartan_matrix must be a nonempty array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : cm) {
      if (!r.is_array()) throw ParseError("root_system.cartan_matrix rows must be arrays");
      std::vector<long long> row;
      for (const auto& e : r) {
        if (!e.is_number_integer())
          throw ParseError("root_system.cartan_matrix entries must be integers");
        row.push_back(e.get<long long>());
      }
      rows.push_back(std::move(row));
    }
    spec.cartan = std::move(rows);
  }
  if (v.contains("realization")) {
    const auto real = v["realization"].get<std::string>();
    if (real == "standard") {
      spec.realization = Realization::standard;
    } else if (real == "gl_n") {
      spec.realization = Realization::gl;
      if (!v.contains("n") || !v["n"].is_number_integer())
        throw ParseError("root_system.n must be an integer for the gl_n realization");
      spec.gl_n = v["n"].get<int>();
    } else {
      throw ParseError("root_system.realization must be \"standard\" or \"gl_n\"");
    }
  } else if (v.contains("n")) {
    throw ParseError("root_system.n needs realization \"gl_n\"");
  }
  return build_root_system(spec);
}

InvolutionSpec parse_involution(const json& v, RootSystemPtr rs) {
  if (v.is_string()) {
    if (v.get<std::string>() == "galois-split") return InvolutionSpec::galois_split(rs);
    throw ParseError("unknown involution shorthand \"" + v.get<std::string>() +
                     "\" (only \"galois-split\")");
  }
  if (!v.is_object()) throw ParseError("involution must be an object or \"galois-split\"");
  reject_unknown_keys(v, {"matrix", "epsilon", "mode"}, "involution");
  if (!v.contains("matrix") || !v["matrix"].is_array())
    throw ParseError("involution.matrix must be an array of rows");
  const int dim = rs->ambient_dim();
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : v["matrix"]) {
    if (!r.is_array() || static_cast<int>(r.size()) != dim)
      throw ParseError("involution.matrix rows must have length " + std::to_string(dim));
    std::vector<Rat> row;
    for (const auto& e : r) row.push_back(parse_rat_field(e, "involution.matrix"));
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != dim)
    throw ParseError("involution.matrix must have " + std::to_string(dim) + " rows");
  int epsilon = -1;
  if (v.contains("epsilon")) {
    if (!v["epsilon"].is_number_integer())
      throw ParseError("involution.epsilon must be +1 or -1");
    epsilon = v["epsilon"].get<int>();
  }
  FixedRootMode mode = FixedRootMode::semilinear;
  if (v.contains("mode")) {
    if (!v["mode"].is_string()) throw ParseError("involution.mode must be a string");
    const auto parsed = fixed_root_mode_from_name(v["mode"].get<std::string>());
    if (!parsed)
      throw ParseError("involution.mode must be semilinear, linear_plus, or linear_minus");
    mode = *parsed;
  }
  return InvolutionSpec::make(std::move(rs), QMatrix::from_rows(rows), epsilon, mode);
}

PairSpec parse_pair(const json& job) {
  json pair_doc;
  if (job.contains("pair")) {
    pair_doc = job["pair"];
    if (!pair_doc.is_object()) throw ParseError("pair must be an object");
    reject_unknown_keys(pair_doc, {"root_system", "involution", "label"}, "pair");
  } else if (job.contains("root_system")) {
    pair_doc["root_system"] = job["root_system"];
    if (job.contains("involution")) pair_doc["involution"] = job["involution"];
  } else {
    throw ParseError("job needs a pair or a root_system");
  }
  if (!pair_doc.contains("root_system"))
    throw ParseError("pair.root_system is required");
  RootSystemPtr rs = parse_root_system(pair_doc["root_system"]);
  InvolutionSpec theta = pair_doc.contains("involution")
                             ? parse_involution(pair_doc["involution"], rs)
                             : InvolutionSpec::galois_split(rs);
  std::string label;
  if (pair_doc.contains("label")) {
    if (!pair_doc["label"].is_string()) throw ParseError("pair.label must be a string");
    label = pair_doc["label"].get<std::string>();
  }
  return make_pair(std::move(rs), std::move(theta), std::move(label));
}

CharacterOfT parse_character(const json& job, const RootSystem& rs) {
  if (!job.contains("character") || !job["character"].is_object())
    throw ParseError("job.character is required and must be an object");
  const json& v = job["character"];
  reject_unknown_keys(v, {"lambda_re", "lambda_im", "m"}, "character");
  const int dim = rs.ambient_dim();
  if (!v.contains("lambda_re"))
    throw ParseError("character.lambda_re is required");
  Weight re = parse_weight(v["lambda_re"], dim, "character.lambda_re");
  Weight im = v.contains("lambda_im") ? parse_weight(v["lambda_im"], dim, "character.lambda_im")
                                      : zero_weight(dim);
  std::vector<Int> m = v.contains("m") ? parse_int_vector(v["m"], dim, "character.m")
                                       : std::vector<Int>(static_cast<size_t>(dim), Int(0));
  return make_character(rs, std::move(re), std::move(im), std::move(m));
}

struct Options {
  long long seed = 0;
  long long budget = kDefaultBudget;
  long long solver_budget = kDefaultSolverBudget;
  std::string format = "json";
  std::optional<int> k_max;
  bool parabolics = false;
  int workers = 1;
};

Options parse_options(const json& job, const CliOverrides& overrides) {
  Options opt;
  if (job.contains("options")) {
    const json& v = job["options"];
    if (!v.is_object()) throw ParseError("options must be an object");
    reject_unknown_keys(v, {"seed", "budget", "solver_budget", "format", "k_max",
                            "parabolics", "workers"},
                        "options");
    auto get_ll = [&](const char* key, long long lo) {
      if (!v[key].is_number_integer())
        throw ParseError(std::string("options.") + key + " must be an integer");
      const long long x = v[key].get<long long>();
      if (x < lo)
        throw ParseError(std::string("options.") + key + " must be at least " + std::to_string(lo));
      return x;
    };
    if (v.contains("seed")) opt.seed = get_ll("seed", 0);
    if (v.contains("budget")) opt.budget = get_ll("budget", 1);
    if (v.contains("solver_budget")) opt.solver_budget = get_ll("solver_budget", 1);
    if (v.contains("k_max")) opt.k_max = static_cast<int>(get_ll("k_max", 0));
    if (v.contains("workers")) opt.workers = static_cast<int>(get_ll("workers", 1));
    if (v.contains("parabolics")) {
      if (!v["parabolics"].is_boolean()) throw ParseError("options.parabolics must be a boolean");
      opt.parabolics = v["parabolics"].get<bool>();
    }
    if (v.contains("format")) {
      if (!v["format"].is_string()) throw ParseError("options.format must be a string");
      opt.format = v["format"].get<std::string>();
    }
  }
  if (overrides.format) opt.format = *overrides.format;
  if (overrides.seed) opt.seed = *overrides.seed;
  if (overrides.budget) opt.budget = *overrides.budget;
  if (opt.format != "json" && opt.format != "table")
    throw ParseError("format must be \"json\" or \"table\"");
  return opt;
}

// ---------------------------------------------------------- serialization

json jint(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json jrat(const Rat& v) {
  if (is_integer(v)) return jint(rat_num(v));
  return v.str();
}

json jweight(const Weight& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(jrat(x));
  return a;
}

json jint_vector(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jword(const WeylElement& w) {
  json a = json::array();
  for (int i : w.word()) a.push_back(i + 1);
  return a;
}

json jperm(const std::vector<int32_t>& perm) {
  json a = json::array();
  for (int32_t v : perm) a.push_back(v + 1);
  return a;
}

json jchar(const CharacterOfT& chi) {
  json o;
  o["lambda_re"] = jweight(chi.lambda_re);
  o["lambda_im"] = jweight(chi.lambda_im);
  o["m"] = jint_vector(chi.m);
  return o;
}

std::string rat_text(const Rat& v) { return v.str(); }

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += rat_text(w[i]);
  }
  return s + ")";
}

std::string word_text(const WeylElement& w) {
  if (w.length() == 0) return "e";
  std::string s;
  for (int i : w.word()) {
    if (!s.empty()) s += ".";
    s += "s" + std::to_string(i + 1);
  }
  return s;
}

// Plain aligned text table.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  void render(std::ostringstream& os) const {
    std::vector<size_t> width(headers.size());
    for (size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const auto& r : rows)
      for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t c = 0; c < cells.size(); ++c) {
        os << cells[c];
        if (c + 1 < cells.size())
          os << std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << "\n";
    };
    line(headers);
    std::vector<std::string> rule;
    for (size_t c = 0; c < headers.size(); ++c) rule.push_back(std::string(width[c], '-'));
    line(rule);
    for (const auto& r : rows) line(r);
  }
};

// ------------------------------------------------------------- commands

json cmd_roots(const json& job, const Options& opt, Table& table, std::string& preamble) {
  PairSpec pair = parse_pair(job);
  const RootSystem& rs = *pair.rs;
  json result;
  result["realization"] = rs.realization() == Realization::gl ? "gl_n" : "standard";
  result["ambient_dim"] = rs.ambient_dim();
  result["rank"] = rs.rank();
  json cm = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cm.push_back(row);
  }
  result["cartan_matrix"] = cm;
  json simples = json::array();
  for (int i = 0; i < rs.rank(); ++i) simples.push_back(jweight(rs.simple_root(i)));
  result["simple_roots"] = simples;
  result["positive_count"] = rs.positive_count();
  result["root_count"] = rs.root_count();
  json roots = json::array();
  for (int i = 0; i < rs.root_count(); ++i) roots.push_back(jweight(rs.root(i)));
  result["roots"] = roots;
  result["rho2"] = jweight(rs.rho2());
  result["weyl_order"] = jint(rs.weyl_order());

  preamble = "rank " + std::to_string(rs.rank()) + ", " + std::to_string(rs.root_count()) +
             " roots, weyl order " + rs.weyl_order().str();
  table.headers = {"index", "root", "height", "positive"};
  for (int i = 0; i < rs.root_count(); ++i)
    table.rows.push_back({std::to_string(i + 1), weight_text(rs.root(i)),
                          std::to_string(rs.height(i)), rs.is_positive(i) ? "yes" : "no"});

  if (opt.parabolics) {
    const auto data = all_parabolics(rs);
    json pj;
    pj["count"] = static_cast<int>(data.size());
    json rows = json::array();
    for (const auto& p : data) {
      json r;
      json f = json::array();
      for (int i : p.F) f.push_back(i + 1);
      r["F"] = f;
      r["sigma_size"] = static_cast<int>(p.sigma_F.size());
      r["n_F_size"] = static_cast<int>(p.n_F.size());
      r["n_MF_size"] = static_cast<int>(p.n_MF.size());
      r["a_F_dim"] = p.a_F_dim;
      r["a_MF_dim"] = p.a_MF_dim;
      rows.push_back(r);
    }
    pj["data"] = rows;
    result["parabolics"] = pj;
  }
  return result;
}

json cmd_weyl(const json& job, const Options& opt) {
  PairSpec pair = parse_pair(job);
  const WeylGroup group = WeylGroup::enumerate(pair.rs, Int(opt.budget));
  json result;
  result["order"] = jint(Int(group.size()));
  json longest;
  longest["length"] = group.longest().length();
  longest["word"] = jword(group.longest());
  result["longest"] = longest;
  json hist = json::array();
  for (int c : group.length_histogram()) hist.push_back(c);
  result["length_histogram"] = hist;
  return result;
}

json cmd_orbits(const json& job, const Options& opt, Table& table, std::string& preamble) {
  PairSpec pair = parse_pair(job);
  const WeylGroup group = WeylGroup::enumerate(pair.rs, Int(opt.budget));
  const auto twisted = twisted_involutions(group, pair.theta);
  json result;
  result["twisted_involution_count"] = static_cast<int>(twisted.size());
  result["caveat"] = kOrbitCountCaveat;
  json elems = json::array();
  table.headers = {"#", "length", "word", "root_permutation"};
  int index = 1;
  for (const auto& t : twisted) {
    const WeylElement& w = t.element();
    json e;
    e["index"] = index;
    e["length"] = w.length();
    e["word"] = jword(w);
    e["root_permutation"] = jperm(w.perm());
    elems.push_back(e);
    std::string perm_text;
    for (size_t i = 0; i < w.perm().size(); ++i) {
      if (i) perm_text += " ";
      perm_text += std::to_string(w.perm()[i] + 1);
    }
    table.rows.push_back({std::to_string(index), std::to_string(w.length()), word_text(w),
                          perm_text});
    ++index;
  }
  result["elements"] = elems;
  preamble = std::to_string(twisted.size()) + " twisted involution(s)";
  return result;
}

json cmd_star(const json& job, const Options& opt, Table& table, std::string& preamble) {
  PairSpec pair = parse_pair(job);
  const WeylGroup group = WeylGroup::enumerate(pair.rs, Int(opt.budget));
  const StarReport report = verify_star(pair, group, opt.workers);
  json result;
  result["all_hold"] = report.all_hold;
  json rows = json::array();
  table.headers = {"word", "s1", "s2", "s3", "s3_sum", "holds"};
  for (const auto& row : report.rows) {
    json r;
    r["word"] = jword(row.w.element());
    r["s1_size"] = static_cast<int>(row.s1.size());
    r["s2_size"] = static_cast<int>(row.s2.size());
    r["s3_size"] = static_cast<int>(row.s3.size());
    r["s3_sum"] = jweight(row.s3_sum);
    r["holds"] = row.holds;
    rows.push_back(r);
    table.rows.push_back({word_text(row.w.element()), std::to_string(row.s1.size()),
                          std::to_string(row.s2.size()), std::to_string(row.s3.size()),
                          weight_text(row.s3_sum), row.holds ? "yes" : "no"});
  }
  result["rows"] = rows;
  preamble = report.all_hold ? "criterion holds at every twisted involution"
                             : "criterion FAILS at some twisted involution";
  return result;
}

json cmd_distinction(const json& job, const Options& opt, Table& table,
                     std::string& preamble) {
  PairSpec pair = parse_pair(job);
  const CharacterOfT chi = parse_character(job, *pair.rs);
  const WeylGroup group = WeylGroup::enumerate(pair.rs, Int(opt.budget));
  DistinctionOptions dopt;
  dopt.k_max = opt.k_max;
  dopt.solver_budget = opt.solver_budget;
  dopt.workers = opt.workers;
  const DistinctionReport report = check_distinction(pair, chi, group, dopt);

  json result;
  result["dominant"] = true;
  result["character"] = jchar(report.chi);
  result["twisted_involution_count"] = jint(report.twisted_count);
  result["feasible_count"] = report.feasible_count;
  result["caveat"] = report.caveat;
  json rows = json::array();
  table.headers = {"word", "support", "solutions", "feasible", "symmetry", "sym_dim"};
  bool budget_hit = false;
  for (const auto& row : report.rows) {
    json r;
    r["word"] = jword(row.w.element());
    r["length"] = row.w.element().length();
    json entries = json::array();
    for (const auto& e : row.multiset.entries)
      entries.push_back(json::array({e.root + 1, e.multiplicity}));
    r["entries"] = entries;
    r["support_size"] = row.multiset.support_size();
    json folded = json::array();
    for (const auto& v : row.multiset.folded_vectors) folded.push_back(jweight(v));
    r["folded_vectors"] = folded;
    json sols = json::array();
    for (const auto& s : row.solutions) sols.push_back(jint_vector(s));
    r["solutions"] = sols;
    r["feasible"] = row.feasible;
    r["symmetry"] = row.symmetry;
    r["sym_dimension"] = row.sym_dimension;
    if (row.eigen) {
      r["sym_eigen_counts"] = jint_vector(row.eigen->count_by_degree);
      r["sym_eigen_complete"] = row.eigen->complete;
      if (!row.eigen->complete) budget_hit = true;
    }
    rows.push_back(r);
    table.rows.push_back({word_text(row.w.element()),
                          std::to_string(row.multiset.support_size()),
                          std::to_string(row.solutions.size()),
                          row.feasible ? "yes" : "no", row.symmetry ? "yes" : "no",
                          std::to_string(row.sym_dimension)});
  }
  result["rows"] = rows;
  if (budget_hit)
    throw BudgetError("sym_eigen_count budget exceeded; rerun with a larger solver_budget");
  preamble = std::to_string(report.feasible_count) + " feasible of " +
             report.twisted_count.str() + " twisted involution(s)";
  return result;
}

json cmd_langlands(const json& job, const Options& opt, Table& table,
                   std::string& preamble) {
  PairSpec pair = parse_pair(job);
  const CharacterOfT chi = parse_character(job, *pair.rs);
  const WeylGroup group = WeylGroup::enumerate(pair.rs, Int(opt.budget));

  json result;
  result["input_dominant"] = is_dominant(*pair.rs, chi);
  const DominantRep rep = dominant_representative(group, chi);
  json drj;
  drj["character"] = jchar(rep.param.chi());
  drj["witness_word"] = jword(rep.witness);
  result["dominant_representative"] = drj;

  const LanglandsParameter contra = contragredient_param(pair.rs, rep.param);
  result["contragredient"] = jchar(contra.chi());

  const DominantRep twist = theta_twist_param(group, pair.theta, rep.param);
  json twj;
  twj["character"] = jchar(twist.param.chi());
  twj["witness_word"] = jword(twist.witness);
  result["theta_twist"] = twj;

  const ConjSymmetry sym = check_conj_symmetry(group, pair.theta, rep.param);
  json sj;
  sj["holds"] = sym.holds;
  if (sym.witness) sj["witness_word"] = jword(*sym.witness);
  result["conj_symmetry"] = sj;

  table.headers = {"item", "value"};
  table.rows.push_back({"input dominant", result["input_dominant"].get<bool>() ? "yes" : "no"});
  table.rows.push_back({"dominant rep", weight_text(rep.param.chi().lambda_re)});
  table.rows.push_back({"witness", word_text(rep.witness)});
  table.rows.push_back({"contragredient", weight_text(contra.chi().lambda_re)});
  table.rows.push_back({"theta twist", weight_text(twist.param.chi().lambda_re)});
  table.rows.push_back({"conj symmetry", sym.holds ? "yes" : "no"});
  preamble = std::string("conjugation symmetry ") + (sym.holds ? "holds" : "fails");
  return result;
}

json cmd_oracle(const json& job, Table& table, std::string& preamble) {
  if (!job.contains("n") || !job["n"].is_number_integer())
    throw ParseError("oracle needs an integer n");
  if (!job.contains("w") || !job["w"].is_array())
    throw ParseError("oracle needs a permutation array w (0-indexed)");
  const int n = job["n"].get<int>();
  std::vector<int> w;
  for (const auto& e : job["w"]) {
    if (!e.is_number_integer()) throw ParseError("oracle w entries must be integers");
    w.push_back(e.get<int>());
  }
  const auto pairs = gln_oracle(n, w);
  json result;
  result["n"] = n;
  json pj = json::array();
  table.headers = {"i", "j"};
  for (const auto& [i, j] : pairs) {
    pj.push_back(json::array({i, j}));
    table.rows.push_back({std::to_string(i), std::to_string(j)});
  }
  result["pairs"] = pj;
  result["count"] = static_cast<int>(pairs.size());
  preamble = std::to_string(pairs.size()) + " pair(s)";
  return result;
}

// -------------------------------------------------------------- envelope

std::string render(const json& envelope, const Options& opt, const Table& table,
                   const std::string& preamble, const std::string& input_text) {
  if (opt.format == "json") return envelope.dump(2) + "\n";
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "\n";
  os << "command: " << envelope["command"].get<std::string>() << "\n";
  os << "seed: " << opt.seed << "\n";
  os << "--- input ---\n" << input_text;
  if (input_text.empty() || input_text.back() != '\n') os << "\n";
  os << "--- result ---\n";
  if (!preamble.empty()) os << preamble << "\n";
  if (!table.headers.empty()) table.render(os);
  return os.str();
}

} // namespace

JobResult run_job(const std::string& input_text, const CliOverrides& overrides) {
  Options opt;
  json envelope;
  envelope["tool"] = kToolName;
  envelope["version"] = kToolVersion;

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    json err;
    err["code"] = code;
    err["kind"] = kind;
    err["message"] = message;
    envelope["error"] = err;
    envelope["input"] = input_text;
    if (opt.format == "table") {
      std::ostringstream os;
      os << kToolName << " " << kToolVersion << "\n";
      os << "error (" << kind << "): " << message << "\n";
      return JobResult{code, os.str()};
    }
    return JobResult{code, envelope.dump(2) + "\n"};
  };

  try {
    json job;
    try {
      job = json::parse(input_text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!job.is_object()) throw ParseError("job document must be a JSON object");
    reject_unknown_keys(job,
                        {"command", "pair", "root_system", "involution", "character",
                         "options", "n", "w"},
                        "job");
    if (!job.contains("command") || !job["command"].is_string())
      throw ParseError("job.command is required");
    const std::string command = job["command"].get<std::string>();
    opt = parse_options(job, overrides);

    envelope["command"] = command;
    envelope["seed"] = opt.seed;
    envelope["budget"] = opt.budget;
    envelope["input"] = input_text;

    Table table;
    std::string preamble;
    json result;
    if (command == "roots") {
      result = cmd_roots(job, opt, table, preamble);
    } else if (command == "weyl") {
      result = cmd_weyl(job, opt);
      preamble = "order " + result["order"].dump();
      table.headers = {"length", "count"};
      int len = 0;
      for (const auto& c : result["length_histogram"])
        table.rows.push_back({std::to_string(len++), c.dump()});
    } else if (command == "orbits") {
      result = cmd_orbits(job, opt, table, preamble);
    } else if (command == "star") {
      result = cmd_star(job, opt, table, preamble);
    } else if (command == "distinction") {
      result = cmd_distinction(job, opt, table, preamble);
    } else if (command == "langlands") {
      result = cmd_langlands(job, opt, table, preamble);
    } else if (command == "oracle") {
      result = cmd_oracle(job, table, preamble);
    } else {
      throw ParseError("unknown command \"" + command + "\"");
    }
    envelope["result"] = result;
    return JobResult{kExitOk, render(envelope, opt, table, preamble, input_text)};
  } catch (const ParseError& e) {
    return fail(kExitParse, "parse", e.what());
  } catch (const BudgetError& e) {
    return fail(kExitBudget, "budget", e.what());
  } catch (const PreconditionError& e) {
    return fail(kExitPrecondition, "precondition", e.what());
  } catch (const std::exception& e) {
    return fail(kExitParse, "parse", std::string("unexpected error: ") + e.what());
  }
}

} // namespace sympair
