#include "cgt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgt/abelianize.hpp"
#include "cgt/cayley.hpp"
#include "cgt/coset_enum.hpp"
#include "cgt/dehn_function.hpp"
#include "cgt/errors.hpp"
#include "cgt/knots.hpp"
#include "cgt/presentation.hpp"
#include "cgt/torus_knot.hpp"

namespace cgt::cli {

namespace {

using nlohmann::json;

// Coset budget tried by the auto oracle before falling back to Dehn rewriting.
constexpr std::size_t kAutoCosetBudget = 10'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> inputs;
  std::string oracle = "auto";
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t radius = 3;
  std::optional<std::size_t> length_cap;
  std::size_t node_cap = 100'000;
  std::size_t max_words = 5'000'000;
  std::size_t n_max = 8;
  std::string format;
  std::string convention = "left-right";
  std::optional<long long> k;
  std::string torus;
  bool drop_redundant = false;
  bool free_only = false;
  std::vector<std::string> involutive;
  std::vector<std::string> subgroup;
};

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot read '" + path + "'");
  return read_stream(f);
}

// `-` reads the input stream, text starting with `inline_prefix` is used as
// is, anything else is a file path.
std::string read_source(const std::string& arg, std::istream& in, const std::string& inline_prefix) {
  if (arg == "-") return trim(read_stream(in));
  const std::string t = trim(arg);
  if (t.rfind(inline_prefix, 0) == 0) return t;
  return trim(read_file(arg));
}

Presentation load_presentation(const std::string& arg, std::istream& in) {
  std::string text = read_source(arg, in, "<");
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("invalid JSON input: ") + e.what());
    }
    if (!j.contains("presentation") || !j["presentation"].is_string())
      throw DomainError("JSON input has no \"presentation\" string");
    text = j["presentation"].get<std::string>();
  }
  return parse_presentation(text);
}

json load_json(const std::string& arg, std::istream& in) {
  const std::string text = read_source(arg, in, "{");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON input: ") + e.what());
  }
}

KnotDiagram load_diagram(const std::string& arg, std::istream& in) { return parse_pd(read_source(arg, in, "PD")); }

std::pair<int, int> parse_torus(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw UsageError("--torus expects K,L");
  try {
    const int k = std::stoi(spec.substr(0, comma));
    const int l = std::stoi(spec.substr(comma + 1));
    if (k < 2 || l < 2) throw UsageError("--torus requires K, L >= 2");
    return {k, l};
  } catch (const std::logic_error&) {
    throw UsageError("--torus expects K,L");
  }
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json presentation_json(const Presentation& p) {
  json relators = json::array();
  for (const Word& r : p.relators()) relators.push_back(format_word(r, p.alphabet()));
  return {{"presentation", format_presentation(p)}, {"generators", p.alphabet().names()}, {"relators", relators}};
}

std::string word_text(const Word& w, const Alphabet& a) { return w.empty() ? "1" : format_word(w, a); }

struct Oracle {
  WordOracle decide;
  std::string name;
  bool assumes_dehn = false;
};

Oracle make_oracle(const Presentation& p, const Config& c) {
  const bool has_relators =
      std::any_of(p.relators().begin(), p.relators().end(), [](const Word& r) { return !r.empty(); });
  auto free_oracle = [] { return Oracle{[](const Word& w) { return free_reduce(w).empty(); }, "free", false}; };
  auto coset_oracle = [&p](std::size_t budget) -> std::optional<Oracle> {
    auto table = std::make_shared<CosetTable>(enumerate_cosets(p, {}, budget));
    if (!table->complete()) return std::nullopt;
    return Oracle{[table](const Word& w) { return wp_finite(w, *table); }, "coset", false};
  };
  auto dehn_oracle = [&p] {
    auto rewriter = std::make_shared<DehnRewriter>(p);
    return Oracle{[rewriter](const Word& w) { return rewriter->reduce_word(w).empty(); }, "dehn", true};
  };

  if (c.oracle == "free") {
    if (has_relators) throw UsageError("--oracle free needs a presentation without relators");
    return free_oracle();
  }
  if (c.oracle == "coset") {
    auto o = coset_oracle(c.max_cosets);
    if (!o) throw DomainError("coset enumeration exceeded " + std::to_string(c.max_cosets) + " cosets");
    return *o;
  }
  if (c.oracle == "dehn") return dehn_oracle();
  if (c.oracle == "torus-nf") {
    if (c.torus.empty()) throw UsageError("--oracle torus-nf needs --torus K,L");
    if (!(p.alphabet() == torus_alphabet())) throw UsageError("--oracle torus-nf needs generators t, u, v");
    const auto [k, l] = parse_torus(c.torus);
    return Oracle{[k, l](const Word& w) { return wp_torus(w, k, l); }, "torus-nf", false};
  }
  if (!has_relators) return free_oracle();
  if (auto o = coset_oracle(std::min(c.max_cosets, kAutoCosetBudget))) return *o;
  return dehn_oracle();
}

// For torus-nf a lone word argument stands for a word over t, u, v.
Presentation presentation_for(const Config& c, std::istream& in, std::size_t word_args) {
  if (c.oracle == "torus-nf" && c.inputs.size() == word_args) {
    if (c.torus.empty()) throw UsageError("--oracle torus-nf needs --torus K,L");
    const auto [k, l] = parse_torus(c.torus);
    return torus_presentation(k, l);
  }
  if (c.inputs.size() != word_args + 1)
    throw UsageError("expected " + std::to_string(word_args + 1) + " positional argument(s)");
  return load_presentation(c.inputs[0], in);
}

void require_format(const std::string& command, std::string& format, std::initializer_list<const char*> allowed) {
  if (format.empty()) {
    format = *allowed.begin();
    return;
  }
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError(command + " does not support --format " + format);
}

SignConvention convention_of(const Config& c) {
  return c.convention == "right-left" ? SignConvention::RightLeft : SignConvention::LeftRight;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- commands ----

int cmd_wp(Config& c, std::istream& in, std::ostream& out) {
  require_format("wp", c.format, {"text", "json"});
  const Presentation p = presentation_for(c, in, 1);
  const Word w = parse_word(c.inputs.back(), p.alphabet());
  const Oracle o = make_oracle(p, c);
  const bool trivial = o.decide(w);
  const bool assumed = o.assumes_dehn && !trivial;
  if (c.format == "json") {
    emit(out, {{"word", format_word(w, p.alphabet())},
               {"trivial", trivial},
               {"oracle", o.name},
               {"assumption", assumed ? json("dehn-presentation") : json(nullptr)}});
  } else {
    out << (trivial ? "true" : "false");
    if (assumed) out << " (assuming a Dehn presentation)";
    out << "\n";
  }
  return kExitOk;
}

int cmd_reduce(Config& c, std::istream& in, std::ostream& out) {
  require_format("reduce", c.format, {"text", "json"});
  const Presentation p = presentation_for(c, in, 1);
  const Word w = parse_word(c.inputs.back(), p.alphabet());
  const Alphabet& a = p.alphabet();
  if (c.free_only) {
    const Word r = free_reduce(w);
    if (c.format == "json")
      emit(out, {{"input", format_word(w, a)}, {"output", format_word(r, a)}, {"mode", "free"}});
    else
      out << word_text(r, a) << "\n";
    return kExitOk;
  }
  const DehnRewriter rewriter(p);
  const DehnReductionTrace trace = rewriter.reduce(w);
  if (c.format == "json") {
    json steps = json::array();
    for (const DehnStep& s : trace.steps) {
      if (s.kind == DehnStep::Kind::FreeCancellation) {
        steps.push_back({{"kind", "free"}, {"position", s.position}});
      } else {
        const DehnRule& r = rewriter.rules()[s.rule];
        steps.push_back({{"kind", "rule"},
                         {"position", s.position},
                         {"rule", s.rule},
                         {"lhs", format_word(r.lhs, a)},
                         {"rhs", format_word(r.rhs, a)}});
      }
    }
    emit(out, {{"input", format_word(w, a)},
               {"output", format_word(trace.final, a)},
               {"mode", "dehn"},
               {"steps", steps}});
  } else {
    for (const DehnStep& s : trace.steps) {
      if (s.kind == DehnStep::Kind::FreeCancellation) {
        out << "cancel " << s.position << "\n";
      } else {
        const DehnRule& r = rewriter.rules()[s.rule];
        out << "rewrite " << s.position << ": " << word_text(r.lhs, a) << " -> " << word_text(r.rhs, a) << "\n";
      }
    }
    out << word_text(trace.final, a) << "\n";
  }
  return kExitOk;
}

std::string abelian_text(const AbelianInvariants& inv) {
  if (inv.trivial()) return "trivial";
  std::string s;
  for (const BigInt& t : inv.torsion) s += (s.empty() ? "" : " x ") + ("Z/" + t.str());
  if (inv.free_rank > 0) s += (s.empty() ? "" : " x ") + ("Z^" + std::to_string(inv.free_rank));
  return s;
}

int cmd_abelianize(Config& c, std::istream& in, std::ostream& out) {
  require_format("abelianize", c.format, {"text", "json"});
  const Presentation p = presentation_for(c, in, 0);
  const AbelianInvariants inv = abelian_invariants(p);
  if (c.format == "json") {
    json torsion = json::array();
    for (const BigInt& t : inv.torsion) torsion.push_back(bigint_json(t));
    emit(out, {{"torsion", torsion}, {"free_rank", inv.free_rank}, {"perfect", inv.trivial()}});
  } else {
    out << abelian_text(inv) << "\n";
  }
  return kExitOk;
}

int cmd_coset_enum(Config& c, std::istream& in, std::ostream& out) {
  require_format("coset-enum", c.format, {"json", "text"});
  const Presentation p = presentation_for(c, in, 0);
  std::vector<Word> subgroup;
  for (const std::string& s : c.subgroup) subgroup.push_back(parse_word(s, p.alphabet()));
  const CosetTable t = enumerate_cosets(p, subgroup, c.max_cosets);
  if (c.format == "json") {
    json j = {{"complete", t.complete()},
              {"cosets", t.num_cosets()},
              {"total_defined", t.total_defined()},
              {"limit", t.limit()}};
    if (t.complete()) {
      json perms = json::object();
      for (const auto& [name, perm] : to_permutation_rep(t)) perms[name] = perm;
      j["permutations"] = perms;
    }
    emit(out, j);
  } else {
    out << "complete: " << (t.complete() ? "true" : "false") << "\n";
    out << "cosets: " << t.num_cosets() << "\n";
    out << "total defined: " << t.total_defined() << "\n";
  }
  return t.complete() ? kExitOk : kExitDomainError;
}

int cmd_order(Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
  require_format("order", c.format, {"text", "json"});
  const Presentation p = presentation_for(c, in, 0);
  const CosetTable t = enumerate_cosets(p, {}, c.max_cosets);
  const auto order = group_order(t);
  if (c.format == "json") {
    emit(out, {{"order", order ? json(*order) : json(nullptr)}, {"complete", t.complete()}, {"limit", t.limit()}});
  } else if (order) {
    out << *order << "\n";
  }
  if (!order) {
    err << "order unknown: coset enumeration exceeded " << c.max_cosets << " cosets\n";
    return kExitDomainError;
  }
  return kExitOk;
}

std::vector<bool> involutive_flags(const Alphabet& a, const std::vector<std::string>& names) {
  std::vector<bool> flags(a.size(), false);
  for (const std::string& n : names) {
    auto g = a.find(n);
    if (!g) throw UsageError("--involutive: '" + n + "' is not a generator");
    flags[*g] = true;
  }
  return flags;
}

int cmd_cayley_ball(Config& c, std::istream& in, std::ostream& out) {
  require_format("cayley-ball", c.format, {"json", "dot"});
  const Presentation p = presentation_for(c, in, 0);
  const std::vector<bool> involutive = involutive_flags(p.alphabet(), c.involutive);
  const Oracle o = make_oracle(p, c);
  const CayleyDiagram d = build_ball(p, o.decide, c.radius);
  if (c.format == "dot") {
    out << export_dot(d, DotOptions{involutive, true});
    return kExitOk;
  }
  json j = c.involutive.empty() ? to_json(d) : to_json(to_digraph(d, involutive));
  j["radius"] = c.radius;
  j["complete"] = d.complete;
  j["oracle"] = o.name;
  j["assumption"] = o.assumes_dehn ? json("dehn-presentation") : json(nullptr);
  emit(out, j);
  return kExitOk;
}

int cmd_check_diagram(Config& c, std::istream& in, std::ostream& out) {
  require_format("check-diagram", c.format, {"text", "json"});
  if (c.inputs.size() != 1) throw UsageError("check-diagram expects one input");
  LabeledDigraph d = digraph_from_json(load_json(c.inputs[0], in));
  for (const std::string& n : c.involutive) {
    auto it = std::find(d.labels.begin(), d.labels.end(), n);
    if (it == d.labels.end()) throw UsageError("--involutive: no label '" + n + "'");
    d.involutive[static_cast<std::size_t>(it - d.labels.begin())] = true;
  }
  const bool regular = check_regular(d);
  std::optional<bool> homogeneous;
  std::string note;
  if (regular) {
    try {
      homogeneous = check_homogeneous(d);
    } catch (const DomainError& e) {
      note = e.what();
    }
  }
  if (c.format == "json") {
    json j = {{"regular", regular}, {"homogeneous", homogeneous ? json(*homogeneous) : json(nullptr)}};
    if (!note.empty()) j["note"] = note;
    emit(out, j);
  } else {
    out << "regular: " << (regular ? "true" : "false") << "\n";
    out << "homogeneous: " << (homogeneous ? (*homogeneous ? "true" : "false") : "n/a") << "\n";
  }
  return kExitOk;
}

int emit_presentation(const Config& c, std::ostream& out, const Presentation& p, json extra = json::object()) {
  if (c.format == "json") {
    json j = presentation_json(p);
    j.update(extra);
    emit(out, j);
  } else {
    out << format_presentation(p) << "\n";
  }
  return kExitOk;
}

int cmd_knot(const std::string& which, Config& c, std::istream& in, std::ostream& out) {
  require_format("knot " + which, c.format, {"json", "text"});
  if (c.inputs.size() != 1) throw UsageError("knot " + which + " expects one diagram");
  const KnotDiagram d = load_diagram(c.inputs[0], in);
  const SignConvention conv = convention_of(c);
  if (which == "wirtinger") {
    const WirtingerPresentation w = wirtinger(d, conv, c.drop_redundant);
    return emit_presentation(c, out, w.presentation,
                             {{"meridian", format_word(w.meridian, w.presentation.alphabet())}});
  }
  if (which == "dehn") return emit_presentation(c, out, dehn_presentation(d));
  if (which == "peripheral") {
    const WirtingerPresentation w = wirtinger(d, conv);
    const PeripheralSystem ps = peripheral(d, conv);
    const Alphabet& a = w.presentation.alphabet();
    if (c.format == "json") {
      emit(out, {{"meridian", format_word(ps.meridian, a)},
                 {"parallel", format_word(ps.parallel, a)},
                 {"presentation", format_presentation(w.presentation)}});
    } else {
      out << "meridian: " << word_text(ps.meridian, a) << "\n";
      out << "parallel: " << word_text(ps.parallel, a) << "\n";
    }
    return kExitOk;
  }
  if (!c.k) throw UsageError("knot surgery needs --k");
  return emit_presentation(c, out, surgery_presentation(d, *c.k, conv), {{"k", *c.k}});
}

int cmd_dehn_fn(Config& c, std::istream& in, std::ostream& out) {
  require_format("dehn-fn", c.format, {"tsv", "json"});
  const Presentation p = presentation_for(c, in, 0);
  const Oracle o = make_oracle(p, c);
  DehnFunctionOptions options;
  options.area.length_cap = c.length_cap;
  options.area.node_cap = c.node_cap;
  options.max_words = c.max_words;
  const DehnFunctionTable table = dehn_function_estimate(p, c.n_max, o.decide, options);
  if (c.format == "json") {
    json rows = json::array();
    for (const DeltaRow& r : table.rows)
      rows.push_back({{"n", r.n}, {"delta", r.delta}, {"exactness", to_string(r.exactness)},
                      {"trivial_words", r.trivial_words}});
    emit(out, {{"rows", rows},
               {"truncated", table.truncated},
               {"oracle", o.name},
               {"assumption", o.assumes_dehn ? json("dehn-presentation") : json(nullptr)}});
  } else {
    out << format_tsv(table);
  }
  return kExitOk;
}

int cmd_family_infinite(Config& c, std::ostream& out) {
  require_format("family-infinite", c.format, {"text", "json"});
  if (c.inputs.size() != 2) throw UsageError("family-infinite expects ALPHA BETA");
  long long alpha = 0;
  long long beta = 0;
  try {
    alpha = std::stoll(c.inputs[0]);
    beta = std::stoll(c.inputs[1]);
  } catch (const std::logic_error&) {
    throw UsageError("family-infinite expects two integers");
  }
  const bool infinite = family_infinite(alpha, beta);
  if (c.format == "json")
    emit(out, {{"alpha", alpha}, {"beta", beta}, {"infinite", infinite}});
  else
    out << (infinite ? "true" : "false") << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problems, coset enumeration, Cayley diagrams and knot groups", "cgt"};
  app.require_subcommand(1);
  Config c;

  auto inputs = [&c](CLI::App* sub, const std::string& description) {
    sub->add_option("inputs", c.inputs, description)->required();
  };
  auto format = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "dot", "tsv", "text"}));
  };
  auto oracle = [&c](CLI::App* sub) {
    sub->add_option("--oracle", c.oracle, "Word problem oracle")
        ->check(CLI::IsMember({"auto", "coset", "dehn", "torus-nf", "free"}));
    sub->add_option("--torus", c.torus, "K,L for the torus-nf oracle");
  };
  auto max_cosets = [&c](CLI::App* sub) {
    sub->add_option("--max-cosets", c.max_cosets, "Coset table limit")->check(CLI::PositiveNumber);
  };

  auto* wp = app.add_subcommand("wp", "Decide whether a word is trivial");
  inputs(wp, "PRESENTATION WORD (or WORD alone with --oracle torus-nf)");
  oracle(wp);
  max_cosets(wp);
  format(wp);

  auto* reduce = app.add_subcommand("reduce", "Dehn (or free) reduction with trace");
  inputs(reduce, "PRESENTATION WORD");
  reduce->add_flag("--free", c.free_only, "Free reduction only");
  format(reduce);

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants");
  inputs(abelianize, "PRESENTATION");
  format(abelianize);

  auto* coset = app.add_subcommand("coset-enum", "Enumerate cosets of a subgroup");
  inputs(coset, "PRESENTATION");
  coset->add_option("--subgroup", c.subgroup, "Subgroup generator (repeatable)");
  max_cosets(coset);
  format(coset);

  auto* order = app.add_subcommand("order", "Group order by coset enumeration");
  inputs(order, "PRESENTATION");
  max_cosets(order);
  format(order);

  auto* ball = app.add_subcommand("cayley-ball", "Ball of the Cayley diagram");
  inputs(ball, "PRESENTATION");
  ball->add_option("--radius", c.radius, "Ball radius");
  ball->add_option("--involutive", c.involutive, "Generators drawn as undirected edges");
  oracle(ball);
  max_cosets(ball);
  format(ball);

  auto* check = app.add_subcommand("check-diagram", "Regularity and homogeneity of a labelled digraph");
  inputs(check, "DIAGRAM.json");
  check->add_option("--involutive", c.involutive, "Labels carried by undirected edges");
  format(check);

  auto* knot = app.add_subcommand("knot", "Knot diagram presentations");
  knot->require_subcommand(1);
  std::string knot_command;
  const std::vector<std::pair<const char*, const char*>> knot_commands{
      {"wirtinger", "Wirtinger presentation"},
      {"dehn", "Dehn presentation from the faces"},
      {"peripheral", "Meridian and parallel"},
      {"surgery", "Presentation of the k-surgery on the knot"}};
  for (const auto& [name, description] : knot_commands) {
    auto* sub = knot->add_subcommand(name, description);
    inputs(sub, "DIAGRAM (PD code, file or -)");
    sub->add_option("--convention", c.convention, "Overcrossing sign convention")
        ->check(CLI::IsMember({"left-right", "right-left"}));
    if (std::string(name) == "wirtinger") sub->add_flag("--drop-redundant", c.drop_redundant, "Omit one relator");
    if (std::string(name) == "surgery") sub->add_option("--k", c.k, "Surgery coefficient")->required();
    format(sub);
    sub->callback([&knot_command, name] { knot_command = name; });
  }

  auto* dehn_fn = app.add_subcommand("dehn-fn", "Dehn function table");
  inputs(dehn_fn, "PRESENTATION");
  dehn_fn->add_option("--n", c.n_max, "Largest word length");
  dehn_fn->add_option("--length-cap", c.length_cap, "Intermediate word length cap")->check(CLI::PositiveNumber);
  dehn_fn->add_option("--node-cap", c.node_cap, "Expanded words per area search")->check(CLI::PositiveNumber);
  dehn_fn->add_option("--max-words", c.max_words, "Reduced words enumerated")->check(CLI::PositiveNumber);
  oracle(dehn_fn);
  max_cosets(dehn_fn);
  format(dehn_fn);

  auto* family = app.add_subcommand("family-infinite", "Infiniteness criterion for <s1,s2 | s1^a, s2^2, (s2 s1)^b>");
  inputs(family, "ALPHA BETA");
  format(family);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (wp->parsed()) return cmd_wp(c, in, out);
    if (reduce->parsed()) return cmd_reduce(c, in, out);
    if (abelianize->parsed()) return cmd_abelianize(c, in, out);
    if (coset->parsed()) return cmd_coset_enum(c, in, out);
    if (order->parsed()) return cmd_order(c, in, out, err);
    if (ball->parsed()) return cmd_cayley_ball(c, in, out);
    if (check->parsed()) return cmd_check_diagram(c, in, out);
    if (knot->parsed()) return cmd_knot(knot_command, c, in, out);
    if (dehn_fn->parsed()) return cmd_dehn_fn(c, in, out);
    if (family->parsed()) return cmd_family_infinite(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    // DomainError, OracleError, and invalid_argument from library preconditions.
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace cgt::cli
