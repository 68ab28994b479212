#include "isolab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "isolab/analysis.hpp"
#include "isolab/axioms.hpp"
#include "isolab/constructions.hpp"
#include "isolab/errors.hpp"
#include "isolab/fixtures.hpp"
#include "isolab/random_tables.hpp"
#include "isolab/relational.hpp"
#include "isolab/report_json.hpp"
#include "isolab/structure_io.hpp"
#include "isolab/table_io.hpp"
#include "isolab/typed_io.hpp"

namespace isolab {

namespace {

namespace fs = std::filesystem;

struct Context {
  std::string format = "text";
  std::optional<std::size_t> window;
  std::uint64_t seed = 1;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return format == "json"; }
};

// Errors from reading a file carry its path.
template <class F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const LoadError&) {
    throw;
  } catch (const Error& e) {
    throw LoadError(path + ": " + e.what());
  }
}

MultiTable load_untyped(const std::string& path, const Context& ctx) {
  return with_path(path, [&] { return load_table(path, ctx.window); });
}

TypedTable load_typed(const std::string& path) {
  return with_path(path, [&] { return typed_from_json(read_json_file(path)); });
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw LoadError("cannot write " + path);
  f << text;
}

// Writes the document to `path`, or to standard output when path is empty.
void put_document(const Context& ctx, const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    ctx.out << text;
  } else {
    write_text_file(path, text);
  }
}

void print(const Context& ctx, const Json& doc, const std::string& text) {
  if (ctx.json()) {
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << text;
  }
}

// z<n>, klein, d<n>, and products joined by 'x', e.g. z2xz3.
CayleyTable parse_group(const std::string& spec) {
  const auto cut = spec.find('x');
  if (cut != std::string::npos) {
    return direct_product(parse_group(spec.substr(0, cut)), parse_group(spec.substr(cut + 1)));
  }
  if (spec == "klein") return klein_four_group();
  auto number = [&](std::size_t from) -> std::size_t {
    const std::string digits = spec.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw BadParams("unknown group " + spec);
    }
    return std::stoul(digits);
  };
  if (!spec.empty() && spec[0] == 'z') return cyclic_group(number(1));
  if (!spec.empty() && spec[0] == 'd') return dihedral_group(number(1));
  throw BadParams("unknown group " + spec);
}

std::string set_text(const SignedAlphabet& a, const LabelSet& s) { return format_set(a, s) + "\n"; }

std::string bool_text(bool b) { return b ? "yes" : "no"; }

// ---- validate ----

int cmd_validate(const Context& ctx, const std::string& path, bool typed) {
  ValidationReport r;
  SignedAlphabet alphabet;
  if (typed) {
    TypedTable t = load_typed(path);
    r = validate_ir_structure(t);
    alphabet = t.alphabet();
  } else {
    MultiTable t = load_untyped(path, ctx);
    r = validate_i_groupoid(t);
    alphabet = t.alphabet();
  }
  print(ctx, report_to_json(alphabet, r), report_to_text(alphabet, r));
  return r.passed() ? 0 : 1;
}

// ---- analyze ----

struct AnalyzeFlags {
  bool sop = false, lattice = false, classify = false, pip = false, special = false;
  bool core = false, assoc = false, typed = false;
  std::size_t max_word = 4;
  std::string powerful;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int cmd_analyze_typed(const Context& ctx, const std::string& path) {
  TypedTable t = load_typed(path);
  TypedAnalysis an = typed_analysis(t);
  std::ostringstream os;
  for (const auto& s : an.sorts) {
    os << "sort " << s.sort << ": transitive " << bool_text(s.relation.transitive)
       << ", partial order " << bool_text(s.relation.partial_order) << ", equivalence "
       << bool_text(s.relation.equivalence) << "\n";
  }
  os << "overall: transitive " << bool_text(an.overall.transitive) << ", partial order "
     << bool_text(an.overall.partial_order) << ", equivalence " << bool_text(an.overall.equivalence)
     << "\n";
  os << "deterministic: " << format_set(t.alphabet(), an.deterministic)
     << (an.deterministic_closed ? "" : " (not closed)") << "\n";
  os << "group core: " << format_set(t.alphabet(), an.group_core) << "\n";
  os << "join of groups: " << bool_text(an.join_of_groups) << "\n";
  print(ctx, typed_analysis_to_json(t, an), os.str());
  return 0;
}

int cmd_analyze(const Context& ctx, const std::string& path, AnalyzeFlags f) {
  if (f.typed) return cmd_analyze_typed(ctx, path);
  MultiTable t = load_untyped(path, ctx);
  const SignedAlphabet& a = t.alphabet();
  if (!(f.sop || f.lattice || f.classify || f.pip || f.special || f.core || f.assoc ||
        !f.powerful.empty())) {
    f.classify = f.core = f.sop = f.pip = true;
  }
  Json doc = Json::object();
  std::ostringstream os;
  int code = 0;

  if (f.classify) {
    RelationClass c = classify_relation(t);
    doc["classify"] = classify_to_json(c);
    os << "transitive: " << bool_text(c.transitive) << "\npartial order: " << bool_text(c.partial_order)
       << "\nequivalence: " << bool_text(c.equivalence) << "\n";
  }
  if (f.core) {
    LabelSet d = deterministic_core(t);
    LabelSet ad = almost_deterministic_closure(t);
    doc["deterministic_core"] = set_to_json(a, d);
    doc["almost_deterministic"] = set_to_json(a, ad);
    os << "deterministic core: " << set_text(a, d) << "almost deterministic: " << set_text(a, ad);
  }
  if (f.assoc) {
    AssociativityProfile p = associativity_profile(t);
    Json strict = Json::array();
    for (const auto& e : p.entries) {
      if (e.relation == AssocRelation::strict_left_inclusion) {
        strict.push_back({a.id(e.u1), a.id(e.u2), a.id(e.u3)});
      }
    }
    doc["associativity"] = {{"equal", p.equal},
                            {"strict", p.strict},
                            {"violations", p.violations},
                            {"skipped", p.skipped},
                            {"nonnegative_associativity", p.nonnegative_associativity},
                            {"strict_triples", strict}};
    os << "associativity: " << p.equal << " equal, " << p.strict << " strict, " << p.violations
       << " violations, " << p.skipped << " skipped\n";
    for (const auto& s : strict) os << "  strict: " << s[0].get<std::string>() << " " << s[1].get<std::string>() << " " << s[2].get<std::string>() << "\n";
    if (p.violations) code = 1;
  }
  if (f.sop) {
    std::optional<SopWitness> w;
    try {
      w = sop_detect(t);
      doc["sop"] = sop_to_json(a, w);
    } catch (const WindowExceeded& e) {
      doc["sop"] = {{"undecided", e.what()}};
    }
    if (w) {
      os << "sop: " << to_string(w->kind) << " on " << format_set(a, w->x);
      if (w->kind == SopWitness::Kind::direct_closure) os << " at " << a.id(w->u);
      if (w->kind == SopWitness::Kind::power_closure) os << " with n = " << w->n;
      os << "\n";
    } else if (doc["sop"].is_null()) {
      os << "sop: none\n";
    } else {
      os << "sop: undecided inside the window\n";
    }
  }
  if (f.pip) {
    LabelSet p = pip_elements(t);
    doc["pip"] = set_to_json(a, p);
    os << "pip: " << set_text(a, p);
  }
  if (f.special) {
    SpecialResult r = special_check(t, f.max_word);
    doc["special"] = special_to_json(a, r);
    os << "special: " << (r.passed ? "pass" : "fail") << " (" << r.words_checked << " words)\n";
    if (r.witness) {
      os << "  witness: word";
      for (auto i : r.witness->word) os << " " << a.id(i);
      os << ", v = " << a.id(r.witness->v) << ", u = " << a.id(r.witness->u) << "\n";
    }
    if (!r.passed) code = 1;
  }
  if (!f.powerful.empty()) {
    LabelSet gens = a.empty_set();
    for (const auto& id : split_commas(f.powerful)) gens.insert(t.index(id));
    PowerfulResult r = powerful_graph_check(t, gens, f.max_word);
    doc["powerful"] = powerful_to_json(a, r);
    os << "powerful: " << (r.passed ? "pass" : "fail") << "\n";
    if (!r.detail.empty()) os << "  " << r.detail << "\n";
    os << "  acl-approx: " << to_string(r.acl_approx) << "\n";
    if (!r.passed) code = 1;
  }
  if (f.lattice) {
    try {
      RestrictionLattice l = restriction_lattice(t);
      doc["lattice"] = lattice_to_json(a, l);
      for (const auto& n : l.nodes) os << n.id << ": " << set_text(a, n.labels);
    } catch (const ClosureViolation& e) {
      doc["lattice"] = {{"closure_violation", e.what()}};
      os << "lattice: " << e.what() << "\n";
      code = 1;
    }
  }
  print(ctx, doc, os.str());
  return code;
}

// ---- derive / gen / diff ----

int cmd_derive(const Context& ctx, const std::string& path, const std::string& out_path,
               bool universal) {
  RelationalStructure s = with_path(path, [&] { return load_structure(path); });
  DerivedTable d = derive_table(s, universal ? Semantics::universal : Semantics::existential);
  MultiTable t = d.to_table();
  const auto notes = distance_notes(d);
  const Json doc = table_to_json(t);
  if (out_path.empty()) {
    ctx.out << doc.dump(2) << "\n";
    for (const auto& n : notes) {
      ctx.err << "note: " << n.kind << " at " << n.left << "·" << n.right << "\n";
    }
    return 0;
  }
  put_document(ctx, doc, out_path);
  std::ostringstream os;
  os << "wrote " << out_path << " (" << t.size() << " labels)\n";
  for (const auto& n : notes) {
    os << "note: " << n.kind << " at " << n.left << "·" << n.right << "\n";
  }
  print(ctx, {{"output", out_path}, {"labels", t.size()}, {"notes", notes_to_json(notes)}}, os.str());
  return 0;
}

int cmd_gen(const Context& ctx, const std::string& kind, const StructureParams& p,
            const std::string& out_path) {
  put_document(ctx, structure_to_json(generate_structure(kind, p)), out_path);
  return 0;
}

int cmd_diff(const Context& ctx, const std::string& structure, const std::string& table) {
  RelationalStructure s = with_path(structure, [&] { return load_structure(structure); });
  MultiTable t = load_untyped(table, ctx);
  const auto diffs = oracle_vs_table(s, t);
  print(ctx, {{"differences", diff_to_json(diffs)}}, diff_to_text(diffs));
  return diffs.empty() ? 0 : 1;
}

// ---- constructions ----

int cmd_compose_band(const Context& ctx, const std::string& neg, const std::string& pos,
                     const std::string& out_path) {
  MultiTable t = band_compose(load_untyped(neg, ctx), load_untyped(pos, ctx));
  put_document(ctx, table_to_json(t), out_path);
  return 0;
}

int cmd_join(const Context& ctx, const std::string& path, const std::string& out_path) {
  JoinSpec spec = with_path(path, [&] {
    return join_spec_from_json(read_json_file(path), fs::path(path).parent_path());
  });
  put_document(ctx, typed_to_json(join_build(spec)), out_path);
  return 0;
}

int cmd_power(const Context& ctx, const std::string& path, const std::vector<std::string>& word) {
  if (word.empty()) throw BadParams("power needs a nonempty word after --");
  MultiTable t = load_untyped(path, ctx);
  LabelSet p = word_product(t, word);
  print(ctx, {{"word", word}, {"product", set_to_json(t.alphabet(), p)}}, set_text(t.alphabet(), p));
  return 0;
}

int cmd_export_dot(const Context& ctx, const std::string& path, const std::string& out_path) {
  MultiTable t = load_untyped(path, ctx);
  const std::string dot = lattice_to_dot(t, restriction_lattice(t));
  if (out_path.empty()) {
    ctx.out << dot;
  } else {
    write_text_file(out_path, dot);
  }
  return 0;
}

// ---- fixtures ----

int cmd_fixtures(const Context& ctx, bool list, const std::string& emit, const std::string& emit_all,
                 const std::string& out_path) {
  if (list || (emit.empty() && emit_all.empty())) {
    Json arr = Json::array();
    std::ostringstream os;
    for (const auto& f : fixture_list()) {
      arr.push_back({{"name", f.name}, {"description", f.description}, {"typed", f.typed}});
      os << f.name << (f.typed ? " (typed)" : "") << ": " << f.description << "\n";
    }
    print(ctx, {{"fixtures", arr}}, os.str());
    return 0;
  }
  if (!emit.empty()) {
    auto doc = fixture_document(emit);
    if (!doc) throw LoadError("unknown fixture " + emit);
    put_document(ctx, *doc, out_path);
    return 0;
  }
  fs::create_directories(emit_all);
  Json written = Json::array();
  std::ostringstream os;
  for (const auto& f : fixture_list()) {
    const fs::path file = fs::path(emit_all) / (f.name + ".json");
    write_text_file(file.string(), fixture_document(f.name)->dump(2) + "\n");
    written.push_back(file.string());
    os << "wrote " << file.string() << "\n";
  }
  print(ctx, {{"written", written}}, os.str());
  return 0;
}

// ---- sweep ----

struct SweepCounts {
  std::size_t tables = 0;
  std::size_t validation_failures = 0;
  std::size_t closure_failures = 0;
  std::size_t sop_failures = 0;
  std::vector<std::string> messages;
};

bool closed(const MultiTable& t, const LabelSet& s) {
  try {
    restrict_to(t, s);
    return true;
  } catch (const ClosureViolation&) {
    return false;
  }
}

int cmd_sweep(const Context& ctx, std::size_t count) {
  Rng rng(ctx.seed);
  SweepCounts c;
  for (std::size_t i = 0; i < count; ++i) {
    MultiTable t = random_valid_table(rng);
    ++c.tables;
    const std::string tag = "table " + std::to_string(i);
    if (!validate_i_groupoid(t).passed()) {
      ++c.validation_failures;
      c.messages.push_back(tag + ": validation failed");
    }
    if (!closed(t, deterministic_core(t)) || !closed(t, almost_deterministic_closure(t))) {
      ++c.closure_failures;
      c.messages.push_back(tag + ": core not closed");
    }
    try {
      restriction_lattice(t);
    } catch (const ClosureViolation& e) {
      ++c.closure_failures;
      c.messages.push_back(tag + ": " + e.what());
    }
    const LabelSet neg = t.alphabet().negatives();
    if (!neg.empty()) {
      auto w = sop_detect(t);
      if (!w || !sop_witness_holds(t, *w)) {
        ++c.sop_failures;
        c.messages.push_back(tag + ": no sop witness");
      }
    }
  }
  const bool ok = c.validation_failures + c.closure_failures + c.sop_failures == 0;
  std::ostringstream os;
  os << "seed " << ctx.seed << ": " << c.tables << " tables, " << c.validation_failures
     << " validation failures, " << c.closure_failures << " closure failures, " << c.sop_failures
     << " sop failures\n";
  for (const auto& m : c.messages) os << "  " << m << "\n";
  print(ctx,
        {{"seed", ctx.seed},
         {"tables", c.tables},
         {"validation_failures", c.validation_failures},
         {"closure_failures", c.closure_failures},
         {"sop_failures", c.sop_failures},
         {"messages", c.messages}},
        os.str());
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, validate and analyse multiplication tables of labelled relations", "isolab"};
  app.require_subcommand(1);

  std::string format = "text";
  std::size_t window = 0;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--window", window, "Window for rule-backed tables")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized sweeps");

  Context ctx{"text", std::nullopt, 1, out, err};
  std::function<int()> action;
  std::string path, path2, out_path;

  auto* validate = app.add_subcommand("validate", "Check the axioms of a table");
  bool typed = false;
  validate->add_option("table", path, "Table file")->required();
  validate->add_flag("--typed", typed, "Read a typed table");
  validate->callback([&] { action = [&] { return cmd_validate(ctx, path, typed); }; });

  auto* analyze = app.add_subcommand("analyze", "Structural features of a table");
  AnalyzeFlags af;
  analyze->add_option("table", path, "Table file")->required();
  analyze->add_flag("--sop", af.sop, "Strict order property witness");
  analyze->add_flag("--lattice", af.lattice, "Restriction lattice");
  analyze->add_flag("--classify", af.classify, "Transitive, partial order, equivalence");
  analyze->add_flag("--pip", af.pip, "Negative labels absorbing every right factor");
  analyze->add_flag("--special", af.special, "Special-check over negative words");
  analyze->add_flag("--core", af.core, "Deterministic and almost deterministic labels");
  analyze->add_flag("--assoc", af.assoc, "Associativity profile");
  analyze->add_flag("--typed", af.typed, "Read a typed table");
  analyze->add_option("--max-word", af.max_word, "Longest word for bounded searches");
  analyze->add_option("--powerful", af.powerful, "Comma separated generators");
  analyze->callback([&] { action = [&] { return cmd_analyze(ctx, path, af); }; });

  auto* derive = app.add_subcommand("derive", "Product table of a relational structure");
  bool universal = false;
  derive->add_option("structure", path, "Structure file")->required();
  derive->add_option("-o,--output", out_path, "Output file");
  derive->add_flag("--universal", universal, "Require every pair of a label to compose");
  derive->callback([&] { action = [&] { return cmd_derive(ctx, path, out_path, universal); }; });

  auto* gen = app.add_subcommand("gen", "Generate a finite relational structure");
  StructureParams params;
  std::string kind, group = "z2";
  gen->add_option("kind", kind, "Structure kind")
      ->required()
      ->check(CLI::IsMember({"chain", "path", "tree", "cayley", "thm52", "successor"}));
  gen->add_option("--n", params.n, "Size");
  gen->add_option("--degree", params.degree, "Tree degree");
  gen->add_option("--radius", params.radius, "Tree radius");
  gen->add_option("--max-label", params.max_label, "Largest distance or shift label");
  gen->add_option("--group", group, "Group: zN, dN, klein, products like z2xz3");
  gen->add_option("-o,--output", out_path, "Output file");
  gen->callback([&] {
    action = [&] {
      params.group = parse_group(group);
      return cmd_gen(ctx, kind, params, out_path);
    };
  });

  auto* diff = app.add_subcommand("diff", "Compare a derived table with a table file");
  diff->add_option("structure", path, "Structure file")->required();
  diff->add_option("table", path2, "Table file")->required();
  diff->callback([&] { action = [&] { return cmd_diff(ctx, path, path2); }; });

  auto* compose = app.add_subcommand("compose", "Combine tables");
  compose->require_subcommand(1);
  auto* band = compose->add_subcommand("band", "Glue a negative monoid to a positive monoid");
  band->add_option("negative", path, "Table on non-positive labels")->required();
  band->add_option("positive", path2, "Table on non-negative labels")->required();
  band->add_option("-o,--output", out_path, "Output file");
  band->callback([&] { action = [&] { return cmd_compose_band(ctx, path, path2, out_path); }; });

  auto* join = app.add_subcommand("join", "Build a typed table from a join spec");
  join->add_option("spec", path, "Join spec file")->required();
  join->add_option("-o,--output", out_path, "Output file");
  join->callback([&] { action = [&] { return cmd_join(ctx, path, out_path); }; });

  auto* power = app.add_subcommand("power", "Product of a word of labels");
  std::vector<std::string> word;
  power->add_option("table", path, "Table file")->required();
  power->add_option("word", word, "Labels, after --");
  power->callback([&] { action = [&] { return cmd_power(ctx, path, word); }; });

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  bool lattice = false;
  dot->add_option("table", path, "Table file")->required();
  dot->add_flag("--lattice", lattice, "Restriction lattice")->required();
  dot->add_option("-o,--output", out_path, "Output file");
  dot->callback([&] { action = [&] { return cmd_export_dot(ctx, path, out_path); }; });

  auto* fixtures = app.add_subcommand("fixtures", "Bundled example tables");
  bool list = false;
  std::string emit, emit_all;
  fixtures->add_flag("--list", list, "List fixture names");
  fixtures->add_option("--emit", emit, "Write one fixture");
  fixtures->add_option("--emit-all", emit_all, "Write every fixture into a directory");
  fixtures->add_option("-o,--output", out_path, "Output file for --emit");
  fixtures->callback([&] { action = [&] { return cmd_fixtures(ctx, list, emit, emit_all, out_path); }; });

  auto* sweep = app.add_subcommand("sweep", "Property checks on seeded random tables");
  std::size_t count = 100;
  sweep->add_option("--count", count, "Number of tables");
  sweep->callback([&] { action = [&] { return cmd_sweep(ctx, count); }; });

  for (auto* sub : {validate, analyze, derive, gen, diff, compose, band, join, power, dot, fixtures, sweep}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  ctx.format = format;
  if (window > 0) ctx.window = window;
  ctx.seed = seed;
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace isolab
