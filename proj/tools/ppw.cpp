// ppw: command-line front end for the pseudoperiodic words library.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ppw/automata.hpp"
#include "ppw/generators.hpp"
#include "ppw/powers.hpp"
#include "ppw/pseudoperiod.hpp"
#include "ppw/reduction.hpp"
#include "ppw/search.hpp"
#include "reproduce.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace ppw;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

// What a subcommand hands back: a JSON report, its plain-text rendering and
// the exit code.
struct Result {
  json report;
  std::string text;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WordFormat format_from(const std::string& name) {
  if (name == "auto") return WordFormat::Auto;
  if (name == "digits") return WordFormat::Digits;
  if (name == "integers") return WordFormat::Integers;
  if (name == "letters") return WordFormat::Letters;
  throw UsageError("unknown word format '" + name + "'");
}

// --seq NAME --len N | --word W | --file F
struct WordInput {
  std::string seq;
  std::size_t len = 0;
  std::string word;
  std::string file;
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    auto* s = cmd->add_option("--seq", seq, "named sequence (t f tr vtm mw pd rs)");
    cmd->add_option("--len", len, "prefix length for --seq");
    auto* w = cmd->add_option("--word", word, "literal word");
    auto* f = cmd->add_option("--file", file, "file holding a word");
    s->excludes(w)->excludes(f);
    w->excludes(f);
    cmd->add_option("--format", format, "auto|digits|integers|letters")
        ->check(CLI::IsMember({"auto", "digits", "integers", "letters"}));
  }

  bool is_sequence() const { return !seq.empty(); }

  std::string label() const {
    if (is_sequence()) return seq;
    if (!file.empty()) return file;
    return "word";
  }

  Word load() const {
    if (is_sequence()) {
      if (len == 0) throw UsageError("--seq needs --len");
      return named_sequence(seq, len);
    }
    if (!word.empty()) return parse_word(word, format_from(format)).word;
    if (!file.empty()) return parse_word(read_file(file), format_from(format)).word;
    throw UsageError("give one of --seq, --word or --file");
  }
};

json witness_json(const std::optional<PowerWitness>& w) {
  if (!w) return nullptr;
  return {{"start", w->start}, {"length", w->length}, {"period", w->period}};
}

std::string witness_text(const std::optional<PowerWitness>& w) {
  if (!w) return "none";
  return "start " + std::to_string(w->start) + ", length " + std::to_string(w->length) + ", period " +
         std::to_string(w->period);
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

// Verdict line for a pseudoperiod check. Prefixes of infinite words only
// ever give evidence, so they are labelled as such.
std::string pp_verdict(const WordInput& in, const Word& w, const std::optional<std::size_t>& violation) {
  const std::string tail = in.is_sequence() ? " (prefix length " + std::to_string(w.size()) + ")" : "";
  if (violation) return "violation-found at " + std::to_string(*violation) + tail;
  return std::string(in.is_sequence() ? "consistent-on-prefix: true" : "pseudoperiod: true") + tail;
}

Morphism load_morphism(const std::string& spec) {
  if (spec.find("->") != std::string::npos) return Morphism::parse(spec);
  std::ifstream probe(spec);
  if (probe) return Morphism::parse(read_file(spec));
  return shipped_morphism(spec);
}

TupleDfa load_dfa(const std::string& spec) {
  std::ifstream probe(spec);
  if (probe) return parse_walnut_dfa(read_file(spec));
  if (spec == "triple" || spec == "triple.dfa") return triple_automaton();
  throw UsageError("cannot open automaton '" + spec + "'");
}

std::vector<std::uint64_t> parse_numbers(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned.push_back(c == ',' || c == '(' || c == ')' ? ' ' : c);
  std::istringstream in(cleaned);
  std::vector<std::uint64_t> out;
  for (std::uint64_t v; in >> v;) out.push_back(v);
  if (!in.eof()) throw UsageError("bad number list '" + text + "'");
  return out;
}

std::string tuple_text(const std::vector<std::uint64_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudoperiods, powers and automata for finite and morphic words"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "emit a JSON report");
  app.add_option("--threads", g.threads, "worker threads for searches")->check(CLI::Range(1u, 256u));

  std::function<Result()> run;

  // gen ---------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "print a prefix of a sequence");
  std::string gen_name;
  std::string gen_morphism;
  unsigned gen_seed = 0;
  std::size_t gen_len = 0;
  std::string gen_fold;
  std::string gen_cf;
  gen->add_option("name", gen_name, "registered sequence name");
  gen->add_option("--morphism", gen_morphism, "morphism file, shipped name or inline text");
  gen->add_option("--seed", gen_seed, "seed letter for --morphism");
  gen->add_option("--paperfolding", gen_fold, "unfolding code, e.g. +1,-1,+1");
  gen->add_option("--sturmian", gen_cf, "partial quotients, e.g. 2,1,1,1");
  gen->add_option("--len", gen_len, "prefix length");
  gen->callback([&] {
    run = [&]() -> Result {
      Word w;
      std::string source;
      if (!gen_fold.empty()) {
        PaperfoldingCode code;
        std::string cleaned = gen_fold;
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream in(cleaned);
        for (std::string tok; in >> tok;) {
          if (tok == "+1" || tok == "1" || tok == "+") {
            code.instructions.push_back(1);
          } else if (tok == "-1" || tok == "-") {
            code.instructions.push_back(-1);
          } else {
            throw UsageError("bad unfolding instruction '" + tok + "'");
          }
        }
        w = paperfolding_word(code);
        if (gen_len) w = w.prefix(gen_len);
        source = "paperfolding " + gen_fold;
      } else {
        if (gen_len == 0) throw UsageError("--len is required");
        if (!gen_cf.empty()) {
          ContinuedFraction cf;
          for (auto v : parse_numbers(gen_cf)) cf.partial_quotients.push_back(v);
          w = sturmian_characteristic(cf, gen_len);
          source = "sturmian " + gen_cf;
        } else if (!gen_morphism.empty()) {
          w = fixed_point_prefix(load_morphism(gen_morphism), static_cast<Symbol>(gen_seed), gen_len);
          source = gen_morphism;
        } else if (!gen_name.empty()) {
          w = named_sequence(gen_name, gen_len);
          source = gen_name;
        } else {
          throw UsageError("give a sequence name, --morphism, --paperfolding or --sturmian");
        }
      }
      return {{{"source", source}, {"length", w.size()}, {"word", w.str()}}, w.str()};
    };
  });

  // pp ----------------------------------------------------------------------
  auto* pp = app.add_subcommand("pp", "pseudoperiod checks and searches");
  pp->require_subcommand(1);
  WordInput pp_in;
  std::string pp_tuple;
  std::size_t pp_k = 2;
  std::size_t pp_bound = 16;

  auto* pp_check = pp->add_subcommand("check", "check one tuple");
  pp_in.attach(pp_check);
  pp_check->add_option("--tuple", pp_tuple, "tuple such as 1,8,9")->required();
  pp_check->callback([&] {
    run = [&]() -> Result {
      const Word w = pp_in.load();
      const PpTuple t = PpTuple::parse(pp_tuple);
      const auto v = first_violation(w, t);
      return {{{"source", pp_in.label()},
               {"prefix_length", w.size()},
               {"tuple", t.str()},
               {"holds", !v},
               {"first_violation", optional_json(v)},
               {"label", pp_in.is_sequence() ? (v ? "violation-found" : "consistent-on-prefix")
                                             : (v ? "violation-found" : "pseudoperiod")}},
              pp_verdict(pp_in, w, v),
              v ? kFailed : kOk};
    };
  });

  auto* pp_find = pp->add_subcommand("find", "lexicographically least k-tuple within the bound");
  pp_in.attach(pp_find);
  pp_find->add_option("--k", pp_k, "tuple size");
  pp_find->add_option("--bound", pp_bound, "largest entry");
  pp_find->callback([&] {
    run = [&]() -> Result {
      const Word w = pp_in.load();
      const auto t = find_pseudoperiod(w, pp_k, pp_bound);
      std::string text = t ? t->str() : "none";
      if (pp_in.is_sequence()) text += " (prefix length " + std::to_string(w.size()) + ")";
      return {{{"source", pp_in.label()},
               {"prefix_length", w.size()},
               {"k", pp_k},
               {"bound", pp_bound},
               {"tuple", t ? json(t->str()) : json(nullptr)}},
              text,
              kOk};
    };
  });

  auto* pp_enum = pp->add_subcommand("enum", "every k-tuple within the bound");
  pp_in.attach(pp_enum);
  pp_enum->add_option("--k", pp_k, "tuple size");
  pp_enum->add_option("--bound", pp_bound, "largest entry");
  pp_enum->callback([&] {
    run = [&]() -> Result {
      const Word w = pp_in.load();
      const auto all = enumerate_pseudoperiods(w, pp_k, pp_bound, g.threads);
      json list = json::array();
      std::string text;
      for (const auto& t : all) {
        list.push_back(t.str());
        text += t.str() + "\n";
      }
      text += std::to_string(all.size()) + " tuples";
      if (pp_in.is_sequence()) text += " (prefix length " + std::to_string(w.size()) + ")";
      return {{{"source", pp_in.label()},
               {"prefix_length", w.size()},
               {"k", pp_k},
               {"bound", pp_bound},
               {"count", all.size()},
               {"tuples", list}},
              text,
              kOk};
    };
  });

  auto* pp_min = pp->add_subcommand("min", "smallest size of a pseudoperiod within the bound");
  pp_in.attach(pp_min);
  pp_min->add_option("--bound", pp_bound, "largest entry");
  pp_min->callback([&] {
    run = [&]() -> Result {
      const Word w = pp_in.load();
      const auto k = min_pseudoperiod_size(w, pp_bound);
      return {{{"source", pp_in.label()}, {"prefix_length", w.size()}, {"bound", pp_bound}, {"size", optional_json(k)}},
              k ? "min size " + std::to_string(*k) : "none",
              kOk};
    };
  });

  // power -------------------------------------------------------------------
  auto* power = app.add_subcommand("power", "fractional powers");
  power->require_subcommand(1);
  WordInput pw_in;
  std::string pw_exp;
  auto* pw_check = power->add_subcommand("check", "search for a factor reaching an exponent");
  pw_in.attach(pw_check);
  pw_check->add_option("--exp", pw_exp, "threshold such as 7/3 or 3+")->required();
  pw_check->callback([&] {
    run = [&]() -> Result {
      const Word w = pw_in.load();
      const Exponent e = Exponent::parse(pw_exp);
      const auto wit = contains_power_at_least(w, e);
      std::string text = wit ? "power found: " + witness_text(wit) : "free of " + e.str() + " powers: true";
      if (pw_in.is_sequence()) text += " (prefix length " + std::to_string(w.size()) + ")";
      return {{{"source", pw_in.label()},
               {"prefix_length", w.size()},
               {"exponent", e.str()},
               {"free", !wit},
               {"witness", witness_json(wit)}},
              text,
              wit ? kFailed : kOk};
    };
  });
  auto* pw_crit = power->add_subcommand("critexp", "critical exponent of a finite word");
  pw_in.attach(pw_crit);
  pw_crit->callback([&] {
    run = [&]() -> Result {
      const Word w = pw_in.load();
      const Exponent e = critical_exponent(w);
      return {{{"source", pw_in.label()}, {"prefix_length", w.size()}, {"critical_exponent", e.str()}}, e.str(), kOk};
    };
  });

  // dfa ---------------------------------------------------------------------
  auto* dfa = app.add_subcommand("dfa", "tuple automata in Walnut format");
  dfa->require_subcommand(1);
  std::string dfa_file;
  std::string dfa_tuple;
  std::uint64_t dfa_bound = 16;
  auto* dfa_acc = dfa->add_subcommand("accepts", "run the automaton on a tuple");
  dfa_acc->add_option("file", dfa_file, "automaton file (the name 'triple' selects the shipped one)")->required();
  dfa_acc->add_option("tuple", dfa_tuple, "tuple such as 1,8,9")->required();
  dfa_acc->callback([&] {
    run = [&]() -> Result {
      const TupleDfa d = load_dfa(dfa_file);
      const auto t = parse_numbers(dfa_tuple);
      const bool ok = dfa_accepts(d, t);
      return {{{"automaton", dfa_file}, {"tuple", tuple_text(t)}, {"accepted", ok}}, ok ? "true" : "false", kOk};
    };
  });
  auto* dfa_en = dfa->add_subcommand("enum", "list accepted tuples");
  dfa_en->add_option("file", dfa_file, "automaton file")->required();
  dfa_en->add_option("--bound", dfa_bound, "largest component");
  dfa_en->callback([&] {
    run = [&]() -> Result {
      const TupleDfa d = load_dfa(dfa_file);
      const auto all = dfa_enumerate(d, dfa_bound);
      json list = json::array();
      std::string text;
      for (const auto& t : all) {
        list.push_back(t);
        text += tuple_text(t) + "\n";
      }
      text += std::to_string(all.size()) + " tuples";
      return {{{"automaton", dfa_file}, {"bound", dfa_bound}, {"count", all.size()}, {"tuples", list}}, text, kOk};
    };
  });

  // longest -----------------------------------------------------------------
  auto* longest = app.add_subcommand("longest", "longest word with a pseudoperiod avoiding powers");
  std::string lg_pp;
  std::string lg_exp;
  unsigned lg_alpha = 2;
  std::size_t lg_cap = 10000;
  longest->add_option("--pp", lg_pp, "pseudoperiod such as 1,4")->required();
  longest->add_option("--exp", lg_exp, "forbidden exponent (3 forbids exponent >= 3, 3+ forbids > 3)")->required();
  longest->add_option("--alphabet", lg_alpha, "alphabet size");
  longest->add_option("--cap", lg_cap, "depth cap");
  longest->callback([&] {
    run = [&]() -> Result {
      SearchSpec spec;
      spec.alphabet_size = lg_alpha;
      spec.pp = PpTuple::parse(lg_pp);
      spec.forbidden = Exponent::parse(lg_exp);
      spec.depth_cap = lg_cap;
      const auto o = longest_constrained_word(spec, g.threads);
      const bool finite = o.verdict == SearchVerdict::FiniteTree;
      std::string text = finite ? "finite tree; longest = " + std::to_string(o.longest_length)
                                : "cap exceeded; longest >= " + std::to_string(o.longest_length);
      text += "\nwitness: " + o.witness.str();
      return {{{"pp", spec.pp.str()},
               {"forbidden", spec.forbidden.str()},
               {"alphabet", lg_alpha},
               {"verdict", verdict_name(o.verdict)},
               {"longest_length", o.longest_length},
               {"witness", o.witness.str()}},
              text,
              kOk};
    };
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "bounded checks of morphic constructions");
  verify->require_subcommand(1);
  std::string vf_morphism;
  std::string vf_outer;
  std::string vf_base = "t";
  std::string vf_pp;
  std::string vf_exp;
  std::size_t vf_len = 10000;
  auto* vf_m = verify->add_subcommand("morphism", "pseudoperiod and power-freeness of m(base)");
  vf_m->add_option("--morphism", vf_morphism, "morphism file, shipped name or inline text")->required();
  vf_m->add_option("--outer", vf_outer, "apply this morphism after --morphism");
  vf_m->add_option("--base", vf_base, "base sequence");
  vf_m->add_option("--pp", vf_pp, "pseudoperiod")->required();
  vf_m->add_option("--exp", vf_exp, "exponent to avoid, e.g. 3+")->required();
  vf_m->add_option("--len", vf_len, "image prefix length");
  vf_m->callback([&] {
    run = [&]() -> Result {
      Morphism m = load_morphism(vf_morphism);
      if (!vf_outer.empty()) m = compose(load_morphism(vf_outer), m);
      const auto r = verify_construction(m, vf_base, PpTuple::parse(vf_pp), Exponent::parse(vf_exp), vf_len);
      std::string text = "pseudoperiod " + r.pp.str() + ": " +
                         (r.pp_violation ? "violation-found at " + std::to_string(*r.pp_violation)
                                         : std::string("consistent-on-prefix: true")) +
                         "\n" + r.free_at.str() + "-free: " + (r.power_witness ? "false, " + witness_text(r.power_witness) : "true") +
                         "\nprefix length " + std::to_string(r.prefix_length);
      return {{{"morphism", m.str()},
               {"base", vf_base},
               {"prefix_length", r.prefix_length},
               {"pp", r.pp.str()},
               {"pp_holds", !r.pp_violation},
               {"first_violation", optional_json(r.pp_violation)},
               {"exponent", r.free_at.str()},
               {"power_free", !r.power_witness},
               {"witness", witness_json(r.power_witness)},
               {"passed", r.passed()}},
              text,
              r.passed() ? kOk : kFailed};
    };
  });

  std::size_t vr_i = 0;
  std::size_t vr_n = 0;
  std::string vr_samples;
  auto* vf_r = verify->add_subcommand("residue", "pseudoperiods (1,a) for a in one residue class");
  vf_r->add_option("--morphism", vf_morphism, "uniform morphism")->required();
  vf_r->add_option("--i", vr_i, "residue")->required();
  vf_r->add_option("--n", vr_n, "modulus")->required();
  vf_r->add_option("--samples", vr_samples, "values of a, e.g. 4,9,14")->required();
  vf_r->add_option("--len", vf_len, "image prefix length");
  vf_r->callback([&] {
    run = [&]() -> Result {
      std::vector<std::size_t> samples;
      for (auto v : parse_numbers(vr_samples)) samples.push_back(v);
      const auto r = verify_residue_class(load_morphism(vf_morphism), vr_i, vr_n, samples, vf_len);
      json rows = json::array();
      std::string text;
      for (const auto& s : r.samples) {
        rows.push_back({{"a", s.a}, {"pp_holds", !s.pp_violation}, {"first_violation", optional_json(s.pp_violation)}});
        text += "(1," + std::to_string(s.a) + "): " +
                (s.pp_violation ? "violation-found at " + std::to_string(*s.pp_violation)
                                : std::string("consistent-on-prefix: true")) +
                "\n";
      }
      text += std::string("3+-free: ") + (r.power_witness ? "false, " + witness_text(r.power_witness) : "true") +
              "\nprefix length " + std::to_string(r.prefix_length);
      return {{{"i", vr_i},
               {"n", vr_n},
               {"prefix_length", r.prefix_length},
               {"samples", rows},
               {"power_free", !r.power_witness},
               {"witness", witness_json(r.power_witness)},
               {"passed", r.passed()}},
              text,
              r.passed() ? kOk : kFailed};
    };
  });

  std::string vt_which;
  std::size_t vt_base_len = 50;
  auto* vf_t = verify->add_subcommand("theorem", "uniform morphisms over 3, 4 and 5 letters");
  vf_t->add_option("which", vt_which, "18_37, 4_10 or 9_19")
      ->required()
      ->check(CLI::IsMember(large_alphabet_theorem_names()));
  vf_t->add_option("--base-len", vt_base_len, "length of the generated preimage");
  vf_t->callback([&] {
    run = [&]() -> Result {
      const auto data = large_alphabet_theorem(vt_which);
      const auto r = verify_large_alphabet_theorem(vt_which, vt_base_len);
      std::string text = "base: " + r.base.str() + "\nimage length " + std::to_string(r.image_length) +
                         "\npseudoperiod " + data.pp.str() + ": " +
                         (r.pp_violation ? "violation-found at " + std::to_string(*r.pp_violation) : std::string("true")) +
                         "\n" + data.image_threshold.str() + "-free: " +
                         (r.power_witness ? "false, " + witness_text(r.power_witness) : "true") +
                         "\nsynchronizing prefix: " +
                         (r.stray_prefix ? "stray occurrence at " + std::to_string(*r.stray_prefix) : std::string("true"));
      return {{{"theorem", vt_which},
               {"base", r.base.str()},
               {"image_length", r.image_length},
               {"pp", data.pp.str()},
               {"pp_holds", !r.pp_violation},
               {"first_violation", optional_json(r.pp_violation)},
               {"exponent", data.image_threshold.str()},
               {"power_free", !r.power_witness},
               {"witness", witness_json(r.power_witness)},
               {"synchronizing", !r.stray_prefix},
               {"passed", r.passed()}},
              text,
              r.passed() ? kOk : kFailed};
    };
  });

  // reduce ------------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "HITTING SET to PSEUDOPERIOD");
  reduce->require_subcommand(1);
  std::string rd_file;
  std::string rd_kind = "pp";
  std::string rd_solution;
  std::uint64_t rd_limit = SolverLimits{}.max_subsets;
  auto* rd_build = reduce->add_subcommand("build", "build the PSEUDOPERIOD instance of a HITTING SET file");
  rd_build->add_option("file", rd_file, "HITTING SET instance")->required();
  rd_build->callback([&] {
    run = [&]() -> Result {
      const auto inst = build_pp_instance(HittingSetInstance::parse(read_file(rd_file)));
      std::string text = inst.str();
      text.pop_back();
      return {{{"x", inst.x.str()}, {"length", inst.x.size()}, {"k", inst.k}, {"B", inst.bound}}, text, kOk};
    };
  });
  auto* rd_solve = reduce->add_subcommand("solve", "brute-force solver");
  rd_solve->add_option("file", rd_file, "instance file")->required();
  rd_solve->add_option("--kind", rd_kind, "pp (PSEUDOPERIOD) or hs (HITTING SET)")->check(CLI::IsMember({"pp", "hs"}));
  rd_solve->add_option("--limit", rd_limit, "refuse searches over more subsets than this");
  rd_solve->callback([&] {
    run = [&]() -> Result {
      const SolverLimits limits{rd_limit};
      if (rd_kind == "hs") {
        const auto h = HittingSetInstance::parse(read_file(rd_file));
        const auto sol = solve_hitting_set(h, limits);
        std::string text = "none";
        if (sol) text = tuple_text(std::vector<std::uint64_t>(sol->begin(), sol->end()));
        return {{{"kind", "hitting_set"}, {"solution", sol ? json(*sol) : json(nullptr)}}, text, kOk};
      }
      const auto inst = PseudoperiodInstance::parse(read_file(rd_file));
      const auto sol = solve_pseudoperiod(inst, limits);
      return {{{"kind", "pseudoperiod"}, {"solution", sol ? json(sol->str()) : json(nullptr)}},
              sol ? sol->str() : "none",
              kOk};
    };
  });
  auto* rd_extract = reduce->add_subcommand("extract", "hitting set from a pseudoperiod of the built instance");
  rd_extract->add_option("file", rd_file, "HITTING SET instance")->required();
  rd_extract->add_option("--solution", rd_solution, "pseudoperiod such as 1,2,3,4,8")->required();
  rd_extract->callback([&] {
    run = [&]() -> Result {
      const auto h = HittingSetInstance::parse(read_file(rd_file));
      const auto hs = extract_hitting_set(h, PpTuple::parse(rd_solution));
      return {{{"hitting_set", hs}}, tuple_text(std::vector<std::uint64_t>(hs.begin(), hs.end())), kOk};
    };
  });

  // reproduce ---------------------------------------------------------------
  auto* repro = app.add_subcommand("reproduce", "canned reproduction runs with pass/fail lines");
  std::string rp_which;
  repro->add_option("which", rp_which, "table1, shevelev, vtm, paperfolding or reduction")
      ->required()
      ->check(CLI::IsMember(tools::reproduce_targets()));
  repro->callback([&] {
    run = [&]() -> Result {
      const auto checks = tools::reproduce(rp_which, g.threads);
      json rows = json::array();
      std::string text;
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.passed;
        rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]") +
                "\n";
      }
      text += std::to_string(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; })) +
              "/" + std::to_string(checks.size()) + " passed";
      return {{{"which", rp_which}, {"checks", rows}, {"passed", all}}, text, all ? kOk : kFailed};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Result r = run();
    if (g.json) {
      json out = r.report;
      out["exit_code"] = r.code;
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << r.text << '\n';
    }
    return r.code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
