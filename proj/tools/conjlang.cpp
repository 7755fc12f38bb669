#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conjlang/acceptance/criteria.hpp"
#include "conjlang/fsa/io.hpp"
#include "conjlang/fsa/operations.hpp"
#include "conjlang/garside/artin_dihedral.hpp"
#include "conjlang/garside/element.hpp"
#include "conjlang/garside/oracle.hpp"
#include "conjlang/graphprod/graph_product.hpp"
#include "conjlang/groups/paper_languages.hpp"
#include "conjlang/groups/registry.hpp"
#include "conjlang/groups/witness.hpp"
#include "conjlang/langkit/languages.hpp"
#include "conjlang/series/growth.hpp"
#include "json.hpp"

using namespace conjlang;

namespace {

// Bad input that should end the run with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

LanguageKind kind_of(const std::string& text) {
  auto k = parse_kind(text);
  if (!k) throw UsageError("unknown language kind '" + text + "' (Geo, CycGeo, ConjGeo, SL, MinCl, ConjSL)");
  return *k;
}

std::unique_ptr<GroupOracle> group_of(const std::string& tag) {
  try {
    return make_group(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::shared_ptr<const GarsideModel> model_of(const std::string& tag) {
  try {
    return make_model(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// "paper:NAME" or an automaton file.
Dfa machine_of(const std::string& ref) {
  if (ref.rfind("paper:", 0) == 0) {
    try {
      return paper_language_dfa(ref.substr(6));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  try {
    return dfa_from_json(read_file(ref));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(ref + ": " + e.what());
  }
}

Word parse_word(const Alphabet& a, const std::string& text) {
  try {
    return a.parse(text);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse word '" + text + "': " + e.what());
  }
}

std::string tag_help() {
  std::ostringstream s;
  s << "\nGroup tags (--group):\n";
  for (const auto& t : group_tags()) s << "  " << t.tag << "\n      " << t.description << "\n";
  s << "\nGarside models (--model):\n"
       "  braid:n       braid group B_n, 2 <= n <= 6, atoms s1..s(n-1), inverses S1..\n"
       "  dihedral:m    dihedral Artin group <a,b | _m(a,b) = _m(b,a)>, 3 <= m <= 64, atoms a,b, inverses A,B\n";
  s << "\nLanguage kinds (--kind): Geo, CycGeo (geocpl), ConjGeo (geocl), SL (sphl), MinCl, ConjSL (sphcl)\n";
  s << "\nExpressions (--against paper:NAME, fsa paper NAME):\n";
  for (const auto& e : paper_expressions())
    s << "  " << e.name << "  [" << e.group << ", " << e.kind << "]\n      " << e.text << "\n";
  s << "\nWitness patterns (--pattern):\n";
  for (const auto& p : witness_patterns())
    s << "  " << p.name << "  [" << p.group << ", " << to_string(p.kind) << "]\n";
  s << "\nExit status: 0 success or verified, 1 divergence found, 2 usage error.\n";
  return s.str();
}

std::string join_counts(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy languages of groups: enumeration, automata, series, Garside normal forms, graph products"};
  app.footer(tag_help());
  app.require_subcommand(1);

  int n = 8;
  int budget = 2;
  bool force_inexact = false;
  std::string group, kind_text, against, format = "tsv", word, model, graph, pattern, dfa_file, out_dir;
  std::vector<std::string> files, replacements;
  int mm = 0, nn = 0, steps = 1, K = -1;
  unsigned seed = AcceptanceOptions{}.seed;
  bool decycle = false, corrected = false;
  std::string side = "left", vertex;

  auto add_group = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--group", group, "group tag (see list below)");
    if (required) o->required();
  };
  auto add_sample = [&](CLI::App* c) {
    c->add_option("--budget", budget, "conjugator radius for groups without a conjugacy key")->check(CLI::PositiveNumber);
    c->add_flag("--force-inexact", force_inexact, "allow conjugacy languages from bounded search");
  };

  auto* lang = app.add_subcommand("lang", "enumerate a language or verify it against an automaton");
  lang->require_subcommand(1);
  auto* enumerate_cmd = lang->add_subcommand("enumerate", "all words of the language up to length n");
  auto* verify_cmd = lang->add_subcommand("verify", "compare the enumerated language with an automaton");
  for (auto* c : {enumerate_cmd, verify_cmd}) {
    add_group(c);
    c->add_option("--kind", kind_text, "language kind")->required();
    c->add_option("-n", n, "length bound")->check(CLI::NonNegativeNumber);
    add_sample(c);
  }
  enumerate_cmd->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  verify_cmd->add_option("--against", against, "paper:NAME or automaton JSON file")->required();

  auto* series_cmd = app.add_subcommand("series", "growth series of an automaton or conjugacy growth of a group");
  series_cmd->add_option("--dfa", dfa_file, "automaton JSON file or paper:NAME");
  add_group(series_cmd, false);
  series_cmd->add_option("--kind", kind_text, "language kind (with --group)");
  series_cmd->add_option("-n", n, "number of coefficients after the constant term")->check(CLI::NonNegativeNumber);
  add_sample(series_cmd);

  std::string fsa_op;
  auto* fsa_cmd = app.add_subcommand("fsa", "automaton algebra on JSON automata");
  fsa_cmd->add_option("op", fsa_op,
                      "determinize | minimize | complement | union | intersection | difference | cyc | insert | "
                      "concat | quotient | accepts | enumerate | equiv | dot | paper")
      ->required()
      ->check(CLI::IsMember({"determinize", "minimize", "complement", "union", "intersection", "difference", "cyc",
                             "insert", "concat", "quotient", "accepts", "enumerate", "equiv", "dot", "paper"}));
  fsa_cmd->add_option("files", files, "input automata (paper:NAME allowed); for 'paper', the expression name");
  fsa_cmd->add_option("--word", word, "word for accepts / quotient");
  fsa_cmd->add_option("--side", side, "quotient side")->check(CLI::IsMember({"left", "right"}));
  fsa_cmd->add_option("-n", n, "length bound for enumerate")->check(CLI::NonNegativeNumber);
  fsa_cmd->add_option("--format", format, "json or dot output")->check(CLI::IsMember({"tsv", "json", "dot"}));

  std::string garside_op;
  auto* garside_cmd = app.add_subcommand("garside", "Garside normal forms and conjugation");
  garside_cmd->add_option("op", garside_op, "nf | len | sl | cycle | shorten | conjsl")
      ->required()
      ->check(CLI::IsMember({"nf", "len", "sl", "cycle", "shorten", "conjsl"}));
  garside_cmd->add_option("--model", model, "braid:n or dihedral:m")->required();
  garside_cmd->add_option("--word", word, "word over the atoms and their inverses");
  garside_cmd->add_flag("--decycle", decycle, "cycle: decycle instead of cycle");
  garside_cmd->add_option("--steps", steps, "cycle: number of steps")->check(CLI::PositiveNumber);
  garside_cmd->add_option("-K", K, "shorten: step bound (default: the model's bound)");
  garside_cmd->add_option("--mm", mm, "conjsl: first exponent")->check(CLI::NonNegativeNumber);
  garside_cmd->add_option("--nn", nn, "conjsl: second exponent")->check(CLI::NonNegativeNumber);

  std::string gp_op;
  auto* gp_cmd = app.add_subcommand("gp", "graph products of Z and Z/2 vertex groups");
  gp_cmd->add_option("op", gp_op, "geo | conjgeo | rho")->required()->check(CLI::IsMember({"geo", "conjgeo", "rho"}));
  gp_cmd->add_option("--graph", graph, "graph JSON file")->required();
  gp_cmd->add_option("--word", word, "word over the graph's letters")->required();
  gp_cmd->add_option("--vertex", vertex, "rho: vertex name");

  auto* witness_cmd = app.add_subcommand("witness", "membership table of a two-parameter word family");
  add_group(witness_cmd);
  witness_cmd->add_option("--pattern", pattern, "pattern name")->required();
  witness_cmd->add_option("-n", n, "length bound (default: none)");

  auto* bundle_cmd = app.add_subcommand("bundle", "regenerate every acceptance table into a directory");
  bundle_cmd->add_option("--out", out_dir, "output directory")->required();
  bundle_cmd->add_flag("--corrected", corrected, "use corrected expressions where they exist");
  bundle_cmd->add_option("--replace", replacements, "NAME=FILE: use this automaton for expression NAME");
  bundle_cmd->add_option("--seed", seed, "seed for the random machines");

  auto* tags_cmd = app.add_subcommand("tags", "list group tags, models, expressions and patterns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  n = std::max(n, 0);
  SampleOptions sopt;
  sopt.budget = budget;
  sopt.force_inexact = force_inexact;

  try {
    if (*tags_cmd) {
      std::cout << tag_help();
      return 0;
    }

    if (*enumerate_cmd) {
      auto o = group_of(group);
      auto s = language_sample(*o, kind_of(kind_text), n, sopt);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["group"] = group;
        j["kind"] = to_string(s.kind);
        j["bound"] = s.bound;
        j["exact"] = s.exact;
        j["counts"] = s.counts();
        auto words = nlohmann::ordered_json::array();
        for (const auto& level : s.words)
          for (const auto& w : level) words.push_back(s.alphabet.format(w));
        j["words"] = words;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << sample_tsv(s);
      }
      return 0;
    }

    if (*verify_cmd) {
      auto o = group_of(group);
      Dfa d = machine_of(against);
      if (!(d.alphabet() == o->alphabet())) throw UsageError("automaton alphabet differs from the group's alphabet");
      auto s = language_sample(*o, kind_of(kind_text), n, sopt);
      auto c = compare_sample_to_dfa(s, d);
      std::cout << report_json(s, c) << "\n";
      return c.equal ? 0 : 1;
    }

    if (*series_cmd) {
      if (!dfa_file.empty() == !group.empty()) throw UsageError("series needs exactly one of --dfa or --group");
      if (!dfa_file.empty()) {
        Dfa d = machine_of(dfa_file);
        std::cout << rational_series(d).to_string() << "\n" << join_counts(count_by_length(d, n)) << "\n";
      } else {
        if (kind_text.empty()) throw UsageError("series --group needs --kind");
        auto o = group_of(group);
        auto counts = language_sample(*o, kind_of(kind_text), n, sopt).counts();
        std::cout << join_counts(std::vector<BigInt>(counts.begin(), counts.end())) << "\n";
      }
      return 0;
    }

    if (*fsa_cmd) {
      auto need = [&](std::size_t k) {
        if (files.size() != k)
          throw UsageError("fsa " + fsa_op + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
      };
      auto emit = [&](const auto& machine) {
        std::cout << (format == "dot" ? to_dot(machine) : to_json(machine)) << "\n";
        return 0;
      };
      if (fsa_op == "paper") {
        need(1);
        return emit(machine_of("paper:" + files[0]));
      }
      if (fsa_op == "determinize") {
        need(1);
        Nfa nfa;
        try {
          nfa = nfa_from_json(read_file(files[0]));
        } catch (const UsageError&) {
          throw;
        } catch (const std::exception& e) {
          throw UsageError(files[0] + ": " + e.what());
        }
        return emit(determinize(nfa));
      }
      std::vector<Dfa> in;
      for (const auto& f : files) in.push_back(machine_of(f));
      auto same_alphabet = [&] {
        for (const auto& d : in)
          if (!(d.alphabet() == in[0].alphabet())) throw UsageError("automata have different alphabets");
      };
      if (fsa_op == "minimize") return need(1), emit(minimize(in[0]));
      if (fsa_op == "complement") return need(1), emit(complement(in[0]));
      if (fsa_op == "cyc") return need(1), emit(to_dfa(cyclic_closure(in[0])));
      if (fsa_op == "dot") return need(1), std::cout << to_dot(in[0]) << "\n", 0;
      if (fsa_op == "union" || fsa_op == "intersection" || fsa_op == "difference") {
        need(2);
        same_alphabet();
        BoolOp op = fsa_op == "union" ? BoolOp::union_of : fsa_op == "intersection" ? BoolOp::intersection : BoolOp::difference;
        return emit(boolean_op(in[0], in[1], op));
      }
      if (fsa_op == "insert") return need(2), same_alphabet(), emit(to_dfa(insertion(in[0], in[1])));
      if (fsa_op == "concat") return need(2), same_alphabet(), emit(to_dfa(concatenation(in[0], in[1])));
      if (fsa_op == "quotient") {
        need(1);
        return emit(quotient(in[0], parse_word(in[0].alphabet(), word), side == "left" ? Side::left : Side::right));
      }
      if (fsa_op == "accepts") {
        need(1);
        bool yes = accepts(in[0], parse_word(in[0].alphabet(), word));
        std::cout << (yes ? "true" : "false") << "\n";
        return 0;
      }
      if (fsa_op == "enumerate") {
        need(1);
        auto levels = enumerate(in[0], n);
        for (std::size_t len = 0; len < levels.size(); ++len)
          for (const auto& w : levels[len]) std::cout << len << "\t" << in[0].alphabet().format(w) << "\n";
        return 0;
      }
      if (fsa_op == "equiv") {
        need(2);
        same_alphabet();
        auto e = equivalent(in[0], in[1]);
        if (e.equal) {
          std::cout << "equal\n";
          return 0;
        }
        std::cout << "differ at '" << in[0].alphabet().format(*e.counterexample) << "'\n";
        return 1;
      }
    }

    if (*garside_cmd) {
      auto m = model_of(model);
      if (garside_op == "conjsl") {
        auto* dm = dynamic_cast<const DihedralModel*>(m.get());
        if (!dm) throw UsageError("garside conjsl needs a dihedral:m model");
        auto r = dihedral_conjsl_member(dm->m(), mm, nn);
        auto A = dihedral_alphabet();
        std::cout << "word\t" << A.format(r.word) << "\nrepresentative\t" << A.format(r.representative)
                  << "\nmember\t" << (r.member ? "true" : "false") << "\nin_range\t" << (r.in_range ? "true" : "false")
                  << "\n";
        return 0;
      }
      auto x = normalize(*m, parse_word(atom_alphabet(*m), word));
      if (garside_op == "nf") {
        std::cout << format_nf(*m, x) << "\n";
      } else if (garside_op == "len") {
        auto l = inf_sup_len(x);
        std::cout << "inf\t" << l.inf << "\nsup\t" << l.sup << "\nlength\t" << l.length << "\n";
      } else if (garside_op == "sl") {
        std::cout << simples_alphabet(*m).format(garside_sl_nf(*m, x)) << "\n";
      } else if (garside_op == "cycle") {
        auto d = decycle ? CycleDirection::decycling : CycleDirection::cycling;
        std::cout << format_nf(*m, x) << "\n";
        for (int i = 0; i < steps; ++i) {
          auto y = cycle(*m, x, d);
          if (!y) {
            std::cout << "(power of D, nothing to cycle)\n";
            break;
          }
          x = *y;
          std::cout << format_nf(*m, x) << "\n";
        }
      } else if (garside_op == "shorten") {
        int bound = K >= 0 ? K : m->conj_bound();
        auto r = conj_shorten(*m, x, bound);
        if (r.shortened) {
          std::cout << "shortened\t" << format_nf(*m, r.result) << "\nlength\t" << inf_sup_len(r.result).length
                    << "\nconjugator\t" << format_nf(*m, r.conjugator) << "\nby\t"
                    << (r.direction == CycleDirection::cycling ? "cycling" : "decycling") << "\nsteps\t" << r.steps
                    << "\n";
        } else {
          std::cout << "stable\t" << format_nf(*m, x) << "\nlength\t" << inf_sup_len(x).length << "\nbound\t" << bound
                    << "\n";
        }
      }
      return 0;
    }

    if (*gp_cmd) {
      GraphProductSpec spec = [&] {
        try {
          return GraphProductSpec::from_json(read_file(graph));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      Word w = parse_word(spec.alphabet(), word);
      if (gp_op == "rho") {
        if (vertex.empty()) throw UsageError("gp rho needs --vertex");
        std::size_t i = 0;
        try {
          i = spec.vertex_index(vertex);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        std::cout << rho(spec, i, w).format(spec.alphabet()) << "\n";
        return 0;
      }
      bool yes = gp_op == "geo" ? gp_geodesic(spec, w) : gp_conjgeo(spec, w);
      std::cout << (yes ? "true" : "false") << "\n";
      return 0;
    }

    if (*witness_cmd) {
      const WitnessPattern* p = nullptr;
      try {
        p = &witness_pattern(pattern);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (p->group != group) throw UsageError("pattern " + pattern + " belongs to group " + p->group);
      auto o = group_of(group);
      std::cout << witness_tsv(nonregularity_witness(*o, *p, n < 0 ? -1 : n));
      return 0;
    }

    if (*bundle_cmd) {
      AcceptanceOptions opt;
      opt.corrected = corrected;
      opt.seed = seed;
      for (const auto& r : replacements) {
        auto eq = r.find('=');
        if (eq == std::string::npos) throw UsageError("--replace expects NAME=FILE");
        opt.replacements[r.substr(0, eq)] = machine_of(r.substr(eq + 1));
      }
      namespace fs = std::filesystem;
      fs::create_directories(out_dir);
      std::string summary;
      bool all = true;
      for (int id : criterion_ids()) {
        auto r = run_criterion(id, opt);
        all = all && r.pass;
        summary += format_result(r) + "\n";
        std::cout << format_result(r) << std::endl;
        for (const auto& a : r.artifacts) {
          std::ofstream f(fs::path(out_dir) / ("c" + std::to_string(id) + "_" + a.name), std::ios::binary);
          f << a.content;
        }
      }
      std::ofstream(fs::path(out_dir) / "summary.txt", std::ios::binary) << summary;
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
