// Command line front end: build | member | separate | pointlike.
//
// Output is line oriented: the first line is the verdict, then optional
// "witness:"/"certificate:" lines, then "# stats:" comments.  Exit codes:
// 0 positive verdict, 1 negative verdict, 2 input error, 3 resource cap.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rclos/brute.hpp"
#include "rclos/decide.hpp"
#include "rclos/errors.hpp"
#include "rclos/generate.hpp"
#include "rclos/semigroup.hpp"
#include "rclos/term.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

struct CommonFlags {
  std::size_t cap = 1'000'000;
  bool serial = false;

  rclos::GenOptions gen_options() const {
    rclos::GenOptions options;
    options.cap = cap;
    options.parallel = !serial;
    return options;
  }
};

// Automaton arguments are .aut paths, or "re:<pattern>" built on the fly.
// All regexes of one invocation share the union of their letters (plus the
// letters of any .aut files), so `separate re:a+ re:b+` works as expected.
std::vector<rclos::Automaton> load_automata(
    const std::vector<std::string>& args) {
  std::string alphabet;
  std::vector<std::optional<rclos::Automaton>> loaded(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].rfind("re:", 0) == 0) {
      for (char c : args[i].substr(3)) {
        if (std::string("|*+() \t").find(c) == std::string::npos) {
          alphabet.push_back(c);
        }
      }
    } else {
      loaded[i] = rclos::load_automaton(args[i]);
      alphabet += loaded[i]->graph.alphabet();
    }
  }
  std::vector<rclos::Automaton> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (loaded[i]) {
      out.push_back(std::move(*loaded[i]));
      continue;
    }
    std::string pattern = args[i].substr(3);
    rclos::Automaton aut = rclos::regex_to_automaton(pattern, alphabet);
    if (rclos::accepts_empty_word(aut)) {
      throw rclos::ParseError(
          "the language of '" + args[i] +
          "' contains the empty word; these procedures work over nonempty "
          "words — use '+' instead of '*' at the top level");
    }
    out.push_back(std::move(aut));
  }
  return out;
}

rclos::Automaton load_one_automaton(const std::string& arg) {
  return std::move(load_automata({arg})[0]);
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--cap", flags.cap, "element cap for generation");
  cmd->add_flag("--serial", flags.serial, "use the serial generation path");
}

int run_build(const std::string& aut_path, bool dump,
              const CommonFlags& flags) {
  auto start = Clock::now();
  rclos::Automaton aut = load_one_automaton(aut_path);
  rclos::GenSemigroup sg = rclos::generate(aut.graph, flags.gen_options());
  double bound = rclos::element_count_bound(
      aut.graph.states(), static_cast<int>(aut.graph.alphabet().size()));
  std::cout << "BUILT elements=" << sg.size() << " bound=" << bound << "\n";
  if (dump) {
    for (const auto& element : sg.elements()) {
      std::cout << element.witness.render() << " | word="
                << element.triple.word().letters() << " marks="
                << element.triple.marks().chars() << "\n";
    }
  }
  std::cout << "# stats: elements=" << sg.size()
            << " elapsed_ms=" << elapsed_ms(start) << "\n";
  return 0;
}

int run_member(const std::string& aut_path, const std::string& term_text,
               bool certify, int samples, const CommonFlags&) {
  auto start = Clock::now();
  rclos::Automaton aut = load_one_automaton(aut_path);
  rclos::OmegaTerm term =
      rclos::parse_term(term_text, aut.graph.alphabet());
  rclos::RTriple value = rclos::eval_bracket(term, aut.graph);
  auto pair = rclos::common_pair(value, aut.initial, aut.accepting);
  if (!pair) {
    std::cout << "NOT_MEMBER\n";
    std::cout << "# stats: elapsed_ms=" << elapsed_ms(start) << "\n";
    return 1;
  }
  std::cout << "MEMBER\n";
  if (certify) {
    rclos::OmegaTerm beta =
        rclos::extract_certificate(term, *pair, aut.graph);
    bool verified = rclos::verify_certificate(beta, aut, samples);
    std::cout << "certificate: " << beta.render()
              << " verified=" << (verified ? "true" : "false") << "\n";
  }
  std::cout << "# stats: elapsed_ms=" << elapsed_ms(start) << "\n";
  return 0;
}

int run_separate(const std::vector<std::string>& aut_paths, int oracle_size,
                 const CommonFlags& flags) {
  auto start = Clock::now();
  std::vector<rclos::Automaton> automata = load_automata(aut_paths);
  rclos::SeparationOutcome outcome =
      rclos::separate(automata, flags.gen_options());
  if (outcome.separable) {
    std::cout << "SEPARABLE\n";
  } else {
    std::cout << "NOT_SEPARABLE\n";
    std::cout << "witness: " << outcome.witness->witness.render() << "\n";
  }
  if (oracle_size > 0 && automata.size() == 2) {
    auto separator =
        rclos::brute_force_separator(automata[0], automata[1], oracle_size);
    bool agrees = separator.has_value() ? outcome.separable : true;
    std::cout << "oracle: separator "
              << (separator ? "found size=" + std::to_string(separator->size)
                            : std::string("absent"))
              << " agreement=" << (agrees ? "true" : "false") << "\n";
  }
  std::cout << "# stats: elements=" << outcome.generated
            << " elapsed_ms=" << elapsed_ms(start) << "\n";
  return outcome.separable ? 0 : 1;
}

int run_pointlike(const std::string& sgp_path,
                  const std::vector<std::string>& subset_names,
                  bool idempotent, const CommonFlags& flags) {
  auto start = Clock::now();
  rclos::FiniteSemigroup s = rclos::load_sgp(sgp_path);
  std::vector<int> subset;
  for (const auto& arg : subset_names) {
    std::istringstream in(arg);
    std::string name;
    while (in >> name) {
      subset.push_back(s.element(name));
    }
  }
  rclos::PointlikeOutcome outcome =
      rclos::pointlike(s, subset, idempotent, flags.gen_options());
  if (outcome.pointlike) {
    std::cout << (idempotent ? "IDEMPOTENT_POINTLIKE" : "POINTLIKE") << "\n";
    std::cout << "witness: " << outcome.witness->witness.render() << "\n";
  } else {
    std::cout << (idempotent ? "NOT_IDEMPOTENT_POINTLIKE" : "NOT_POINTLIKE")
              << "\n";
  }
  std::cout << "# stats: elements=" << outcome.generated
            << " elapsed_ms=" << elapsed_ms(start) << "\n";
  return outcome.pointlike ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for pro-R closures of regular languages"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* build = app.add_subcommand("build",
                                   "generate the recognizing unary semigroup "
                                   "of an automaton");
  std::string build_aut;
  bool dump = false;
  build->add_option("automaton", build_aut, ".aut file or re:<pattern>")->required();
  build->add_flag("--dump", dump, "print every element in canonical order");
  add_common(build, flags);

  auto* member_cmd =
      app.add_subcommand("member", "closure membership of an omega-term");
  std::string member_aut, member_term;
  bool certify = false;
  int samples = 3;
  member_cmd->add_option("automaton", member_aut, ".aut file or re:<pattern>")
      ->required();
  member_cmd->add_option("term", member_term, "omega-term")->required();
  member_cmd->add_flag("--certify", certify,
                       "extract and verify a certificate");
  member_cmd->add_option("--samples", samples,
                         "instantiations checked per certificate");
  add_common(member_cmd, flags);

  auto* separate_cmd =
      app.add_subcommand("separate", "R-separability of regular languages");
  std::vector<std::string> separate_auts;
  int oracle_size = 0;
  separate_cmd
      ->add_option("automata", separate_auts,
                   ".aut files or re:<pattern> (>= 2)")
      ->required()
      ->expected(2, -1);
  separate_cmd->add_option("--oracle", oracle_size,
                           "cross-check with the exhaustive separator "
                           "search up to this size");
  add_common(separate_cmd, flags);

  auto* pointlike_cmd = app.add_subcommand(
      "pointlike", "R-(idempotent-)pointlike subsets of a finite semigroup");
  std::string sgp_path;
  std::vector<std::string> subset_names;
  bool idempotent = false;
  pointlike_cmd->add_option("semigroup", sgp_path, ".sgp file")->required();
  pointlike_cmd->add_option("subset", subset_names, "element names")
      ->required()
      ->expected(1, -1);
  pointlike_cmd->add_flag("--idempotent", idempotent,
                          "decide idempotent pointlikeness");
  add_common(pointlike_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      return run_build(build_aut, dump, flags);
    }
    if (member_cmd->parsed()) {
      return run_member(member_aut, member_term, certify, samples, flags);
    }
    if (separate_cmd->parsed()) {
      return run_separate(separate_auts, oracle_size, flags);
    }
    if (pointlike_cmd->parsed()) {
      return run_pointlike(sgp_path, subset_names, idempotent, flags);
    }
  } catch (const rclos::CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
