// gtlie: command line front end for the loop bialgebra library.
//
// Exit codes: 0 success, 1 usage or input error, 2 internal invariant
// violation, 3 `verify` found counterexamples.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtlie/gtlie.hpp"

namespace {

using namespace gtlie;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;
constexpr int kCounterexamples = 3;

struct SurfaceArgs {
  std::optional<int> punctures;
  std::optional<std::string> ribbon;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--punctures", punctures, "sphere with k punctures (planar rose)");
    auto* r = cmd->add_option("--ribbon", ribbon, "ribbon order, e.g. a,b,A,B");
    p->excludes(r);
    r->excludes(p);
  }

  RibbonGraph make() const {
    if (ribbon) return parse_ribbon(*ribbon);
    return planar_rose(punctures.value_or(3));
  }
};

ordered_json tensor_json(const TensorSum& t, int rank) {
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : t) {
    terms.push_back({{"coefficient", c.str()},
                     {"left", to_string(k.first, rank)},
                     {"right", to_string(k.second, rank)}});
  }
  return terms;
}

ordered_json class_sum_json(const ClassSum& s, int rank) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : s) {
    terms.push_back({{"coefficient", c.str()}, {"word", to_string(w, rank)}});
  }
  return terms;
}

int run(int argc, char** argv) {
  CLI::App app{"Goldman bracket, Turaev cobracket and simple-class checks for loops on surfaces"};
  app.require_subcommand(1);

  SurfaceArgs surface;
  std::string format = "plain";
  int max_len = 0;
  int length = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string word1, word2;

  auto* verify = app.add_subcommand("verify", "check the cobracket characterization on every class up to a length");
  surface.attach(verify);
  verify->add_option("--max-len", max_len, "longest word length")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "plain, json or csv");

  auto* si = app.add_subcommand("si", "minimal self-intersection number of a class");
  surface.attach(si);
  si->add_option("word", word1)->required();

  auto* cob = app.add_subcommand("cobracket", "Turaev cobracket of a class");
  surface.attach(cob);
  cob->add_option("word", word1)->required();
  cob->add_option("--format", format, "plain or json");

  auto* br = app.add_subcommand("bracket", "Goldman bracket of two classes");
  surface.attach(br);
  br->add_option("w1", word1)->required();
  br->add_option("w2", word2)->required();
  br->add_option("--format", format, "plain or json");

  auto* status = app.add_subcommand("status", "cobracket-zero and power-of-simple flags of a class");
  surface.attach(status);
  status->add_option("word", word1)->required();
  status->add_option("--format", format, "plain or json");

  auto* enumerate = app.add_subcommand("enumerate", "list canonical class representatives");
  surface.attach(enumerate);
  auto* len_opt = enumerate->add_option("--length", length, "exact word length");
  auto* max_opt = enumerate->add_option("--max-len", max_len, "all lengths up to this one");
  len_opt->excludes(max_opt);

  auto* info = app.add_subcommand("surface-info", "boundary words, Euler characteristic and genus");
  surface.attach(info);
  info->add_option("--format", format, "plain or json");

  auto* axioms = app.add_subcommand("axioms", "check the Lie bialgebra identities on a sample");
  surface.attach(axioms);
  axioms->add_option("--max-len", max_len, "words of length up to this one")->default_val(4);
  axioms->add_option("--seed", seed, "seed for sampled pairs and triples");
  axioms->add_option("--samples", samples, "number of sampled pairs and of triples")->default_val(200);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (format != "plain" && format != "json" && format != "csv") {
    throw InputError("unknown format '" + format + "'");
  }
  const bool json = format == "json";

  if (*verify) {
    const RibbonGraph r = surface.make();
    if (surface_stats(r).genus > 0) {
      std::cerr << "warning: genus > 0; the cobracket characterization is only guaranteed in genus 0, "
                   "forward-direction counterexamples are expected\n";
    }
    VerifyOptions opt;
    opt.max_len = max_len;
    opt.workers = jobs;
    opt.collect_rows = format == "csv";
    const VerificationReport rep = verify_surface(r, opt);
    std::cout << emit_report(rep, parse_format(format));
    return rep.counterexamples.empty() ? kOk : kCounterexamples;
  }

  if (*si) {
    const RibbonGraph r = surface.make();
    std::cout << self_intersection(r, parse_class(word1, r.rank())) << '\n';
    return kOk;
  }

  if (*cob) {
    const RibbonGraph r = surface.make();
    const CyclicWord w = parse_class(word1, r.rank());
    const TensorSum d = cobracket(r, w);
    if (json) {
      ordered_json j{{"word", to_string(w, r.rank())}, {"terms", tensor_json(d, r.rank())}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << to_string(d, r.rank()) << '\n';
    }
    return kOk;
  }

  if (*br) {
    const RibbonGraph r = surface.make();
    const CyclicWord u = parse_class(word1, r.rank());
    const CyclicWord w = parse_class(word2, r.rank());
    const ClassSum b = bracket(r, u, w);
    if (json) {
      ordered_json j{{"left", to_string(u, r.rank())},
                     {"right", to_string(w, r.rank())},
                     {"terms", class_sum_json(b, r.rank())}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << to_string(b, r.rank()) << '\n';
    }
    return kOk;
  }

  if (*status) {
    const RibbonGraph r = surface.make();
    const TheoremStatus st = turaev_status(r, parse_class(word1, r.rank()));
    if (json) {
      ordered_json j{{"word", to_string(st.word, r.rank())},
                     {"cobracket_zero", st.cobracket_zero},
                     {"power_of_simple", st.power_of_simple},
                     {"consistent", st.consistent}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "word            " << to_string(st.word, r.rank()) << '\n'
                << "cobracket_zero  " << std::boolalpha << st.cobracket_zero << '\n'
                << "power_of_simple " << st.power_of_simple << '\n'
                << "consistent      " << st.consistent << '\n';
    }
    return kOk;
  }

  if (*enumerate) {
    const RibbonGraph r = surface.make();
    int lo = length;
    int hi = length;
    if (length == 0) {
      lo = 1;
      hi = max_len;
    }
    if (hi < 1) throw InputError("enumerate needs --length or --max-len >= 1");
    for (int len = lo; len <= hi; ++len) {
      CanonicalEnumerator e(r.rank(), len);
      Word w;
      while (e.next(w)) std::cout << to_string(std::span<const Letter>(w), r.rank()) << '\n';
    }
    return kOk;
  }

  if (*info) {
    const RibbonGraph r = surface.make();
    const auto faces = face_trace(r);
    const SurfaceStats st = surface_stats(r);
    if (json) {
      ordered_json fw = ordered_json::array();
      for (const auto& f : faces) fw.push_back(to_string(std::span<const Letter>(f), r.rank()));
      ordered_json j{{"rank", r.rank()},
                     {"ribbon", to_string(r)},
                     {"faces", fw},
                     {"euler_char", st.euler_char},
                     {"boundaries", st.boundaries},
                     {"genus", st.genus}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "rank        " << r.rank() << '\n'
                << "ribbon      " << to_string(r) << '\n'
                << "euler_char  " << st.euler_char << '\n'
                << "boundaries  " << st.boundaries << '\n'
                << "genus       " << st.genus << '\n';
      for (const auto& f : faces) {
        std::cout << "face        " << to_string(std::span<const Letter>(f), r.rank()) << '\n';
      }
    }
    return kOk;
  }

  if (*axioms) {
    const RibbonGraph r = surface.make();
    if (max_len < 1) throw InputError("--max-len must be at least 1");
    std::vector<CyclicWord> words;
    for (int len = 1; len <= max_len; ++len) {
      auto batch = enumerate_canonical(r.rank(), len);
      words.insert(words.end(), batch.begin(), batch.end());
    }
    AxiomOptions opt;
    opt.seed = seed;
    opt.pair_samples = samples;
    opt.triple_samples = samples;
    const AxiomReport rep = axiom_check(r, words, opt);
    for (const auto& res : rep.results) {
      std::cout << (res.ok() ? "PASS " : "FAIL ") << identity_name(res.identity) << " ("
                << res.checked << " checked)";
      if (!res.ok()) {
        std::cout << " witness:";
        for (const auto& w : res.failures.front()) std::cout << ' ' << to_string(w, r.rank());
      }
      std::cout << '\n';
    }
    return rep.ok() ? kOk : kInternalError;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gtlie::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const gtlie::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kInternalError;
  } catch (const gtlie::ContractViolation& e) {
    std::cerr << "internal contract violation: " << e.what() << '\n';
    return kInternalError;
  }
}
