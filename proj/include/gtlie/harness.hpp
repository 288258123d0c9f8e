#pragma once

// Exhaustive sweeps over canonical classes with a worker pool, and report
// serialization (plain table, json, csv).
//
// Work is handed out as (length, block) units: a shared enumerator produces
// consecutive blocks of canonical words, workers evaluate them, and partial
// results are merged in block order, so the report does not depend on the
// worker count or on scheduling.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gtlie/classify.hpp"
#include "gtlie/cyclic_word.hpp"
#include "gtlie/linking.hpp"
#include "gtlie/surface.hpp"

namespace gtlie {

struct WordRow {
  CyclicWord word;
  std::int64_t si = 0;
  bool cobracket_zero = false;
  bool power_of_simple = false;
  bool consistent = false;
};

struct VerificationReport {
  int rank = 0;
  std::string ribbon;
  int genus = 0;
  int boundaries = 0;
  int max_len = 0;
  std::uint64_t classes_checked = 0;
  std::uint64_t cobracket_zero = 0;
  std::uint64_t power_of_simple = 0;
  std::vector<TheoremStatus> counterexamples;
  std::vector<double> per_length_ms;
  int workers = 1;
  // Filled only when rows are requested (csv output).
  std::vector<WordRow> rows;

  std::uint64_t converse_violations() const {
    return static_cast<std::uint64_t>(std::count_if(
        counterexamples.begin(), counterexamples.end(),
        [](const TheoremStatus& s) { return s.converse_violation(); }));
  }
};

struct VerifyOptions {
  int max_len = 1;
  int workers = 1;
  bool collect_rows = false;
  std::size_t block_size = 10000;
  // Polled between words; a set flag abandons the sweep with Cancelled.
  const std::atomic<bool>* cancel = nullptr;
};

class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("sweep cancelled") {}
};

inline WordRow evaluate(const RibbonGraph& r, const CyclicWord& w) {
  WordRow row;
  row.word = w;
  const auto [root, m] = primitive_root(w);
  const auto base = static_cast<std::int64_t>(linked_pairs(r, root).size());
  row.si = static_cast<std::int64_t>(m) * m * base + (m - 1);
  row.power_of_simple = base == 0;
  row.cobracket_zero = cobracket(r, w).empty();
  row.consistent = row.cobracket_zero == row.power_of_simple;
  return row;
}

namespace detail {

struct BlockResult {
  std::uint64_t checked = 0;
  std::uint64_t cobracket_zero = 0;
  std::uint64_t power_of_simple = 0;
  std::vector<TheoremStatus> counterexamples;
  std::vector<WordRow> rows;
};

}  // namespace detail

inline VerificationReport verify_surface(const RibbonGraph& r, const VerifyOptions& opt) {
  if (opt.max_len < 1) throw InputError("max_len must be at least 1");
  if (opt.workers < 1) throw InputError("workers must be at least 1");
  const SurfaceStats stats = surface_stats(r);

  VerificationReport rep;
  rep.rank = r.rank();
  rep.ribbon = to_string(r);
  rep.genus = stats.genus;
  rep.boundaries = stats.boundaries;
  rep.max_len = opt.max_len;
  rep.workers = opt.workers;

  for (int len = 1; len <= opt.max_len; ++len) {
    const auto started = std::chrono::steady_clock::now();
    CanonicalEnumerator source(r.rank(), len);
    bool exhausted = false;
    std::size_t next_block = 0;
    std::map<std::size_t, detail::BlockResult> done;
    std::mutex source_mu, done_mu;
    std::exception_ptr failure;
    std::atomic<bool> abort{false};

    auto work = [&] {
      std::vector<Word> batch;
      for (;;) {
        std::size_t id = 0;
        batch.clear();
        {
          std::lock_guard lock(source_mu);
          if (exhausted || abort) return;
          id = next_block++;
          Word w;
          while (batch.size() < opt.block_size && source.next(w)) batch.push_back(w);
          if (batch.size() < opt.block_size) exhausted = true;
        }
        detail::BlockResult part;
        try {
          for (Word& letters : batch) {
            if (opt.cancel && opt.cancel->load()) throw Cancelled();
            WordRow row = evaluate(r, CyclicWord(std::move(letters)));
            ++part.checked;
            part.cobracket_zero += row.cobracket_zero;
            part.power_of_simple += row.power_of_simple;
            if (!row.consistent) {
              part.counterexamples.push_back(
                  {row.word, row.cobracket_zero, row.power_of_simple, row.consistent});
            }
            if (opt.collect_rows) part.rows.push_back(std::move(row));
          }
        } catch (...) {
          std::lock_guard lock(done_mu);
          if (!failure) failure = std::current_exception();
          abort = true;
          return;
        }
        std::lock_guard lock(done_mu);
        done.emplace(id, std::move(part));
      }
    };

    std::vector<std::thread> pool;
    for (int k = 1; k < opt.workers; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (auto& [id, part] : done) {
      rep.classes_checked += part.checked;
      rep.cobracket_zero += part.cobracket_zero;
      rep.power_of_simple += part.power_of_simple;
      std::move(part.counterexamples.begin(), part.counterexamples.end(),
                std::back_inserter(rep.counterexamples));
      std::move(part.rows.begin(), part.rows.end(), std::back_inserter(rep.rows));
    }
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;
    rep.per_length_ms.push_back(elapsed.count());
  }
  return rep;
}

// ---------------------------------------------------------------------------

enum class ReportFormat { plain, json, csv };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "plain") return ReportFormat::plain;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw InputError("unknown format '" + s + "' (expected plain, json or csv)");
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["surface"] = {{"rank", rep.rank},
                  {"ribbon", rep.ribbon},
                  {"genus", rep.genus},
                  {"boundaries", rep.boundaries}};
  j["max_len"] = rep.max_len;
  j["classes_checked"] = rep.classes_checked;
  j["cobracket_zero"] = rep.cobracket_zero;
  j["power_of_simple"] = rep.power_of_simple;
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : rep.counterexamples) {
    j["counterexamples"].push_back({{"word", to_string(c.word, rep.rank)},
                                    {"cobracket_zero", c.cobracket_zero},
                                    {"power_of_simple", c.power_of_simple}});
  }
  j["timing"] = {{"per_length_ms", rep.per_length_ms}};
  j["workers"] = rep.workers;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport rep;
  try {
    const auto& s = j.at("surface");
    rep.rank = s.at("rank").get<int>();
    rep.ribbon = s.at("ribbon").get<std::string>();
    rep.genus = s.at("genus").get<int>();
    rep.boundaries = s.at("boundaries").get<int>();
    rep.max_len = j.at("max_len").get<int>();
    rep.classes_checked = j.at("classes_checked").get<std::uint64_t>();
    rep.cobracket_zero = j.at("cobracket_zero").get<std::uint64_t>();
    rep.power_of_simple = j.at("power_of_simple").get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples")) {
      TheoremStatus st;
      st.word = parse_class(c.at("word").get<std::string>(), rep.rank);
      st.cobracket_zero = c.at("cobracket_zero").get<bool>();
      st.power_of_simple = c.at("power_of_simple").get<bool>();
      st.consistent = st.cobracket_zero == st.power_of_simple;
      rep.counterexamples.push_back(std::move(st));
    }
    rep.per_length_ms = j.at("timing").at("per_length_ms").get<std::vector<double>>();
    rep.workers = j.at("workers").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return rep;
}

inline std::string emit_report(const VerificationReport& rep, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::json:
      os << report_to_json(rep).dump(2) << '\n';
      break;
    case ReportFormat::csv:
      os << "word,length,si,cobracket_zero,power_of_simple,consistent\n";
      for (const auto& row : rep.rows) {
        os << to_string(row.word, rep.rank) << ',' << row.word.size() << ',' << row.si << ','
           << row.cobracket_zero << ',' << row.power_of_simple << ',' << row.consistent << '\n';
      }
      break;
    case ReportFormat::plain: {
      os << "surface          rank " << rep.rank << ", ribbon (" << rep.ribbon << "), genus "
         << rep.genus << ", " << rep.boundaries << " boundary component"
         << (rep.boundaries == 1 ? "" : "s") << '\n';
      os << "max length       " << rep.max_len << '\n';
      os << "classes checked  " << rep.classes_checked << '\n';
      os << "cobracket zero   " << rep.cobracket_zero << '\n';
      os << "power of simple  " << rep.power_of_simple << '\n';
      os << "counterexamples  " << rep.counterexamples.size() << " (converse violations "
         << rep.converse_violations() << ")\n";
      for (const auto& c : rep.counterexamples) {
        os << "  " << std::left << std::setw(20) << to_string(c.word, rep.rank)
           << " cobracket_zero=" << c.cobracket_zero
           << " power_of_simple=" << c.power_of_simple << '\n';
      }
      os << "workers          " << rep.workers << '\n';
      os << "length  ms\n";
      for (std::size_t i = 0; i < rep.per_length_ms.size(); ++i) {
        os << std::right << std::setw(6) << i + 1 << "  " << std::fixed << std::setprecision(1)
           << rep.per_length_ms[i] << '\n';
      }
      break;
    }
  }
  return os.str();
}

}  // namespace gtlie
