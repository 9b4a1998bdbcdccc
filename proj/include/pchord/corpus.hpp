#ifndef PCHORD_CORPUS_HPP
#define PCHORD_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "group.hpp"
#include "report.hpp"

namespace pchord
{

/// One line of a corpus file:
///
///   spec | expected | basis | anchor | options
///
/// expected is chordal or non-chordal; basis is brute-force, criterion or
/// predicate; options are whitespace-separated key=value pairs (or bare
/// flags) and may be omitted together with the final bar. Blank lines and
/// lines starting with '#' are ignored.
struct CorpusEntry
{
  std::size_t line = 0;
  std::string spec;
  std::string expected;
  std::string basis;
  std::string anchor;
  std::map<std::string, std::string> options;
};

/// Throws ParseError naming the offending line.
std::vector<CorpusEntry> parse_corpus(std::string const &text);

struct CorpusOptions
{
  bool deep = false;
  unsigned threads = 0; // 0 = hardware concurrency
  std::uint64_t cap = default_order_cap;
  std::string data_dir;
};

struct CorpusResult
{
  enum class Status
  {
    pass,
    mismatch,
    skipped,
    error
  };
  Status status = Status::error;
  std::string got;        // chordal / non-chordal, empty when undecided
  std::string basis_used; // what actually produced `got`
  std::string note;
  double seconds = 0;     // wall time; never printed to stdout
};

std::string to_string(CorpusResult::Status s);

/// Evaluates one entry:
///   brute-force  is_chordal on the power graph of the group spec. With the
///                `deep` flag the brute force only runs under
///                CorpusOptions::deep; otherwise `fallback=<criterion>` is
///                evaluated instead, or the entry is skipped.
///   criterion    `criterion=<id>` (c4, conjugate-cyclic,
///                centralizer-sufficient, gk-necessary, order-screen) must
///                fire with the expected implication. With x=/y= (or g=/h=)
///                only that pair is checked.
///   predicate    spec is a simple group id, q:4N, dih:<A> or prod(H,K).
CorpusResult run_entry(CorpusEntry const &e, CorpusOptions const &options);

/// Runs entries on a thread pool; results are in entry order.
std::vector<CorpusResult> run_corpus(std::vector<CorpusEntry> const &entries,
                                     CorpusOptions const &options);

/// Plain-text table, one row per entry plus a summary line. Contains no
/// timing, so repeated runs print identical text.
std::string format_corpus_table(std::vector<CorpusEntry> const &entries,
                                std::vector<CorpusResult> const &results);

Json corpus_json(std::vector<CorpusEntry> const &entries, std::vector<CorpusResult> const &results);

/// True when every entry passed or was skipped.
bool corpus_ok(std::vector<CorpusResult> const &results);

} // namespace pchord

#endif // PCHORD_CORPUS_HPP
