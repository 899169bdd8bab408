#ifndef NEGSCOPE_CORPUS_HPP
#define NEGSCOPE_CORPUS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "negscope/cue.hpp"
#include "negscope/scope.hpp"
#include "negscope/tree.hpp"

namespace negscope {

struct GoldCueLabel {
  int index = 0;
  bool is_true_cue = true;
};

struct GoldScopeLabel {
  int cue_index = 0;
  std::vector<int> token_indices;
};

/// One JSONL corpus line. `raw` keeps the original object so unknown
/// fields survive a read/write round trip.
struct CorpusRecord {
  std::string id;
  std::vector<Token> tokens;
  std::optional<std::string> parse;  // bracketed-tree string
  std::vector<GoldCueLabel> gold_cues;
  bool has_gold_cues = false;
  std::vector<GoldScopeLabel> gold_scopes;
  bool has_gold_scopes = false;
  nlohmann::json raw;
};

CorpusRecord parse_corpus_record(const std::string& line);
nlohmann::json corpus_record_to_json(const CorpusRecord& record);

/// Builds the Sentence for a record; aligns the tree when present.
Sentence to_sentence(const CorpusRecord& record);

/// One detect-output line: classification + scope for one cue site.
struct ScopeRecord {
  std::string id;
  int cue_index = 0;
  std::string cue_form;
  bool is_true_cue = true;
  double score = 1.0;
  std::vector<int> scope;
  std::vector<RuleApplication> trace;
  bool with_trace = false;
};

nlohmann::json scope_record_to_json(const ScopeRecord& record);
ScopeRecord parse_scope_record(const std::string& line);

std::vector<std::string> read_lines_file(const std::string& path);

// *SEM-style column format: one token per line
// (index, surface, lemma, POS, parse-bits, then cue/scope column pairs),
// sentences separated by blank lines. Round-trips with the JSONL format.
std::string to_sem_columns(const std::vector<CorpusRecord>& records);
std::vector<CorpusRecord> from_sem_columns(const std::string& text);

}  // namespace negscope

#endif
