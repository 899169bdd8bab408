#ifndef NEGSCOPE_SCOPE_HPP
#define NEGSCOPE_SCOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "negscope/cue.hpp"
#include "negscope/lexicons.hpp"
#include "negscope/tree.hpp"

namespace negscope {

class MissingTreeError : public std::runtime_error {
 public:
  explicit MissingTreeError(const std::string& what)
      : std::runtime_error(what) {}
};

/// One post-processing step that changed the working scope.
struct RuleApplication {
  std::string rule;
  std::vector<int> before;
  std::vector<int> after;
};

/// Per-cue scope: a contiguous run of token indices, never containing the
/// cue, starting at cue+1 when non-empty.
struct ScopeResult {
  int cue_index = 0;
  std::vector<int> scope;  // sorted, contiguous
  std::vector<RuleApplication> trace;
};

/// First token after the cue whose class is noun/adjective/verb/adverb;
/// verbs on the NRP/copula list are skipped and the scan continues.
std::optional<std::pair<int, PosClass>> find_anchor(const Sentence& sentence,
                                                    int cue_index,
                                                    const NrpCopulaList& nrp);

/// Climbs from the anchor leaf to the nearest accepted ancestor for the
/// anchor's word class, prunes trailing modifier/clause children, and
/// returns the remaining leaf indices. nullopt when no ancestor matches
/// (caller falls back to the default scope).
std::optional<std::vector<int>> raw_scope(const Sentence& sentence,
                                          int cue_index, int anchor_index,
                                          PosClass pos_class);

/// Applies the ordered alignment rules (connective cut, punctuation cut,
/// cue removal, pre-cue removal, default scope, fill to cue). The cue
/// lexicon is consulted so a cue token never acts as its own connective
/// delimiter.
ScopeResult post_process(const Sentence& sentence, int cue_index,
                         std::vector<int> raw,
                         const ConnectiveList& connectives,
                         const CueLexicon& cues);

/// find_anchor -> raw_scope -> post_process. False cues get an empty scope.
/// Throws MissingTreeError when the sentence has no aligned tree.
ScopeResult detect_scope(const Sentence& sentence, const CueOccurrence& occ,
                         const CueLexicon& cues, const NrpCopulaList& nrp,
                         const ConnectiveList& connectives);

/// Baseline: everything strictly between the cue and the next punctuation
/// token (or sentence end). False cues get an empty scope unless
/// include_false_cues is set (a baseline with no cue classifier).
ScopeResult punctuation_scope(const Sentence& sentence,
                              const CueOccurrence& occ,
                              bool include_false_cues = false);

}  // namespace negscope

#endif
