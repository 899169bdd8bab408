#ifndef NEGSCOPE_EVALUATE_HPP
#define NEGSCOPE_EVALUATE_HPP

#include <string>
#include <vector>

#include "negscope/scope.hpp"

namespace negscope {

class AlignmentError : public std::runtime_error {
 public:
  explicit AlignmentError(const std::string& what)
      : std::runtime_error(what) {}
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long support = 0;
};

/// Raw confusion tallies behind the rates.
struct ScopeCounts {
  long tp = 0, fp = 0, fn = 0, tn = 0;  // token-level, in-scope as positive
  long pcs_exact = 0;
  long pcs_total = 0;  // gold true cues
};

struct EvalReport {
  Prf in_scope;
  Prf out_scope;
  double pcs = 0.0;
  Prf cue_true;
  Prf cue_false;
  ScopeCounts counts;
  long cue_correct = 0, cue_total = 0;
};

struct AgreementReport {
  double token_agreement = 0.0;
  double full_scope_agreement = 0.0;
};

/// One cue site of one sentence: the gold (or one annotator's) labeling.
struct CueAnnotation {
  std::string sentence_id;
  int cue_index = 0;
  bool is_true_cue = true;
  std::vector<int> scope;
  int n_tokens = 0;  // sentence length, needed for the token-level tally
};

struct ScopePrediction {
  std::string sentence_id;
  int cue_index = 0;
  std::vector<int> scope;
};

struct CuePrediction {
  std::string sentence_id;
  int cue_index = 0;
  bool is_true_cue = true;
};

/// Token-level micro-averaged P/R/F for the in-scope and out-of-scope
/// classes plus PCS (exact matches over gold true cues). Each cue instance
/// contributes one in/out labeling of its whole sentence. Gold false cues
/// are excluded from the PCS denominator; predicted tokens on them count
/// as in-scope false positives.
EvalReport score_scopes(const std::vector<CueAnnotation>& gold,
                        const std::vector<ScopePrediction>& pred);

/// Per-class P/R/F for cue classification (classes: actual cue, false
/// cue), aligned by (sentence id, token index).
EvalReport score_cues(const std::vector<CueAnnotation>& gold,
                      const std::vector<CuePrediction>& pred);

/// Inter-annotator agreement: token-level label agreement and exact
/// full-scope match, over identical cue sites. Symmetric.
AgreementReport agreement(const std::vector<CueAnnotation>& a,
                          const std::vector<CueAnnotation>& b);

/// Table-shaped human-readable rendering.
std::string format_report(const EvalReport& report);

}  // namespace negscope

#endif
