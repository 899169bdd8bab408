#ifndef NEGSCOPE_CUE_HPP
#define NEGSCOPE_CUE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "negscope/lexicons.hpp"
#include "negscope/tree.hpp"

namespace negscope {

struct CueOccurrence {
  int token_index = 0;
  std::string cue_form;     // normalized
  bool is_true_cue = true;  // provisional until classified
  double score = 1.0;
};

/// Sparse feature vector: unique names, indicator value 1.0 except for the
/// real-valued relative-position feature.
struct FeatureVector {
  std::vector<std::pair<std::string, double>> features;

  void add(std::string name, double value = 1.0);
  double get(const std::string& name) const;
};

struct TrainConfig {
  unsigned seed = 42;
  int epochs = 100;
  int batch_size = 16;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  double threshold = 0.5;
  double weight_true = 1.0;   // class weight for true-cue examples
  double weight_false = 1.0;  // class weight for false-cue examples
};

/// L2-regularized logistic regression over sparse string features.
class LinearModel {
 public:
  double weight(const std::string& name) const;
  double bias() const { return bias_; }
  double threshold() const { return threshold_; }
  const std::map<std::string, double>& weights() const { return weights_; }
  const std::map<std::string, std::string>& metadata() const {
    return metadata_;
  }

  /// sigmoid(w.x + b); unknown features contribute 0.
  double score(const FeatureVector& x) const;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static LinearModel load(std::istream& in);
  static LinearModel load_file(const std::string& path);

 private:
  std::map<std::string, double> weights_;
  double bias_ = 0.0;
  double threshold_ = 0.5;
  std::map<std::string, std::string> metadata_;

  friend LinearModel train(
      const std::vector<std::pair<FeatureVector, bool>>& corpus,
      const TrainConfig& config);
};

/// One occurrence per token whose normalized form is in the lexicon, in
/// index order, provisionally marked true with score 1.
std::vector<CueOccurrence> find_cues(const Sentence& sentence,
                                     const CueLexicon& lex);

/// Word form, POS, lemma, neighbor lemmas, relative position, POS bigrams
/// and a sentence-final indicator for the candidate cue token.
FeatureVector extract_features(const Sentence& sentence,
                               const CueOccurrence& occ);

/// Deterministic mini-batch gradient descent; same corpus + config gives a
/// byte-identical serialized model. Labels: true = true cue.
LinearModel train(const std::vector<std::pair<FeatureVector, bool>>& corpus,
                  const TrainConfig& config);

/// Returns the occurrence rescored by the model: is_true_cue iff
/// score >= model.threshold().
CueOccurrence classify(const LinearModel& model, const Sentence& sentence,
                       const CueOccurrence& occ);

}  // namespace negscope

#endif
