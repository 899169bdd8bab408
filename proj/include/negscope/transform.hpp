#ifndef NEGSCOPE_TRANSFORM_HPP
#define NEGSCOPE_TRANSFORM_HPP

#include <string>
#include <vector>

#include "negscope/lexicons.hpp"
#include "negscope/scope.hpp"

namespace negscope {

enum class TransformMode { NotPrefix, Antonym, AntonymAll };

struct TransformConfig {
  TransformMode mode = TransformMode::NotPrefix;
  bool keep_cue = true;
};

TransformMode parse_transform_mode(const std::string& name);
std::string transform_mode_name(TransformMode mode);

struct TokenProvenance {
  enum class Kind { Unchanged, Prefixed, Substituted, DeletedCue };
  Kind kind = Kind::Unchanged;
  int source_index = 0;    // index in the input token sequence
  std::string original;    // Substituted only
};

struct TransformedSentence {
  std::vector<std::string> tokens;
  // One record per *input* token, in order; DeletedCue entries have no
  // output token.
  std::vector<TokenProvenance> provenance;
  std::vector<std::string> warnings;
};

/// Tweet cleaning: URLs -> "URL", "@handle" -> "MENTION", "#tag" -> "tag".
/// Idempotent.
std::string normalize_tweet(const std::string& raw);

/// Negation-aware rewriting of the token sequence.
///  - not-prefix: every in-scope token becomes "NOT_" + surface.
///  - antonym: per cue, the first in-scope token with a dictionary entry is
///    substituted and the cue deleted; scopes without a hit fall back to
///    not-prefix with the cue retained.
///  - antonym-all: like antonym but substitutes every in-scope token that
///    has an entry.
TransformedSentence apply_transform(const Sentence& sentence,
                                    const std::vector<ScopeResult>& scopes,
                                    const AntonymDict& antonyms,
                                    const TransformConfig& config);

}  // namespace negscope

#endif
