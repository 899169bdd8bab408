#include "negscope/scope.hpp"

#include <algorithm>
#include <cctype>

namespace negscope {

namespace {

const std::vector<std::string>& accepted_tags(PosClass cls) {
  // SBAR* = {SBAR, SBARQ}; S* = {S, SQ, SINV}.
  static const std::vector<std::string> adj = {"NP", "VP",   "ADJP", "SBAR",
                                               "SBARQ", "S", "SQ",   "SINV"};
  static const std::vector<std::string> noun = {"NP", "SBAR", "SBARQ",
                                                "S",  "SQ",   "SINV"};
  static const std::vector<std::string> verb = {"VP", "SBAR", "SBARQ",
                                                "S",  "SQ",   "SINV"};
  switch (cls) {
    case PosClass::Adjective:
      return adj;
    case PosClass::Noun:
      return noun;
    default:
      return verb;
  }
}

bool in_prune_set(PosClass cls, const std::string& tag) {
  if (cls == PosClass::Noun || cls == PosClass::Adjective) {
    return tag == "PP" || tag == "VP" || tag == "ADVP" || tag == "SQ" ||
           tag == "SINV" || tag == "SBAR" || tag == "SBARQ";
  }
  return tag == "SBAR" || tag == "SBARQ" || tag == "SQ" || tag == "SINV";
}

void check_cue_index(const Sentence& sentence, int cue_index) {
  if (cue_index < 0 || cue_index >= static_cast<int>(sentence.tokens.size()))
    throw std::out_of_range("cue index " + std::to_string(cue_index) +
                            " out of range");
}

std::string lower_surface(const Token& tok) {
  std::string out = tok.surface;
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Appends a trace record when the rule changed the working set.
class Tracer {
 public:
  Tracer(std::vector<RuleApplication>* trace, std::vector<int>* state)
      : trace_(trace), state_(state) {}

  template <typename Fn>
  void apply(const std::string& rule, Fn&& fn) {
    std::vector<int> before = *state_;
    fn(state_);
    if (*state_ != before)
      trace_->push_back(RuleApplication{rule, std::move(before), *state_});
  }

 private:
  std::vector<RuleApplication>* trace_;
  std::vector<int>* state_;
};

}  // namespace

std::optional<std::pair<int, PosClass>> find_anchor(const Sentence& sentence,
                                                    int cue_index,
                                                    const NrpCopulaList& nrp) {
  check_cue_index(sentence, cue_index);
  const int n = static_cast<int>(sentence.tokens.size());
  for (int i = cue_index + 1; i < n; ++i) {
    const Token& tok = sentence.tokens[i];
    PosClass cls = pos_class(tok.pos);
    if (cls == PosClass::Other) continue;
    if (cls == PosClass::Verb && nrp.contains(lower_surface(tok))) continue;
    return std::make_pair(i, cls);
  }
  return std::nullopt;
}

std::optional<std::vector<int>> raw_scope(const Sentence& sentence,
                                          int cue_index, int anchor_index,
                                          PosClass cls) {
  check_cue_index(sentence, cue_index);
  if (!sentence.tree) throw MissingTreeError("sentence has no parse tree");
  const ParseTree& tree = *sentence.tree;

  const ParseNode* ancestor =
      tree.ancestor_with_tag(anchor_index, accepted_tags(cls));
  if (!ancestor) return std::nullopt;

  // Child subtree containing the anchor; pruning never touches it.
  const ParseNode* anchor_child = nullptr;
  for (const auto& child : ancestor->children) {
    if (child->span_begin <= anchor_index && anchor_index < child->span_end) {
      anchor_child = child.get();
      break;
    }
  }

  std::vector<int> indices;
  for (const auto& child : ancestor->children) {
    bool pruned = anchor_child && child->span_begin >= anchor_child->span_end &&
                  in_prune_set(cls, child->label);
    if (pruned) continue;
    for (int i = child->span_begin; i < child->span_end; ++i)
      indices.push_back(i);
  }
  return indices;
}

ScopeResult post_process(const Sentence& sentence, int cue_index,
                         std::vector<int> raw,
                         const ConnectiveList& connectives,
                         const CueLexicon& cues) {
  check_cue_index(sentence, cue_index);
  for (int i : raw) check_cue_index(sentence, i);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  ScopeResult result;
  result.cue_index = cue_index;
  result.scope = std::move(raw);
  Tracer tracer(&result.trace, &result.scope);

  // 1. Delimit before the first connective (a cue never self-delimits).
  tracer.apply("prune-connective", [&](std::vector<int>* s) {
    for (std::size_t k = 0; k < s->size(); ++k) {
      const Token& tok = sentence.tokens[(*s)[k]];
      if (connectives.contains(tok.norm) && !cues.contains(tok.norm)) {
        s->resize(k);
        return;
      }
    }
  });

  // 2. Delimit before the first punctuation marker.
  tracer.apply("prune-punctuation", [&](std::vector<int>* s) {
    for (std::size_t k = 0; k < s->size(); ++k) {
      if (is_punctuation(sentence.tokens[(*s)[k]])) {
        s->resize(k);
        return;
      }
    }
  });

  // 3. The cue is not part of its own scope.
  tracer.apply("remove-cue", [&](std::vector<int>* s) {
    s->erase(std::remove(s->begin(), s->end(), cue_index), s->end());
  });

  // 4. Drop scope words before the cue.
  tracer.apply("remove-before-cue", [&](std::vector<int>* s) {
    s->erase(std::remove_if(s->begin(), s->end(),
                            [&](int i) { return i < cue_index; }),
             s->end());
  });

  // Scope is continuous: keep the run starting at the minimum index
  // (child pruning can leave holes).
  tracer.apply("contiguity", [&](std::vector<int>* s) {
    for (std::size_t k = 1; k < s->size(); ++k) {
      if ((*s)[k] != (*s)[k - 1] + 1) {
        s->resize(k);
        return;
      }
    }
  });

  // 5. Default scope: everything after the cue up to and including the
  // first noun, adjective or verb (inclusive anchor; adverbs do not stop
  // the scan here).
  tracer.apply("default-scope-inclusive", [&](std::vector<int>* s) {
    if (!s->empty()) return;
    const int n = static_cast<int>(sentence.tokens.size());
    for (int i = cue_index + 1; i < n; ++i) {
      PosClass cls = pos_class(sentence.tokens[i].pos);
      if (cls == PosClass::Noun || cls == PosClass::Adjective ||
          cls == PosClass::Verb) {
        for (int k = cue_index + 1; k <= i; ++k) s->push_back(k);
        return;
      }
    }
  });

  // 6. Fill the gap between the cue and the scope start.
  tracer.apply("fill-to-cue", [&](std::vector<int>* s) {
    if (s->empty()) return;
    std::vector<int> filled;
    for (int i = cue_index + 1; i < s->front(); ++i) filled.push_back(i);
    filled.insert(filled.end(), s->begin(), s->end());
    *s = std::move(filled);
  });

  return result;
}

ScopeResult detect_scope(const Sentence& sentence, const CueOccurrence& occ,
                         const CueLexicon& cues, const NrpCopulaList& nrp,
                         const ConnectiveList& connectives) {
  check_cue_index(sentence, occ.token_index);
  if (!occ.is_true_cue) {
    ScopeResult result;
    result.cue_index = occ.token_index;
    result.trace.push_back(RuleApplication{"false-cue", {}, {}});
    return result;
  }
  if (!sentence.tree) throw MissingTreeError("sentence has no parse tree");

  std::vector<int> raw;
  std::vector<RuleApplication> prefix;
  auto anchor = find_anchor(sentence, occ.token_index, nrp);
  if (!anchor) {
    prefix.push_back(RuleApplication{"no-anchor", {}, {}});
  } else {
    auto indices =
        raw_scope(sentence, occ.token_index, anchor->first, anchor->second);
    if (!indices) {
      prefix.push_back(RuleApplication{"no-ancestor", {}, {}});
    } else {
      raw = std::move(*indices);
    }
  }

  ScopeResult result =
      post_process(sentence, occ.token_index, std::move(raw), connectives, cues);
  result.trace.insert(result.trace.begin(), prefix.begin(), prefix.end());
  return result;
}

ScopeResult punctuation_scope(const Sentence& sentence,
                              const CueOccurrence& occ,
                              bool include_false_cues) {
  check_cue_index(sentence, occ.token_index);
  ScopeResult result;
  result.cue_index = occ.token_index;
  if (!occ.is_true_cue && !include_false_cues) {
    result.trace.push_back(RuleApplication{"false-cue", {}, {}});
    return result;
  }
  const int n = static_cast<int>(sentence.tokens.size());
  for (int i = occ.token_index + 1; i < n; ++i) {
    if (is_punctuation(sentence.tokens[i])) break;
    result.scope.push_back(i);
  }
  return result;
}

}  // namespace negscope
