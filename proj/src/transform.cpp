#include "negscope/transform.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace negscope {

TransformMode parse_transform_mode(const std::string& name) {
  if (name == "not-prefix") return TransformMode::NotPrefix;
  if (name == "antonym") return TransformMode::Antonym;
  if (name == "antonym-all") return TransformMode::AntonymAll;
  throw std::invalid_argument("unknown transform mode: " + name);
}

std::string transform_mode_name(TransformMode mode) {
  switch (mode) {
    case TransformMode::NotPrefix:
      return "not-prefix";
    case TransformMode::Antonym:
      return "antonym";
    default:
      return "antonym-all";
  }
}

std::string normalize_tweet(const std::string& raw) {
  static const std::regex url_re(R"((https?://\S+|www\.\S+))");
  static const std::regex mention_re(R"(@\w+)");
  static const std::regex hashtag_re(R"(#+(\w))");
  std::string out = std::regex_replace(raw, url_re, "URL");
  out = std::regex_replace(out, mention_re, "MENTION");
  out = std::regex_replace(out, hashtag_re, "$1");
  return out;
}

namespace {

enum class Action { None, Prefix, Substitute, Delete };

struct Plan {
  Action action = Action::None;
  std::string replacement;  // Substitute only
  int owner_cue = -1;       // cue that claimed this index
};

}  // namespace

TransformedSentence apply_transform(const Sentence& sentence,
                                    const std::vector<ScopeResult>& scopes,
                                    const AntonymDict& antonyms,
                                    const TransformConfig& config) {
  const int n = static_cast<int>(sentence.tokens.size());
  for (const ScopeResult& s : scopes) {
    if (s.cue_index < 0 || s.cue_index >= n)
      throw std::out_of_range("scope cue index out of range");
    for (int i : s.scope)
      if (i < 0 || i >= n) throw std::out_of_range("scope index out of range");
  }

  std::vector<ScopeResult> ordered = scopes;
  std::sort(ordered.begin(), ordered.end(),
            [](const ScopeResult& a, const ScopeResult& b) {
              return a.cue_index < b.cue_index;
            });

  std::vector<Plan> plan(n);
  TransformedSentence out;

  // First cue in index order wins a contested token; returns whether the
  // requested action is in effect afterwards.
  auto claim = [&](int idx, int cue, Action action,
                   const std::string& replacement) {
    Plan& p = plan[idx];
    if (p.action == Action::None) {
      p.action = action;
      p.replacement = replacement;
      p.owner_cue = cue;
      return true;
    }
    if (p.action == action && p.replacement == replacement) return true;
    if (p.owner_cue != cue)
      out.warnings.push_back(
          "conflicting transforms at token " + std::to_string(idx) +
          ": cue " + std::to_string(p.owner_cue) + " wins over cue " +
          std::to_string(cue));
    return false;
  };

  for (const ScopeResult& s : ordered) {
    bool substituted = false;
    if (config.mode != TransformMode::NotPrefix) {
      for (int idx : s.scope) {
        const std::string* antonym =
            antonyms.lookup(sentence.tokens[idx].norm);
        if (!antonym) continue;
        if (claim(idx, s.cue_index, Action::Substitute, *antonym))
          substituted = true;
        if (config.mode == TransformMode::Antonym && substituted) break;
      }
    }
    if (substituted) {
      // The substitution consumes the negation.
      claim(s.cue_index, s.cue_index, Action::Delete, "");
    } else {
      for (int idx : s.scope) claim(idx, s.cue_index, Action::Prefix, "");
      if (!config.keep_cue)
        claim(s.cue_index, s.cue_index, Action::Delete, "");
    }
  }

  out.tokens.reserve(n);
  out.provenance.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Token& tok = sentence.tokens[i];
    TokenProvenance prov;
    prov.source_index = i;
    switch (plan[i].action) {
      case Action::None:
        prov.kind = TokenProvenance::Kind::Unchanged;
        out.tokens.push_back(tok.surface);
        break;
      case Action::Prefix:
        prov.kind = TokenProvenance::Kind::Prefixed;
        out.tokens.push_back("NOT_" + tok.surface);
        break;
      case Action::Substitute:
        prov.kind = TokenProvenance::Kind::Substituted;
        prov.original = tok.surface;
        out.tokens.push_back(plan[i].replacement);
        break;
      case Action::Delete:
        prov.kind = TokenProvenance::Kind::DeletedCue;
        break;
    }
    out.provenance.push_back(std::move(prov));
  }
  return out;
}

}  // namespace negscope
