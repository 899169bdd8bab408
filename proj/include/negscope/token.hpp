#ifndef NEGSCOPE_TOKEN_HPP
#define NEGSCOPE_TOKEN_HPP

#include <string>
#include <vector>

namespace negscope {

// Word-class buckets the scope rules branch on, derived from PTB tags.
enum class PosClass { Noun, Adjective, Verb, Adverb, Other };

// Lowercases ASCII letters and strips apostrophes (ASCII ' and U+2019),
// e.g. "Don't" -> "dont". Deterministic; used for all lexicon matching.
std::string normalize_form(const std::string& surface);

// noun: NN NNS NNP NNPS; adjective: JJ JJR JJS;
// verb: VB VBD VBG VBN VBP VBZ MD; adverb: RB RBR RBS.
PosClass pos_class(const std::string& pos_tag);

struct Token {
  int index = 0;
  std::string surface;
  std::string norm;    // normalize_form(surface)
  std::string lemma;   // falls back to norm when the corpus has none
  std::string pos;

  Token() = default;
  Token(int index, std::string surface, std::string lemma, std::string pos);
};

// PTB punctuation tags, or a surface made entirely of punctuation chars
// (tweets often carry nonstandard tags).
bool is_punctuation(const Token& tok);

}  // namespace negscope

#endif
