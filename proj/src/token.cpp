#include "negscope/token.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace negscope {

std::string normalize_form(const std::string& surface) {
  std::string out;
  out.reserve(surface.size());
  for (std::size_t i = 0; i < surface.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(surface[i]);
    if (c == '\'') continue;
    // U+2019 RIGHT SINGLE QUOTATION MARK: E2 80 99
    if (c == 0xE2 && i + 2 < surface.size() &&
        static_cast<unsigned char>(surface[i + 1]) == 0x80 &&
        static_cast<unsigned char>(surface[i + 2]) == 0x99) {
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

PosClass pos_class(const std::string& tag) {
  if (tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS")
    return PosClass::Noun;
  if (tag == "JJ" || tag == "JJR" || tag == "JJS") return PosClass::Adjective;
  if (tag == "VB" || tag == "VBD" || tag == "VBG" || tag == "VBN" ||
      tag == "VBP" || tag == "VBZ" || tag == "MD")
    return PosClass::Verb;
  if (tag == "RB" || tag == "RBR" || tag == "RBS") return PosClass::Adverb;
  return PosClass::Other;
}

Token::Token(int index, std::string surface, std::string lemma, std::string pos)
    : index(index),
      surface(std::move(surface)),
      norm(normalize_form(this->surface)),
      lemma(std::move(lemma)),
      pos(std::move(pos)) {
  if (this->lemma.empty()) this->lemma = norm;
}

bool is_punctuation(const Token& tok) {
  static const std::array<const char*, 7> kPunctTags = {
      ".", ",", ":", "''", "``", "-LRB-", "-RRB-"};
  for (const char* t : kPunctTags)
    if (tok.pos == t) return true;
  if (tok.surface.empty()) return false;
  for (unsigned char c : tok.surface)
    if (c >= 0x80 || !std::ispunct(c)) return false;
  return true;
}

}  // namespace negscope
