#include "negscope/lexicons.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

namespace negscope {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::set<std::string> load_entry_set(const std::string& path) {
  std::set<std::string> entries;
  for (const auto& line : read_lines(path)) {
    std::string norm = normalize_form(line);
    if (!norm.empty()) entries.insert(norm);
  }
  return entries;
}

std::set<std::string> make_set(std::initializer_list<const char*> words) {
  std::set<std::string> s;
  for (const char* w : words) s.insert(w);
  return s;
}

}  // namespace

CueLexicon::CueLexicon(std::set<std::string> entries)
    : entries_(std::move(entries)) {}

const CueLexicon& CueLexicon::defaults() {
  static const CueLexicon lex(make_set({
      "hardly", "lack", "lacking", "lacks", "neither",
      "no", "nobody", "none", "nothing", "nowhere",
      "cant", "arent", "dont", "doesnt", "didnt",
      "havent", "isnt", "mightnt", "mustnt", "neednt",
      "shouldnt", "wasnt", "werent", "wouldnt", "without",
      "seldom", "scarcely", "wont", "never", "aint",
      "barely", "nor", "not", "hadnt", "rather",
      "hasnt", "shant", "couldnt",
  }));
  return lex;
}

NrpCopulaList::NrpCopulaList(std::set<std::string> entries)
    : entries_(std::move(entries)) {}

const NrpCopulaList& NrpCopulaList::defaults() {
  static const NrpCopulaList lex(make_set({
      "think", "believe", "seem", "appear", "feel",
      "grow", "look", "prove", "remain", "smell",
      "sound", "become", "might", "are", "am",
      "been", "has", "were", "was", "is",
  }));
  return lex;
}

ConnectiveList::ConnectiveList(std::set<std::string> entries)
    : entries_(std::move(entries)) {}

const ConnectiveList& ConnectiveList::defaults() {
  static const ConnectiveList lex(make_set({
      "because", "while", "until", "however",
      "but", "though", "although", "nothing", "nowhere",
      "whenever", "&", "and", "nonetheless", "whereas",
      "whose", "why", "where", "wherever",
  }));
  return lex;
}

AntonymDict::AntonymDict(std::map<std::string, std::string> pairs)
    : pairs_(std::move(pairs)) {
  for (const auto& [k, v] : pairs_)
    if (k == normalize_form(v))
      throw std::runtime_error("self-antonym entry: " + k);
}

const std::string* AntonymDict::lookup(const std::string& norm) const {
  auto it = pairs_.find(norm);
  return it == pairs_.end() ? nullptr : &it->second;
}

CueLexicon load_cue_lexicon(const std::string& path) {
  return CueLexicon(load_entry_set(path));
}

NrpCopulaList load_nrp_list(const std::string& path) {
  return NrpCopulaList(load_entry_set(path));
}

ConnectiveList load_connective_list(const std::string& path) {
  return ConnectiveList(load_entry_set(path));
}

AntonymDict load_antonyms(const std::string& path) {
  AntonymDict dict;
  std::size_t lineno = 0;
  for (const auto& line : read_lines(path)) {
    ++lineno;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw std::runtime_error("antonym file " + path + ": line " +
                               std::to_string(lineno) +
                               " must have exactly 2 tab-separated fields");
    std::string key = normalize_form(line.substr(0, tab));
    std::string antonym = line.substr(tab + 1);
    if (key.empty() || antonym.empty())
      throw std::runtime_error("antonym file " + path + ": empty field on line " +
                               std::to_string(lineno));
    if (key == normalize_form(antonym))
      throw std::runtime_error("antonym file " + path + ": self-antonym \"" +
                               key + "\" on line " + std::to_string(lineno));
    auto [it, inserted] = dict.pairs_.emplace(key, antonym);
    if (!inserted && it->second != antonym)
      dict.warnings_.push_back("duplicate key \"" + key +
                               "\": keeping first antonym \"" + it->second +
                               "\"");
  }
  return dict;
}

}  // namespace negscope
