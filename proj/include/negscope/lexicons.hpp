#ifndef NEGSCOPE_LEXICONS_HPP
#define NEGSCOPE_LEXICONS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "negscope/token.hpp"

namespace negscope {

/// Explicit negation cue forms, stored apostrophe-free and lowercase
/// ("dont", "wont", ...).
class CueLexicon {
 public:
  CueLexicon() = default;
  explicit CueLexicon(std::set<std::string> entries);

  bool contains(const std::string& norm) const {
    return entries_.count(norm) > 0;
  }
  const std::set<std::string>& entries() const { return entries_; }

  /// The shipped 38-cue inventory.
  static const CueLexicon& defaults();

 private:
  std::set<std::string> entries_;
};

/// Neg-raising predicates and copula verb forms, matched on lowercased
/// surface (the list carries inflected forms: "was", "were", "am").
class NrpCopulaList {
 public:
  NrpCopulaList() = default;
  explicit NrpCopulaList(std::set<std::string> entries);

  bool contains(const std::string& lowered_surface) const {
    return entries_.count(lowered_surface) > 0;
  }
  const std::set<std::string>& entries() const { return entries_; }

  static const NrpCopulaList& defaults();

 private:
  std::set<std::string> entries_;
};

/// Discourse connectives that delimit a scope (contrast/coordination).
class ConnectiveList {
 public:
  ConnectiveList() = default;
  explicit ConnectiveList(std::set<std::string> entries);

  bool contains(const std::string& norm) const {
    return entries_.count(norm) > 0;
  }
  const std::set<std::string>& entries() const { return entries_; }

  static const ConnectiveList& defaults();

 private:
  std::set<std::string> entries_;
};

/// Flat word -> antonym map; keys normalized like cue entries.
class AntonymDict {
 public:
  AntonymDict() = default;
  explicit AntonymDict(std::map<std::string, std::string> pairs);

  const std::string* lookup(const std::string& norm) const;
  const std::map<std::string, std::string>& pairs() const { return pairs_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::map<std::string, std::string> pairs_;
  std::vector<std::string> warnings_;
  friend AntonymDict load_antonyms(const std::string& path);
};

// One entry per non-empty line, '#' lines are comments, entries normalized,
// duplicates collapsed. Throws std::runtime_error on I/O or format problems.
CueLexicon load_cue_lexicon(const std::string& path);
NrpCopulaList load_nrp_list(const std::string& path);
ConnectiveList load_connective_list(const std::string& path);

// Two tab-separated fields per line; a key listed twice keeps its first
// antonym (warning recorded); a self-antonym is an error.
AntonymDict load_antonyms(const std::string& path);

}  // namespace negscope

#endif
